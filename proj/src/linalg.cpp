#include <confop/linalg.hpp>

#include <deque>
#include <map>
#include <stdexcept>
#include <utility>

namespace confop {

std::vector<int> rref(RatMatrix& m) {
    std::vector<int> pivots;
    if (m.empty()) return pivots;
    const int nrows = static_cast<int>(m.size());
    const int ncols = static_cast<int>(m[0].size());
    int row = 0;
    for (int col = 0; col < ncols && row < nrows; ++col) {
        int pivot = -1;
        for (int r = row; r < nrows; ++r) {
            if (m[r][col] != 0) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) continue;
        std::swap(m[row], m[pivot]);
        const Rational inv = Rational(1) / m[row][col];
        for (int c = col; c < ncols; ++c) m[row][c] *= inv;
        for (int r = 0; r < nrows; ++r) {
            if (r == row || m[r][col] == 0) continue;
            const Rational factor = m[r][col];
            for (int c = col; c < ncols; ++c) m[r][c] -= factor * m[row][c];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::vector<RatVector> nullspace(RatMatrix a) {
    if (a.empty()) return {};
    const int ncols = static_cast<int>(a[0].size());
    const std::vector<int> pivots = rref(a);
    std::vector<char> is_pivot(ncols, 0);
    for (int p : pivots) is_pivot[p] = 1;

    std::vector<RatVector> basis;
    for (int free = 0; free < ncols; ++free) {
        if (is_pivot[free]) continue;
        RatVector v(ncols, Rational(0));
        v[free] = 1;
        for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -a[i][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<RatVector> solve(const RatMatrix& a, const RatVector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("solve: dimension mismatch");
    if (a.empty()) return RatVector{};
    const int ncols = static_cast<int>(a[0].size());
    RatMatrix aug = a;
    for (size_t r = 0; r < aug.size(); ++r) aug[r].push_back(b[r]);
    const std::vector<int> pivots = rref(aug);
    if (!pivots.empty() && pivots.back() == ncols) return std::nullopt;
    RatVector x(ncols, Rational(0));
    for (size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug[i][ncols];
    return x;
}

std::vector<RatVector> kernel_of_images(const std::vector<SymbolPoly>& images) {
    const int ncols = static_cast<int>(images.size());
    std::vector<RatVector> kernel;

    std::vector<int> active;
    for (int j = 0; j < ncols; ++j) {
        if (images[j].is_zero()) {
            RatVector v(ncols, Rational(0));
            v[j] = 1;
            kernel.push_back(std::move(v));
        } else {
            active.push_back(j);
        }
    }
    if (active.empty()) return kernel;

    // Index the monomials appearing across the nonzero images.
    std::map<Monomial, int> row_id;
    for (int j : active) {
        for (const auto& [mono, coeff] : images[j].terms()) {
            (void)coeff;
            row_id.emplace(mono, 0);
        }
    }
    int next_id = 0;
    for (auto& [mono, id] : row_id) id = next_id++;
    const int nrows = next_id;

    std::vector<std::vector<std::pair<int, Rational>>> col_entries(ncols);
    std::vector<std::vector<int>> row_cols(nrows);
    for (int j : active) {
        for (const auto& [mono, coeff] : images[j].terms()) {
            const int r = row_id[mono];
            col_entries[j].emplace_back(r, coeff);
            row_cols[r].push_back(j);
        }
    }

    // Any row hit by exactly one column forces that column's coefficient
    // to zero; removing the column may create new singleton rows.
    std::vector<int> row_count(nrows, 0);
    std::vector<char> col_alive(ncols, 0);
    for (int j : active) col_alive[j] = 1;
    for (int r = 0; r < nrows; ++r) row_count[r] = static_cast<int>(row_cols[r].size());

    std::deque<int> singleton_rows;
    for (int r = 0; r < nrows; ++r) {
        if (row_count[r] == 1) singleton_rows.push_back(r);
    }
    while (!singleton_rows.empty()) {
        const int r = singleton_rows.front();
        singleton_rows.pop_front();
        if (row_count[r] != 1) continue;
        int victim = -1;
        for (int j : row_cols[r]) {
            if (col_alive[j]) {
                victim = j;
                break;
            }
        }
        if (victim < 0) continue;
        col_alive[victim] = 0;
        for (const auto& [row, coeff] : col_entries[victim]) {
            (void)coeff;
            if (--row_count[row] == 1) singleton_rows.push_back(row);
        }
    }

    std::vector<int> dense_cols;
    for (int j : active) {
        if (col_alive[j]) dense_cols.push_back(j);
    }
    if (dense_cols.empty()) return kernel;

    std::vector<int> dense_row_of(nrows, -1);
    int dense_nrows = 0;
    for (int j : dense_cols) {
        for (const auto& [row, coeff] : col_entries[j]) {
            (void)coeff;
            if (dense_row_of[row] < 0) dense_row_of[row] = dense_nrows++;
        }
    }

    RatMatrix dense(dense_nrows, RatVector(dense_cols.size(), Rational(0)));
    for (size_t jj = 0; jj < dense_cols.size(); ++jj) {
        for (const auto& [row, coeff] : col_entries[dense_cols[jj]]) {
            dense[dense_row_of[row]][jj] = coeff;
        }
    }

    for (const RatVector& small : nullspace(std::move(dense))) {
        RatVector v(ncols, Rational(0));
        for (size_t jj = 0; jj < dense_cols.size(); ++jj) v[dense_cols[jj]] = small[jj];
        kernel.push_back(std::move(v));
    }
    return kernel;
}

std::vector<SymbolPoly> restrict_kernel(const std::vector<SymbolPoly>& basis,
                                        const std::function<SymbolPoly(const SymbolPoly&)>& op) {
    std::vector<SymbolPoly> images;
    images.reserve(basis.size());
    for (const SymbolPoly& b : basis) images.push_back(op(b));

    std::vector<SymbolPoly> result;
    for (const RatVector& coords : kernel_of_images(images)) {
        SymbolPoly combo = SymbolPoly::zero(basis.empty() ? 1 : basis.front().dim());
        for (size_t j = 0; j < coords.size(); ++j) {
            if (coords[j] != 0) combo += coords[j] * basis[j];
        }
        result.push_back(std::move(combo));
    }
    return result;
}

}  // namespace confop
