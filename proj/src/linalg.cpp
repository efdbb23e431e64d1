#include "holoform/linalg.hpp"

namespace holoform {

namespace {

// Reduced row echelon form in place; returns the pivot column of each
// nonzero row, in order.
std::vector<int> rref(ScalarMatrix& m, int ncols) {
    std::vector<int> pivots;
    std::size_t row = 0;
    for (int col = 0; col < ncols && row < m.size(); ++col) {
        std::size_t sel = row;
        while (sel < m.size() && m[sel][col].is_zero()) ++sel;
        if (sel == m.size()) continue;
        std::swap(m[row], m[sel]);
        Scalar inv = Scalar(1) / m[row][col];
        for (int j = col; j < ncols; ++j) m[row][j] *= inv;
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == row || m[r][col].is_zero()) continue;
            Scalar f = m[r][col];
            for (int j = col; j < ncols; ++j) m[r][j] -= f * m[row][j];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

int rank(ScalarMatrix m) {
    if (m.empty()) return 0;
    int ncols = static_cast<int>(m[0].size());
    return static_cast<int>(rref(m, ncols).size());
}

std::vector<std::vector<Scalar>> kernel_basis(ScalarMatrix m, int ncols) {
    std::vector<int> pivots = m.empty() ? std::vector<int>{} : rref(m, ncols);
    std::vector<bool> is_pivot(ncols, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<std::vector<Scalar>> basis;
    for (int free_col = 0; free_col < ncols; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<Scalar> v(ncols, Scalar(0));
        v[free_col] = Scalar(1);
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = -m[r][free_col];
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace holoform
