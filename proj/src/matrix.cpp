#include "nodal/matrix.hpp"

#include <algorithm>
#include <cstddef>

namespace nodal {

namespace {

// Row-wise denominator clearing; rank is invariant under scaling rows by
// nonzero rationals.
std::vector<std::vector<Integer>> integer_rows(const RationalMatrix& m) {
    std::vector<std::vector<Integer>> rows(m.rows(), std::vector<Integer>(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Integer lcm = 1;
        for (std::size_t c = 0; c < m.cols(); ++c) {
            const Integer& den = denominator(m.at(r, c));
            lcm = boost::multiprecision::lcm(lcm, den);
        }
        for (std::size_t c = 0; c < m.cols(); ++c) {
            const Rational& q = m.at(r, c);
            rows[r][c] = numerator(q) * (lcm / denominator(q));
        }
    }
    return rows;
}

}  // namespace

std::size_t rank(const RationalMatrix& m) {
    auto a = integer_rows(m);
    const std::size_t nrows = m.rows();
    const std::size_t ncols = m.cols();

    // Bareiss fraction-free elimination. Pivot rows are chosen by smallest
    // nonzero magnitude in the pivot column, which keeps entries small.
    Integer prev = 1;
    std::size_t row = 0;
    for (std::size_t col = 0; col < ncols && row < nrows; ++col) {
        std::size_t pivot = nrows;
        for (std::size_t r = row; r < nrows; ++r) {
            if (a[r][col] == 0) continue;
            if (pivot == nrows || abs(a[r][col]) < abs(a[pivot][col])) pivot = r;
        }
        if (pivot == nrows) continue;
        std::swap(a[row], a[pivot]);
        for (std::size_t r = row + 1; r < nrows; ++r) {
            for (std::size_t c = col + 1; c < ncols; ++c) {
                a[r][c] = (a[row][col] * a[r][c] - a[r][col] * a[row][c]) / prev;
            }
            a[r][col] = 0;
        }
        prev = a[row][col];
        ++row;
    }
    return row;
}

std::size_t nullity(const RationalMatrix& m) { return m.cols() - rank(m); }

RationalMatrix null_space(const RationalMatrix& m) {
    // Reduced row echelon form over the rationals; the matrices fed here are
    // small, so plain exact division is fine.
    const std::size_t nrows = m.rows();
    const std::size_t ncols = m.cols();
    std::vector<std::vector<Rational>> a(nrows, std::vector<Rational>(ncols));
    for (std::size_t r = 0; r < nrows; ++r)
        for (std::size_t c = 0; c < ncols; ++c) a[r][c] = m.at(r, c);

    std::vector<std::size_t> pivot_col;
    std::size_t row = 0;
    for (std::size_t col = 0; col < ncols && row < nrows; ++col) {
        std::size_t pivot = nrows;
        for (std::size_t r = row; r < nrows; ++r) {
            if (a[r][col] != 0) { pivot = r; break; }
        }
        if (pivot == nrows) continue;
        std::swap(a[row], a[pivot]);
        const Rational inv = a[row][col];
        for (std::size_t c = col; c < ncols; ++c) a[row][c] /= inv;
        for (std::size_t r = 0; r < nrows; ++r) {
            if (r == row || a[r][col] == 0) continue;
            const Rational f = a[r][col];
            for (std::size_t c = col; c < ncols; ++c) a[r][c] -= f * a[row][c];
        }
        pivot_col.push_back(col);
        ++row;
    }

    std::vector<bool> is_pivot(ncols, false);
    for (std::size_t c : pivot_col) is_pivot[c] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < ncols; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);

    RationalMatrix basis(ncols, free_cols.size());
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        const std::size_t fc = free_cols[k];
        basis.at(fc, k) = 1;
        for (std::size_t r = 0; r < pivot_col.size(); ++r) {
            basis.at(pivot_col[r], k) = -a[r][fc];
        }
    }
    return basis;
}

RationalMatrix transpose(const RationalMatrix& m) {
    RationalMatrix t(m.cols(), m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) t.at(c, r) = m.at(r, c);
    return t;
}

}  // namespace nodal
