#pragma once

#include <cstddef>
#include <vector>

#include "nodal/rational.hpp"

namespace nodal {

// Dense matrix over the rationals. Immutable after construction; rank
// computations work on private copies.
class RationalMatrix {
public:
    RationalMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Rational& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Rational> entries_;
};

// Rank by exact Gaussian elimination with partial pivoting.
std::size_t rank(const RationalMatrix& m);

// cols() - rank(); the dimension of the right null space.
std::size_t nullity(const RationalMatrix& m);

// Basis of the right null space, one column per basis vector.
RationalMatrix null_space(const RationalMatrix& m);

RationalMatrix transpose(const RationalMatrix& m);

}  // namespace nodal
