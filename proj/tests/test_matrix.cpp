#include "doctest.h"

#include <random>

#include "nodal/matrix.hpp"

using namespace nodal;

namespace {

RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b) {
    RationalMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < b.cols(); ++j) {
            Rational sum = 0;
            for (std::size_t k = 0; k < a.cols(); ++k) sum += a.at(i, k) * b.at(k, j);
            out.at(i, j) = sum;
        }
    }
    return out;
}

bool is_zero(const RationalMatrix& m) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (m.at(i, j) != 0) return false;
        }
    }
    return true;
}

}  // namespace

TEST_CASE("rank of simple matrices") {
    RationalMatrix zero(3, 4);
    CHECK(rank(zero) == 0);
    CHECK(nullity(zero) == 4);

    RationalMatrix id(3, 3);
    for (int i = 0; i < 3; ++i) id.at(i, i) = 1;
    CHECK(rank(id) == 3);
    CHECK(nullity(id) == 0);

    RationalMatrix dup(2, 3);
    for (int j = 0; j < 3; ++j) {
        dup.at(0, j) = j + 1;
        dup.at(1, j) = Rational(2 * (j + 1), 3);
    }
    CHECK(rank(dup) == 1);
    CHECK(nullity(dup) == 2);
}

TEST_CASE("rank of a product of random full-rank factors") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> entry(-9, 9);
    for (int trial = 0; trial < 20; ++trial) {
        std::size_t n = 6, r = 1 + trial % 4;
        RationalMatrix a(n, r), b(r, n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < r; ++j) {
                a.at(i, j) = Rational(entry(rng), 1 + (trial % 3));
                b.at(j, i) = entry(rng);
            }
        }
        std::size_t rk = rank(multiply(a, b));
        CHECK(rk <= r);
        CHECK(rk == std::min(rank(a), rank(b)));
    }
}

TEST_CASE("null space columns are actual kernel vectors") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> entry(-5, 5);
    for (int trial = 0; trial < 30; ++trial) {
        std::size_t rows = 2 + trial % 4, cols = 3 + trial % 5;
        RationalMatrix m(rows, cols);
        for (std::size_t i = 0; i < rows; ++i) {
            for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = Rational(entry(rng), 2);
        }
        RationalMatrix ker = null_space(m);
        CHECK(ker.cols() == nullity(m));
        CHECK(is_zero(multiply(m, ker)));
        // The basis must be independent.
        CHECK(rank(ker) == ker.cols());
    }
}

TEST_CASE("transpose preserves rank") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<int> entry(-4, 4);
    for (int trial = 0; trial < 20; ++trial) {
        RationalMatrix m(4, 6);
        for (std::size_t i = 0; i < 4; ++i) {
            for (std::size_t j = 0; j < 6; ++j) m.at(i, j) = entry(rng);
        }
        CHECK(rank(m) == rank(transpose(m)));
    }
}
