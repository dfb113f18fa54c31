#include <vector>

#include "doctest.h"
#include "loewner/matrix.hpp"
#include "support.hpp"

using loewner::HermitianMatrix;
using loewner::Matrix;

TEST_CASE("hermitian construction symmetrizes") {
    const HermitianMatrix h(Matrix{{1.0, 2.0}, {4.0, 5.0}});
    CHECK(h(0, 1) == 3.0);
    CHECK(h(1, 0) == 3.0);
    CHECK(h(0, 0) == 1.0);
}

TEST_CASE("products agree with a naive triple loop") {
    const Matrix x{{1.0, 2.0, 0.5}, {-1.0, 3.0, 2.0}, {0.0, 1.0, 4.0}};
    const Matrix y{{2.0, 0.0, 1.0}, {1.0, 1.0, 0.0}, {-3.0, 2.0, 1.0}};
    const Matrix got = x * y;
    const Matrix want = oracle::naive_product(x, y);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) CHECK(got(i, j) == doctest::Approx(want(i, j)));
}

TEST_CASE("matrix_power by repeated squaring") {
    const Matrix x{{1.0, 1.0}, {1.0, 0.0}};
    const Matrix f = loewner::matrix_power(x, 10);
    // Fibonacci: [[F11, F10], [F10, F9]]
    CHECK(f(0, 0) == 89.0);
    CHECK(f(0, 1) == 55.0);
    CHECK(f(1, 1) == 34.0);
    CHECK(loewner::matrix_power(x, 0) == Matrix::identity(2));
}

TEST_CASE("dimension mismatches throw") {
    const Matrix a = Matrix::identity(2);
    const Matrix b = Matrix::identity(3);
    CHECK_THROWS_AS((void)(a + b), loewner::DimensionError);
    CHECK_THROWS_AS((void)(a * b), loewner::DimensionError);
    CHECK_THROWS_AS(Matrix(2, std::vector<double>{1.0, 2.0, 3.0}), loewner::DimensionError);
}

TEST_CASE("relative frobenius error") {
    const Matrix a{{1.0, 0.0}, {0.0, 1.0}};
    const Matrix b{{1.0, 0.0}, {0.0, 1.0 + 1e-3}};
    CHECK(loewner::relative_frobenius_error(b, a) == doctest::Approx(1e-3 / std::sqrt(2.0)));
    CHECK(loewner::relative_frobenius_error(a, a) == 0.0);
}
