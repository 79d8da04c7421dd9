#include <cmath>
#include <numbers>

#include "doctest.h"

#include "qfa/matrix.hpp"

using qfa::Matrix;

TEST_CASE("Matrix::identity") {
    const Matrix id = Matrix::identity(3);
    CHECK(id.rows() == 3);
    CHECK(id.cols() == 3);
    for (std::size_t r = 0; r < 3; ++r) {
        for (std::size_t c = 0; c < 3; ++c) {
            CHECK(id(r, c) == (r == c ? 1.0 : 0.0));
        }
    }
}

TEST_CASE("Matrix::rotation2d entries") {
    const double theta = std::numbers::pi / 3;
    const Matrix rot = Matrix::rotation2d(theta);
    CHECK(rot.rows() == 2);
    CHECK(rot(0, 0) == doctest::Approx(std::cos(theta)));
    CHECK(rot(0, 1) == doctest::Approx(-std::sin(theta)));
    CHECK(rot(1, 0) == doctest::Approx(std::sin(theta)));
    CHECK(rot(1, 1) == doctest::Approx(std::cos(theta)));
}

TEST_CASE("Matrix::apply rotates a basis vector") {
    const Matrix rot = Matrix::rotation2d(std::numbers::pi / 4);
    const auto v = rot.apply({1.0, 0.0});
    REQUIRE(v.size() == 2);
    CHECK(v[0] == doctest::Approx(std::sqrt(0.5)));
    CHECK(v[1] == doctest::Approx(std::sqrt(0.5)));
}

TEST_CASE("Matrix product composes rotations by angle addition") {
    // rot(a) * rot(b) == rot(a + b), checked entrywise.
    const double a = 0.31;
    const double b = 1.13;
    const Matrix lhs = Matrix::rotation2d(a) * Matrix::rotation2d(b);
    const Matrix sum = Matrix::rotation2d(a + b);
    for (std::size_t r = 0; r < 2; ++r) {
        for (std::size_t c = 0; c < 2; ++c) {
            CHECK(lhs(r, c) == doctest::Approx(sum(r, c)).epsilon(1e-12));
        }
    }
}

TEST_CASE("check_unitary accepts orthogonal matrices") {
    CHECK(qfa::check_unitary(Matrix::identity(2), 1e-9));
    CHECK(qfa::check_unitary(Matrix::rotation2d(std::numbers::pi / 4), 1e-9));

    // Permutation of three states is orthogonal too.
    Matrix perm(3, 3);
    perm(0, 1) = 1.0;
    perm(1, 2) = 1.0;
    perm(2, 0) = 1.0;
    CHECK(qfa::check_unitary(perm, 0.0));
}

TEST_CASE("check_unitary rejects shears, scalings, and non-square input") {
    Matrix shear = Matrix::identity(2);
    shear(0, 1) = 1.0;
    CHECK_FALSE(qfa::check_unitary(shear, 1e-9));

    Matrix scaled = Matrix::identity(2);
    scaled(0, 0) = 1.5;
    CHECK_FALSE(qfa::check_unitary(scaled, 1e-9));

    CHECK_FALSE(qfa::check_unitary(Matrix(2, 3), 1e-9));
}

TEST_CASE("check_unitary tolerance is a max-entry bound") {
    Matrix nearly = Matrix::identity(2);
    nearly(0, 0) = 1.0 + 1e-8;
    CHECK_FALSE(qfa::check_unitary(nearly, 1e-9));
    CHECK(qfa::check_unitary(nearly, 1e-6));
}
