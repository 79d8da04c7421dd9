#pragma once

#include <cstddef>
#include <vector>

namespace qfa {

/// Dense real matrix, row-major. The machines in this library are tiny (two
/// states for the whole rotation family), so there is no reason to pull in a
/// linear-algebra package.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}

    static Matrix identity(std::size_t n);
    /// Planar rotation by theta: [[cos, -sin], [sin, cos]].
    static Matrix rotation2d(double theta);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    /// Matrix-vector product M*v; v.size() must equal cols().
    std::vector<double> apply(const std::vector<double>& v) const;

    bool operator==(const Matrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);

/// True iff max |(M*M^T - I)_ij| <= tolerance. Matrices here are real, so
/// orthogonality is the whole unitarity check. Non-square input fails.
bool check_unitary(const Matrix& m, double tolerance);

}  // namespace qfa
