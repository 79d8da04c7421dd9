#include "qfa/matrix.hpp"

#include <cmath>

namespace qfa {

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

Matrix Matrix::rotation2d(double theta) {
    Matrix m(2, 2);
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    m(0, 0) = c;
    m(0, 1) = -s;
    m(1, 0) = s;
    m(1, 1) = c;
    return m;
}

std::vector<double> Matrix::apply(const std::vector<double>& v) const {
    std::vector<double> out(rows_, 0.0);
    for (std::size_t r = 0; r < rows_; ++r) {
        double acc = 0.0;
        for (std::size_t c = 0; c < cols_; ++c) acc += data_[r * cols_ + c] * v[c];
        out[r] = acc;
    }
    return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const double aik = a(i, k);
            for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
        }
    }
    return out;
}

bool check_unitary(const Matrix& m, double tolerance) {
    if (m.rows() != m.cols()) return false;
    const std::size_t n = m.rows();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            double dot = 0.0;  // (M * M^T)_ij is the dot product of rows i and j
            for (std::size_t k = 0; k < n; ++k) dot += m(i, k) * m(j, k);
            const double expected = i == j ? 1.0 : 0.0;
            if (std::abs(dot - expected) > tolerance) return false;
        }
    }
    return true;
}

}  // namespace qfa
