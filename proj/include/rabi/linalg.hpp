// linalg.hpp: dense symmetric and tridiagonal eigensolvers, banded lowest-eigenvalue solver

#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace rabi {

// Row-major square matrix.
class Matrix {
public:
    Matrix() = default;
    explicit Matrix(std::size_t n, double fill = 0.0) : n_(n), data_(n * n, fill) {}

    std::size_t size() const { return n_; }
    double& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
    std::span<const double> data() const { return data_; }

    double frobenius_norm() const;

private:
    std::size_t n_{0};
    std::vector<double> data_;
};

class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& what, int iterations)
        : std::runtime_error(what + " (after " + std::to_string(iterations) + " iterations)"),
          iterations_(iterations) {}
    int iterations() const { return iterations_; }

private:
    int iterations_;
};

struct EigenDecomposition {
    std::vector<double> values;  // ascending
    Matrix vectors;              // column k pairs with values[k]; empty when not requested
};

// Householder tridiagonalization followed by implicit QL with shifts.
// Throws std::invalid_argument when A is not symmetric to 1e-12 relative.
EigenDecomposition sym_eigen(const Matrix& a, bool want_vectors = false);

// Eigenvalues (ascending) of the symmetric tridiagonal matrix with the given diagonal and
// off-diagonal (off.size() == diag.size() - 1).
std::vector<double> tridiagonal_eigenvalues(std::span<const double> diag, std::span<const double> off);

// Lowest `count` eigenvalues of a symmetric band matrix, stored as bands[k][i] = A(i, i+k)
// for k = 0..kd. Backed by LAPACK dsbevx with bisection to full accuracy.
std::vector<double> banded_lowest_eigenvalues(const std::vector<std::vector<double>>& bands, std::size_t count);

}  // namespace rabi
