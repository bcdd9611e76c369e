// fock.hpp: Fock-space truncations of the AQRM and its parity blocks

#pragma once

#include <cstddef>
#include <vector>

#include "rabi/linalg.hpp"
#include "rabi/model.hpp"

namespace rabi {

enum class Parity { plus, minus };

struct Spectrum {
    std::vector<double> eigenvalues;  // ascending, unshifted
    std::size_t truncation_dim{0};    // Fock cutoff M actually used
    std::size_t converged_count{0};
    double tol{0.0};
    double max_change{0.0};  // largest level change at the final doubling
};

struct CurveTable {
    std::vector<double> g_grid;
    std::vector<std::vector<double>> shifted_levels;  // [i][j] = lambda_j(g_i) + g_i^2
    double eps{0.0};
    double delta{0.0};

    std::size_t level_count() const { return shifted_levels.empty() ? 0 : shifted_levels.front().size(); }
};

struct SpectrumOptions {
    int max_doublings{6};
    std::size_t start_dim{0};  // 0: max(64, 4 j_max + ceil(16 g^2))
};

// Dense matrix in the interleaved sigma_x basis (n,+),(n,-): size 2(M+1).
Matrix build_aqrm(const ModelParams& params, std::size_t M);

// H_pm = a^dag a + g(a + a^dag) pm delta T, T|n> = (-1)^n |n>; tridiagonal of size M+1.
struct Tridiagonal {
    std::vector<double> diag;
    std::vector<double> off;
};
Tridiagonal build_parity(const ModelParams& params, Parity sign, std::size_t M);

// Lowest `count` eigenvalues at a fixed cutoff.
std::vector<double> aqrm_levels(const ModelParams& params, std::size_t M, std::size_t count);
std::vector<double> parity_levels(const ModelParams& params, Parity sign, std::size_t M, std::size_t count);

// First j_max eigenvalues, doubling M until the largest change is below tol.
// Throws ConvergenceError after max_doublings.
Spectrum spectrum(const ModelParams& params, std::size_t j_max, double tol, const SpectrumOptions& opts = {});
Spectrum parity_spectrum(const ModelParams& params, Parity sign, std::size_t j_max, double tol,
                         const SpectrumOptions& opts = {});

CurveTable curve_table(const ModelParams& params, const std::vector<double>& g_grid, std::size_t j_max, double tol);

// Sign changes of (shifted level j - baseline) along the grid.
int crossing_count(const CurveTable& curve, std::size_t level, double baseline);

// Largest group of eigenvalues within `cluster_tol` of each other (chained).
std::size_t max_cluster_size(const std::vector<double>& sorted_values, double cluster_tol);

}  // namespace rabi
