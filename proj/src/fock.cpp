// fock.cpp: Fock-space truncations of the AQRM and its parity blocks

#include "rabi/fock.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace rabi {

namespace {

std::size_t start_dimension(const ModelParams& params, std::size_t j_max, const SpectrumOptions& opts) {
    if (opts.start_dim > 0) return opts.start_dim;
    const auto by_levels = 4 * j_max + static_cast<std::size_t>(std::ceil(16.0 * params.g * params.g));
    return std::max<std::size_t>(64, by_levels);
}

template <class Levels>
Spectrum converge(std::size_t j_max, double tol, std::size_t M, const SpectrumOptions& opts, Levels&& levels) {
    if (j_max < 1) throw std::invalid_argument("spectrum: j_max must be >= 1");
    if (!(tol > 0.0)) throw std::invalid_argument("spectrum: tol must be positive");
    std::vector<double> previous = levels(M);
    double change = 0.0;
    for (int doubling = 1; doubling <= opts.max_doublings; ++doubling) {
        M *= 2;
        std::vector<double> current = levels(M);
        change = 0.0;
        for (std::size_t j = 0; j < j_max; ++j) change = std::max(change, std::abs(current[j] - previous[j]));
        if (change < tol) {
            Spectrum out;
            out.eigenvalues = std::move(current);
            out.truncation_dim = M;
            out.converged_count = j_max;
            out.tol = tol;
            out.max_change = change;
            return out;
        }
        previous = std::move(current);
    }
    throw ConvergenceError("spectrum: levels not stable under truncation doubling (last change " +
                               std::to_string(change) + ")",
                           opts.max_doublings);
}

}  // namespace

Matrix build_aqrm(const ModelParams& params, std::size_t M) {
    params.validate();
    if (M < 1) throw std::invalid_argument("build_aqrm: cutoff M must be >= 1");
    const std::size_t dim = 2 * (M + 1);
    Matrix h(dim);
    for (std::size_t n = 0; n <= M; ++n) {
        const std::size_t p = 2 * n;
        const std::size_t m = 2 * n + 1;
        h(p, p) = n + params.eps;
        h(m, m) = n - params.eps;
        h(p, m) = h(m, p) = params.delta;
        if (n < M) {
            const double hop = params.g * std::sqrt(n + 1.0);
            h(p, p + 2) = h(p + 2, p) = hop;
            h(m, m + 2) = h(m + 2, m) = -hop;
        }
    }
    return h;
}

Tridiagonal build_parity(const ModelParams& params, Parity sign, std::size_t M) {
    params.validate();
    if (params.eps != 0.0) throw std::invalid_argument("build_parity: parity blocks require eps = 0");
    if (M < 1) throw std::invalid_argument("build_parity: cutoff M must be >= 1");
    const double s = sign == Parity::plus ? 1.0 : -1.0;
    Tridiagonal t;
    t.diag.resize(M + 1);
    t.off.resize(M);
    for (std::size_t n = 0; n <= M; ++n) t.diag[n] = n + s * params.delta * (n % 2 == 0 ? 1.0 : -1.0);
    for (std::size_t n = 0; n < M; ++n) t.off[n] = params.g * std::sqrt(n + 1.0);
    return t;
}

std::vector<double> aqrm_levels(const ModelParams& params, std::size_t M, std::size_t count) {
    params.validate();
    if (M < 1) throw std::invalid_argument("aqrm_levels: cutoff M must be >= 1");
    const std::size_t dim = 2 * (M + 1);
    std::vector<std::vector<double>> bands(3);
    bands[0].resize(dim);
    bands[1].assign(dim - 1, 0.0);
    bands[2].assign(dim - 2, 0.0);
    for (std::size_t n = 0; n <= M; ++n) {
        bands[0][2 * n] = n + params.eps;
        bands[0][2 * n + 1] = n - params.eps;
        bands[1][2 * n] = params.delta;
        if (n < M) {
            const double hop = params.g * std::sqrt(n + 1.0);
            bands[2][2 * n] = hop;
            bands[2][2 * n + 1] = -hop;
        }
    }
    return banded_lowest_eigenvalues(bands, std::min(count, dim));
}

std::vector<double> parity_levels(const ModelParams& params, Parity sign, std::size_t M, std::size_t count) {
    const auto t = build_parity(params, sign, M);
    auto values = tridiagonal_eigenvalues(t.diag, t.off);
    values.resize(std::min(count, values.size()));
    return values;
}

Spectrum spectrum(const ModelParams& params, std::size_t j_max, double tol, const SpectrumOptions& opts) {
    params.validate();
    const std::size_t M = start_dimension(params, j_max, opts);
    return converge(j_max, tol, M, opts, [&](std::size_t m) { return aqrm_levels(params, m, j_max); });
}

Spectrum parity_spectrum(const ModelParams& params, Parity sign, std::size_t j_max, double tol,
                         const SpectrumOptions& opts) {
    params.validate();
    const std::size_t M = start_dimension(params, j_max, opts);
    return converge(j_max, tol, M, opts, [&](std::size_t m) { return parity_levels(params, sign, m, j_max); });
}

CurveTable curve_table(const ModelParams& params, const std::vector<double>& g_grid, std::size_t j_max, double tol) {
    if (g_grid.empty()) throw std::invalid_argument("curve_table: empty g grid");
    if (!std::is_sorted(g_grid.begin(), g_grid.end()))
        throw std::invalid_argument("curve_table: g grid must be ascending");
    CurveTable table;
    table.g_grid = g_grid;
    table.eps = params.eps;
    table.delta = params.delta;
    table.shifted_levels.reserve(g_grid.size());
    for (double g : g_grid) {
        ModelParams p = params;
        p.g = g;
        auto spec = spectrum(p, j_max, tol);
        std::vector<double> row(spec.eigenvalues.begin(), spec.eigenvalues.begin() + static_cast<long>(j_max));
        for (double& x : row) x += g * g;
        table.shifted_levels.push_back(std::move(row));
    }
    return table;
}

int crossing_count(const CurveTable& curve, std::size_t level, double baseline) {
    if (level >= curve.level_count()) throw std::out_of_range("crossing_count: level not tracked");
    int crossings = 0;
    int last_sign = 0;
    for (const auto& row : curve.shifted_levels) {
        const double diff = row[level] - baseline;
        const int sign = diff > 0.0 ? 1 : (diff < 0.0 ? -1 : 0);
        if (sign == 0) continue;
        if (last_sign != 0 && sign != last_sign) ++crossings;
        last_sign = sign;
    }
    return crossings;
}

std::size_t max_cluster_size(const std::vector<double>& sorted_values, double cluster_tol) {
    if (sorted_values.empty()) return 0;
    std::size_t best = 1;
    std::size_t run = 1;
    for (std::size_t i = 1; i < sorted_values.size(); ++i) {
        run = (sorted_values[i] - sorted_values[i - 1] <= cluster_tol) ? run + 1 : 1;
        best = std::max(best, run);
    }
    return best;
}

}  // namespace rabi
