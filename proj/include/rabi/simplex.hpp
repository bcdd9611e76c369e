// simplex.hpp: integration over the ordered simplex 0 <= mu_1 <= ... <= mu_d <= 1

#pragma once

#include <cstddef>
#include <cmath>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "rabi/quadrature.hpp"

namespace rabi {

enum class Sampler { qmc, nested_quadrature };

struct QmcSettings {
    std::size_t points_per_lambda{200000};  // total over all replicates
    int replicates{8};                      // independent digital shifts
    std::uint64_t seed{20230125};
};

struct QuadSettings {
    int order{32};   // Gauss-Legendre nodes per axis
    int max_dim{4};  // larger dimensions fall back to QMC
};

struct SeriesConfig {
    int lambda_max{8};
    Sampler sampler{Sampler::qmc};
    QmcSettings qmc;
    QuadSettings quad;
    double target_rel_err{1e-4};
    bool auto_raise{true};  // raise lambda_max (up to 12) until the tail envelope meets target

    static constexpr int kLambdaCap = 12;
    void validate() const;
};

struct IntegralEstimate {
    double value{0.0};
    double stat_err{0.0};
};

bool is_simplex_point(std::span<const double> mu);

double simplex_volume(int dim);

// Randomized Sobol points mapped to the simplex by sorting; R replicates, each with its own
// digital shift. Point (r, i) is ascending and has `dim` coordinates.
class SimplexPointSet {
public:
    SimplexPointSet(int dim, std::size_t total_points, int replicates, std::uint64_t seed, std::uint64_t stream);

    int dim() const { return dim_; }
    int replicates() const { return replicates_; }
    std::size_t points_per_replicate() const { return per_rep_; }
    std::span<const double> point(int rep, std::size_t i) const {
        return {coords_.data() + (static_cast<std::size_t>(rep) * per_rep_ + i) * dim_, static_cast<std::size_t>(dim_)};
    }

private:
    int dim_;
    int replicates_;
    std::size_t per_rep_;
    std::vector<double> coords_;
};

// Mean over replicates of the per-replicate averages, scaled by 1/dim!.
template <class F>
IntegralEstimate integrate_points(const SimplexPointSet& set, F&& f) {
    const int R = set.replicates();
    std::vector<double> means(R, 0.0);
    for (int r = 0; r < R; ++r) {
        double acc = 0.0;
        for (std::size_t i = 0; i < set.points_per_replicate(); ++i) acc += f(set.point(r, i));
        means[r] = acc / static_cast<double>(set.points_per_replicate());
    }
    double mean = 0.0;
    for (double m : means) mean += m;
    mean /= R;
    double var = 0.0;
    for (double m : means) var += (m - mean) * (m - mean);
    const double vol = simplex_volume(set.dim());
    IntegralEstimate out;
    out.value = mean * vol;
    out.stat_err = R > 1 ? std::sqrt(var / (R - 1) / R) * vol : 0.0;
    return out;
}

// Tensor Gauss-Legendre on the simplex through mu_d = x_d, mu_k = mu_{k+1} x_k
// (Jacobian mu_2 ... mu_d). Works for any value type returned by f.
template <class F>
auto integrate_nested(F&& f, int dim, int order) -> decltype(f(std::span<const double>{})) {
    using T = decltype(f(std::span<const double>{}));
    if (dim == 0) return f(std::span<const double>{});
    const auto& rule = gauss_legendre01(order);
    const std::size_t n = rule.size();
    std::vector<std::size_t> idx(dim, 0);
    std::vector<double> mu(dim);
    T total{};
    while (true) {
        double w = 1.0;
        double upper = 1.0;
        for (int k = dim - 1; k >= 0; --k) {
            mu[k] = upper * rule.nodes[idx[k]];
            w *= rule.weights[idx[k]] * upper;
            upper = mu[k];
        }
        total += w * f(std::span<const double>(mu));
        int k = 0;
        while (k < dim && ++idx[k] == n) idx[k++] = 0;
        if (k == dim) break;
    }
    return total;
}

// Dispatches on cfg.sampler; `stream` decorrelates independent integrals sharing a seed.
IntegralEstimate simplex_integrate(const std::function<double(std::span<const double>)>& f, int dim,
                                   const SeriesConfig& cfg, std::uint64_t stream = 0);

}  // namespace rabi
