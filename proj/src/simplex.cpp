// simplex.cpp: randomized Sobol sampling of the ordered simplex

#include "rabi/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include <boost/random/sobol.hpp>

namespace rabi {

void SeriesConfig::validate() const {
    if (lambda_max < 0 || lambda_max > kLambdaCap)
        throw std::invalid_argument("SeriesConfig: lambda_max must lie in 0..12");
    if (sampler == Sampler::qmc || 2 * lambda_max > quad.max_dim) {
        if (qmc.points_per_lambda < 1000) throw std::invalid_argument("SeriesConfig: need >= 1000 QMC points");
        if (qmc.replicates < 2) throw std::invalid_argument("SeriesConfig: need >= 2 QMC replicates");
    }
    if (quad.order < 1) throw std::invalid_argument("SeriesConfig: quadrature order must be >= 1");
    if (!(target_rel_err > 0.0)) throw std::invalid_argument("SeriesConfig: target_rel_err must be positive");
}

bool is_simplex_point(std::span<const double> mu) {
    double prev = 0.0;
    for (double x : mu) {
        if (!(x >= prev) || x > 1.0) return false;
        prev = x;
    }
    return true;
}

double simplex_volume(int dim) {
    double v = 1.0;
    for (int k = 2; k <= dim; ++k) v /= k;
    return v;
}

SimplexPointSet::SimplexPointSet(int dim, std::size_t total_points, int replicates, std::uint64_t seed,
                                 std::uint64_t stream)
    : dim_(dim), replicates_(replicates) {
    if (dim < 1) throw std::invalid_argument("SimplexPointSet: dim must be >= 1");
    if (replicates < 1) throw std::invalid_argument("SimplexPointSet: replicates must be >= 1");
    per_rep_ = std::max<std::size_t>(1, total_points / static_cast<std::size_t>(replicates));
    coords_.resize(per_rep_ * replicates * dim);

    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32),
                      static_cast<std::uint32_t>(dim)};
    std::mt19937_64 rng(seq);
    std::vector<std::uint64_t> shift(dim);
    std::vector<std::uint64_t> raw(per_rep_ * dim);

    boost::random::sobol sobol(dim);
    for (std::size_t i = 0; i < per_rep_ * dim; ++i) raw[i] = sobol();

    constexpr double scale = 0x1p-53;
    for (int r = 0; r < replicates; ++r) {
        for (auto& s : shift) s = rng();
        double* out = coords_.data() + static_cast<std::size_t>(r) * per_rep_ * dim;
        for (std::size_t i = 0; i < per_rep_; ++i) {
            double* p = out + i * dim;
            for (int k = 0; k < dim; ++k) p[k] = static_cast<double>((raw[i * dim + k] ^ shift[k]) >> 11) * scale;
            std::sort(p, p + dim);
        }
    }
}

IntegralEstimate simplex_integrate(const std::function<double(std::span<const double>)>& f, int dim,
                                   const SeriesConfig& cfg, std::uint64_t stream) {
    if (dim < 0) throw std::invalid_argument("simplex_integrate: negative dimension");
    if (dim == 0) return {f(std::span<const double>{}), 0.0};
    if (cfg.sampler == Sampler::nested_quadrature && dim <= cfg.quad.max_dim)
        return {integrate_nested(f, dim, cfg.quad.order), 0.0};
    SimplexPointSet set(dim, cfg.qmc.points_per_lambda, cfg.qmc.replicates, cfg.qmc.seed, stream);
    return integrate_points(set, f);
}

}  // namespace rabi
