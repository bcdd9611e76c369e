// partition.cpp: series evaluation of Z(beta) and Z^pm(beta)

#include "rabi/partition.hpp"

#include <algorithm>
#include <cmath>

#include "rabi/specfun.hpp"

namespace rabi {

namespace {

void check_t(double t, const char* who) {
    if (!(t > 0.0)) throw std::domain_error(std::string(who) + ": t must be positive");
}

void check_mu(int lambda, std::span<const double> mu, const char* who) {
    if (lambda < 1 || static_cast<int>(mu.size()) != lambda)
        throw std::invalid_argument(std::string(who) + ": mu dimension must equal lambda >= 1");
}

double mu_at(std::span<const double> mu, int gamma) { return gamma == 0 ? 0.0 : mu[gamma - 1]; }

double inverse_factorial(int n) {
    double v = 1.0;
    for (int k = 2; k <= n; ++k) v /= k;
    return v;
}

// Stream identifiers keep the integrals of different (operation, lambda) pairs decorrelated.
std::uint64_t stream_id(std::uint64_t op, int dim) { return (op << 8) | static_cast<std::uint64_t>(dim); }
constexpr std::uint64_t kFullStream = 1;
constexpr std::uint64_t kEvenStream = 2;
constexpr std::uint64_t kOddStream = 3;

// Tail beyond the last computed term: geometric extrapolation with the ratio capped by the g = 0
// envelope, and never above the envelope sum itself.
double tail_estimate(const std::vector<double>& terms, double x, int last_power, double envelope_scale) {
    double envelope = 0.0;
    double term = std::pow(x, last_power) * inverse_factorial(last_power);
    for (int p = last_power + 2; p < last_power + 200; p += 2) {
        term *= x * x / ((p - 1.0) * p);
        envelope += term;
        if (term < 1e-18 * envelope) break;
    }
    envelope *= envelope_scale;
    if (terms.size() < 2) return envelope;
    const double cap = x * x / ((last_power + 1.0) * (last_power + 2.0));
    const double last = std::abs(terms.back());
    const double prev = std::abs(terms[terms.size() - 2]);
    double ratio = prev > 0.0 ? std::min(last / prev, cap) : cap;
    if (ratio >= 1.0) return envelope;
    return std::min(last * ratio / (1.0 - ratio), envelope);
}

}  // namespace

double xi(int lambda, std::span<const double> mu, double t, double g) {
    check_mu(lambda, mu, "xi");
    check_t(t, "xi");
    const double sh_t = std::sinh(t);
    double s = 0.0;
    for (int gamma = 0; gamma <= lambda; ++gamma) s += (gamma % 2 ? -1.0 : 1.0) * std::cosh(t * mu_at(mu, gamma));
    const double half = std::sinh(0.5 * t * (1.0 - mu_at(mu, lambda)));
    const double sign = lambda % 2 ? -1.0 : 1.0;
    double first = -8.0 * g * g / sh_t * half * half * sign * s;
    double ds = 0.0;
    for (int b = 1; b <= lambda - 1; ++b)
        for (int a = b - 1; a >= 0; a -= 2)
            ds += (std::cosh(t * (1.0 - mu_at(mu, b + 1))) - std::cosh(t * (1.0 - mu_at(mu, b)))) *
                  (std::cosh(t * mu_at(mu, a)) - std::cosh(t * mu_at(mu, a + 1)));
    return first - 4.0 * g * g / sh_t * ds;
}

double psi_minus(int lambda, std::span<const double> mu, double t, double g) {
    check_mu(lambda, mu, "psi_minus");
    check_t(t, "psi_minus");
    double s = 0.0;
    for (int gamma = 0; gamma <= lambda; ++gamma)
        s += (gamma % 2 ? -1.0 : 1.0) * std::sinh(t * (0.5 - mu_at(mu, gamma)));
    return 4.0 * g * g / std::sinh(t) * s * s;
}

double psi_plus(int lambda, std::span<const double> mu, double t, double g) {
    check_mu(lambda, mu, "psi_plus");
    check_t(t, "psi_plus");
    double s = 0.0;
    for (int gamma = 0; gamma <= lambda; ++gamma)
        s += (gamma % 2 ? -1.0 : 1.0) * std::cosh(t * (0.5 - mu_at(mu, gamma)));
    return 4.0 * g * g / std::sinh(t) * s * s;
}

double theta_even(double g, double beta, std::span<const double> mu) {
    check_t(beta, "theta_even");
    if (mu.size() % 2 != 0) throw std::invalid_argument("theta_even: even dimension required");
    if (!is_simplex_point(mu)) throw std::invalid_argument("theta_even: mu is not an ordered simplex point");
    return std::exp(kernel::theta_exponent(g, beta, mu));
}

double xi_odd(double g, double beta, std::span<const double> mu) {
    check_t(beta, "xi_odd");
    if (mu.size() % 2 != 1) throw std::invalid_argument("xi_odd: odd dimension required");
    if (!is_simplex_point(mu)) throw std::invalid_argument("xi_odd: mu is not an ordered simplex point");
    return std::exp(kernel::xi_exponent(g, beta, mu));
}

bool xi_psi_plus_bound_check(int lambda, std::span<const double> mu, double t, double g) {
    if (static_cast<int>(mu.size()) != 2 * lambda + 1)
        throw std::invalid_argument("xi_psi_plus_bound_check: mu must have dimension 2 lambda + 1");
    return xi_odd(g, t, mu) <= std::exp(-2.0 * g * g * std::tanh(0.5 * t));
}

double eps_weight(double eps_beta, std::span<const double> mu) {
    if (eps_beta == 0.0) return 1.0;
    double alt = 0.0;
    for (std::size_t k = 0; k < mu.size(); ++k) alt += (k % 2 == 0 ? -1.0 : 1.0) * mu[k];
    return std::cosh(eps_beta * (1.0 - 2.0 * alt));
}

SeriesResult partition_full(const ModelParams& params, double beta, const SeriesConfig& cfg) {
    params.validate();
    cfg.validate();
    check_t(beta, "partition_full");
    const double x = beta * std::abs(params.delta);
    const double eb = params.eps * beta;

    SeriesResult out;
    out.prefactor = 2.0 * std::exp(params.g * params.g * beta) / -std::expm1(-beta);
    out.per_lambda_terms.push_back(std::cosh(eb));
    double var = 0.0;
    int L = cfg.lambda_max;
    const int cap = cfg.auto_raise ? SeriesConfig::kLambdaCap : cfg.lambda_max;
    if (x > 0.0) {
        for (int lambda = 1;; ++lambda) {
            const int dim = 2 * lambda;
            const auto est = simplex_integrate(
                [&](std::span<const double> mu) {
                    return std::exp(kernel::theta_exponent(params.g, beta, mu)) * eps_weight(eb, mu);
                },
                dim, cfg, stream_id(kFullStream, dim));
            const double w = std::pow(x, dim);
            out.per_lambda_terms.push_back(w * est.value);
            var += w * w * est.stat_err * est.stat_err;
            if (lambda < L) continue;
            double bracket = 0.0;
            for (double term : out.per_lambda_terms) bracket += term;
            out.trunc_err = tail_estimate(out.per_lambda_terms, x, dim, std::cosh(eb));
            if (out.trunc_err <= cfg.target_rel_err * std::abs(bracket) || lambda >= cap) break;
            L = lambda + 1;
        }
    }
    double bracket = 0.0;
    for (double term : out.per_lambda_terms) bracket += term;
    out.lambda_used = static_cast<int>(out.per_lambda_terms.size()) - 1;
    out.value = out.prefactor * bracket;
    out.stat_err = out.prefactor * std::sqrt(var);
    out.trunc_err *= out.prefactor;
    if (out.trunc_err > cfg.target_rel_err * std::abs(out.value))
        out.warnings.push_back("series truncation error exceeds target at lambda_max = " +
                               std::to_string(out.lambda_used));
    return out;
}

SeriesResult partition_parity(const ModelParams& params, Parity sign, double beta, const SeriesConfig& cfg) {
    params.validate();
    cfg.validate();
    if (params.eps != 0.0) throw std::invalid_argument("partition_parity: eps must be 0");
    check_t(beta, "partition_parity");
    const double x = beta * std::abs(params.delta);
    const double delta_sign = params.delta < 0.0 ? -1.0 : 1.0;
    const double g = params.g;

    SeriesResult out;
    const double growth = std::exp(g * g * beta);
    out.prefactor = growth / -std::expm1(-beta);
    const double odd_prefactor = growth / (1.0 + std::exp(-beta));
    out.per_lambda_terms.push_back(1.0);
    double var_even = 0.0;
    double var_odd = 0.0;
    double trunc_even = 0.0;
    double trunc_odd = 0.0;
    int L = cfg.lambda_max;
    const int cap = cfg.auto_raise ? SeriesConfig::kLambdaCap : cfg.lambda_max;
    if (x > 0.0) {
        for (int lambda = 0;; ++lambda) {
            const int odd_dim = 2 * lambda + 1;
            const auto odd = simplex_integrate(
                [&](std::span<const double> mu) { return std::exp(kernel::xi_exponent(g, beta, mu)); }, odd_dim,
                cfg, stream_id(kOddStream, odd_dim));
            const double w_odd = std::pow(x, odd_dim) * delta_sign;
            out.odd_terms.push_back(w_odd * odd.value);
            var_odd += w_odd * w_odd * odd.stat_err * odd.stat_err;
            if (lambda >= 1) {
                const int dim = 2 * lambda;
                const auto even = simplex_integrate(
                    [&](std::span<const double> mu) { return std::exp(kernel::theta_exponent(g, beta, mu)); }, dim,
                    cfg, stream_id(kEvenStream, dim));
                const double w = std::pow(x, dim);
                out.per_lambda_terms.push_back(w * even.value);
                var_even += w * w * even.stat_err * even.stat_err;
            }
            if (lambda < std::max(L, 1)) continue;
            double bracket = 0.0;
            for (double term : out.per_lambda_terms) bracket += term;
            trunc_even = tail_estimate(out.per_lambda_terms, x, 2 * lambda, 1.0);
            std::vector<double> odd_abs;
            for (double term : out.odd_terms) odd_abs.push_back(std::abs(term));
            trunc_odd = tail_estimate(odd_abs, x, odd_dim, 1.0);
            const double total = out.prefactor * trunc_even + odd_prefactor * trunc_odd;
            if (total <= cfg.target_rel_err * out.prefactor * std::abs(bracket) || lambda >= cap) break;
            L = lambda + 1;
        }
    }
    double even_sum = 0.0;
    for (double term : out.per_lambda_terms) even_sum += term;
    double odd_sum = 0.0;
    for (double term : out.odd_terms) odd_sum += term;
    const double s = sign == Parity::plus ? -1.0 : 1.0;
    out.lambda_used = static_cast<int>(out.per_lambda_terms.size()) - 1;
    out.value = out.prefactor * even_sum + s * odd_prefactor * odd_sum;
    out.stat_err = std::hypot(out.prefactor * std::sqrt(var_even), odd_prefactor * std::sqrt(var_odd));
    out.trunc_err = out.prefactor * trunc_even + odd_prefactor * trunc_odd;
    if (out.trunc_err > cfg.target_rel_err * std::abs(out.value))
        out.warnings.push_back("series truncation error exceeds target at lambda_max = " +
                               std::to_string(out.lambda_used));
    return out;
}

EigenPartition partition_from_spectrum(const std::vector<double>& levels, double beta, int ladders) {
    check_t(beta, "partition_from_spectrum");
    if (levels.empty()) throw std::invalid_argument("partition_from_spectrum: no levels");
    EigenPartition out;
    for (double e : levels) out.value += std::exp(-beta * e);
    // Levels beyond the list sit above the last one with unit spacing per ladder.
    const double next = levels.back();
    out.tail = ladders * std::exp(-beta * next) * std::exp(-beta) / -std::expm1(-beta);
    return out;
}

}  // namespace rabi
