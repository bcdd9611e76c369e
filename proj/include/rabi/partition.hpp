// partition.hpp: explicit partition-function series of the AQRM and its parity blocks

#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "rabi/fock.hpp"
#include "rabi/model.hpp"
#include "rabi/simplex.hpp"

namespace rabi {

struct SeriesResult {
    double value{0.0};
    double prefactor{1.0};               // value = prefactor * sum(per_lambda_terms) (see each operation)
    std::vector<double> per_lambda_terms;  // index lambda; entry 0 is the lambda = 0 term
    std::vector<double> odd_terms;         // parity series only: (beta Delta)^{2l+1} * int Xi_{2l+1}
    double stat_err{0.0};
    double trunc_err{0.0};
    int lambda_used{0};
    std::vector<std::string> warnings;
};

// Literal displayed finite sums (t > 0, mu.size() == lambda).
double xi(int lambda, std::span<const double> mu, double t, double g);
double psi_minus(int lambda, std::span<const double> mu, double t, double g);
double psi_plus(int lambda, std::span<const double> mu, double t, double g);

// Theta_{2l} for an even-dimensional simplex point (mu.size() == 2l, l >= 1).
double theta_even(double g, double beta, std::span<const double> mu);
// Xi_{2l+1} for an odd-dimensional simplex point.
double xi_odd(double g, double beta, std::span<const double> mu);
bool xi_psi_plus_bound_check(int lambda, std::span<const double> mu, double t, double g);

// ch[eps beta (1 - 2 sum_gamma (-1)^gamma mu_gamma)]
double eps_weight(double eps_beta, std::span<const double> mu);

// Z(beta) = 2 e^{g^2 beta}/(1 - e^{-beta}) [ch(eps beta) + sum_l (beta Delta)^{2l} int Theta ch(...)].
// per_lambda_terms hold the bracket terms; prefactor = 2 e^{g^2 beta}/(1 - e^{-beta}).
SeriesResult partition_full(const ModelParams& params, double beta, const SeriesConfig& cfg);

// Z^pm(beta) for eps = 0; per_lambda_terms hold the even bracket (prefactor e^{g^2 beta}/(1-e^{-beta}))
// and odd_terms the odd bracket (prefactor e^{g^2 beta}/(1+e^{-beta}), entering with sign -+).
SeriesResult partition_parity(const ModelParams& params, Parity sign, double beta, const SeriesConfig& cfg);

// Sum_j e^{-beta lambda_j} over a converged spectrum plus a Hurwitz-ladder tail bound.
struct EigenPartition {
    double value{0.0};
    double tail{0.0};
};
EigenPartition partition_from_spectrum(const std::vector<double>& levels, double beta, int ladders);

namespace kernel {

// Large enough for the sampled high powers of the Mellin route.
inline constexpr int kMaxDim = 400;

template <class T>
T sh_ratio(T num, T den) {
    const T r = num / den;
    return (r - T(1) / r) * 0.5;
}

template <class T>
T ch_ratio(T num, T den) {
    const T r = num / den;
    return (r + T(1) / r) * 0.5;
}

// Shared pieces at one point: E[k] = e^{t mu_k / 2} (mu_0 = 0), sd[k] = sh(t (mu_{k+1} - mu_k)/2).
template <class T>
struct Pieces {
    std::array<T, kMaxDim + 1> E;
    std::array<T, kMaxDim> sd;
    T h;  // e^{t/2}
    int d;

    Pieces(T t, std::span<const double> mu) : d(static_cast<int>(mu.size())) {
        if (d > kMaxDim) throw std::invalid_argument("simplex dimension exceeds kernel capacity");
        E[0] = T(1);
        double prev = 0.0;
        for (int k = 0; k < d; ++k) {
            E[k + 1] = std::exp(t * (mu[k] * 0.5));
            sd[k] = std::sinh(t * ((mu[k] - prev) * 0.5));
            prev = mu[k];
        }
        h = std::exp(t * 0.5);
    }
    T sh_sum(int a, int b) const { return sh_ratio(E[a] * E[b], T(1)); }      // sh(t(mu_a+mu_b)/2)
    T ch_comp(int a, int b) const { return ch_ratio(h, E[a] * E[b]); }       // ch(t(1-mu_a-mu_b)/2)
    T sh_comp(int a, int b) const { return sh_ratio(h, E[a] * E[b]); }       // sh(t(1-mu_a-mu_b)/2)
    T sh_comp2(int a, int b) const { return sh_ratio(h * h, E[a] * E[b]); }  // sh(t(2-mu_a-mu_b)/2)
    T sh_tail(int a) const { return sh_ratio(h, E[a]); }                    // sh(t(1-mu_a)/2)

    // Double sum over 0 <= alpha < beta <= d-1, beta - alpha odd, with both factors negated so
    // every product is >= 0 on the simplex.
    T double_sum() const {
        std::array<T, 2> run{T(0), T(0)};
        T total(0);
        for (int b = 0; b < d; ++b) {
            const T a_neg = T(2) * sh_comp2(b, b + 1) * sd[b];
            total += a_neg * run[(b + 1) % 2];
            run[b % 2] += T(2) * sh_sum(b, b + 1) * sd[b];
        }
        return total;
    }
};

// Exponent of Theta_{2l}; the O(g^2/beta) terms cancel analytically and are never formed.
// Each of the three contributions is a sum of non-positive products.
template <class T>
T theta_exponent(double g, T t, std::span<const double> mu) {
    const int d = static_cast<int>(mu.size());
    if (d == 0) return T(0);
    const Pieces<T> p(t, mu);
    T one_minus_s(0);
    T D(0);
    for (int k = 1; 2 * k <= d; ++k) {
        one_minus_s -= T(2) * p.sh_sum(2 * k, 2 * k - 1) * p.sd[2 * k - 1];
        D += T(2) * p.ch_comp(2 * k - 1, 2 * k) * p.sd[2 * k - 1];
    }
    T Pp = T(2) * p.sh_tail(d) * ch_ratio(p.E[d], T(1));
    for (int k = 0; 2 * k + 1 < d; ++k) Pp += T(2) * p.ch_comp(2 * k, 2 * k + 1) * p.sd[2 * k];
    const T u = p.sh_tail(d);
    const T bracket = T(8) * u * u * one_minus_s - T(4) * D * Pp - T(4) * p.double_sum();
    return g * g / sh_ratio(p.h * p.h, T(1)) * bracket;
}

// Exponent of Xi_{2l+1}: -2 g^2 tanh(t/2) + xi + psi^+, with the lambda = 0 pieces cancelled.
template <class T>
T xi_exponent(double g, T t, std::span<const double> mu) {
    const int d = static_cast<int>(mu.size());
    if (d % 2 != 1) throw std::invalid_argument("xi_exponent: odd dimension required");
    const Pieces<T> p(t, mu);
    T s_rest(0);
    T q_rest(0);
    for (int k = 1; 2 * k < d; ++k) {
        s_rest += T(2) * p.sh_sum(2 * k, 2 * k - 1) * p.sd[2 * k - 1];
        q_rest -= T(2) * p.sh_comp(2 * k - 1, 2 * k) * p.sd[2 * k - 1];
    }
    const T u = p.sh_tail(d);
    const T q0 = T(2) * sh_ratio(p.E[d], T(1)) * u;
    const T bracket = T(8) * u * u * s_rest + T(8) * q0 * q_rest + T(4) * q_rest * q_rest - T(4) * p.double_sum();
    const T th = sh_ratio(p.h, T(1)) / ch_ratio(p.h, T(1));
    return -2.0 * g * g * th + g * g / sh_ratio(p.h * p.h, T(1)) * bracket;
}

}  // namespace kernel

}  // namespace rabi
