// test_zeta.cpp: spectral zeta routes, closed-form targets and limit sweeps

#include <cmath>
#include <numbers>

#include <doctest.h>

#include "oracles.hpp"
#include "rabi/zeta.hpp"

using namespace rabi;
using std::numbers::pi;

namespace {

MellinSettings light_mellin() {
    MellinSettings m;
    m.points = 1024;
    return m;
}

// sum_n (n + sign Delta (-1)^n + tau)^{-s}: the parity block at g = 0, summed directly.
double parity_g0_brute(double delta, int sign, double s, double tau) {
    const long M = 400000;
    long double sum = 0;
    for (long n = M - 1; n >= 0; --n) sum += std::pow(static_cast<long double>(n + sign * delta * (n % 2 ? -1 : 1) + tau), -s);
    // the +-Delta wobble averages out of the tail
    sum += std::pow(static_cast<long double>(M + tau), 1 - s) / (s - 1);
    return static_cast<double>(sum);
}

}  // namespace

TEST_CASE("eigen route is exact where the spectrum is known") {
    // g = 0: levels n -+ r
    const ModelParams free{0.0, 0.7, 0.4};
    const cplx s(2.0, 0.0);
    const ZetaResult z = spectral_zeta_eigen(free, s, default_tau(free));
    CHECK(std::abs(z.value - g0_target(free, s)) < 1e-10);
    const double r = std::hypot(0.7, 0.4);
    CHECK(g0_target(free, s).real() == doctest::Approx((oracle::hurwitz_brute(2.0, 2.0 - r) + oracle::hurwitz_brute(2.0, 2.0 + r)).real()).epsilon(1e-12));
    // Delta = 0: levels n - g^2 -+ eps
    const ModelParams displaced{0.6, 0.0, 0.25};
    const cplx s2(3.0, 1.5);
    const ZetaResult z2 = spectral_zeta_eigen(displaced, s2, default_tau(displaced));
    CHECK(std::abs(z2.value - g_inf_target(displaced, s2)) < 1e-10);
    CHECK(z2.err_bracket < 1e-6);
}

TEST_CASE("eigen and Mellin routes agree within their brackets") {
    for (auto [params, s] : {std::pair{ModelParams{0.0, 0.7, 0.4}, cplx(2.0)}, std::pair{ModelParams{0.5, 0.4, 0.0}, cplx(2.0)},
                             std::pair{ModelParams{0.3, 0.5, 0.2}, cplx(3.0, 2.0)}}) {
        const double tau = default_tau(params);
        const ZetaResult e = spectral_zeta_eigen(params, s, tau);
        const ZetaResult m = spectral_zeta_mellin(params, s, tau, light_mellin());
        CHECK(std::abs(e.value - m.value) <= e.err_bracket + m.err_bracket);
        CHECK(m.err_bracket < 0.01 * std::abs(e.value));
        CHECK(e.method == "eigen_sum");
        CHECK(m.method == "mellin");
    }
}

TEST_CASE("Mellin route is deterministic for a fixed seed") {
    const ModelParams params{0.5, 0.4, 0.0};
    MellinSettings m = light_mellin();
    const ZetaResult a = spectral_zeta_mellin(params, 2.0, default_tau(params), m);
    const ZetaResult b = spectral_zeta_mellin(params, 2.0, default_tau(params), m);
    CHECK(a.value == b.value);
    CHECK(a.err_bracket == b.err_bracket);
}

TEST_CASE("domain checks") {
    const ModelParams params{0.5, 0.4, 0.1};
    CHECK_THROWS_AS(spectral_zeta_eigen(params, 1.0, default_tau(params)), std::domain_error);
    CHECK_THROWS_AS(spectral_zeta_eigen(params, 2.0, -5.0), std::domain_error);
    CHECK_THROWS_AS(spectral_zeta_mellin(params, 2.0, 0.5), std::domain_error);
    CHECK_THROWS_AS(parity_zeta(params, Parity::plus, 2.0, 2.0, ZetaRoute::eigen), std::invalid_argument);
}

TEST_CASE("Delta -> 0: the distance is the second-order level shift") {
    // Perturbation theory around the displaced oscillators fixes the O(Delta^2) distance exactly.
    const double g = 0.6, eps = 0.25, s = 2.0;
    EigenZetaOptions opts;
    opts.j_cut = 400;
    for (double delta : {0.02, 0.01}) {
        const ModelParams params{g, delta, eps};
        const double tau = default_tau(params);
        const double dist = spectral_zeta_eigen(params, s, tau, opts).value.real() - g_inf_target(params, s).real();
        const double predicted = oracle::zeta_delta2_shift(g, eps, delta, s, tau, 200, 100);
        CHECK(dist / predicted == doctest::Approx(1.0).epsilon(5e-3));
    }
    const LimitReport rep = zeta_limit_delta0(g, eps, s, {0.1, 0.03, 0.01}, 0.0);
    CHECK(rep.decreasing);
    CHECK(rep.distances.back() > 1e-4);  // 4.3e-4: the O(Delta^2) term, not a numerical error
}

TEST_CASE("g -> 0 sweep on the Mellin route") {
    const LimitReport rep = zeta_limit_g0(0.7, 0.4, 2.0, {0.1, 0.01}, 1e-3, ZetaRoute::mellin, light_mellin());
    CHECK(rep.decreasing);
    CHECK(rep.pass);
    CHECK(rep.distances.back() < 1e-3);
    CHECK(std::abs(rep.target - g0_target({0.0, 0.7, 0.4}, 2.0)) == 0.0);
}

TEST_CASE("g -> infinity trend toward 2 zeta(s) for eps = 0") {
    const LimitReport rep = zeta_limit_g_inf(0.5, 0.0, 2.0, {1, 2, 4}, 0.0);
    CHECK(rep.target.real() == doctest::Approx(pi * pi / 3).epsilon(1e-13));
    CHECK(rep.decreasing);
    CHECK(rep.pass);
    CHECK(rep.parameter == "g");
}

TEST_CASE("parity blocks add up to the full zeta function") {
    for (auto [g, delta] : {std::pair{0.4, 0.8}, std::pair{1.0, 0.5}, std::pair{0.0, 0.3}})
        for (cplx s : {cplx(2.0), cplx(3.0, 1.0)}) {
            const ModelParams params{g, delta, 0.0};
            const double tau = default_tau(params);
            const ZetaResult p = parity_zeta(params, Parity::plus, s, tau, ZetaRoute::eigen);
            const ZetaResult m = parity_zeta(params, Parity::minus, s, tau, ZetaRoute::eigen);
            const ZetaResult f = spectral_zeta_eigen(params, s, tau);
            CHECK(std::abs(p.value + m.value - f.value) <= p.err_bracket + m.err_bracket + f.err_bracket);
        }
}

TEST_CASE("parity block on both routes") {
    const ModelParams params{0.3, 0.5, 0.0};
    const double tau = default_tau(params);
    const ZetaResult e = parity_zeta(params, Parity::minus, 2.0, tau, ZetaRoute::eigen);
    const ZetaResult m = parity_zeta(params, Parity::minus, 2.0, tau, ZetaRoute::mellin, {}, light_mellin());
    CHECK(std::abs(e.value - m.value) <= e.err_bracket + m.err_bracket);
}

TEST_CASE("parity g = 0 target agrees with direct sums; the opposite L sign does not") {
    for (double delta : {0.3, 0.5, 0.8})
        for (int sign : {1, -1}) {
            const Parity p = sign > 0 ? Parity::plus : Parity::minus;
            const double tau = std::floor(delta + 1.0);
            const double brute = parity_g0_brute(delta, sign, 2.0, tau);
            CHECK(parity_g0_target(delta, p, 2.0).real() == doctest::Approx(brute).epsilon(1e-9));
            CHECK(std::abs(parity_g0_target_literal(delta, p, 2.0).real() - brute) > 0.01);
        }
}

TEST_CASE("parity sweeps") {
    const LimitReport g0 = parity_limit_g0(0.5, Parity::minus, 2.0, {0.1, 0.03, 0.01}, 1e-3);
    CHECK(g0.decreasing);
    CHECK(g0.pass);
    CHECK(g0.extras.count("literal_sign_final_distance") == 1);
    CHECK(g0.extras.at("literal_sign_final_distance") > 1.0);
    const LimitReport inf = parity_limit_g_inf(0.5, Parity::minus, 2.0, {1, 2, 4, 8}, 0.0);
    CHECK(inf.target == parity_g_inf_target(0.5, 2.0));
    CHECK(inf.decreasing);
    CHECK(inf.distances.back() < 0.05);
}

TEST_CASE("Jaynes-Cummings zeta against a direct double sum") {
    const double g = 0.5, delta = 0.3, tau = 1.5;
    long double sum = 0;
    const long M = 200000;
    for (long n = M - 1; n >= 0; --n) {
        const long double r = std::sqrt(delta * delta + g * g * (n + 1.0L));
        sum += std::pow(n + 0.5L + r + tau, -2.0L) + std::pow(n + 0.5L - r + tau, -2.0L);
    }
    sum += 2.0L / (M + 0.5L + tau);  // leading tail of both ladders
    const ZetaResult z = jc_zeta(g, delta, 2.0, tau);
    CHECK(z.value.real() == doctest::Approx(static_cast<double>(sum)).epsilon(2e-6));
    // g = 0: two Hurwitz ladders at tau + 1/2 -+ Delta
    const ZetaResult free = jc_zeta(0.0, delta, 3.0, tau);
    const double expected = (oracle::hurwitz_brute(3.0, tau + 0.5 - delta) + oracle::hurwitz_brute(3.0, tau + 0.5 + delta)).real();
    CHECK(free.value.real() == doctest::Approx(expected).epsilon(1e-11));
}

TEST_CASE("Jaynes-Cummings limits") {
    const LimitReport g0 = jc_limit("g0", 0.3, 2.0, 1.5, {0.1, 0.01, 0.001}, 1e-5);
    CHECK(g0.pass);
    const LimitReport d0 = jc_limit("delta0", 0.5, 2.0, 1.5, {0.1, 0.01, 0.001}, 1e-5);
    CHECK(d0.pass);
    CHECK_THROWS_AS(jc_limit("g1", 0.5, 2.0, 1.5, {0.1}, 1e-5), std::invalid_argument);
}

TEST_CASE("g = 0 shell expansion: residual falls like Delta^{2 lambda + 2}") {
    for (int lambda_max : {2}) {
        const MultizetaCheck a = multizeta_expansion_check({0.0, 0.2, 0.6}, 2.0, lambda_max, light_mellin());
        const MultizetaCheck b = multizeta_expansion_check({0.0, 0.1, 0.6}, 2.0, lambda_max, light_mellin());
        const double ratio = a.residual / b.residual;
        const double expected = std::pow(2.0, 2 * lambda_max + 2);
        CHECK(ratio == doctest::Approx(expected).epsilon(0.1));
    }
    CHECK_THROWS_AS(multizeta_expansion_check({0.1, 0.2, 0.6}, 2.0, 1), std::invalid_argument);
}

TEST_CASE("modified Mellin difference: series and spectrum agree") {
    MellinSettings m = light_mellin();
    const ModelParams params{0.2, 0.4, 0.0};
    const cplx s(3.0);
    const ModifiedMellinResult r = modified_mellin_difference(params, s, m);
    CHECK(std::abs(r.series - r.eigen) <= r.series_bracket + r.eigen_bracket);
    const int N = default_N(params);
    CHECK(std::abs(r.limit - 2.0 * s * 0.4 * dirichlet_L_mod2(s + 1.0, N)) < 1e-14);
    CHECK_THROWS_AS(modified_mellin_difference(params, 2.0, m), std::domain_error);
}
