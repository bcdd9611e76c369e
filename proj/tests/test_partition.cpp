// test_partition.cpp: series integrands, simplex sampling, partition series, heat kernel, J integrals

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>

#include <boost/math/quadrature/gauss.hpp>
#include <doctest.h>

#include "oracles.hpp"
#include "rabi/fock.hpp"
#include "rabi/heat_kernel.hpp"
#include "rabi/jfunc.hpp"
#include "rabi/partition.hpp"
#include "rabi/simplex.hpp"
#include "rabi/symbolic.hpp"

using namespace rabi;

namespace {

std::vector<double> random_simplex_point(std::mt19937_64& rng, int dim) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<double> mu(dim);
    for (auto& v : mu) v = u(rng);
    std::sort(mu.begin(), mu.end());
    return mu;
}

// Nested Gauss rule over 0 <= mu_1 <= ... <= mu_d <= 1, written independently of the library.
double nested_simplex(const std::function<double(const std::vector<double>&)>& f, int dim) {
    std::vector<double> mu(dim);
    std::function<double(int, double)> level = [&](int k, double upper) -> double {
        if (k < 0) return f(mu);
        return boost::math::quadrature::gauss<double, 20>::integrate(
            [&](double x) {
                mu[k] = x;
                return level(k - 1, x);
            },
            0.0, upper);
    };
    return level(dim - 1, 1.0);
}

double j_direct(int lambda, double t) {
    return nested_simplex(
        [&](const std::vector<double>& mu) {
            double alt = 0.0;
            for (int g = 1; g <= lambda; ++g) alt += (g % 2 ? -1.0 : 1.0) * mu[g - 1];
            return std::exp(t * (1.0 - 2.0 * (lambda % 2 ? -1.0 : 1.0) * alt));
        },
        lambda);
}

SeriesConfig light_config(std::size_t points = 40000) {
    SeriesConfig cfg;
    cfg.qmc.points_per_lambda = points;
    return cfg;
}

}  // namespace

TEST_CASE("Theta and Xi agree with the term-by-term definitions") {
    std::mt19937_64 rng(11);
    for (double g : {0.3, 0.8, 1.5})
        for (double beta : {0.4, 1.0, 3.0})
            for (int lambda = 1; lambda <= 4; ++lambda) {
                for (int rep = 0; rep < 20; ++rep) {
                    const auto even = random_simplex_point(rng, 2 * lambda);
                    const oracle::Literal le(g, beta, even);
                    CHECK(theta_even(g, beta, even) == doctest::Approx(static_cast<double>(le.theta())).epsilon(1e-10));
                    CHECK(xi(2 * lambda, even, beta, g) == doctest::Approx(static_cast<double>(le.xi())).epsilon(1e-9).scale(g * g));
                    CHECK(psi_minus(2 * lambda, even, beta, g) ==
                          doctest::Approx(static_cast<double>(le.psi(false))).epsilon(1e-10).scale(g * g));
                    const auto odd = random_simplex_point(rng, 2 * lambda - 1);
                    const oracle::Literal lo(g, beta, odd);
                    CHECK(xi_odd(g, beta, odd) == doctest::Approx(static_cast<double>(lo.big_xi())).epsilon(1e-10));
                    CHECK(psi_plus(2 * lambda - 1, odd, beta, g) ==
                          doctest::Approx(static_cast<double>(lo.psi(true))).epsilon(1e-10).scale(g * g));
                }
            }
}

TEST_CASE("integrand domain checks") {
    const std::vector<double> unordered{0.5, 0.2};
    CHECK_THROWS_AS(theta_even(0.5, 1.0, unordered), std::invalid_argument);
    CHECK_THROWS_AS(theta_even(0.5, 1.0, std::vector<double>{0.1, 0.2, 0.3}), std::invalid_argument);
    CHECK_THROWS_AS(xi_odd(0.5, 1.0, std::vector<double>{0.1, 0.2}), std::invalid_argument);
    CHECK_THROWS_AS(theta_even(0.5, -1.0, std::vector<double>{0.1, 0.2}), std::domain_error);
}

TEST_CASE("bounds: Theta <= 1, Xi <= exp(-2 g^2 tanh(beta/2)), xi_{2l} below its first term") {
    std::mt19937_64 rng(12);
    int violations = 0;
    for (double g : {0.2, 1.0, 2.5})
        for (double beta : {0.1, 1.0, 4.0, 12.0})
            for (int lambda = 1; lambda <= 4; ++lambda)
                for (int rep = 0; rep < 500; ++rep) {
                    const auto even = random_simplex_point(rng, 2 * lambda);
                    if (theta_even(g, beta, even) > 1.0) ++violations;
                    const double h = std::sinh(0.5 * beta * (1.0 - even.back()));
                    if (xi(2 * lambda, even, beta, g) > -8.0 * g * g / std::sinh(beta) * h * h + 1e-12) ++violations;
                    const auto odd = random_simplex_point(rng, 2 * lambda + 1);
                    if (!xi_psi_plus_bound_check(lambda, odd, beta, g)) ++violations;
                }
    CHECK(violations == 0);
}

TEST_CASE("eps weight") {
    const std::vector<double> mu{0.1, 0.35, 0.6, 0.9};
    // 1 - 2 sum (-1)^g mu_g = 1 - 2(-0.1 + 0.35 - 0.6 + 0.9)
    CHECK(eps_weight(0.8, mu) == doctest::Approx(std::cosh(0.8 * (1.0 - 2.0 * 0.55))).epsilon(1e-15));
    CHECK(eps_weight(0.0, mu) == 1.0);
}

TEST_CASE("simplex volume, membership and exact monomial integrals") {
    CHECK(simplex_volume(0) == 1.0);
    CHECK(simplex_volume(4) == doctest::Approx(1.0 / 24));
    CHECK(is_simplex_point(std::vector<double>{0.0, 0.3, 0.3, 1.0}));
    CHECK_FALSE(is_simplex_point(std::vector<double>{0.4, 0.3}));
    CHECK_FALSE(is_simplex_point(std::vector<double>{0.4, 1.2}));
    // prod_k 1/(a_1 + ... + a_k + k)
    for (const std::vector<int>& a : std::vector<std::vector<int>>{{0}, {2}, {1, 0, 3}, {0, 0, 0, 0}, {2, 1, 0, 1, 2}}) {
        Rational expected = 1;
        int partial = 0;
        for (std::size_t k = 0; k < a.size(); ++k) {
            partial += a[k];
            expected /= partial + static_cast<int>(k) + 1;
        }
        CHECK(simplex_monomial_integral(a) == expected);
    }
}

TEST_CASE("randomized simplex points: ordered, deterministic, and unbiased") {
    const SimplexPointSet a(5, 4096, 4, 99, 3);
    const SimplexPointSet b(5, 4096, 4, 99, 3);
    const SimplexPointSet c(5, 4096, 4, 100, 3);
    bool same = true, differs = false;
    for (int r = 0; r < 4; ++r)
        for (std::size_t i = 0; i < a.points_per_replicate(); ++i) {
            const auto p = a.point(r, i);
            REQUIRE(is_simplex_point(p));
            same = same && std::equal(p.begin(), p.end(), b.point(r, i).begin());
            differs = differs || !std::equal(p.begin(), p.end(), c.point(r, i).begin());
        }
    CHECK(same);
    CHECK(differs);
    // int mu_1 mu_3^2 mu_5 over the 5-simplex
    const IntegralEstimate est = integrate_points(a, [](std::span<const double> mu) { return mu[0] * mu[2] * mu[2] * mu[4]; });
    const double exact = static_cast<double>(simplex_monomial_integral({1, 0, 2, 0, 1}));
    CHECK(std::abs(est.value - exact) < 5.0 * est.stat_err + 1e-12);
    CHECK(est.stat_err < 1e-2 * exact);
}

TEST_CASE("series config validation") {
    SeriesConfig cfg;
    CHECK_NOTHROW(cfg.validate());
    cfg.lambda_max = 13;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg.lambda_max = 4;
    cfg.qmc.replicates = 1;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
}

TEST_CASE("g = 0: the series sums to 2 ch(beta r)/(1 - e^{-beta})") {
    for (double beta : {0.5, 2.0}) {
        const ModelParams params{0.0, 0.6, 0.3};
        const SeriesResult r = partition_full(params, beta, light_config(20000));
        const double exact = 2.0 * std::cosh(beta * std::hypot(0.6, 0.3)) / -std::expm1(-beta);
        CHECK(std::abs(r.value - exact) <= 4.0 * r.stat_err + r.trunc_err);
        CHECK(std::abs(r.value - exact) <= 1e-4 * exact);
    }
}

TEST_CASE("partition series against the diagonalization sum") {
    for (const ModelParams params : {ModelParams{0.5, 0.5, 0.5}, ModelParams{0.8, 0.3, 0.0}})
        for (double beta : {1.0, 2.0}) {
            const SeriesResult r = partition_full(params, beta, light_config());
            const Spectrum sp = spectrum(params, 90, 1e-10);
            const EigenPartition ep = partition_from_spectrum(sp.eigenvalues, beta, 2);
            CHECK(std::abs(r.value - ep.value) <= 1e-3 * ep.value);
            CHECK(ep.tail < 1e-12 * ep.value);
        }
}

TEST_CASE("parity series: blocks sum to the full series and match their own spectra") {
    const ModelParams params{0.6, 0.7, 0.0};
    const double beta = 1.5;
    const SeriesConfig cfg = light_config();
    const SeriesResult plus = partition_parity(params, Parity::plus, beta, cfg);
    const SeriesResult minus = partition_parity(params, Parity::minus, beta, cfg);
    const SeriesResult full = partition_full(params, beta, cfg);
    CHECK(plus.value + minus.value == doctest::Approx(full.value).epsilon(1e-4));
    for (auto [sign, res] : {std::pair{Parity::plus, plus}, std::pair{Parity::minus, minus}}) {
        const Spectrum sp = parity_spectrum(params, sign, 60, 1e-10);
        CHECK(res.value == doctest::Approx(partition_from_spectrum(sp.eigenvalues, beta, 1).value).epsilon(1e-3));
    }
    CHECK_THROWS_AS(partition_parity({0.6, 0.7, 0.1}, Parity::plus, beta, cfg), std::invalid_argument);
}

TEST_CASE("Mehler kernel equals the Hermite-function expansion") {
    for (double t : {0.3, 1.0, 2.5})
        for (auto [x, y] : {std::pair{0.0, 0.0}, std::pair{0.7, -0.4}, std::pair{1.5, 1.2}}) {
            const auto hx = oracle::hermite_functions(200, x);
            const auto hy = oracle::hermite_functions(200, y);
            double sum = 0.0;
            for (int n = 0; n <= 200; ++n) sum += std::exp(-n * t) * hx[n] * hy[n];
            CHECK(mehler_kernel(x, y, t) == doctest::Approx(sum).epsilon(1e-12));
        }
    CHECK_THROWS_AS(mehler_kernel(0.0, 0.0, 0.0), std::domain_error);
}

TEST_CASE("lambda = 0 heat kernel: structure and trace") {
    const ModelParams params{0.0, 0.4, 0.3};
    const double t = 0.9;
    const Mat2 k = heat_kernel_lambda0(0.2, -0.5, t, params, 1);
    const double base = std::exp(-t) * mehler_kernel(0.2, -0.5, t);
    CHECK(k[0][0] == doctest::Approx(base * std::cosh(0.3 * t)).epsilon(1e-14));
    CHECK(k[0][1] == doctest::Approx(-base * std::sinh(0.3 * t)).epsilon(1e-14));
    CHECK(k[1][0] == k[0][1]);
    const TraceCheck tc = heat_kernel_trace_check({0.6, 0.0, 0.3}, 1.2);
    CHECK(tc.expected == doctest::Approx(2.0 * std::cosh(0.36) / -std::expm1(-1.2)).epsilon(1e-15));
    CHECK(tc.rel_err < 1e-8);
}

TEST_CASE("J integrals: closed forms, series and direct quadrature") {
    for (double t : {-2.5, -0.8, 0.3, 1.0, 3.0}) {
        CHECK(j_lambda(1, t) == doctest::Approx(std::sinh(t) / t).epsilon(1e-13));
        CHECK(j_lambda(2, t) == doctest::Approx(-2.0 * std::sinh(t) / (4 * t * t) + std::exp(t) / (2 * t)).epsilon(1e-13));
        for (int lambda = 1; lambda <= 4; ++lambda) CHECK(j_lambda(lambda, t) == doctest::Approx(j_direct(lambda, t)).epsilon(1e-11));
    }
    for (int lambda = 1; lambda <= 8; ++lambda)
        for (double t : {0.9, 1.1}) CHECK(j_lambda(lambda, t, 0.0) == doctest::Approx(j_lambda_series(lambda, t)).epsilon(1e-11));
    CHECK(j_lambda(3, 0.0) == doctest::Approx(1.0 / 6));
}

TEST_CASE("J recursion coefficients reproduce J_2") {
    const JRecursion& r2 = j_recursion(2);
    // J_2 = -(x/2) J_1(-t) + (x/2) J_0(t): q_1^{(2)} = x/2 is not zero
    REQUIRE(r2.p.size() == 1);
    REQUIRE(r2.q.size() == 1);
    CHECK(eval_poly(r2.p[0], 0.4) == doctest::Approx(-0.2));
    CHECK(eval_poly(r2.q[0], 0.4) == doctest::Approx(0.2));
    for (int l = 1; l <= 10; ++l)
        for (double t : {-1.7, 0.6, 2.4}) {
            const JRecursion& r = j_recursion(l);
            const double x = 1.0 / t;
            double sum = 0.0;
            if (l == 1) {
                sum = eval_poly(r.q[0], x) * std::exp(t) + eval_poly(r.p[0], x) * std::exp(-t);
            } else {
                for (std::size_t k = 1; k <= r.p.size(); ++k) sum += eval_poly(r.p[k - 1], x) * j_lambda(l - (2 * k - 1), -t);
                for (std::size_t k = 1; k <= r.q.size(); ++k)
                    sum += eval_poly(r.q[k - 1], x) * (l == 2 * static_cast<int>(k) ? std::exp(t) : j_lambda(l - 2 * k, t));
            }
            CHECK(sum == doctest::Approx(j_lambda_series(l, t)).epsilon(1e-9));
        }
}

TEST_CASE("shell forms: low-order displays, leading terms and agreement with J") {
    for (double t : {0.5, 1.0, 2.0}) {
        CHECK(shell_closed_form(1, t) == doctest::Approx(std::sinh(t) / (2 * t)).epsilon(1e-12));
        CHECK(shell_closed_form(2, t) ==
              doctest::Approx(std::cosh(t) / (2 * std::pow(2 * t, 2)) - std::sinh(t) / std::pow(2 * t, 3)).epsilon(1e-12));
        for (int l = 1; l <= 5; ++l) CHECK(shell_closed_form(l, t) == doctest::Approx(shell_coefficient(l, t)).epsilon(1e-10));
    }
    // Third shell from an exact symbolic iterated integration: phi1 = x^5/16 + x^3/48, phi2 = -x^4/16.
    const ShellForm& s3 = shell_form(3);
    CHECK(s3.phi1[5] == Rational(1, 16));
    CHECK(s3.phi1[3] == Rational(1, 48));
    CHECK(s3.phi1[1] == 0);
    CHECK(s3.phi2[4] == Rational(-1, 16));
    CHECK(s3.phi2[2] == 0);
    for (int l = 1; l <= 5; ++l) {
        const ShellForm& s = shell_form(l);
        // phi1 has degree 2l - 1 with sign (-1)^{l-1}; phi2 has degree 2l - 2
        REQUIRE(static_cast<int>(s.phi1.size()) >= 2 * l);
        CHECK((l % 2 ? s.phi1[2 * l - 1] > 0 : s.phi1[2 * l - 1] < 0));
        if (l <= 2) CHECK(s.phi1[2 * l - 1] == (l == 1 ? Rational(1, 2) : Rational(-1, 8)));
        for (std::size_t k = 2 * l; k < s.phi1.size(); ++k) CHECK(s.phi1[k] == 0);
        for (std::size_t k = 2 * l - 1; k < s.phi2.size(); ++k) CHECK(s.phi2[k] == 0);
        if (l >= 2) CHECK(s.phi2[2 * l - 2] != 0);
    }
}

TEST_CASE("J quadrature from the library sampler sits within 3 sigma of the recursion") {
    SeriesConfig cfg;
    cfg.qmc.points_per_lambda = 65536;
    for (int lambda = 1; lambda <= 5; ++lambda)
        for (double t : {-3.0, -1.0, 0.5, 2.0, 3.0}) {
            const IntegralEstimate est = j_lambda_quadrature(lambda, t, cfg);
            CHECK(std::abs(est.value - j_lambda(lambda, t)) <= 3.0 * est.stat_err + 1e-13);
        }
}
