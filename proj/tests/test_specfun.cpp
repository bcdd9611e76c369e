// test_specfun.cpp: Gamma, Hurwitz and Riemann zeta, L mod 2, Bernoulli numbers

#include <cmath>
#include <numbers>

#include <doctest.h>

#include "oracles.hpp"
#include "rabi/specfun.hpp"

using namespace rabi;
using std::numbers::pi;

namespace {

double rel(cplx a, cplx b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

}  // namespace

TEST_CASE("gamma at classical points") {
    CHECK(rabi::gamma(1.0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(rabi::gamma(0.5) == doctest::Approx(std::sqrt(pi)).epsilon(1e-13));
    CHECK(rabi::gamma(5.0) == doctest::Approx(24.0).epsilon(1e-13));
    CHECK_THROWS_AS(rabi::gamma(-2.0), std::domain_error);
    CHECK_THROWS_AS(gamma(cplx(0.0, 0.0)), std::domain_error);
}

TEST_CASE("gamma satisfies recurrence and reflection off the real axis") {
    for (cplx s : {cplx(0.3, 1.7), cplx(2.5, -4.0), cplx(-3.2, 0.4), cplx(12.0, 20.0)}) {
        CHECK(rel(gamma(s + 1.0), s * gamma(s)) < 1e-12);
        CHECK(rel(gamma(s) * gamma(1.0 - s), pi / std::sin(pi * s)) < 1e-11);
    }
    CHECK(rel(gamma(cplx(30.0, 0.0)), std::tgamma(30.0)) < 1e-12);
}

TEST_CASE("hurwitz zeta matches brute-force summation") {
    CHECK(rel(hurwitz_zeta(cplx(3.0), 2.75), oracle::hurwitz_brute(3.0, 2.75)) < 1e-12);
    CHECK(rel(hurwitz_zeta(cplx(2.0, 5.0), 0.3), oracle::hurwitz_brute(cplx(2.0, 5.0), 0.3)) < 1e-11);
    CHECK(rel(hurwitz_zeta(cplx(1.5, -2.0), 17.0), oracle::hurwitz_brute(cplx(1.5, -2.0), 17.0)) < 1e-11);
    CHECK(rel(hurwitz_zeta(cplx(6.0, 0.0), 99.5), oracle::hurwitz_brute(6.0, 99.5)) < 1e-12);
}

TEST_CASE("hurwitz zeta continuation: shift relation and negative integers") {
    for (cplx s : {cplx(-2.5, 1.0), cplx(0.5, 3.0), cplx(-7.3, 0.0), cplx(0.2, 25.0)})
        for (double a : {0.1, 1.0, 3.7}) {
            const cplx lhs = hurwitz_zeta(s, a) - hurwitz_zeta(s, a + 1.0);
            CHECK(std::abs(lhs - std::pow(cplx(a), -s)) < 1e-10 * std::max(1.0, std::abs(hurwitz_zeta(s, a))));
        }
    for (int k = 1; k <= 8; ++k)
        for (double a : {0.25, 1.0, 2.6}) CHECK(hurwitz_zeta(1.0 - k, a) == doctest::Approx(-oracle::bernoulli_poly(k, a) / k).epsilon(1e-12));
}

TEST_CASE("hurwitz zeta far left of the critical strip") {
    // Reference digits from an independent 40-digit evaluation.
    CHECK(hurwitz_zeta(-7.3, 0.1) == doctest::Approx(0.0043587330106707473).epsilon(1e-12));
    CHECK(hurwitz_zeta(-25.3, 1.0) == doctest::Approx(riemann_zeta(-25.3)).epsilon(1e-12));
    const cplx z = hurwitz_zeta(cplx(-29.5, 3.0), 50.0);
    CHECK(std::abs(z - (hurwitz_zeta(cplx(-29.5, 3.0), 49.0) - std::pow(cplx(49.0), cplx(29.5, -3.0)))) < 1e-10 * std::abs(z));
}

TEST_CASE("hurwitz zeta domain errors") {
    CHECK_THROWS_AS(hurwitz_zeta(cplx(1.0), 0.5), std::domain_error);
    CHECK_THROWS_AS(hurwitz_zeta(cplx(2.0), 0.0), std::domain_error);
    CHECK_THROWS_AS(hurwitz_zeta(cplx(2.0), -1.0), std::domain_error);
}

TEST_CASE("(2^s - 1) zeta(s) = zeta(s, 1/2)") {
    for (double s : {2.0, 3.0, 4.0, -1.0, -3.0})
        CHECK(std::abs((std::pow(2.0, s) - 1.0) * riemann_zeta(s) - hurwitz_zeta(s, 0.5)) <= 1e-10);
    CHECK(hurwitz_zeta(2.0, 0.5) == doctest::Approx(pi * pi / 2).epsilon(1e-13));
}

TEST_CASE("riemann zeta special values") {
    CHECK(riemann_zeta(2.0) == doctest::Approx(pi * pi / 6).epsilon(1e-14));
    CHECK(riemann_zeta(0.0) == doctest::Approx(-0.5).epsilon(1e-14));
    CHECK(riemann_zeta(-1.0) == doctest::Approx(-1.0 / 12).epsilon(1e-14));
    CHECK(riemann_zeta(4.0) == doctest::Approx(std::pow(pi, 4) / 90).epsilon(1e-14));
    // first nontrivial zero
    CHECK(std::abs(riemann_zeta(cplx(0.5, 14.134725141734693))) < 1e-9);
}

TEST_CASE("hurwitz difference is analytic through s = 1") {
    // d/ds of zeta(s,a) - zeta(s,b) at s = 1 has the digamma limit psi(b) - psi(a); here check
    // continuity across s = 1 against the brute difference at nearby s.
    const cplx near = hurwitz_zeta_diff(cplx(1.0 + 1e-6), 0.3, 1.7);
    const cplx at = hurwitz_zeta_diff(cplx(1.0), 0.3, 1.7);
    CHECK(std::abs(near - at) < 1e-5);
    // psi(1.7) - psi(0.3)
    CHECK(at.real() == doctest::Approx(3.7110720970736270).epsilon(1e-12));
}

TEST_CASE("alternating L mod 2 against brute force and its Hurwitz split") {
    for (cplx s : {cplx(2.0), cplx(3.5, 1.0), cplx(1.0), cplx(0.5, 2.0)})
        for (double tau : {0.3, 1.0, 2.5}) {
            const cplx brute = oracle::alternating_brute(s, tau);
            CHECK(std::abs(dirichlet_L_mod2(s, tau) - brute) < 1e-9 * std::max(1.0, std::abs(brute)));
        }
    // L(s, tau) = 2^{-s}[zeta(s, tau/2) - zeta(s, (tau+1)/2)]
    const cplx s(-2.5, 0.7);
    const cplx split = std::pow(2.0, -s) * (hurwitz_zeta(s, 0.65) - hurwitz_zeta(s, 1.15));
    CHECK(std::abs(dirichlet_L_mod2(s, 1.3) - split) < 1e-10 * std::abs(split));
    CHECK(dirichlet_L_mod2(1.0, 1.0) == doctest::Approx(std::log(2.0)).epsilon(1e-12));
}

TEST_CASE("Bernoulli table: values, parity and recurrence closure") {
    const auto ref = oracle::bernoulli_plus(80);
    for (int k = 0; k <= 80; ++k) {
        const Rational expected = k == 1 ? Rational(-1, 2) : ref[k];
        CHECK(bernoulli_exact(k) == expected);
    }
    CHECK(bernoulli_exact(1) == Rational(-1, 2));
    for (int k = 3; k <= 79; k += 2) CHECK(bernoulli_exact(k) == 0);
    for (int k = 1; k <= 30; ++k) {
        Rational sum = 0;
        for (int j = 0; j <= k; ++j) sum += binomial(k + 1, j) * bernoulli_exact(j);
        CHECK(sum == 0);
    }
    CHECK(bernoulli_number(12) == doctest::Approx(-691.0 / 2730).epsilon(1e-15));
}

TEST_CASE("Bernoulli polynomials") {
    for (int k = 0; k <= 10; ++k)
        for (double x : {-0.5, 0.0, 0.3, 1.0, 2.2}) CHECK(bernoulli_poly(k, x) == doctest::Approx(oracle::bernoulli_poly(k, x)).epsilon(1e-12));
    // B_k(x+1) - B_k(x) = k x^{k-1}, exactly
    for (int k = 1; k <= 8; ++k) {
        const Rational x(3, 7);
        Rational power = 1;
        for (int j = 1; j < k; ++j) power *= x;
        CHECK(bernoulli_poly(k, Rational(x + 1)) - bernoulli_poly(k, x) == k * power);
    }
    CHECK(bernoulli_poly(1, Rational(1)) == Rational(1, 2));
}
