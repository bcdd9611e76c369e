// test_fock.cpp: truncated diagonalization, parity blocks, spectral curves, eigensolvers

#include <algorithm>
#include <cmath>
#include <random>

#include <doctest.h>

#include "oracles.hpp"
#include "rabi/fock.hpp"
#include "rabi/linalg.hpp"

using namespace rabi;

TEST_CASE("g = 0: levels n +- sqrt(Delta^2 + eps^2)") {
    const Spectrum sp = spectrum({0.0, 0.7, 0.4}, 8, 1e-10);
    const double r = std::sqrt(0.7 * 0.7 + 0.4 * 0.4);
    std::vector<double> expected;
    for (int n = 0; n < 8; ++n) {
        expected.push_back(n - r);
        expected.push_back(n + r);
    }
    std::sort(expected.begin(), expected.end());
    REQUIRE(sp.eigenvalues.size() == 8);
    for (int j = 0; j < 8; ++j) CHECK(sp.eigenvalues[j] == doctest::Approx(expected[j]).epsilon(1e-12));
    CHECK(sp.eigenvalues[0] == doctest::Approx(-0.806225774829855).epsilon(1e-12));
}

TEST_CASE("Delta = 0: displaced oscillators n - g^2 +- eps") {
    const double g = 0.9, eps = 0.3;
    const Spectrum sp = spectrum({g, 0.0, eps}, 10, 1e-10);
    std::vector<double> expected;
    for (int n = 0; n < 8; ++n) {
        expected.push_back(n - g * g - eps);
        expected.push_back(n - g * g + eps);
    }
    std::sort(expected.begin(), expected.end());
    for (int j = 0; j < 10; ++j) CHECK(sp.eigenvalues[j] == doctest::Approx(expected[j]).epsilon(1e-10));
}

TEST_CASE("all-zero parameters: 0, 0, 1, 1, ...") {
    const Spectrum sp = spectrum({0.0, 0.0, 0.0}, 6, 1e-12);
    for (int j = 0; j < 6; ++j) CHECK(sp.eigenvalues[j] == doctest::Approx(j / 2).epsilon(1e-14));
}

TEST_CASE("parity blocks against Sturm bisection") {
    for (double g : {0.3, 1.1, 2.0})
        for (int sign : {1, -1}) {
            const Parity p = sign > 0 ? Parity::plus : Parity::minus;
            const ModelParams params{g, 0.6, 0.0};
            const int M = 200;
            std::vector<double> d, e;
            oracle::parity_matrix(g, 0.6, sign, M, d, e);
            const auto levels = parity_levels(params, p, M, 12);
            for (int k = 0; k < 12; ++k) CHECK(levels[k] == doctest::Approx(oracle::sturm_eigenvalue(d, e, k)).epsilon(1e-11));
        }
}

TEST_CASE("eps = 0: the full spectrum is the union of the parity spectra") {
    const ModelParams params{0.8, 0.45, 0.0};
    const Spectrum full = spectrum(params, 20, 1e-10);
    const Spectrum plus = parity_spectrum(params, Parity::plus, 20, 1e-10);
    const Spectrum minus = parity_spectrum(params, Parity::minus, 20, 1e-10);
    std::vector<double> merged = plus.eigenvalues;
    merged.insert(merged.end(), minus.eigenvalues.begin(), minus.eigenvalues.end());
    std::sort(merged.begin(), merged.end());
    for (int j = 0; j < 20; ++j) CHECK(full.eigenvalues[j] == doctest::Approx(merged[j]).epsilon(1e-10));
}

TEST_CASE("truncation doubling leaves the levels unchanged") {
    const ModelParams params{1.3, 0.7, 0.25};
    SpectrumOptions wide;
    wide.start_dim = 400;
    const Spectrum a = spectrum(params, 12, 1e-10);
    const Spectrum b = spectrum(params, 12, 1e-10, wide);
    for (int j = 0; j < 12; ++j) CHECK(std::abs(a.eigenvalues[j] - b.eigenvalues[j]) < 1e-8);
    CHECK(a.converged_count == 12);
    CHECK(a.max_change <= 1e-10);
}

TEST_CASE("non-convergence raises ConvergenceError") {
    SpectrumOptions tight;
    tight.start_dim = 4;
    tight.max_doublings = 0;
    CHECK_THROWS_AS(spectrum({3.0, 0.5, 0.0}, 6, 1e-12, tight), ConvergenceError);
}

TEST_CASE("variational bound: a larger cutoff never raises the ground level") {
    const ModelParams params{1.5, 0.9, 0.2};
    double last = INFINITY;
    for (std::size_t M : {8, 16, 32, 64}) {
        const double e0 = aqrm_levels(params, M, 1)[0];
        CHECK(e0 <= last + 1e-13);
        last = e0;
    }
}

TEST_CASE("dense Hamiltonian is symmetric with the expected diagonal") {
    const Matrix h = build_aqrm({0.5, 0.3, 0.2}, 6);
    REQUIRE(h.size() == 14);
    for (std::size_t i = 0; i < h.size(); ++i)
        for (std::size_t j = 0; j < h.size(); ++j) CHECK(h(i, j) == h(j, i));
    double trace = 0.0;
    for (std::size_t i = 0; i < h.size(); ++i) trace += h(i, i);
    // tr(a^dag a) over two spin states plus tr(eps sigma_x) = 0 and tr(Delta sigma_z) = 0
    CHECK(trace == doctest::Approx(2.0 * 21.0));
}

TEST_CASE("curve table: one-point grid equals the spectrum shifted by g^2") {
    const ModelParams params{0.0, 1.0, 1.5};
    const CurveTable ct = curve_table(params, {0.0}, 6, 1e-10);
    const Spectrum sp = spectrum(params, 6, 1e-10);
    REQUIRE(ct.level_count() == 6);
    for (int j = 0; j < 6; ++j) CHECK(ct.shifted_levels[0][j] == doctest::Approx(sp.eigenvalues[j]).epsilon(1e-12));
}

TEST_CASE("curves flatten toward integers at large g for eps = 0") {
    // At g = 0 and Delta = 1 the levels n +- 1 are integers; the curves leave them and return.
    const CurveTable ct = curve_table({0.0, 1.0, 0.0}, {1.0, 2.0, 3.0}, 6, 1e-9);
    double prev = INFINITY;
    for (const auto& row : ct.shifted_levels) {
        double dev = 0.0;
        for (double v : row) dev = std::max(dev, std::abs(v - std::round(v)));
        CHECK(dev <= prev + 1e-12);
        prev = dev;
    }
    CHECK(prev < 0.05);
}

TEST_CASE("crossing counts and cluster sizes") {
    CurveTable ct;
    ct.g_grid = {0, 1, 2, 3, 4};
    ct.shifted_levels = {{0.5}, {1.5}, {1.5}, {0.2}, {2.0}};
    CHECK(crossing_count(ct, 0, 1.0) == 3);
    CHECK(crossing_count(ct, 0, 1.5) == 1);  // touching rows are skipped
    CHECK_THROWS_AS(crossing_count(ct, 1, 0.0), std::out_of_range);
    CHECK(max_cluster_size({0.0, 1.0, 1.0 + 1e-9, 1.0 + 2e-9, 3.0}, 1e-8) == 3);
    CHECK(max_cluster_size({}, 1.0) == 0);
}

TEST_CASE("dense eigensolver: residuals and orthonormality on a random symmetric matrix") {
    std::mt19937_64 rng(7);
    std::normal_distribution<double> nd;
    const std::size_t n = 30;
    Matrix a(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j <= i; ++j) a(i, j) = a(j, i) = nd(rng);
    const EigenDecomposition ed = sym_eigen(a, true);
    for (std::size_t k = 0; k < n; ++k) {
        double res = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            double av = 0.0;
            for (std::size_t j = 0; j < n; ++j) av += a(i, j) * ed.vectors(j, k);
            res = std::max(res, std::abs(av - ed.values[k] * ed.vectors(i, k)));
        }
        CHECK(res < 1e-11);
        double norm = 0.0;
        for (std::size_t i = 0; i < n; ++i) norm += ed.vectors(i, k) * ed.vectors(i, k);
        CHECK(norm == doctest::Approx(1.0).epsilon(1e-12));
    }
    CHECK(std::is_sorted(ed.values.begin(), ed.values.end()));
    Matrix bad(2);
    bad(0, 1) = 1.0;
    CHECK_THROWS_AS(sym_eigen(bad), std::invalid_argument);
}

TEST_CASE("tridiagonal and banded solvers agree with bisection") {
    std::vector<double> d, e;
    oracle::parity_matrix(0.7, 0.4, 1, 60, d, e);
    const auto tri = tridiagonal_eigenvalues(d, e);
    const auto band = banded_lowest_eigenvalues({d, [&] { auto o = e; o.push_back(0.0); return o; }()}, 10);
    for (int k = 0; k < 10; ++k) {
        const double ref = oracle::sturm_eigenvalue(d, e, k);
        CHECK(tri[k] == doctest::Approx(ref).epsilon(1e-12));
        CHECK(band[k] == doctest::Approx(ref).epsilon(1e-12));
    }
}
