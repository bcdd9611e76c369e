// specfun.cpp: Gamma, Hurwitz/Riemann zeta, the alternating L-series mod 2, Bernoulli numbers

#include "rabi/specfun.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include <boost/multiprecision/cpp_complex.hpp>

namespace rabi {

namespace {

constexpr int kExactBernoulliMax = 80;
constexpr int kEulerMaclaurinTerms = 12;

bool is_nonpositive_integer(cplx s) {
    return s.imag() == 0.0 && s.real() <= 0.0 && s.real() == std::floor(s.real());
}

BernoulliTable make_bernoulli_table() {
    BernoulliTable table;
    table.max_index = kExactBernoulliMax;
    table.numbers.resize(kExactBernoulliMax + 1);
    table.numbers[0] = 1;
    for (int k = 1; k <= kExactBernoulliMax; ++k) {
        Rational acc = 0;
        for (int j = 0; j < k; ++j) acc += binomial(k + 1, j) * table.numbers[j];
        table.numbers[k] = -acc / Rational(k + 1);
    }
    return table;
}

// B_{2k}/(2k)! for k = 1..kEulerMaclaurinTerms and beyond, cached as doubles.
const std::vector<double>& em_coefficients() {
    static const std::vector<double> coeffs = [] {
        std::vector<double> c(41, 0.0);
        double fact = 1.0;
        for (int k = 1; k <= 40; ++k) {
            fact *= (2.0 * k - 1.0) * (2.0 * k);
            c[k] = bernoulli_number(2 * k) / fact;
        }
        return c;
    }();
    return coeffs;
}

template <class T>
T real_pow_neg(double x, T s) {
    return std::exp(-s * std::log(x));
}

// Shared Euler-Maclaurin core; returns sum_{n<m}(n+a)^{-s} and the boundary data.
template <class T>
struct EmParts {
    T head{};
    T corrections{};  // (x)^{-s}/2 + Bernoulli tail, without the pole term
    double x{};
};

template <class T>
EmParts<T> euler_maclaurin_parts(T s, double a, int m, int terms) {
    EmParts<T> parts;
    for (int n = 0; n < m; ++n) parts.head += real_pow_neg(n + a, s);
    const double x = m + a;
    parts.x = x;
    parts.corrections = real_pow_neg(x, s) / 2.0;
    const auto& coeffs = em_coefficients();
    T fac = s * real_pow_neg(x, s + 1.0);
    const double inv_x2 = 1.0 / (x * x);
    for (int k = 1; k <= terms; ++k) {
        parts.corrections += coeffs[k] * fac;
        fac *= (s + (2.0 * k - 1.0)) * (s + 2.0 * k) * inv_x2;
        if (fac == T{}) break;
    }
    return parts;
}

template <class T>
void shift_and_terms(T s, int& m, int& terms) {
    const std::complex<double> sc(s);
    if (is_nonpositive_integer(sc)) {
        m = 0;
        const int k = static_cast<int>(-sc.real());
        terms = std::max(kEulerMaclaurinTerms, k / 2 + 2);
    } else {
        m = std::max(10, static_cast<int>(std::ceil(std::abs(sc))) + 10);
        terms = kEulerMaclaurinTerms;
    }
}

template <class T>
T hurwitz_impl(T s, double a) {
    if (!(a > 0.0)) throw std::domain_error("hurwitz_zeta: shift a must be positive");
    if (std::complex<double>(s) == std::complex<double>(1.0, 0.0))
        throw std::domain_error("hurwitz_zeta: pole at s = 1");
    int m = 0;
    int terms = 0;
    shift_and_terms(s, m, terms);
    const auto parts = euler_maclaurin_parts(s, a, m, terms);
    const T pole = std::exp((1.0 - s) * std::log(parts.x)) / (s - 1.0);
    return parts.head + pole + parts.corrections;
}

// For Re s < 0 the head sum exceeds the result by up to m^{1 - Re s}, so the same expansion runs
// in 80-digit arithmetic there.
cplx hurwitz_wide(cplx s, double a) {
    using WideReal = boost::multiprecision::cpp_bin_float_100;
    using Wide = boost::multiprecision::cpp_complex_100;
    // A larger shift and more corrections push the truncation error far below the head sum.
    const int m = 2 * static_cast<int>(std::ceil(std::abs(s))) + 20;
    const int terms = kExactBernoulliMax / 2;
    const Wide ws(s.real(), s.imag());
    auto pow_neg = [&](const WideReal& x, const Wide& e) { return exp(-e * log(x)); };
    Wide sum = 0;
    for (int n = 0; n < m; ++n) sum += pow_neg(WideReal(n) + a, ws);
    const WideReal x = WideReal(m) + a;
    sum += exp((Wide(1) - ws) * log(x)) / (ws - Wide(1)) + pow_neg(x, ws) / 2;
    Wide fac = ws * pow_neg(x, ws + Wide(1));
    const WideReal inv_x2 = 1 / (x * x);
    boost::multiprecision::cpp_int fact = 1;
    for (int k = 1; k <= terms; ++k) {
        fact *= (2 * k - 1) * (2 * k);
        const Rational& b = bernoulli_exact(2 * k);
        const WideReal coeff = WideReal(numerator(b)) / WideReal(denominator(b) * fact);
        sum += coeff * fac;
        fac *= (ws + Wide(2 * k - 1)) * (ws + Wide(2 * k)) * inv_x2;
    }
    return {static_cast<double>(sum.real()), static_cast<double>(sum.imag())};
}

bool needs_wide(cplx s) { return s.real() < 0.0 && !is_nonpositive_integer(s); }

// (xa^{1-s} - xb^{1-s}) / (s - 1), continued through s = 1.
cplx pole_pair(cplx s, double xa, double xb) {
    const cplx z = 1.0 - s;
    const double la = std::log(xa);
    const double lb = std::log(xb);
    if (std::abs(z) * std::max(std::abs(la), std::abs(lb)) < 1e-3) {
        cplx acc = 0.0;
        cplx zpow = 1.0;
        double pa = la;
        double pb = lb;
        double fact = 1.0;
        for (int k = 1; k <= 8; ++k) {
            fact *= k;
            acc += zpow * (pb - pa) / fact;
            zpow *= z;
            pa *= la;
            pb *= lb;
        }
        return acc;
    }
    return (std::exp(z * lb) - std::exp(z * la)) / z;
}

}  // namespace

Rational binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    boost::multiprecision::cpp_int num = 1;
    boost::multiprecision::cpp_int den = 1;
    k = std::min(k, n - k);
    for (int i = 1; i <= k; ++i) {
        num *= n - k + i;
        den *= i;
    }
    return Rational(num, den);
}

const BernoulliTable& bernoulli_table() {
    static const BernoulliTable table = make_bernoulli_table();
    return table;
}

const Rational& bernoulli_exact(int k) {
    const auto& table = bernoulli_table();
    if (k < 0 || k > table.max_index) throw std::out_of_range("bernoulli_exact: index outside exact table");
    return table.numbers[static_cast<std::size_t>(k)];
}

double bernoulli_number(int k) {
    if (k < 0) throw std::domain_error("bernoulli_number: negative index");
    if (k <= kExactBernoulliMax) return static_cast<double>(bernoulli_exact(k));
    if (k % 2 == 1) return 0.0;
    // B_{2j} = (-1)^{j+1} 2 (2j)! zeta(2j) / (2 pi)^{2j}
    const double log_mag = std::lgamma(k + 1.0) - k * std::log(2.0 * std::numbers::pi);
    const double zeta_k = 1.0 + std::pow(2.0, -k) + std::pow(3.0, -k) + std::pow(4.0, -k);
    const double sign = ((k / 2) % 2 == 1) ? 1.0 : -1.0;
    return sign * 2.0 * std::exp(log_mag) * zeta_k;
}

double bernoulli_poly(int k, double x) {
    if (k < 0) throw std::domain_error("bernoulli_poly: negative degree");
    double acc = 0.0;
    double binom = 1.0;
    for (int j = 0; j <= k; ++j) {
        acc += binom * bernoulli_number(j) * std::pow(x, k - j);
        binom = binom * (k - j) / (j + 1);
    }
    return acc;
}

Rational bernoulli_poly(int k, const Rational& x) {
    if (k < 0) throw std::domain_error("bernoulli_poly: negative degree");
    Rational acc = 0;
    for (int j = 0; j <= k; ++j) {
        Rational xp = 1;
        for (int i = 0; i < k - j; ++i) xp *= x;
        acc += binomial(k, j) * bernoulli_exact(j) * xp;
    }
    return acc;
}

double gamma(double s) {
    if (s <= 0.0 && s == std::floor(s)) throw std::domain_error("gamma: pole at non-positive integer");
    return std::tgamma(s);
}

cplx log_gamma(cplx z) {
    static constexpr std::array<double, 9> p = {
        0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
        771.32342877765313,   -176.61502916214059,   12.507343278686905,
        -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};
    if (is_nonpositive_integer(z)) throw std::domain_error("log_gamma: pole at non-positive integer");
    if (z.real() < 0.5) {
        return std::log(std::numbers::pi) - std::log(std::sin(std::numbers::pi * z)) - log_gamma(1.0 - z);
    }
    z -= 1.0;
    cplx x = p[0];
    for (int i = 1; i < 9; ++i) x += p[i] / (z + static_cast<double>(i));
    const cplx t = z + 7.5;
    return 0.5 * std::log(2.0 * std::numbers::pi) + (z + 0.5) * std::log(t) - t + std::log(x);
}

cplx gamma(cplx s) {
    if (is_nonpositive_integer(s)) throw std::domain_error("gamma: pole at non-positive integer");
    if (s.imag() == 0.0) return gamma(s.real());
    if (s.real() < 0.5) return std::numbers::pi / (std::sin(std::numbers::pi * s) * gamma(1.0 - s));
    return std::exp(log_gamma(s));
}

cplx hurwitz_zeta(cplx s, double a) {
    if (needs_wide(s) && a > 0.0) return hurwitz_wide(s, a);
    return hurwitz_impl<cplx>(s, a);
}

double hurwitz_zeta(double s, double a) {
    if (needs_wide(cplx(s)) && a > 0.0) return hurwitz_wide(cplx(s), a).real();
    return hurwitz_impl<double>(s, a);
}

cplx hurwitz_zeta_diff(cplx s, double a, double b) {
    if (!(a > 0.0) || !(b > 0.0)) throw std::domain_error("hurwitz_zeta_diff: shifts must be positive");
    if (needs_wide(s)) return hurwitz_wide(s, a) - hurwitz_wide(s, b);
    int m = 0;
    int terms = 0;
    shift_and_terms(s, m, terms);
    const auto pa = euler_maclaurin_parts(s, a, m, terms);
    const auto pb = euler_maclaurin_parts(s, b, m, terms);
    return (pa.head - pb.head) + pole_pair(s, pa.x, pb.x) + (pa.corrections - pb.corrections);
}

cplx riemann_zeta(cplx s) { return hurwitz_zeta(s, 1.0); }

double riemann_zeta(double s) { return hurwitz_zeta(s, 1.0); }

cplx dirichlet_L_mod2(cplx s, double tau) {
    if (!(tau > 0.0)) throw std::domain_error("dirichlet_L_mod2: tau must be positive");
    return std::exp(-s * std::log(2.0)) * hurwitz_zeta_diff(s, tau / 2.0, (tau + 1.0) / 2.0);
}

double dirichlet_L_mod2(double s, double tau) { return dirichlet_L_mod2(cplx(s, 0.0), tau).real(); }

}  // namespace rabi
