// specfun.hpp: Gamma, Hurwitz/Riemann zeta, the alternating L-series mod 2, Bernoulli numbers

#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace rabi {

using cplx = std::complex<double>;
using Rational = boost::multiprecision::cpp_rational;

// Exact Bernoulli numbers B_0..B_max with B_1 = -1/2.
struct BernoulliTable {
    int max_index{0};
    std::vector<Rational> numbers;
};

// Shared read-only table through index 80, built once on first use.
const BernoulliTable& bernoulli_table();

// Exact for k <= 80, throws std::out_of_range beyond.
const Rational& bernoulli_exact(int k);

// Double precision for any k >= 0 (exact table below 33, zeta formula above).
double bernoulli_number(int k);

// B_k(x) with the convention w e^{-xw}/(1-e^{-w}) = sum (-1)^k B_k(x) w^k / k!,
// which is the classical polynomial (B_1(x) = x - 1/2).
double bernoulli_poly(int k, double x);
Rational bernoulli_poly(int k, const Rational& x);

Rational binomial(int n, int k);

double gamma(double s);
cplx gamma(cplx s);
cplx log_gamma(cplx s);

// Euler-Maclaurin with shift m = max(10, ceil|s| + 10) and 12 Bernoulli corrections.
// At non-positive integers the finite expansion at m = 0 is exact and is used instead.
cplx hurwitz_zeta(cplx s, double a);
double hurwitz_zeta(double s, double a);

// zeta(s,a) - zeta(s,b), analytic through s = 1.
cplx hurwitz_zeta_diff(cplx s, double a, double b);

cplx riemann_zeta(cplx s);
double riemann_zeta(double s);

// L(s,tau) = sum_{n>=0} (-1)^n (n+tau)^{-s}; entire in s.
cplx dirichlet_L_mod2(cplx s, double tau);
double dirichlet_L_mod2(double s, double tau);

}  // namespace rabi
