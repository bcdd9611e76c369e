// symbolic.hpp: exact Taylor coefficients of the eps = 0 series in beta

#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "rabi/specfun.hpp"

namespace rabi {

// Polynomial in G = g^2 and D = Delta^2: key (power of G, power of D).
using GDPoly = std::map<std::pair<int, int>, Rational>;

GDPoly gd_add(const GDPoly& a, const GDPoly& b);
GDPoly gd_scale(const GDPoly& a, const Rational& c);
double gd_eval(const GDPoly& p, double g, double delta);
std::string gd_format(const GDPoly& p);  // e.g. "1/6 + D", "3/2 D + 2 G D"

inline constexpr int kSymbolicMaxOrder = 8;

// Taylor coefficients Phi_0..Phi_kmax of Phi(beta) = 1 + sum_l (beta Delta)^{2l} int Theta_{2l} dmu,
// computed by exact series expansion in beta and exact simplex monomial integrals.
std::vector<GDPoly> phi_taylor_symbolic(int k_max);

// Exact integral of prod_i mu_i^{a_i} over 0 <= mu_1 <= ... <= mu_d <= 1.
Rational simplex_monomial_integral(const std::vector<int>& exponents);

}  // namespace rabi
