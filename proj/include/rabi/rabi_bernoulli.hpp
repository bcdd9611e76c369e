// rabi_bernoulli.hpp: Omega coefficients, Rabi-Bernoulli polynomials and special values

#pragma once

#include <string>
#include <vector>

#include "rabi/model.hpp"
#include "rabi/symbolic.hpp"

namespace rabi {

struct OmegaResult {
    std::vector<double> coefficients;  // Omega^{(0..j_max)}
    double aliasing_estimate{0.0};     // max change against a rule with half the nodes
    std::vector<std::string> warnings;
};

// Taylor coefficients of Phi(beta) = Z^0(beta)(1 - e^{-beta}) e^{-g^2 beta}/2 by trapezoid Cauchy
// integrals on |beta| = radius. Requires eps = 0 and j_max <= 9.
OmegaResult omega_coefficients(const ModelParams& params, int j_max, double radius = 0.5, int nodes = 64);

// (RB)_k = (-1)^k k! sum_i (-1)^{k-i}/(k-i)! Omega^{(i)} B_{k-i}(1)
GDPoly rb_symbolic(int k);
std::vector<double> rb_numeric(const ModelParams& params, int k_max, std::vector<std::string>* warnings = nullptr);

// zeta^0(1-k; g^2+1) = -(2/k) (RB)_k
double special_value(int k, const ModelParams& params);

}  // namespace rabi
