// jfunc.hpp: iterated integrals J_l(t) = int_simplex exp[t(1 - 2(-1)^l sum_g (-1)^g mu_g)] dmu

#pragma once

#include <vector>

#include "rabi/simplex.hpp"
#include "rabi/specfun.hpp"

namespace rabi {

// Polynomial in x = 1/t with exact coefficients, ascending powers.
using RationalPoly = std::vector<Rational>;

double eval_poly(const RationalPoly& p, double x);

// J_l(t) = sum_k p_k(1/t) J_{l-(2k-1)}(-t) + sum_k q_k(1/t) J_{l-2k}(t), from repeated
// integration by parts. p[k-1] pairs with J_{l-2k+1}(-t), q[k-1] with J_{l-2k}(t).
// For l = 1 no such form exists; the entry then holds J_1 = (x/2) J_0(t) - (x/2) J_0(-t) with
// the J_0(t) coefficient stored in q[0] (offset 1 instead of 2).
struct JRecursion {
    int lambda{0};
    std::vector<RationalPoly> p;
    std::vector<RationalPoly> q;
};
const JRecursion& j_recursion(int lambda);

// J_l(t) = A_l(1/t) e^t + B_l(1/t) e^{-t}.
struct JExpForm {
    RationalPoly a;
    RationalPoly b;
};
const JExpForm& j_exp_form(int lambda);

// Recursion-table evaluation; |t| below `series_below` switches to the Taylor series.
double j_lambda(int lambda, double t, double series_below = 1.0);
// Taylor series in t with moments of the simplex exponent (no 1/t cancellation).
double j_lambda_series(int lambda, double t);
// Direct simplex integration of the defining integrand.
IntegralEstimate j_lambda_quadrature(int lambda, double t, const SeriesConfig& cfg);

// (J_{2l}(t) + J_{2l}(-t))/2 = phi1_l(1/t) sh(t) + phi2_l(1/t) ch(t): the coefficient of
// (beta Delta)^{2l} at g = 0 with t = eps beta.
struct ShellForm {
    RationalPoly phi1;  // multiplies sh
    RationalPoly phi2;  // multiplies ch
};
const ShellForm& shell_form(int lambda);
double shell_coefficient(int lambda, double t);  // from j_lambda
double shell_closed_form(int lambda, double t);  // from shell_form

}  // namespace rabi
