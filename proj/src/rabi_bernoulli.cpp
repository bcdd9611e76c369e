// rabi_bernoulli.cpp: Omega coefficients, Rabi-Bernoulli polynomials, special values

#include "rabi/rabi_bernoulli.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include "rabi/partition.hpp"
#include "rabi/simplex.hpp"
#include "rabi/specfun.hpp"

namespace rabi {

namespace {

constexpr int kNumericMaxOrder = 9;

// Nested Gauss-Legendre order per simplex dimension; the integrand is a smooth, slowly varying
// function of mu on |beta| <= 1/2.
int nested_order(int dim) {
    switch (dim) {
        case 2: return 16;
        case 4: return 10;
        case 6: return 6;
        default: return 4;
    }
}

cplx phi_at(const ModelParams& params, cplx beta, int j_max) {
    cplx total = 1.0;
    const cplx bd = beta * params.delta;
    for (int lambda = 1; 2 * lambda <= j_max; ++lambda) {
        const int dim = 2 * lambda;
        const cplx integral = integrate_nested(
            [&](std::span<const double> mu) { return std::exp(kernel::theta_exponent(params.g, beta, mu)); }, dim,
            nested_order(dim));
        total += std::pow(bd, dim) * integral;
    }
    return total;
}

std::vector<double> cauchy_coefficients(const std::vector<cplx>& values, double radius, int j_max) {
    const int n = static_cast<int>(values.size());
    std::vector<double> out(j_max + 1);
    for (int j = 0; j <= j_max; ++j) {
        cplx acc = 0.0;
        for (int k = 0; k < n; ++k) acc += values[k] * std::polar(1.0, -2.0 * std::numbers::pi * j * k / n);
        out[j] = (acc / static_cast<double>(n)).real() / std::pow(radius, j);
    }
    return out;
}

}  // namespace

OmegaResult omega_coefficients(const ModelParams& params, int j_max, double radius, int nodes) {
    params.validate();
    if (params.eps != 0.0) throw std::invalid_argument("omega_coefficients: eps must be 0");
    if (j_max < 0 || j_max > kNumericMaxOrder) throw std::invalid_argument("omega_coefficients: j_max outside 0..9");
    if (!(radius > 0.0) || radius >= std::numbers::pi)
        throw std::invalid_argument("omega_coefficients: radius must lie in (0, pi)");
    if (nodes < 2 * (j_max + 1) || nodes % 2 != 0)
        throw std::invalid_argument("omega_coefficients: need an even node count >= 2 (j_max + 1)");

    std::vector<cplx> values(nodes);
    for (int k = 0; k < nodes; ++k)
        values[k] = phi_at(params, std::polar(radius, 2.0 * std::numbers::pi * k / nodes), j_max);
    OmegaResult out;
    out.coefficients = cauchy_coefficients(values, radius, j_max);

    std::vector<cplx> half(nodes / 2);
    for (int k = 0; k < nodes / 2; ++k) half[k] = values[2 * k];
    const auto coarse = cauchy_coefficients(half, radius, j_max);
    for (int j = 0; j <= j_max; ++j)
        out.aliasing_estimate = std::max(out.aliasing_estimate, std::abs(coarse[j] - out.coefficients[j]));
    if (out.aliasing_estimate > 1e-8)
        out.warnings.push_back("Omega extraction ill-conditioned: aliasing change " +
                               std::to_string(out.aliasing_estimate));
    return out;
}

GDPoly rb_symbolic(int k) {
    if (k < 1 || k > kSymbolicMaxOrder) throw std::invalid_argument("rb_symbolic: k outside 1..8");
    const auto omega = phi_taylor_symbolic(k);
    GDPoly sum;
    Rational inv_fact = 1;
    for (int i = k; i >= 0; --i) {
        const int m = k - i;
        if (m > 0) inv_fact /= m;
        const Rational sign = m % 2 ? -1 : 1;
        sum = gd_add(sum, gd_scale(omega[i], sign * inv_fact * bernoulli_poly(m, Rational(1))));
    }
    Rational k_fact = 1;
    for (int j = 2; j <= k; ++j) k_fact *= j;
    return gd_scale(sum, (k % 2 ? -1 : 1) * k_fact);
}

std::vector<double> rb_numeric(const ModelParams& params, int k_max, std::vector<std::string>* warnings) {
    if (k_max < 1) throw std::invalid_argument("rb_numeric: k_max must be >= 1");
    const auto omega = omega_coefficients(params, k_max);
    if (warnings) warnings->insert(warnings->end(), omega.warnings.begin(), omega.warnings.end());
    std::vector<double> out(k_max + 1, 0.0);
    for (int k = 1; k <= k_max; ++k) {
        double sum = 0.0;
        double inv_fact = 1.0;
        for (int i = k; i >= 0; --i) {
            const int m = k - i;
            if (m > 0) inv_fact /= m;
            sum += (m % 2 ? -1.0 : 1.0) * inv_fact * omega.coefficients[i] * bernoulli_poly(m, 1.0);
        }
        double k_fact = 1.0;
        for (int j = 2; j <= k; ++j) k_fact *= j;
        out[k] = (k % 2 ? -1.0 : 1.0) * k_fact * sum;
    }
    return out;
}

double special_value(int k, const ModelParams& params) {
    if (k < 1) throw std::invalid_argument("special_value: k must be >= 1");
    const auto rb = rb_numeric(params, k);
    return -2.0 / k * rb[k];
}

}  // namespace rabi
