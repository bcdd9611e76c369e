// heat_kernel.cpp: Mehler kernel and the lambda = 0 heat-kernel term

#include "rabi/heat_kernel.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "rabi/quadrature.hpp"

namespace rabi {

double mehler_kernel(double x, double y, double t) {
    if (!(t > 0.0)) throw std::domain_error("mehler_kernel: t must be positive");
    const double q = std::exp(-t);
    const double one_minus_q2 = -std::expm1(-2.0 * t);
    const double expo = -(1.0 + q * q) / (2.0 * one_minus_q2) * (x * x + y * y) + 2.0 * q * x * y / one_minus_q2;
    return std::exp(expo) / std::sqrt(std::numbers::pi * one_minus_q2);
}

Mat2 heat_kernel_lambda0(double x, double y, double t, const ModelParams& params, int N) {
    params.validate();
    const double th = std::tanh(0.5 * t);
    const double g = params.g;
    const double scale = std::exp(-N * t) * mehler_kernel(x, y, t) * std::exp(-2.0 * g * g * th);
    const double arg = std::numbers::sqrt2 * g * (x + y) * th + params.eps * t;
    const double c = scale * std::cosh(arg);
    const double s = scale * std::sinh(arg);
    return {{{c, -s}, {-s, c}}};
}

TraceCheck heat_kernel_trace_check(const ModelParams& params, double t, int order) {
    params.validate();
    if (!(t > 0.0)) throw std::domain_error("heat_kernel_trace_check: t must be positive");
    // On the diagonal the Gaussian is exp(-tanh(t/2) x^2); substitute x = y / sqrt(tanh(t/2)).
    const double th = std::tanh(0.5 * t);
    const double width = 1.0 / std::sqrt(th);
    const auto rule = gauss_hermite(order);
    const int N = 0;
    double acc = 0.0;
    for (std::size_t i = 0; i < rule.size(); ++i) {
        const double x = rule.nodes[i] * width;
        const auto k = heat_kernel_lambda0(x, x, t, params, N);
        acc += rule.weights[i] * std::exp(rule.nodes[i] * rule.nodes[i]) * (k[0][0] + k[1][1]);
    }
    TraceCheck out;
    out.integral = acc * width;
    out.expected = 2.0 * std::cosh(params.eps * t) / -std::expm1(-t);
    out.rel_err = std::abs(out.integral - out.expected) / std::abs(out.expected);
    return out;
}

}  // namespace rabi
