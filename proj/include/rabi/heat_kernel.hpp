// heat_kernel.hpp: Mehler kernel and the lambda = 0 term of the AQRM heat kernel

#pragma once

#include <array>

#include "rabi/model.hpp"

namespace rabi {

using Mat2 = std::array<std::array<double, 2>, 2>;

// Heat kernel of a^dag a in position space (ground energy 0).
double mehler_kernel(double x, double y, double t);

// e^{-Nt} K(x,y,t) e^{-2 g^2 tanh(t/2)} [[ch, -sh], [-sh, ch]](sqrt2 g (x+y) tanh(t/2) + eps t).
Mat2 heat_kernel_lambda0(double x, double y, double t, const ModelParams& params, int N);

struct TraceCheck {
    double integral{0.0};  // int tr K0(x,x,t) dx, with the e^{-Nt} factor removed
    double expected{0.0};  // 2 ch(eps t)/(1 - e^{-t})
    double rel_err{0.0};
};

// Gauss-Hermite evaluation of the diagonal trace after scaling out the Gaussian width.
TraceCheck heat_kernel_trace_check(const ModelParams& params, double t, int order = 64);

}  // namespace rabi
