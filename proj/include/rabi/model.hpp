// model.hpp: AQRM parameters (omega = 1)

#pragma once

#include <cmath>
#include <stdexcept>

namespace rabi {

// H = a^dag a + delta sigma_z + g (a + a^dag) sigma_x + eps sigma_x
struct ModelParams {
    double g{0.0};      // coupling strength, >= 0
    double delta{0.0};  // half the level splitting
    double eps{0.0};    // static bias

    void validate() const {
        if (!(g >= 0.0) || !std::isfinite(g)) throw std::invalid_argument("ModelParams: g must be finite and >= 0");
        if (!std::isfinite(delta) || !std::isfinite(eps))
            throw std::invalid_argument("ModelParams: delta and eps must be finite");
    }
};

// N = floor(delta + |eps| + 1); the Hurwitz shift is then tau = g^2 + N.
inline int default_N(const ModelParams& p) {
    return static_cast<int>(std::floor(p.delta + std::abs(p.eps) + 1.0));
}

inline double default_tau(const ModelParams& p) { return p.g * p.g + default_N(p); }

}  // namespace rabi
