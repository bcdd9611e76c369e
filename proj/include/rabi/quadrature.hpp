// quadrature.hpp: Gauss rules and composite panel rules on the half line

#pragma once

#include <vector>

namespace rabi {

struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;
    std::size_t size() const { return nodes.size(); }
};

// Gauss-Legendre on [0, 1]; cached per order.
const QuadratureRule& gauss_legendre01(int order);

// Gauss-Hermite for weight e^{-x^2} on the real line.
QuadratureRule gauss_hermite(int order);

// Composite Gauss-Legendre over [t_min, t_max]: geometric panels (per_decade of them per
// factor 10) up to t_split, then panels of width panel_width.
struct PanelLayout {
    double t_min{1e-4};
    double t_split{1.0};
    double t_max{30.0};
    int per_decade{2};
    double panel_width{2.0};
    int order{8};
};

QuadratureRule composite_rule(const PanelLayout& layout);

}  // namespace rabi
