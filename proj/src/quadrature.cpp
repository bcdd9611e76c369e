// quadrature.cpp: Gauss rules and composite panel rules on the half line

#include "rabi/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace rabi {

namespace {

QuadratureRule make_gauss_legendre01(int order) {
    QuadratureRule rule;
    rule.nodes.resize(order);
    rule.weights.resize(order);
    const int half = (order + 1) / 2;
    for (int i = 0; i < half; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (order + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0;
            double p1 = 0.0;
            for (int j = 1; j <= order; ++j) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p2) / j;
            }
            dp = order * (x * p0 - p1) / (x * x - 1.0);
            const double dx = p0 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.nodes[i] = 0.5 * (1.0 - x);
        rule.nodes[order - 1 - i] = 0.5 * (1.0 + x);
        rule.weights[i] = 0.5 * w;
        rule.weights[order - 1 - i] = 0.5 * w;
    }
    return rule;
}

}  // namespace

const QuadratureRule& gauss_legendre01(int order) {
    if (order < 1) throw std::invalid_argument("gauss_legendre01: order must be positive");
    static std::mutex mutex;
    static std::map<int, QuadratureRule> cache;
    std::lock_guard lock(mutex);
    auto it = cache.find(order);
    if (it == cache.end()) it = cache.emplace(order, make_gauss_legendre01(order)).first;
    return it->second;
}

QuadratureRule gauss_hermite(int order) {
    if (order < 1) throw std::invalid_argument("gauss_hermite: order must be positive");
    QuadratureRule rule;
    rule.nodes.resize(order);
    rule.weights.resize(order);
    const double pim4 = std::pow(std::numbers::pi, -0.25);
    const int half = (order + 1) / 2;
    double z = 0.0;
    for (int i = 0; i < half; ++i) {
        // asymptotic starting guesses for the largest roots, then extrapolation
        if (i == 0)
            z = std::sqrt(2.0 * order + 1.0) - 1.85575 * std::pow(2.0 * order + 1.0, -0.16667);
        else if (i == 1)
            z -= 1.14 * std::pow(static_cast<double>(order), 0.426) / z;
        else if (i == 2)
            z = 1.86 * z - 0.86 * rule.nodes[0];
        else if (i == 3)
            z = 1.91 * z - 0.91 * rule.nodes[1];
        else
            z = 2.0 * z - rule.nodes[i - 2];
        double pp = 0.0;
        for (int it = 0; it < 200; ++it) {
            double p1 = pim4;
            double p2 = 0.0;
            for (int j = 0; j < order; ++j) {
                const double p3 = p2;
                p2 = p1;
                p1 = z * std::sqrt(2.0 / (j + 1)) * p2 - std::sqrt(static_cast<double>(j) / (j + 1)) * p3;
            }
            pp = std::sqrt(2.0 * order) * p2;
            const double dz = p1 / pp;
            z -= dz;
            if (std::abs(dz) < 1e-15 * std::max(1.0, std::abs(z))) break;
        }
        rule.nodes[i] = z;
        rule.nodes[order - 1 - i] = -z;
        rule.weights[i] = 2.0 / (pp * pp);
        rule.weights[order - 1 - i] = rule.weights[i];
    }
    return rule;
}

QuadratureRule composite_rule(const PanelLayout& layout) {
    if (!(layout.t_min > 0.0) || !(layout.t_split > layout.t_min) || !(layout.t_max > layout.t_split))
        throw std::invalid_argument("composite_rule: need 0 < t_min < t_split < t_max");
    std::vector<double> edges;
    const double decades = std::log10(layout.t_split / layout.t_min);
    const int geometric = std::max(1, static_cast<int>(std::ceil(decades * layout.per_decade)));
    for (int i = 0; i <= geometric; ++i)
        edges.push_back(layout.t_min * std::pow(layout.t_split / layout.t_min, static_cast<double>(i) / geometric));
    const int linear = std::max(1, static_cast<int>(std::ceil((layout.t_max - layout.t_split) / layout.panel_width)));
    for (int i = 1; i <= linear; ++i)
        edges.push_back(layout.t_split + (layout.t_max - layout.t_split) * static_cast<double>(i) / linear);

    const auto& gl = gauss_legendre01(layout.order);
    QuadratureRule rule;
    for (std::size_t p = 0; p + 1 < edges.size(); ++p) {
        const double lo = edges[p];
        const double width = edges[p + 1] - lo;
        for (std::size_t k = 0; k < gl.size(); ++k) {
            rule.nodes.push_back(lo + width * gl.nodes[k]);
            rule.weights.push_back(width * gl.weights[k]);
        }
    }
    return rule;
}

}  // namespace rabi
