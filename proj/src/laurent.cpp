// laurent.cpp: exact beta-expansion of the eps = 0 partition series
//
// Theta_{2l} = exp(G Y), Y = W / sh(t) with W entire in t; W is expanded with polynomial
// coefficients in mu, divided by sh(t), exponentiated, and integrated monomial by monomial.

#include "rabi/symbolic.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace rabi {

namespace {

using Monomial = std::vector<int>;
using MPoly = std::map<Monomial, Rational>;
using Series = std::vector<MPoly>;  // coefficient of t^n

void add_into(MPoly& a, const MPoly& b, const Rational& c = 1) {
    for (const auto& [m, v] : b) {
        auto& slot = a[m];
        slot += c * v;
        if (slot == 0) a.erase(m);
    }
}

MPoly mul(const MPoly& a, const MPoly& b) {
    MPoly out;
    for (const auto& [ma, va] : a)
        for (const auto& [mb, vb] : b) {
            Monomial m(ma.size());
            for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
            auto& slot = out[m];
            slot += va * vb;
            if (slot == 0) out.erase(m);
        }
    return out;
}

Series series_add(const Series& a, const Series& b, const Rational& c = 1) {
    Series out = a;
    for (std::size_t n = 0; n < b.size(); ++n) add_into(out[n], b[n], c);
    return out;
}

Series series_mul(const Series& a, const Series& b) {
    Series out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; i + j < out.size(); ++j) add_into(out[i + j], mul(a[i], b[j]));
    return out;
}

class Builder {
public:
    Builder(int dim, int order) : dim_(dim), order_(order) {}

    MPoly constant(const Rational& c) const {
        MPoly p;
        if (c != 0) p[Monomial(dim_, 0)] = c;
        return p;
    }

    // c + s * mu_k (k = 0 means the constant mu_0 = 0)
    MPoly linear(const Rational& c, const Rational& s, int k) const {
        MPoly p = constant(c);
        if (k > 0 && s != 0) {
            Monomial m(dim_, 0);
            m[k - 1] = 1;
            p[m] = s;
        }
        return p;
    }

    // ch(t L) or sh(t L) as a series in t
    Series hyperbolic(const MPoly& L, bool odd) const {
        Series out(order_ + 1);
        MPoly power = constant(1);
        Rational inv_fact = 1;
        for (int n = 0; n <= order_; ++n) {
            if (n > 0) {
                power = mul(power, L);
                inv_fact /= n;
            }
            if ((n % 2 == 1) == odd) add_into(out[n], power, inv_fact);
        }
        return out;
    }

    Series ch_of(const Rational& c, const Rational& s, int k) const { return hyperbolic(linear(c, s, k), false); }
    Series sh_of(const Rational& c, const Rational& s, int k) const { return hyperbolic(linear(c, s, k), true); }

    Series zero() const { return Series(order_ + 1); }

private:
    int dim_;
    int order_;
};

// Series of W = Y sh(t) for Theta_{2l}, through t^order.
Series theta_w(int dim, int order) {
    const Builder b(dim, order);
    const Rational half(1, 2);
    Series w = b.zero();
    // -2 (ch t + 1) + 4 ch(t(1 - mu_d))
    w = series_add(w, b.ch_of(1, 0, 0), -2);
    add_into(w[0], b.constant(-2));
    w = series_add(w, b.ch_of(1, -1, dim), 4);
    // -8 sh^2(t(1 - mu_d)/2) S
    Series sh_half = b.sh_of(half, -half, dim);
    Series s = b.zero();
    for (int gamma = 0; gamma <= dim; ++gamma) s = series_add(s, b.ch_of(0, 1, gamma), gamma % 2 ? -1 : 1);
    w = series_add(w, series_mul(series_mul(sh_half, sh_half), s), -8);
    // -4 double sum
    for (int beta = 1; beta <= dim - 1; ++beta)
        for (int alpha = beta - 1; alpha >= 0; alpha -= 2) {
            const Series left = series_add(b.ch_of(1, -1, beta + 1), b.ch_of(1, -1, beta), -1);
            const Series right = series_add(b.ch_of(0, 1, alpha), b.ch_of(0, 1, alpha + 1), -1);
            w = series_add(w, series_mul(left, right), -4);
        }
    // +4 P^2
    Series p = b.zero();
    for (int gamma = 0; gamma <= dim; ++gamma) p = series_add(p, b.sh_of(half, -1, gamma), gamma % 2 ? -1 : 1);
    w = series_add(w, series_mul(p, p), 4);
    return w;
}

}  // namespace

Rational simplex_monomial_integral(const std::vector<int>& exponents) {
    Rational v = 1;
    int running = 0;
    for (std::size_t i = 0; i < exponents.size(); ++i) {
        running += exponents[i] + 1;
        v /= running;
    }
    return v;
}

GDPoly gd_add(const GDPoly& a, const GDPoly& b) {
    GDPoly out = a;
    for (const auto& [k, v] : b) {
        auto& slot = out[k];
        slot += v;
        if (slot == 0) out.erase(k);
    }
    return out;
}

GDPoly gd_scale(const GDPoly& a, const Rational& c) {
    GDPoly out;
    if (c == 0) return out;
    for (const auto& [k, v] : a) out[k] = v * c;
    return out;
}

double gd_eval(const GDPoly& p, double g, double delta) {
    double acc = 0.0;
    for (const auto& [k, v] : p)
        acc += static_cast<double>(v) * std::pow(g * g, k.first) * std::pow(delta * delta, k.second);
    return acc;
}

std::string gd_format(const GDPoly& p) {
    if (p.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, v] : p) {
        Rational c = v;
        if (!first) {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        first = false;
        const bool bare = k.first == 0 && k.second == 0;
        if (bare || c != 1) os << c;
        auto factor = [&](const char* name, int power) {
            if (power == 0) return;
            os << (bare || c != 1 ? " " : "") << name;
            if (power > 1) os << "^" << power;
        };
        factor("G", k.first);
        if (k.first > 0 && k.second > 0 && c == 1) os << " ";
        factor("D", k.second);
    }
    return os.str();
}

std::vector<GDPoly> phi_taylor_symbolic(int k_max) {
    if (k_max < 0 || k_max > kSymbolicMaxOrder)
        throw std::invalid_argument("phi_taylor_symbolic: order outside 0.." + std::to_string(kSymbolicMaxOrder));
    std::vector<GDPoly> phi(k_max + 1);
    phi[0][{0, 0}] = 1;
    for (int lambda = 1; 2 * lambda <= k_max; ++lambda) {
        const int dim = 2 * lambda;
        const int K = k_max - dim;  // Theta needed through t^K
        const Series w = theta_w(dim, K + 1);
        if (!w[0].empty()) throw std::logic_error("phi_taylor_symbolic: W(0) does not vanish");
        // Y = (W/t) / (sh t / t)
        std::vector<Rational> s(K + 1, Rational(0));
        {
            Rational f = 1;
            for (int n = 0; n <= K; n += 2) {
                if (n > 0) f /= Rational((n) * (n + 1));
                s[n] = f;
            }
        }
        Series y(K + 1);
        for (int n = 0; n <= K; ++n) {
            MPoly v = w[n + 1];
            for (int m = 1; m <= n; ++m)
                if (s[m] != 0) add_into(v, y[n - m], -s[m]);
            y[n] = v;
        }
        if (!y[0].empty()) throw std::logic_error("phi_taylor_symbolic: exponent does not vanish at beta = 0");
        // Theta = sum_m G^m Y^m / m!
        Series power(K + 1);
        power[0][Monomial(dim, 0)] = 1;
        Rational inv_fact = 1;
        for (int m = 0; m <= K; ++m) {
            if (m > 0) {
                power = series_mul(power, y);
                inv_fact /= m;
            }
            for (int j = 0; j <= K; ++j) {
                Rational integral = 0;
                for (const auto& [mono, v] : power[j]) integral += v * simplex_monomial_integral(mono);
                if (integral == 0) continue;
                auto& slot = phi[dim + j][{m, lambda}];
                slot += integral * inv_fact;
                if (slot == 0) phi[dim + j].erase({m, lambda});
            }
        }
    }
    return phi;
}

}  // namespace rabi
