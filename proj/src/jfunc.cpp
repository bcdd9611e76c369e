// jfunc.cpp: J_l(t): integration-by-parts tables, Taylor series and direct quadrature

#include "rabi/jfunc.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace rabi {

namespace {

constexpr int kMaxLambda = 24;
constexpr int kSeriesOrder = 48;

RationalPoly trimmed(RationalPoly p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

RationalPoly add(const RationalPoly& a, const RationalPoly& b) {
    RationalPoly out(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
    return trimmed(std::move(out));
}

RationalPoly mul(const RationalPoly& a, const RationalPoly& b) {
    if (a.empty() || b.empty()) return {};
    RationalPoly out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return trimmed(std::move(out));
}

RationalPoly reflect(const RationalPoly& a) {  // p(x) -> p(-x)
    RationalPoly out = a;
    for (std::size_t i = 1; i < out.size(); i += 2) out[i] = -out[i];
    return out;
}

// c (x/2)^n
RationalPoly half_power(int n, const Rational& c) {
    RationalPoly out(n + 1);
    Rational v = c;
    for (int i = 0; i < n; ++i) v /= 2;
    out[n] = v;
    return out;
}

Rational factorial(int n) {
    Rational v = 1;
    for (int k = 2; k <= n; ++k) v *= k;
    return v;
}

// Linear combination of J_j(s t), keyed by (j, s).
using LinComb = std::map<std::pair<int, int>, RationalPoly>;

void accumulate(LinComb& into, const LinComb& from, const RationalPoly& factor) {
    for (const auto& [key, poly] : from) {
        auto& slot = into[key];
        slot = add(slot, mul(poly, factor));
    }
}

// F_{l,k}(t) = int_simplex (1 - mu_l)^k / k! exp[t(1 - 2 S_l)].
class FTable {
public:
    const LinComb& get(int lambda, int k) {
        const auto key = std::make_pair(lambda, k);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        LinComb out;
        if (lambda == 0) {
            out[{0, 1}] = RationalPoly{Rational(1) / factorial(k)};
        } else if (lambda == 1) {
            RationalPoly plus;
            for (int j = 0; j <= k; ++j)
                plus = add(plus, half_power(j + 1, Rational(j % 2 ? -1 : 1) / factorial(k - j)));
            out[{0, 1}] = plus;
            out[{0, -1}] = half_power(k + 1, Rational(k % 2 ? 1 : -1));
        } else {
            for (int j = 0; j <= k; ++j) {
                const LinComb inner = get(lambda - 2, k - j + 1);
                accumulate(out, inner, half_power(j + 1, Rational(j % 2 ? -1 : 1)));
            }
            auto& slot = out[{lambda - 1, -1}];
            slot = add(slot, half_power(k + 1, Rational(k % 2 ? 1 : -1)));
        }
        return memo_.emplace(key, std::move(out)).first->second;
    }

private:
    std::map<std::pair<int, int>, LinComb> memo_;
};

struct Tables {
    std::vector<JRecursion> recursion;
    std::vector<JExpForm> exp_form;
    std::vector<ShellForm> shells;
    std::vector<std::vector<long double>> taylor;  // taylor[l][n] = [t^n] J_l(t)
};

JRecursion canonical_form(int lambda, FTable& f) {
    JRecursion r;
    r.lambda = lambda;
    if (lambda == 0) return r;
    LinComb comb = f.get(lambda, 0);
    if (lambda == 1) {
        r.p.push_back(comb[{0, -1}]);
        r.q.push_back(comb[{0, 1}]);
        return r;
    }
    if (lambda % 2 == 1) {
        // e^t = (2/x) J_1(t) + e^{-t}
        RationalPoly c = comb[{0, 1}];
        comb.erase({0, 1});
        if (!c.empty() && c[0] != 0) throw std::logic_error("J recursion: e^t coefficient not divisible by x");
        RationalPoly over_x(c.begin() + (c.empty() ? 0 : 1), c.end());
        for (auto& v : over_x) v *= 2;
        auto& j1 = comb[{1, 1}];
        j1 = add(j1, over_x);
        auto& j0m = comb[{0, -1}];
        j0m = add(j0m, c);
    }
    for (int k = 1; k <= (lambda + 1) / 2; ++k) {
        auto it = comb.find({lambda - 2 * k + 1, -1});
        r.p.push_back(it == comb.end() ? RationalPoly{} : it->second);
        if (it != comb.end()) comb.erase(it);
    }
    for (int k = 1; k <= lambda / 2; ++k) {
        auto it = comb.find({lambda - 2 * k, 1});
        r.q.push_back(it == comb.end() ? RationalPoly{} : it->second);
        if (it != comb.end()) comb.erase(it);
    }
    for (const auto& [key, poly] : comb)
        if (!trimmed(poly).empty()) throw std::logic_error("J recursion: term outside the canonical form");
    return r;
}

std::vector<std::vector<long double>> taylor_tables() {
    // R_l(m, z) = int_{simplex in [0,m]} e^{z S_l}, stored as R[n][a] for z^n m^a;
    // R_l = int_0^m e^{z m'} R_{l-1}(m', -z) dm'. Then J_l(t) = e^t R_l(1, -2t).
    std::vector<std::vector<long double>> out(kMaxLambda + 1, std::vector<long double>(kSeriesOrder + 1, 0.0L));
    std::vector<long double> inv_fact(kSeriesOrder + kMaxLambda + 2, 1.0L);
    for (std::size_t k = 1; k < inv_fact.size(); ++k) inv_fact[k] = inv_fact[k - 1] / k;
    const int width = kSeriesOrder + kMaxLambda + 2;
    std::vector<std::vector<long double>> R(kSeriesOrder + 1, std::vector<long double>(width, 0.0L));
    R[0][0] = 1.0L;
    for (int lambda = 0; lambda <= kMaxLambda; ++lambda) {
        if (lambda > 0) {
            std::vector<std::vector<long double>> next(kSeriesOrder + 1, std::vector<long double>(width, 0.0L));
            for (int n = 0; n <= kSeriesOrder; ++n)
                for (int a = 0; a + 1 < width; ++a) {
                    long double q = 0.0L;
                    for (int k = 0; k <= n && k <= a; ++k) {
                        const long double r = R[n - k][a - k] * ((n - k) % 2 ? -1.0L : 1.0L);
                        q += r * inv_fact[k];
                    }
                    next[n][a + 1] = q / (a + 1);
                }
            R = std::move(next);
        }
        std::vector<long double> r(kSeriesOrder + 1, 0.0L);
        long double pow2 = 1.0L;
        for (int n = 0; n <= kSeriesOrder; ++n) {
            long double s = 0.0L;
            for (int a = 0; a < width; ++a) s += R[n][a];
            r[n] = s * pow2;
            pow2 *= -2.0L;
        }
        for (int n = 0; n <= kSeriesOrder; ++n) {
            long double c = 0.0L;
            for (int k = 0; k <= n; ++k) c += r[k] * inv_fact[n - k];
            out[lambda][n] = c;
        }
    }
    return out;
}

const Tables& tables() {
    static const Tables t = [] {
        Tables out;
        FTable f;
        for (int lambda = 0; lambda <= kMaxLambda; ++lambda) out.recursion.push_back(canonical_form(lambda, f));
        out.exp_form.push_back({RationalPoly{1}, {}});
        out.exp_form.push_back({half_power(1, 1), half_power(1, -1)});
        for (int lambda = 2; lambda <= kMaxLambda; ++lambda) {
            const auto& r = out.recursion[lambda];
            JExpForm e;
            for (std::size_t k = 1; k <= r.p.size(); ++k) {
                const auto& sub = out.exp_form[lambda - 2 * k + 1];
                e.a = add(e.a, mul(r.p[k - 1], reflect(sub.b)));
                e.b = add(e.b, mul(r.p[k - 1], reflect(sub.a)));
            }
            for (std::size_t k = 1; k <= r.q.size(); ++k) {
                const auto& sub = out.exp_form[lambda - 2 * k];
                e.a = add(e.a, mul(r.q[k - 1], sub.a));
                e.b = add(e.b, mul(r.q[k - 1], sub.b));
            }
            out.exp_form.push_back(std::move(e));
        }
        for (int lambda = 0; 2 * lambda <= kMaxLambda; ++lambda) {
            const auto& e = out.exp_form[2 * lambda];
            const RationalPoly u = add(e.a, reflect(e.b));
            ShellForm s;
            s.phi1.assign(u.size(), Rational(0));
            s.phi2.assign(u.size(), Rational(0));
            for (std::size_t i = 0; i < u.size(); ++i) (i % 2 ? s.phi1 : s.phi2)[i] = u[i];
            s.phi1 = trimmed(s.phi1);
            s.phi2 = trimmed(s.phi2);
            out.shells.push_back(std::move(s));
        }
        out.taylor = taylor_tables();
        return out;
    }();
    return t;
}

void check_lambda(int lambda, int limit, const char* who) {
    if (lambda < 0 || lambda > limit)
        throw std::invalid_argument(std::string(who) + ": lambda outside 0.." + std::to_string(limit));
}

}  // namespace

double eval_poly(const RationalPoly& p, double x) {
    double acc = 0.0;
    for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + static_cast<double>(p[i]);
    return acc;
}

const JRecursion& j_recursion(int lambda) {
    check_lambda(lambda, kMaxLambda, "j_recursion");
    return tables().recursion[lambda];
}

const JExpForm& j_exp_form(int lambda) {
    check_lambda(lambda, kMaxLambda, "j_exp_form");
    return tables().exp_form[lambda];
}

const ShellForm& shell_form(int lambda) {
    check_lambda(lambda, kMaxLambda / 2, "shell_form");
    return tables().shells[lambda];
}

double j_lambda_series(int lambda, double t) {
    check_lambda(lambda, kMaxLambda, "j_lambda_series");
    const auto& c = tables().taylor[lambda];
    long double acc = 0.0L;
    for (int n = kSeriesOrder; n >= 0; --n) acc = acc * t + c[n];
    return static_cast<double>(acc);
}

double j_lambda(int lambda, double t, double series_below) {
    check_lambda(lambda, kMaxLambda, "j_lambda");
    if (lambda == 0) return std::exp(t);
    if (std::abs(t) < series_below || t == 0.0) return j_lambda_series(lambda, t);
    if (lambda == 1) return std::sinh(t) / t;
    const double x = 1.0 / t;
    std::vector<double> plus(lambda + 1);
    std::vector<double> minus(lambda + 1);
    plus[0] = std::exp(t);
    minus[0] = std::exp(-t);
    plus[1] = minus[1] = std::sinh(t) / t;
    for (int j = 2; j <= lambda; ++j) {
        const auto& r = tables().recursion[j];
        double vp = 0.0;
        double vm = 0.0;
        for (std::size_t k = 1; k <= r.p.size(); ++k) {
            vp += eval_poly(r.p[k - 1], x) * minus[j - 2 * k + 1];
            vm += eval_poly(r.p[k - 1], -x) * plus[j - 2 * k + 1];
        }
        for (std::size_t k = 1; k <= r.q.size(); ++k) {
            vp += eval_poly(r.q[k - 1], x) * plus[j - 2 * k];
            vm += eval_poly(r.q[k - 1], -x) * minus[j - 2 * k];
        }
        plus[j] = vp;
        minus[j] = vm;
    }
    return plus[lambda];
}

IntegralEstimate j_lambda_quadrature(int lambda, double t, const SeriesConfig& cfg) {
    check_lambda(lambda, 2 * SeriesConfig::kLambdaCap, "j_lambda_quadrature");
    const double sign = lambda % 2 ? -1.0 : 1.0;
    return simplex_integrate(
        [&](std::span<const double> mu) {
            double alt = 0.0;
            for (std::size_t g = 0; g < mu.size(); ++g) alt += (g % 2 == 0 ? -1.0 : 1.0) * mu[g];
            return std::exp(t * (1.0 - 2.0 * sign * alt));
        },
        lambda, cfg, 0x4a00 + static_cast<std::uint64_t>(lambda));
}

double shell_coefficient(int lambda, double t) {
    return 0.5 * (j_lambda(2 * lambda, t) + j_lambda(2 * lambda, -t));
}

double shell_closed_form(int lambda, double t) {
    const auto& s = shell_form(lambda);
    if (t == 0.0) return j_lambda_series(2 * lambda, 0.0);
    const double x = 1.0 / t;
    return eval_poly(s.phi1, x) * std::sinh(t) + eval_poly(s.phi2, x) * std::cosh(t);
}

}  // namespace rabi
