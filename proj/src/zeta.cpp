// zeta.cpp: spectral zeta functions by eigenvalue sums and by Mellin transforms of the series

#include "rabi/zeta.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <memory>
#include <numbers>
#include <random>
#include <stdexcept>

#include "rabi/jfunc.hpp"
#include "rabi/linalg.hpp"
#include "rabi/partition.hpp"
#include "rabi/quadrature.hpp"

namespace rabi {

namespace {

void check_s(cplx s, double min_re, const char* who) {
    if (!(s.real() > min_re))
        throw std::domain_error(std::string(who) + ": Re s must exceed " + std::to_string(min_re));
}

double inverse_factorial(int n) {
    double v = 1.0;
    for (int k = 2; k <= n; ++k) v /= k;
    return v;
}

cplx pow_real(double base, cplx s) { return std::exp(-s * std::log(base)); }  // base^{-s}

// Levels beyond the computed ones continue the last two with period P in energy (P = 1 for the
// full model, whose levels come in pairs per unit; P = 2 for a parity block).
struct LadderTail {
    cplx estimate;
    double bracket;
};
LadderTail ladder_tail(const std::vector<double>& levels, double tau, cplx s, double period) {
    const std::size_t J = levels.size();
    const double e1 = levels[J - 1] + tau;
    const double e2 = J >= 2 ? levels[J - 2] + tau : e1;
    const double ps = std::pow(period, -s.real());
    const cplx pc = pow_real(period, s);
    const cplx est = pc * (hurwitz_zeta(s, e2 / period + 1.0) + hurwitz_zeta(s, e1 / period + 1.0));
    const cplx crude = 2.0 * pc * hurwitz_zeta(s, e1 / period + 1.0);
    const double gap = std::abs(est - crude);
    // Never report less than a small fraction of the tail itself.
    const double floor_part = 1e-3 * ps * 2.0 * hurwitz_zeta(s.real(), e2 / period + 1.0);
    return {est, std::max(gap, floor_part)};
}

ZetaResult zeta_from_levels(const Spectrum& sp, cplx s, double tau, double period, const std::string& method) {
    const auto& lv = sp.eigenvalues;
    if (lv.empty()) throw std::invalid_argument("zeta: empty spectrum");
    if (!(lv.front() + tau > 0.0))
        throw std::domain_error("zeta: tau + lambda_0 must be positive (tau = " + std::to_string(tau) + ")");
    ZetaResult out;
    out.method = method;
    double deriv = 0.0;
    for (double e : lv) {
        out.value += pow_real(e + tau, s);
        deriv += std::pow(e + tau, -s.real() - 1.0);
    }
    const auto tail = ladder_tail(lv, tau, s, period);
    out.value += tail.estimate;
    const double level_err = std::abs(s) * std::max(sp.max_change, sp.tol) * deriv;
    out.err_bracket = tail.bracket + level_err;
    out.metadata["j_cut"] = static_cast<double>(lv.size());
    out.metadata["truncation_dim"] = static_cast<double>(sp.truncation_dim);
    out.metadata["tail_estimate"] = std::abs(tail.estimate);
    out.metadata["tail_bracket"] = tail.bracket;
    out.metadata["level_err"] = level_err;
    return out;
}

// One subtracted series inside a Mellin integrand:
//   weight(t) * sum_{p = first, first+2, ...} (t Delta)^p int_{simplex_p} f(t, mu) dmu,
// with |f| <= envelope(t). `proxy` is weight(t) * sum_p (t|Delta|)^p/p! * envelope(t) in closed
// form and `proxy_exact` its normalized Mellin transform; comparing the two measures the error of
// the t-quadrature.
struct Channel {
    std::function<double(double)> weight;
    int first_power{2};
    std::function<double(double, std::span<const double>)> integrand;
    std::function<double(double)> envelope;
    std::function<double(double)> proxy;
    cplx proxy_exact{0.0};
    std::uint64_t stream{0};
};

struct EngineOut {
    cplx value{0.0};
    double stat_err{0.0};
    double quad_err{0.0};
    double cut_err{0.0};
    double power_tail_err{0.0};
    double t_max{0.0};
    int nodes{0};
    int max_power{0};
    int capped_nodes{0};
};

double choose_t_max(double kappa, double sigma, double tol) {
    double T = 8.0;
    while (T < 400.0 && std::exp(-kappa * T) * std::pow(T, std::max(sigma, 1.0)) > tol) T += 1.0;
    return T;
}

// (1/Gamma(s)) int_0^inf t^{s-1} [sum over channels] dt. kappa is the decay rate of the envelope.
EngineOut mellin_series(cplx s, double delta, double kappa, const std::vector<Channel>& channels,
                        const MellinSettings& cfg) {
    if (!(kappa > 0.0)) throw std::domain_error("Mellin route: envelope does not decay (need tau - g^2 > |Delta| + |eps|)");
    if (cfg.points < 64 || cfg.replicates < 2) throw std::invalid_argument("Mellin route: too few sampling points");
    EngineOut out;
    const double sigma = s.real();
    out.t_max = choose_t_max(kappa, sigma, cfg.tail_tol);
    PanelLayout layout;
    layout.t_min = cfg.t_min;
    layout.t_split = cfg.t_split;
    layout.t_max = std::max(out.t_max, cfg.t_split * 2.0);
    layout.per_decade = cfg.per_decade;
    layout.panel_width = std::clamp(2.5 / kappa, 1.0, 10.0);
    layout.order = cfg.order;
    const auto rule = composite_rule(layout);
    out.nodes = static_cast<int>(rule.size());
    const int R = cfg.replicates;
    const cplx inv_gamma = 1.0 / gamma(s);
    const double ad = std::abs(delta);
    std::vector<cplx> rep_values(R, 0.0);

    for (std::size_t c = 0; c < channels.size(); ++c) {
        const auto& ch = channels[c];
        const int top = ch.first_power + 2 * ((cfg.max_power - ch.first_power) / 2);
        // Per node: kernel weight and the power at which the envelope tail becomes negligible.
        std::vector<cplx> cw(rule.size());
        std::vector<int> stop(rule.size());
        std::vector<double> env_tail_at_top(rule.size(), 0.0);
        cplx proxy_quad = 0.0;
        for (std::size_t i = 0; i < rule.size(); ++i) {
            const double t = rule.nodes[i];
            cw[i] = rule.weights[i] * ch.weight(t) * std::exp((s - 1.0) * std::log(t));
            proxy_quad += rule.weights[i] * std::exp((s - 1.0) * std::log(t)) * ch.proxy(t);
            const double x = t * ad;
            const double scale = ch.envelope(t);
            double env = std::pow(x, ch.first_power) * inverse_factorial(ch.first_power) * scale;
            double sum = env;
            int p = ch.first_power;
            while (true) {
                // Tail beyond p of sum_q x^q/q!, q = p+2, p+4, ...
                double tail = 0.0;
                double term = env;
                for (int q = p + 2; q < p + 400; q += 2) {
                    term *= x * x / ((q - 1.0) * q);
                    tail += term;
                    if (term <= 1e-17 * tail) break;
                }
                if (tail <= 1e-15 * sum || x == 0.0) break;
                if (p + 2 > top) {
                    env_tail_at_top[i] = tail;
                    break;
                }
                p += 2;
                env *= x * x / ((p - 1.0) * p);
                sum += env;
            }
            stop[i] = p;
            out.max_power = std::max(out.max_power, p);
        }
        out.quad_err += std::abs(proxy_quad * inv_gamma - ch.proxy_exact);
        // Cut-offs of the t-range, measured with the proxy.
        const double tm = cfg.t_min;
        out.cut_err += std::abs(std::pow(tm, sigma - 1.0) * ch.proxy(tm)) * tm / (sigma + 1.0) * std::abs(inv_gamma);
        out.cut_err += std::abs(std::pow(layout.t_max, sigma - 1.0) * ch.proxy(layout.t_max)) / kappa *
                       std::abs(inv_gamma);

        for (int p = ch.first_power; p <= top; p += 2) {
            bool needed = false;
            for (std::size_t i = 0; i < rule.size(); ++i) needed = needed || stop[i] >= p;
            if (!needed) break;
            const SimplexPointSet pts(p, cfg.points, R, cfg.seed, (ch.stream << 8) | static_cast<std::uint64_t>(p));
            const double vol = simplex_volume(p);
            for (std::size_t i = 0; i < rule.size(); ++i) {
                if (stop[i] < p) continue;
                const double t = rule.nodes[i];
                const double xp = std::pow(t * delta, p);
                for (int r = 0; r < R; ++r) {
                    double acc = 0.0;
                    for (std::size_t k = 0; k < pts.points_per_replicate(); ++k) acc += ch.integrand(t, pts.point(r, k));
                    const double mean = acc / static_cast<double>(pts.points_per_replicate());
                    rep_values[r] += cw[i] * xp * vol * mean;
                }
            }
        }
        // Powers above the QMC range: draw the power q with probability proportional to its
        // envelope term, then a uniform simplex point of dimension q. The sample mean of
        // sign(t Delta)^q f / envelope times the envelope sum is unbiased for the tail.
        for (std::size_t i = 0; i < rule.size(); ++i) {
            if (env_tail_at_top[i] == 0.0) continue;
            ++out.capped_nodes;
            const double t = rule.nodes[i];
            const double x = t * ad;
            const double scale = ch.envelope(t);
            std::vector<int> powers;
            std::vector<double> cumulative;
            double term = std::pow(x, top) * inverse_factorial(top) * scale;
            double total = 0.0;
            int q = top;
            while (true) {
                q += 2;
                term *= x * x / ((q - 1.0) * q);
                if (q > kernel::kMaxDim) break;
                total += term;
                powers.push_back(q);
                cumulative.push_back(total);
                if (term <= 1e-17 * total) break;
            }
            // Whatever lies beyond the kernel capacity is only bracketed.
            const double beyond = std::max(0.0, env_tail_at_top[i] - total);
            out.power_tail_err += std::abs(cw[i]) * beyond * std::abs(inv_gamma);
            if (powers.empty()) continue;
            out.max_power = std::max(out.max_power, powers.back());
            const std::size_t per_rep = std::max<std::size_t>(1, cfg.tail_samples / R);
            std::vector<double> mu;
            for (int r = 0; r < R; ++r) {
                std::seed_seq seq{cfg.seed, ch.stream, static_cast<std::uint64_t>(i), static_cast<std::uint64_t>(r)};
                std::mt19937_64 rng(seq);
                std::uniform_real_distribution<double> unif(0.0, 1.0);
                double acc = 0.0;
                for (std::size_t k = 0; k < per_rep; ++k) {
                    const double u = unif(rng) * total;
                    const auto pos = std::min<std::size_t>(
                        std::lower_bound(cumulative.begin(), cumulative.end(), u) - cumulative.begin(),
                        powers.size() - 1);
                    const int dim = powers[pos];
                    mu.resize(dim);
                    for (auto& m : mu) m = unif(rng);
                    std::sort(mu.begin(), mu.end());
                    const double sgn = delta < 0.0 && dim % 2 ? -1.0 : 1.0;
                    acc += sgn * ch.integrand(t, mu) / scale;
                }
                rep_values[r] += cw[i] * total * acc / static_cast<double>(per_rep);
            }
        }
    }

    cplx mean = 0.0;
    for (const auto& v : rep_values) mean += v;
    mean /= static_cast<double>(R);
    double var = 0.0;
    for (const auto& v : rep_values) var += std::norm(v - mean);
    out.value = mean * inv_gamma;
    out.stat_err = std::sqrt(var / (R - 1) / R) * std::abs(inv_gamma);
    return out;
}

void fill_mellin_result(ZetaResult& out, const EngineOut& e) {
    out.value += e.value;
    out.err_bracket = 3.0 * e.stat_err + e.quad_err + e.cut_err + e.power_tail_err;
    out.metadata["stat_err"] = e.stat_err;
    out.metadata["quad_err"] = e.quad_err;
    out.metadata["cut_err"] = e.cut_err;
    out.metadata["power_tail_err"] = e.power_tail_err;
    out.metadata["t_max"] = e.t_max;
    out.metadata["nodes"] = e.nodes;
    out.metadata["max_power"] = e.max_power;
    out.metadata["capped_nodes"] = e.capped_nodes;
    if (e.capped_nodes > 0)
        out.warnings.push_back("series needed more than " + std::to_string(e.max_power) +
                               " powers of (t Delta) at " + std::to_string(e.capped_nodes) +
                               " nodes; the missing part is bracketed");
}

double one_minus_exp(double x) { return -std::expm1(x); }

// 2 e^{-at}/(1-e^{-t}) and e^{-at}/(1 +- e^{-t}) written to stay finite at small t.
double bose(double a, double t) { return std::exp(-a * t) / -std::expm1(-t); }
double fermi(double a, double t) { return std::exp(-a * t) / (1.0 + std::exp(-t)); }

cplx parity_closed_part(double a, double delta, Parity sign, cplx s) {
    const double c = sign == Parity::plus ? -1.0 : 1.0;
    return 0.5 * (hurwitz_zeta(s, a - delta) + hurwitz_zeta(s, a + delta)) +
           c * 0.5 * (dirichlet_L_mod2(s, a - delta) - dirichlet_L_mod2(s, a + delta));
}

std::vector<Channel> parity_channels(const ModelParams& params, Parity sign, double a, cplx s) {
    const double g = params.g;
    const double delta = params.delta;
    const double c = sign == Parity::plus ? -1.0 : 1.0;
    Channel even;
    even.weight = [a](double t) { return -bose(a, t); };
    even.first_power = 2;
    even.integrand = [g](double t, std::span<const double> mu) {
        return one_minus_exp(kernel::theta_exponent(g, t, mu));
    };
    even.envelope = [](double) { return 1.0; };
    even.proxy = [a, delta](double t) {
        const double h = std::sinh(0.5 * delta * t);
        return -bose(a, t) * 2.0 * h * h;
    };
    even.proxy_exact = -(0.5 * (hurwitz_zeta(s, a - delta) + hurwitz_zeta(s, a + delta)) - hurwitz_zeta(s, a));
    even.stream = 0x21;

    Channel odd;
    odd.weight = [a, c](double t) { return -c * fermi(a, t); };
    odd.first_power = 1;
    odd.integrand = [g](double t, std::span<const double> mu) {
        return one_minus_exp(kernel::xi_exponent(g, t, mu));
    };
    odd.envelope = [](double) { return 1.0; };
    const double ad = std::abs(delta);
    odd.proxy = [a, c, ad](double t) { return -c * fermi(a, t) * std::sinh(ad * t); };
    odd.proxy_exact = -c * 0.5 * (dirichlet_L_mod2(s, a - ad) - dirichlet_L_mod2(s, a + ad));
    odd.stream = 0x22;
    return {even, odd};
}

bool strictly_decreasing(const std::vector<double>& v) {
    for (std::size_t i = 1; i < v.size(); ++i)
        if (!(v[i] < v[i - 1])) return false;
    return true;
}

void finish_report(LimitReport& rep) {
    rep.distances.clear();
    for (const auto& v : rep.values) rep.distances.push_back(std::abs(v - rep.target));
    rep.decreasing = strictly_decreasing(rep.distances);
    const bool within = rep.tolerance <= 0.0 || (!rep.distances.empty() && rep.distances.back() <= rep.tolerance);
    rep.pass = rep.decreasing && within;
}

void check_grid(const std::vector<double>& grid, const char* who) {
    if (grid.empty()) throw std::invalid_argument(std::string(who) + ": empty grid");
}

}  // namespace

ZetaResult spectral_zeta_eigen(const ModelParams& params, cplx s, double tau, const EigenZetaOptions& opts) {
    params.validate();
    check_s(s, 1.0, "spectral_zeta_eigen");
    if (opts.j_cut < 4) throw std::invalid_argument("spectral_zeta_eigen: j_cut must be >= 4");
    const auto sp = spectrum(params, opts.j_cut, opts.tol);
    return zeta_from_levels(sp, s, tau, 1.0, "eigen_sum");
}

ZetaResult spectral_zeta_mellin(const ModelParams& params, cplx s, double tau, const MellinSettings& cfg) {
    params.validate();
    check_s(s, 1.0, "spectral_zeta_mellin");
    const double g = params.g;
    const double delta = params.delta;
    const double eps = params.eps;
    const double a = tau - g * g;
    const double ad = std::abs(delta);
    const double ae = std::abs(eps);
    const double rho = std::hypot(delta, eps);
    if (!(a > ad + ae))
        throw std::domain_error("spectral_zeta_mellin: need tau - g^2 > |Delta| + |eps|");

    ZetaResult out;
    out.method = "mellin";
    // Theta = 1 - (1 - Theta): the unit part sums to ch(t rho) - ch(eps t) in closed form.
    out.value = hurwitz_zeta(s, a - rho) + hurwitz_zeta(s, a + rho);
    if (delta == 0.0) {
        out.metadata["stat_err"] = 0.0;
        return out;
    }
    Channel ch;
    ch.weight = [a](double t) { return -2.0 * bose(a, t); };
    ch.first_power = 2;
    ch.integrand = [g, eps](double t, std::span<const double> mu) {
        return one_minus_exp(kernel::theta_exponent(g, t, mu)) * eps_weight(eps * t, mu);
    };
    ch.envelope = [ae](double t) { return std::cosh(ae * t); };
    ch.proxy = [a, ad, ae](double t) {
        const double h = std::sinh(0.5 * ad * t);
        return -2.0 * bose(a, t) * 2.0 * h * h * std::cosh(ae * t);
    };
    ch.proxy_exact = -(0.5 * (hurwitz_zeta(s, a - ad - ae) + hurwitz_zeta(s, a + ad + ae) +
                              hurwitz_zeta(s, a - std::abs(ad - ae)) + hurwitz_zeta(s, a + std::abs(ad - ae))) -
                       hurwitz_zeta(s, a - ae) - hurwitz_zeta(s, a + ae));
    ch.stream = 0x11;
    const auto e = mellin_series(s, delta, a - ad - ae, {ch}, cfg);
    fill_mellin_result(out, e);
    return out;
}

ZetaResult parity_zeta(const ModelParams& params, Parity sign, cplx s, double tau, ZetaRoute route,
                       const EigenZetaOptions& eig, const MellinSettings& mel) {
    params.validate();
    if (params.eps != 0.0) throw std::invalid_argument("parity_zeta: eps must be 0");
    check_s(s, 1.0, "parity_zeta");
    const std::string tag = sign == Parity::plus ? "+" : "-";
    if (route == ZetaRoute::eigen) {
        if (eig.j_cut < 4) throw std::invalid_argument("parity_zeta: j_cut must be >= 4");
        const auto sp = parity_spectrum(params, sign, eig.j_cut, eig.tol);
        return zeta_from_levels(sp, s, tau, 2.0, "parity_eigen_sum" + tag);
    }
    const double a = tau - params.g * params.g;
    const double ad = std::abs(params.delta);
    if (!(a > ad)) throw std::domain_error("parity_zeta: need tau - g^2 > |Delta|");
    ZetaResult out;
    out.method = "parity_mellin" + tag;
    out.value = parity_closed_part(a, params.delta, sign, s);
    if (params.delta == 0.0) return out;
    const auto e = mellin_series(s, params.delta, a - ad, parity_channels(params, sign, a, s), mel);
    fill_mellin_result(out, e);
    return out;
}

ZetaResult jc_zeta(double g, double delta, cplx s, double tau, std::size_t n_cut) {
    check_s(s, 1.0, "jc_zeta");
    if (!(g >= 0.0)) throw std::invalid_argument("jc_zeta: g must be >= 0");
    if (n_cut < 10) throw std::invalid_argument("jc_zeta: n_cut must be >= 10");
    auto root = [&](double x) { return std::sqrt(delta * delta + g * g * (x + 1.0)); };
    auto base = [&](double x, double pm) { return x + 0.5 + pm * root(x) + tau; };
    for (std::size_t n = 0; n <= n_cut; ++n)
        if (!(base(static_cast<double>(n), -1.0) > 0.0))
            throw std::domain_error("jc_zeta: nonpositive base at n = " + std::to_string(n) + "; increase tau");
    const double M = static_cast<double>(n_cut + 1);
    if (g > 0.0 && !(2.0 * root(M) > g * g))
        throw std::domain_error("jc_zeta: n_cut too small for the bases to be increasing");

    ZetaResult out;
    out.method = "jc_direct_sum";
    for (std::size_t n = 0; n <= n_cut; ++n)
        for (double pm : {1.0, -1.0}) out.value += pow_real(base(static_cast<double>(n), pm), s);

    // Euler-Maclaurin tail from M: int_M^inf f + f(M)/2 - f'(M)/12.
    const auto& gl = gauss_legendre01(20);
    double bracket = 0.0;
    for (double pm : {1.0, -1.0}) {
        auto f = [&](double x) { return pow_real(base(x, pm), s); };
        cplx integral = 0.0;
        double lo = M;
        double width = M;
        for (int panel = 0; panel < 200; ++panel) {
            cplx part = 0.0;
            for (std::size_t k = 0; k < gl.size(); ++k) part += gl.weights[k] * width * f(lo + width * gl.nodes[k]);
            integral += part;
            lo += width;
            width *= 2.0;
            if (std::abs(part) < 1e-17 * std::abs(integral)) break;
        }
        const double b = base(M, pm);
        const double db = g == 0.0 ? 1.0 : 1.0 + pm * g * g / (2.0 * root(M));
        const cplx fprime = -s * pow_real(b, s + 1.0) * db;
        out.value += integral + 0.5 * f(M) - fprime / 12.0;
        bracket += std::abs(s * (s + 1.0) * (s + 2.0)) * std::pow(b, -s.real() - 3.0) / 720.0 * 2.0;
    }
    out.err_bracket = bracket + 1e-15 * std::abs(out.value);
    out.metadata["n_cut"] = static_cast<double>(n_cut);
    return out;
}

cplx g_inf_target(const ModelParams& params, cplx s) {
    const double N = default_N(params);
    return hurwitz_zeta(s, N + params.eps) + hurwitz_zeta(s, N - params.eps);
}

cplx g0_target(const ModelParams& params, cplx s) {
    const double N = default_N(params);
    const double r = std::hypot(params.delta, params.eps);
    return hurwitz_zeta(s, N + r) + hurwitz_zeta(s, N - r);
}

cplx parity_g0_target(double delta, Parity sign, cplx s) {
    const double N = default_N(ModelParams{0.0, delta, 0.0});
    return parity_closed_part(N, delta, sign, s);
}

cplx parity_g0_target_literal(double delta, Parity sign, cplx s) {
    const double N = default_N(ModelParams{0.0, delta, 0.0});
    const double c = sign == Parity::plus ? -1.0 : 1.0;
    return 0.5 * (hurwitz_zeta(s, N + delta) + hurwitz_zeta(s, N - delta) +
                  c * (dirichlet_L_mod2(s, N + delta) - dirichlet_L_mod2(s, N - delta)));
}

cplx parity_g_inf_target(double delta, cplx s) {
    const double N = default_N(ModelParams{0.0, delta, 0.0});
    return hurwitz_zeta(s, N);
}

LimitReport zeta_limit_g_inf(double delta, double eps, cplx s, const std::vector<double>& g_grid, double tolerance,
                             const EigenZetaOptions& eig) {
    check_grid(g_grid, "zeta_limit_g_inf");
    LimitReport rep;
    rep.scenario = "ginf";
    rep.parameter = "g";
    rep.grid = g_grid;
    rep.tolerance = tolerance;
    rep.target = g_inf_target(ModelParams{0.0, delta, eps}, s);
    for (double g : g_grid) {
        const ModelParams p{g, delta, eps};
        const auto z = spectral_zeta_eigen(p, s, default_tau(p), eig);
        rep.values.push_back(z.value);
        rep.brackets.push_back(z.err_bracket);
    }
    finish_report(rep);
    return rep;
}

LimitReport zeta_limit_g0(double delta, double eps, cplx s, const std::vector<double>& g_grid, double tolerance,
                          ZetaRoute route, const MellinSettings& mel, const EigenZetaOptions& eig) {
    check_grid(g_grid, "zeta_limit_g0");
    LimitReport rep;
    rep.scenario = "g0";
    rep.parameter = "g";
    rep.grid = g_grid;
    rep.tolerance = tolerance;
    rep.target = g0_target(ModelParams{0.0, delta, eps}, s);
    for (double g : g_grid) {
        const ModelParams p{g, delta, eps};
        const auto z = route == ZetaRoute::mellin ? spectral_zeta_mellin(p, s, default_tau(p), mel)
                                                  : spectral_zeta_eigen(p, s, default_tau(p), eig);
        rep.values.push_back(z.value);
        rep.brackets.push_back(z.err_bracket);
    }
    finish_report(rep);
    return rep;
}

LimitReport zeta_limit_delta0(double g, double eps, cplx s, const std::vector<double>& delta_grid, double tolerance,
                              ZetaRoute route, const MellinSettings& mel, const EigenZetaOptions& eig) {
    check_grid(delta_grid, "zeta_limit_delta0");
    LimitReport rep;
    rep.scenario = "delta0";
    rep.parameter = "delta";
    rep.grid = delta_grid;
    rep.tolerance = tolerance;
    const ModelParams limit{g, 0.0, eps};
    rep.target = g_inf_target(limit, s);
    const int N0 = default_N(limit);
    for (double d : delta_grid) {
        const ModelParams p{g, d, eps};
        if (default_N(p) != N0) rep.notes.push_back("N changes along the Delta grid");
        const auto z = route == ZetaRoute::mellin ? spectral_zeta_mellin(p, s, default_tau(p), mel)
                                                  : spectral_zeta_eigen(p, s, default_tau(p), eig);
        rep.values.push_back(z.value);
        rep.brackets.push_back(z.err_bracket);
    }
    finish_report(rep);
    return rep;
}

LimitReport parity_limit_g0(double delta, Parity sign, cplx s, const std::vector<double>& g_grid, double tolerance,
                            const EigenZetaOptions& eig) {
    check_grid(g_grid, "parity_limit_g0");
    LimitReport rep;
    rep.scenario = sign == Parity::plus ? "parity_g0_plus" : "parity_g0_minus";
    rep.parameter = "g";
    rep.grid = g_grid;
    rep.tolerance = tolerance;
    rep.target = parity_g0_target(delta, sign, s);
    for (double g : g_grid) {
        const ModelParams p{g, delta, 0.0};
        const auto z = parity_zeta(p, sign, s, default_tau(p), ZetaRoute::eigen, eig);
        rep.values.push_back(z.value);
        rep.brackets.push_back(z.err_bracket);
    }
    finish_report(rep);
    const cplx literal = parity_g0_target_literal(delta, sign, s);
    rep.extras["literal_sign_final_distance"] = std::abs(rep.values.back() - literal);
    return rep;
}

LimitReport parity_limit_g_inf(double delta, Parity sign, cplx s, const std::vector<double>& g_grid,
                               double tolerance, const EigenZetaOptions& eig) {
    check_grid(g_grid, "parity_limit_g_inf");
    LimitReport rep;
    rep.scenario = sign == Parity::plus ? "parity_ginf_plus" : "parity_ginf_minus";
    rep.parameter = "g";
    rep.grid = g_grid;
    rep.tolerance = tolerance;
    rep.target = parity_g_inf_target(delta, s);
    for (double g : g_grid) {
        const ModelParams p{g, delta, 0.0};
        const auto z = parity_zeta(p, sign, s, default_tau(p), ZetaRoute::eigen, eig);
        rep.values.push_back(z.value);
        rep.brackets.push_back(z.err_bracket);
    }
    finish_report(rep);
    return rep;
}

LimitReport jc_limit(const std::string& which, double other, cplx s, double tau, const std::vector<double>& grid,
                     double tolerance) {
    check_grid(grid, "jc_limit");
    LimitReport rep;
    rep.grid = grid;
    rep.tolerance = tolerance;
    if (which == "g0") {
        rep.scenario = "jc_g0";
        rep.parameter = "g";
        const double d = std::abs(other);
        rep.target = hurwitz_zeta(s, 0.5 + d + tau) + hurwitz_zeta(s, 0.5 - d + tau);
        for (double g : grid) {
            const auto z = jc_zeta(g, other, s, tau);
            rep.values.push_back(z.value);
            rep.brackets.push_back(z.err_bracket);
        }
    } else if (which == "delta0") {
        rep.scenario = "jc_delta0";
        rep.parameter = "delta";
        rep.target = jc_zeta(other, 0.0, s, tau).value;
        for (double d : grid) {
            const auto z = jc_zeta(other, d, s, tau);
            rep.values.push_back(z.value);
            rep.brackets.push_back(z.err_bracket);
        }
    } else {
        throw std::invalid_argument("jc_limit: expected g0 or delta0");
    }
    finish_report(rep);
    return rep;
}

ModifiedMellinResult modified_mellin_difference(const ModelParams& params, cplx s, const MellinSettings& mel,
                                                const EigenZetaOptions& eig) {
    params.validate();
    if (params.eps != 0.0) throw std::invalid_argument("modified_mellin_difference: eps must be 0");
    check_s(s, 2.0, "modified_mellin_difference");
    const double g = params.g;
    const double delta = params.delta;
    const double ad = std::abs(delta);
    const int N = default_N(params);
    const double a = N;
    ModifiedMellinResult out;
    out.limit = 2.0 * s * delta * dirichlet_L_mod2(s + 1.0, a);
    out.literal_limit = 2.0 * delta * dirichlet_L_mod2(s - 1.0, 1.0);
    if (delta == 0.0) return out;

    // Series: Xi e^{2 g^2 tanh(t/2)} = 1 - (1 - that); the unit part gives L(s,a-D) - L(s,a+D).
    out.series = dirichlet_L_mod2(s, a - delta) - dirichlet_L_mod2(s, a + delta);
    Channel ch;
    ch.weight = [a](double t) { return -2.0 * fermi(a, t); };
    ch.first_power = 3;
    ch.integrand = [g](double t, std::span<const double> mu) {
        return one_minus_exp(kernel::xi_exponent(g, t, mu) + 2.0 * g * g * std::tanh(0.5 * t));
    };
    ch.envelope = [](double) { return 1.0; };
    ch.proxy = [a, ad](double t) { return -2.0 * fermi(a, t) * (std::sinh(ad * t) - ad * t); };
    ch.proxy_exact = -(dirichlet_L_mod2(s, a - ad) - dirichlet_L_mod2(s, a + ad) -
                       2.0 * s * ad * dirichlet_L_mod2(s + 1.0, a));
    ch.stream = 0x31;
    const auto e = mellin_series(s, delta, a - ad, {ch}, mel);
    out.series += e.value;
    out.series_bracket = 3.0 * e.stat_err + e.quad_err + e.cut_err + e.power_tail_err;

    // Eigen route: parity spectra, numerically integrated.
    const double tau = g * g + a;
    const auto plus = parity_spectrum(params, Parity::plus, eig.j_cut, eig.tol);
    const auto minus = parity_spectrum(params, Parity::minus, eig.j_cut, eig.tol);
    const double low = std::min(plus.eigenvalues.front(), minus.eigenvalues.front()) + tau;
    if (!(low > 0.0)) throw std::domain_error("modified_mellin_difference: shifted spectrum not positive");
    PanelLayout layout;
    layout.t_min = mel.t_min;
    layout.t_split = mel.t_split;
    layout.t_max = std::max(choose_t_max(low, s.real(), mel.tail_tol * std::exp(-2.0 * g * g)), 2.0 * mel.t_split);
    layout.per_decade = mel.per_decade;
    layout.panel_width = std::clamp(2.5 / low, 1.0, 10.0);
    layout.order = mel.order;
    const auto rule = composite_rule(layout);
    const double round = 1e-15 * (plus.eigenvalues.back() + tau);
    auto block_sum = [&](const std::vector<double>& lv, double t, double lift) {
        double sum = 0.0;
        for (double e2 : lv) sum += std::exp(lift - t * (e2 + tau));
        const double q2 = std::exp(-2.0 * t);
        const double ladder = q2 / -std::expm1(-2.0 * t);
        sum += (std::exp(lift - t * (lv[lv.size() - 1] + tau)) + std::exp(lift - t * (lv[lv.size() - 2] + tau))) *
               ladder;
        return sum;
    };
    cplx acc = 0.0;
    double noise = 0.0;
    for (std::size_t i = 0; i < rule.size(); ++i) {
        const double t = rule.nodes[i];
        const double lift = 2.0 * g * g * std::tanh(0.5 * t);
        const double diff = block_sum(minus.eigenvalues, t, lift) - block_sum(plus.eigenvalues, t, lift);
        const cplx w = rule.weights[i] * std::exp((s - 1.0) * std::log(t));
        acc += w * diff;
        noise += std::abs(w) * t * round * block_sum(plus.eigenvalues, t, lift);
    }
    const cplx inv_gamma = 1.0 / gamma(s);
    out.eigen = acc * inv_gamma;
    const double level_err = std::max({plus.max_change, minus.max_change, eig.tol});
    out.eigen_bracket = noise * std::abs(inv_gamma) + std::abs(out.eigen) * level_err * 10.0 + 1e-10;
    return out;
}

MultizetaCheck multizeta_expansion_check(const ModelParams& params, cplx s, int lambda_max, const MellinSettings& mel) {
    params.validate();
    if (params.g != 0.0) throw std::invalid_argument("multizeta_expansion_check: g must be 0");
    if (params.eps == 0.0) throw std::invalid_argument("multizeta_expansion_check: eps must be nonzero");
    if (lambda_max < 1 || lambda_max > 2) throw std::invalid_argument("multizeta_expansion_check: lambda_max is 1 or 2");
    check_s(s, 1.0, "multizeta_expansion_check");
    const double eps = params.eps;
    const double tau = default_tau(params);
    const double a = tau;
    MultizetaCheck out;
    const auto z = spectral_zeta_mellin(params, s, tau, mel);
    out.zeta = z.value;
    out.bracket = z.err_bracket;

    // Mellin of 2 e^{-at}/(1-e^{-t}) t^m e^{+-eps t}, normalized by Gamma(s).
    auto term = [&](int m, bool odd) {
        cplx poch = 1.0;
        for (int j = 0; j < m; ++j) poch *= s + static_cast<double>(j);
        const cplx minus = hurwitz_zeta(s + static_cast<double>(m), a - eps);
        const cplx plus = hurwitz_zeta(s + static_cast<double>(m), a + eps);
        return poch * (odd ? minus - plus : minus + plus);
    };
    out.expansion = hurwitz_zeta(s, a - eps) + hurwitz_zeta(s, a + eps);
    for (int lambda = 1; lambda <= lambda_max; ++lambda) {
        const auto& shell = shell_form(lambda);
        const double d2l = std::pow(params.delta, 2 * lambda);
        for (std::size_t k = 0; k < shell.phi1.size(); ++k) {
            if (shell.phi1[k] == 0) continue;
            const int m = 2 * lambda - static_cast<int>(k);
            if (m < 0) throw std::logic_error("multizeta_expansion_check: negative power");
            out.expansion += d2l * static_cast<double>(shell.phi1[k]) * std::pow(eps, -static_cast<double>(k)) * term(m, true);
        }
        for (std::size_t k = 0; k < shell.phi2.size(); ++k) {
            if (shell.phi2[k] == 0) continue;
            const int m = 2 * lambda - static_cast<int>(k);
            if (m < 0) throw std::logic_error("multizeta_expansion_check: negative power");
            out.expansion += d2l * static_cast<double>(shell.phi2[k]) * std::pow(eps, -static_cast<double>(k)) * term(m, false);
        }
    }
    out.residual = std::abs(out.zeta - out.expansion);
    return out;
}

}  // namespace rabi
