// rabi: command-line driver: spectra, spectral curves, partition series, zeta routes and limit laws

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rabi/fock.hpp"
#include "rabi/heat_kernel.hpp"
#include "rabi/io.hpp"
#include "rabi/linalg.hpp"
#include "rabi/partition.hpp"
#include "rabi/rabi_bernoulli.hpp"
#include "rabi/specfun.hpp"
#include "rabi/symbolic.hpp"
#include "rabi/zeta.hpp"

namespace fs = std::filesystem;
using namespace rabi;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitAssert = 2;
constexpr int kExitConvergence = 3;

struct AssertionFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Common {
    std::string out_dir{"out"};
    bool quiet{false};
};

struct ParamFlags {
    double g{0.0};
    double delta{0.0};
    double eps{0.0};
    ModelParams params() const {
        ModelParams p{g, delta, eps};
        p.validate();
        return p;
    }
};

void add_params(CLI::App* cmd, ParamFlags& p) {
    cmd->add_option("--g", p.g, "coupling g >= 0")->capture_default_str();
    cmd->add_option("--delta", p.delta, "half level splitting Delta")->capture_default_str();
    cmd->add_option("--eps", p.eps, "static bias eps")->capture_default_str();
}

std::optional<Parity> parse_parity(const std::string& s) {
    if (s == "plus") return Parity::plus;
    if (s == "minus") return Parity::minus;
    return std::nullopt;
}

const char* parity_name(Parity p) { return p == Parity::plus ? "plus" : "minus"; }

class Output {
public:
    Output(const Common& common, std::string command) : common_(common), command_(std::move(command)) {}

    void write(const std::string& name, const std::string& content) const {
        const fs::path path = fs::path(common_.out_dir) / name;
        write_atomic(path, content);
        if (!common_.quiet) std::cerr << "wrote " << path.string() << "\n";
    }

    void json(const std::string& name, const Json& doc) const {
        Json full = doc;
        full["command"] = command_;
        const std::string text = dump_json(full);
        write(name, text);
        if (!common_.quiet) std::cout << text;
    }

private:
    const Common& common_;
    std::string command_;
};

// spectrum ----------------------------------------------------------------------------------------

struct SpectrumFlags {
    ParamFlags p;
    std::size_t jmax{10};
    double tol{1e-9};
    std::string trunc{"1x"};
    std::string parity{"none"};
};

std::size_t trunc_factor(const std::string& text) {
    std::string digits = text;
    if (!digits.empty() && (digits.back() == 'x' || digits.back() == 'X')) digits.pop_back();
    std::size_t pos = 0;
    const unsigned long f = std::stoul(digits, &pos);
    if (pos != digits.size() || f == 0 || f > 64) throw std::invalid_argument("--trunc must look like 1x, 2x, 4x");
    return f;
}

int run_spectrum(const Common& common, const SpectrumFlags& f) {
    const ModelParams params = f.p.params();
    SpectrumOptions opts;
    const std::size_t factor = trunc_factor(f.trunc);
    const std::size_t base = std::max<std::size_t>(64, 4 * f.jmax + static_cast<std::size_t>(std::ceil(16 * params.g * params.g)));
    opts.start_dim = base * factor;
    const auto sign = parse_parity(f.parity);
    if (!sign && f.parity != "none") throw std::invalid_argument("--parity must be none, plus or minus");
    if (sign && params.eps != 0.0) throw std::invalid_argument("parity blocks need eps = 0");
    const Spectrum sp = sign ? parity_spectrum(params, *sign, f.jmax, f.tol, opts) : spectrum(params, f.jmax, f.tol, opts);

    std::vector<std::vector<std::string>> rows;
    for (std::size_t j = 0; j < sp.eigenvalues.size(); ++j)
        rows.push_back({std::to_string(j), csv_number(sp.eigenvalues[j]), csv_number(sp.eigenvalues[j] + params.g * params.g)});
    const Output out(common, "spectrum");
    out.write("spectrum.csv", to_csv({"j", "E", "E+g^2"}, rows));
    Json doc{{"params", to_json(params)}, {"spectrum", to_json(sp)}, {"parity", f.parity}, {"trunc_factor", factor}};
    out.json("spectrum.json", doc);
    return kExitOk;
}

// curves ------------------------------------------------------------------------------------------

struct CurvesFlags {
    ParamFlags p;
    double g_min{0.0};
    double g_max{3.0};
    std::size_t steps{61};
    std::size_t jmax{8};
    double tol{1e-8};
    bool svg{false};
};

int run_curves(const Common& common, const CurvesFlags& f) {
    ModelParams params = f.p.params();
    if (f.steps == 0) throw std::invalid_argument("--steps must be positive");
    if (f.g_min < 0.0 || f.g_max < f.g_min) throw std::invalid_argument("need 0 <= g-min <= g-max");
    std::vector<double> grid;
    for (std::size_t i = 0; i < f.steps; ++i)
        grid.push_back(f.steps == 1 ? f.g_min : f.g_min + (f.g_max - f.g_min) * i / (f.steps - 1));
    const CurveTable ct = curve_table(params, grid, f.jmax, f.tol);
    const Output out(common, "curves");
    out.write("curves.csv", curves_csv(ct));
    if (f.svg) out.write("curves.svg", render_svg(curves_plot(ct)));
    out.json("curves.json", Json{{"params", to_json(params)}, {"curves", to_json(ct)}});
    return kExitOk;
}

// partition ---------------------------------------------------------------------------------------

struct PartitionFlags {
    ParamFlags p;
    std::vector<double> beta{0.5, 1.0, 2.0, 5.0};
    int lambda_max{8};
    std::size_t points{200000};
    int replicates{8};
    std::uint64_t seed{20230125};
    std::string sampler{"qmc"};
    std::string parity{"none"};
    bool no_oracle{false};
};

int run_partition(const Common& common, const PartitionFlags& f) {
    const ModelParams params = f.p.params();
    SeriesConfig cfg;
    cfg.lambda_max = f.lambda_max;
    cfg.qmc.points_per_lambda = f.points;
    cfg.qmc.replicates = f.replicates;
    cfg.qmc.seed = f.seed;
    if (f.sampler == "quad") cfg.sampler = Sampler::nested_quadrature;
    else if (f.sampler != "qmc") throw std::invalid_argument("--sampler must be qmc or quad");
    cfg.validate();
    const auto sign = parse_parity(f.parity);
    if (!sign && f.parity != "none") throw std::invalid_argument("--parity must be none, plus or minus");
    if (sign && params.eps != 0.0) throw std::invalid_argument("parity blocks need eps = 0");

    Json results = Json::array();
    std::vector<std::vector<std::string>> rows;
    for (double beta : f.beta) {
        const SeriesResult r = sign ? partition_parity(params, *sign, beta, cfg) : partition_full(params, beta, cfg);
        Json entry{{"beta", beta}, {"series", to_json(r)}};
        std::vector<std::string> row{csv_number(beta), csv_number(r.value), csv_number(r.stat_err), csv_number(r.trunc_err)};
        if (!f.no_oracle) {
            // Enough levels that the neglected Boltzmann weights sit far below the series error.
            const int ladders = sign ? 1 : 2;
            const std::size_t count = static_cast<std::size_t>(ladders * std::ceil(40.0 / beta + 2.0 * std::abs(params.eps) + 4.0));
            const Spectrum sp = sign ? parity_spectrum(params, *sign, count, 1e-10) : spectrum(params, count, 1e-10);
            const EigenPartition ep = partition_from_spectrum(sp.eigenvalues, beta, ladders);
            const double rel = std::abs(r.value - ep.value) / std::abs(ep.value);
            entry["eigen"] = Json{{"value", ep.value}, {"tail_bound", ep.tail}, {"levels", count}};
            entry["rel_diff"] = rel;
            row.push_back(csv_number(ep.value));
            row.push_back(csv_number(rel));
        } else {
            row.push_back("");
            row.push_back("");
        }
        results.push_back(entry);
        rows.push_back(std::move(row));
    }
    const Output out(common, "partition");
    out.write("partition.csv", to_csv({"beta", "series", "stat_err", "trunc_err", "eigen", "rel_diff"}, rows));
    out.json("partition.json", Json{{"params", to_json(params)}, {"parity", f.parity}, {"results", results}});
    return kExitOk;
}

// zeta --------------------------------------------------------------------------------------------

struct MellinFlags {
    std::size_t points{4096};
    int replicates{8};
    std::uint64_t seed{20230125};
    MellinSettings settings() const {
        MellinSettings m;
        m.points = points;
        m.replicates = replicates;
        m.seed = seed;
        return m;
    }
};

void add_mellin(CLI::App* cmd, MellinFlags& m) {
    cmd->add_option("--points", m.points, "simplex points per power (Mellin route)")->capture_default_str();
    cmd->add_option("--replicates", m.replicates, "randomized replicates (Mellin route)")->capture_default_str();
    cmd->add_option("--seed", m.seed, "sampling seed")->capture_default_str();
}

struct ZetaFlags {
    ParamFlags p;
    double s{2.0};
    double s_im{0.0};
    std::string tau_mode{"auto"};
    double tau{0.0};
    std::string route{"both"};
    std::string parity{"none"};
    std::size_t jcut{200};
    MellinFlags mellin;
};

int run_zeta(const Common& common, const ZetaFlags& f) {
    const ModelParams params = f.p.params();
    const cplx s(f.s, f.s_im);
    double tau = 0.0;
    if (f.tau_mode == "auto") tau = default_tau(params);
    else if (f.tau_mode == "value") tau = f.tau;
    else throw std::invalid_argument("--tau-mode must be auto or value");
    const auto sign = parse_parity(f.parity);
    if (!sign && f.parity != "none") throw std::invalid_argument("--parity must be none, plus or minus");
    const bool eigen = f.route == "eigen" || f.route == "both";
    const bool mellin = f.route == "mellin" || f.route == "both";
    if (!eigen && !mellin) throw std::invalid_argument("--route must be eigen, mellin or both");

    EigenZetaOptions eig;
    eig.j_cut = f.jcut;
    const MellinSettings mel = f.mellin.settings();
    Json doc{{"params", to_json(params)}, {"s", to_json(s)}, {"tau", tau}, {"parity", f.parity}, {"route", f.route}};
    std::optional<ZetaResult> re, rm;
    if (eigen)
        re = sign ? parity_zeta(params, *sign, s, tau, ZetaRoute::eigen, eig, mel) : spectral_zeta_eigen(params, s, tau, eig);
    if (mellin)
        rm = sign ? parity_zeta(params, *sign, s, tau, ZetaRoute::mellin, eig, mel) : spectral_zeta_mellin(params, s, tau, mel);
    if (re) doc["eigen"] = to_json(*re);
    if (rm) doc["mellin"] = to_json(*rm);
    bool agree = true;
    if (re && rm) {
        const double diff = std::abs(re->value - rm->value);
        agree = diff <= re->err_bracket + rm->err_bracket;
        doc["difference"] = diff;
        doc["agreement"] = agree;
    }
    Output(common, "zeta").json("zeta.json", doc);
    if (!agree) throw AssertionFailure("eigen and Mellin routes disagree beyond their brackets");
    return kExitOk;
}

// limits ------------------------------------------------------------------------------------------

struct LimitsFlags {
    std::string scenario;
    ParamFlags p;
    double s{2.0};
    double s_im{0.0};
    std::vector<double> grid;
    double tolerance{0.0};
    std::string sign{"plus"};
    std::string route{"default"};
    std::string jc_which{"g0"};
    double tau{1.5};
    MellinFlags mellin;
    bool literal{false};
};

std::vector<double> default_grid(const std::string& scenario) {
    if (scenario == "ginf" || scenario == "parity_ginf") return {1, 2, 4, 8};
    if (scenario == "modified") return {0.4, 0.2, 0.1};
    return {0.1, 0.03, 0.01};
}

LimitReport modified_report(const ModelParams& base, cplx s, const std::vector<double>& grid, double tolerance,
                            const MellinSettings& mel, Json& detail) {
    LimitReport rep;
    rep.scenario = "modified";
    rep.parameter = "g";
    rep.grid = grid;
    rep.tolerance = tolerance;
    detail = Json::array();
    for (double g : grid) {
        ModelParams p = base;
        p.g = g;
        const ModifiedMellinResult r = modified_mellin_difference(p, s, mel);
        rep.target = r.limit;
        rep.values.push_back(r.series);
        rep.brackets.push_back(r.series_bracket);
        rep.distances.push_back(std::abs(r.series - r.limit));
        rep.extras["literal_limit_re"] = r.literal_limit.real();
        detail.push_back(to_json(r));
    }
    rep.decreasing = true;
    for (std::size_t i = 1; i < rep.distances.size(); ++i)
        if (!(rep.distances[i] < rep.distances[i - 1])) rep.decreasing = false;
    // The lambda = 0 term alone already equals the limit, so the spread is bounded by the bracket.
    const double last = rep.distances.empty() ? 0.0 : rep.distances.back();
    rep.pass = tolerance > 0.0 ? last <= tolerance : true;
    rep.notes.push_back("g -> 0 of the modified Mellin difference; distances shrink like g^2");
    return rep;
}

int run_limits(const Common& common, const LimitsFlags& f) {
    const ModelParams params = f.p.params();
    const cplx s(f.s, f.s_im);
    const std::vector<double> grid = f.grid.empty() ? default_grid(f.scenario) : f.grid;
    const MellinSettings mel = f.mellin.settings();
    const auto sign = parse_parity(f.sign);
    if (!sign) throw std::invalid_argument("--sign must be plus or minus");
    auto route_or = [&](ZetaRoute dflt) {
        if (f.route == "default") return dflt;
        if (f.route == "eigen") return ZetaRoute::eigen;
        if (f.route == "mellin") return ZetaRoute::mellin;
        throw std::invalid_argument("--route must be eigen or mellin");
    };

    LimitReport rep;
    Json detail;
    const std::string& sc = f.scenario;
    if (sc == "g0") rep = zeta_limit_g0(params.delta, params.eps, s, grid, f.tolerance, route_or(ZetaRoute::mellin), mel);
    else if (sc == "ginf") rep = zeta_limit_g_inf(params.delta, params.eps, s, grid, f.tolerance);
    else if (sc == "delta0")
        rep = zeta_limit_delta0(params.g, params.eps, s, grid, f.tolerance, route_or(ZetaRoute::eigen), mel);
    else if (sc == "parity_g0") rep = parity_limit_g0(params.delta, *sign, s, grid, f.tolerance);
    else if (sc == "parity_ginf") rep = parity_limit_g_inf(params.delta, *sign, s, grid, f.tolerance);
    else if (sc == "jc") {
        const double other = f.jc_which == "g0" ? params.delta : params.g;
        rep = jc_limit(f.jc_which, other, s, f.tau, grid, f.tolerance);
    } else if (sc == "modified") rep = modified_report(params, s, grid, f.tolerance, mel, detail);
    else throw std::invalid_argument("unknown scenario " + sc);

    Json doc{{"params", to_json(params)}, {"s", to_json(s)}, {"report", to_json(rep)}};
    if (sc == "parity_g0" || sc == "parity_ginf") doc["sign"] = parity_name(*sign);
    if (sc == "jc") doc["jc_which"] = f.jc_which;
    if (!detail.is_null()) doc["detail"] = detail;
    if (sc == "parity_g0" && f.literal) doc["literal_target"] = to_json(parity_g0_target_literal(params.delta, *sign, s));

    const Output out(common, "limits");
    std::vector<std::vector<std::string>> rows;
    for (std::size_t i = 0; i < rep.grid.size(); ++i)
        rows.push_back({csv_number(rep.grid[i]), csv_number(rep.values[i].real()), csv_number(rep.values[i].imag()),
                        csv_number(rep.brackets[i]), csv_number(rep.distances[i])});
    out.write("limits_" + sc + ".csv", to_csv({rep.parameter, "re", "im", "bracket", "distance"}, rows));
    out.json("limits_" + sc + ".json", doc);
    if (!rep.pass) throw AssertionFailure("limit scenario " + sc + " did not meet its trend/tolerance");
    return kExitOk;
}

// rb ----------------------------------------------------------------------------------------------

struct RbFlags {
    ParamFlags p;
    int kmax{3};
};

int run_rb(const Common& common, const RbFlags& f) {
    ModelParams params = f.p.params();
    if (params.eps != 0.0) throw std::invalid_argument("rb needs eps = 0");
    std::vector<std::string> warnings;
    const std::vector<double> numeric = rb_numeric(params, f.kmax, &warnings);
    Json table = Json::array();
    for (int k = 1; k <= f.kmax; ++k) {
        Json row{{"k", k}, {"numeric", numeric[k]}, {"special_value", -2.0 / k * numeric[k]}};
        if (k <= kSymbolicMaxOrder) {
            const GDPoly poly = rb_symbolic(k);
            row["symbolic"] = gd_format(poly);
            row["symbolic_value"] = gd_eval(poly, params.g, params.delta);
        }
        table.push_back(row);
    }
    Output(common, "rb").json("rb.json", Json{{"params", to_json(params)}, {"rb", table}, {"warnings", warnings}});
    return kExitOk;
}

// heatkernel --------------------------------------------------------------------------------------

struct HeatFlags {
    ParamFlags p;
    double t{1.2};
    int order{64};
    double tol{1e-8};
};

int run_heatkernel(const Common& common, const HeatFlags& f) {
    const ModelParams params = f.p.params();
    const TraceCheck tc = heat_kernel_trace_check(params, f.t, f.order);
    const bool pass = tc.rel_err <= f.tol;
    Output(common, "heatkernel")
        .json("heatkernel.json", Json{{"params", to_json(params)}, {"t", f.t}, {"check", to_json(tc)}, {"pass", pass}});
    if (!pass) throw AssertionFailure("trace check relative error above tolerance");
    return kExitOk;
}

// jzeta -------------------------------------------------------------------------------------------

struct JzetaFlags {
    double g{0.0};
    double delta{0.0};
    double s{2.0};
    double s_im{0.0};
    double tau{1.5};
    std::size_t ncut{2000};
};

int run_jzeta(const Common& common, const JzetaFlags& f) {
    const cplx s(f.s, f.s_im);
    const ZetaResult r = jc_zeta(f.g, f.delta, s, f.tau, f.ncut);
    Output(common, "jzeta")
        .json("jzeta.json", Json{{"g", f.g}, {"delta", f.delta}, {"s", to_json(s)}, {"tau", f.tau}, {"zeta", to_json(r)}});
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Spectral zeta laboratory for the asymmetric quantum Rabi model"};
    app.require_subcommand(1);
    app.allow_config_extras(CLI::config_extras_mode::error);
    app.set_config("--config", "", "INI file; [section] names match subcommands");
    app.option_defaults()->always_capture_default();

    Common common;
    app.add_option("--out", common.out_dir, "output directory");
    app.add_flag("--quiet", common.quiet, "do not echo results to stdout");
    app.fallthrough();

    SpectrumFlags spf;
    auto* spectrum_cmd = app.add_subcommand("spectrum", "lowest eigenvalues by truncated diagonalization");
    add_params(spectrum_cmd, spf.p);
    spectrum_cmd->add_option("--jmax", spf.jmax, "number of levels");
    spectrum_cmd->add_option("--tol", spf.tol, "truncation-doubling tolerance");
    spectrum_cmd->add_option("--trunc", spf.trunc, "starting cutoff multiplier, e.g. 2x");
    spectrum_cmd->add_option("--parity", spf.parity, "none, plus or minus");

    CurvesFlags cf;
    auto* curves_cmd = app.add_subcommand("curves", "spectral curves E_j + g^2 over a g grid");
    add_params(curves_cmd, cf.p);
    curves_cmd->add_option("--g-min", cf.g_min);
    curves_cmd->add_option("--g-max", cf.g_max);
    curves_cmd->add_option("--steps", cf.steps);
    curves_cmd->add_option("--jmax", cf.jmax);
    curves_cmd->add_option("--tol", cf.tol);
    curves_cmd->add_flag("--svg", cf.svg, "also write curves.svg");

    PartitionFlags pf;
    auto* partition_cmd = app.add_subcommand("partition", "partition-function series against the eigenvalue sum");
    add_params(partition_cmd, pf.p);
    partition_cmd->add_option("--beta", pf.beta, "comma-separated beta grid")->delimiter(',');
    partition_cmd->add_option("--lambda-max", pf.lambda_max);
    partition_cmd->add_option("--points", pf.points, "QMC points per lambda");
    partition_cmd->add_option("--replicates", pf.replicates);
    partition_cmd->add_option("--seed", pf.seed);
    partition_cmd->add_option("--sampler", pf.sampler, "qmc or quad");
    partition_cmd->add_option("--parity", pf.parity, "none, plus or minus");
    partition_cmd->add_flag("--no-oracle", pf.no_oracle, "skip the diagonalization comparison");

    ZetaFlags zf;
    auto* zeta_cmd = app.add_subcommand("zeta", "Hurwitz-type spectral zeta by eigenvalues and/or Mellin series");
    add_params(zeta_cmd, zf.p);
    zeta_cmd->add_option("--s", zf.s, "Re s");
    zeta_cmd->add_option("--s-im", zf.s_im, "Im s");
    zeta_cmd->add_option("--tau-mode", zf.tau_mode, "auto (g^2 + N) or value");
    zeta_cmd->add_option("--tau", zf.tau, "tau when --tau-mode value");
    zeta_cmd->add_option("--route", zf.route, "eigen, mellin or both");
    zeta_cmd->add_option("--parity", zf.parity, "none, plus or minus");
    zeta_cmd->add_option("--jcut", zf.jcut, "levels summed exactly on the eigen route");
    add_mellin(zeta_cmd, zf.mellin);

    LimitsFlags lf;
    auto* limits_cmd = app.add_subcommand("limits", "limit laws of the spectral zeta function");
    limits_cmd->add_option("scenario", lf.scenario, "g0, ginf, delta0, parity_g0, parity_ginf, jc or modified")
        ->required()
        ->check(CLI::IsMember({"g0", "ginf", "delta0", "parity_g0", "parity_ginf", "jc", "modified"}));
    add_params(limits_cmd, lf.p);
    limits_cmd->add_option("--s", lf.s);
    limits_cmd->add_option("--s-im", lf.s_im);
    limits_cmd->add_option("--grid", lf.grid, "comma-separated sweep of the small or large parameter")->delimiter(',');
    limits_cmd->add_option("--tolerance", lf.tolerance, "required final distance (0: trend only)");
    limits_cmd->add_option("--sign", lf.sign, "parity block: plus or minus");
    limits_cmd->add_option("--route", lf.route, "default, eigen or mellin");
    limits_cmd->add_option("--jc-which", lf.jc_which, "jc sweep: g0 or delta0")->check(CLI::IsMember({"g0", "delta0"}));
    limits_cmd->add_option("--tau", lf.tau, "shift for the jc scenario");
    limits_cmd->add_flag("--literal", lf.literal, "parity_g0: also report the uncorrected target");
    add_mellin(limits_cmd, lf.mellin);

    RbFlags rf;
    auto* rb_cmd = app.add_subcommand("rb", "Rabi-Bernoulli polynomials and special values");
    add_params(rb_cmd, rf.p);
    rb_cmd->add_option("--kmax", rf.kmax)->check(CLI::Range(1, 9));

    HeatFlags hf;
    auto* heat_cmd = app.add_subcommand("heatkernel", "lambda = 0 heat-kernel trace check");
    add_params(heat_cmd, hf.p);
    heat_cmd->add_option("--t", hf.t);
    heat_cmd->add_option("--order", hf.order, "Gauss-Hermite nodes");
    heat_cmd->add_option("--tol", hf.tol);

    JzetaFlags jf;
    auto* jzeta_cmd = app.add_subcommand("jzeta", "Jaynes-Cummings spectral zeta");
    jzeta_cmd->add_option("--g", jf.g);
    jzeta_cmd->add_option("--delta", jf.delta);
    jzeta_cmd->add_option("--s", jf.s);
    jzeta_cmd->add_option("--s-im", jf.s_im);
    jzeta_cmd->add_option("--tau", jf.tau);
    jzeta_cmd->add_option("--ncut", jf.ncut);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        for (const CLI::App* sub : app.get_subcommands()) {
            std::string echo = "out=\"" + common.out_dir + "\"\nquiet=" + (common.quiet ? "true" : "false") + "\n";
            echo += "[" + sub->get_name() + "]\n" + sub->config_to_str(true, false);
            Output(common, "config").write("resolved_config.ini", echo);
        }
        if (*spectrum_cmd) return run_spectrum(common, spf);
        if (*curves_cmd) return run_curves(common, cf);
        if (*partition_cmd) return run_partition(common, pf);
        if (*zeta_cmd) return run_zeta(common, zf);
        if (*limits_cmd) return run_limits(common, lf);
        if (*rb_cmd) return run_rb(common, rf);
        if (*heat_cmd) return run_heatkernel(common, hf);
        if (*jzeta_cmd) return run_jzeta(common, jf);
    } catch (const ConvergenceError& e) {
        std::cerr << "convergence failure: " << e.what() << "\n";
        return kExitConvergence;
    } catch (const AssertionFailure& e) {
        std::cerr << "assertion failed: " << e.what() << "\n";
        return kExitAssert;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
