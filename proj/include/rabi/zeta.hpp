// zeta.hpp: Hurwitz-type spectral zeta functions of the AQRM: eigen-sum and Mellin routes, limit laws

#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "rabi/fock.hpp"
#include "rabi/model.hpp"
#include "rabi/simplex.hpp"
#include "rabi/specfun.hpp"

namespace rabi {

enum class ZetaRoute { eigen, mellin };

struct ZetaResult {
    cplx value{0.0};
    double err_bracket{0.0};  // tail + quadrature + series + sampling
    std::string method;
    std::map<std::string, double> metadata;  // truncation sizes and error components
    std::vector<std::string> warnings;
};

struct EigenZetaOptions {
    std::size_t j_cut{200};
    double tol{1e-10};
};

// Settings of the Mellin integral over the subtracted series remainder.
struct MellinSettings {
    double t_min{1e-4};
    double t_split{1.0};
    int per_decade{1};
    int order{8};
    double tail_tol{1e-14};  // t_max is chosen so the envelope integrand falls below this
    std::size_t points{4096};  // simplex points per power of (t Delta), all replicates together
    int replicates{8};
    std::uint64_t seed{20230125};
    int max_power{2 * SeriesConfig::kLambdaCap + 1};  // powers summed exactly by QMC
    std::size_t tail_samples{4096};  // per node: importance samples over the higher powers
};

// Sum_j (lambda_j + tau)^{-s} over the first j_cut levels plus a two-ladder tail estimate.
ZetaResult spectral_zeta_eigen(const ModelParams& params, cplx s, double tau, const EigenZetaOptions& opts = {});

// (1/Gamma(s)) int t^{s-1} Z(t) e^{-t tau} dt with the g = 0 part of the series done in closed form.
// Requires tau - g^2 > |Delta| + |eps|.
ZetaResult spectral_zeta_mellin(const ModelParams& params, cplx s, double tau, const MellinSettings& cfg = {});

// Parity blocks (eps = 0).
ZetaResult parity_zeta(const ModelParams& params, Parity sign, cplx s, double tau, ZetaRoute route,
                       const EigenZetaOptions& eig = {}, const MellinSettings& mel = {});

// Jaynes-Cummings: sum_n sum_pm (n + 1/2 pm sqrt(Delta^2 + g^2 (n+1)) + tau)^{-s}.
ZetaResult jc_zeta(double g, double delta, cplx s, double tau, std::size_t n_cut = 2000);

struct LimitReport {
    std::string scenario;
    std::string parameter;  // name of the swept parameter
    cplx target{0.0};
    std::vector<double> grid;
    std::vector<cplx> values;
    std::vector<double> brackets;
    std::vector<double> distances;
    double tolerance{0.0};  // required final distance; 0 means trend only
    bool decreasing{false};
    bool pass{false};
    std::map<std::string, double> extras;
    std::vector<std::string> notes;
};

// Closed-form targets.
cplx g_inf_target(const ModelParams& params, cplx s);        // zeta(s, N+eps) + zeta(s, N-eps)
cplx g0_target(const ModelParams& params, cplx s);           // zeta(s, N+r) + zeta(s, N-r), r^2 = Delta^2 + eps^2
cplx parity_g0_target(double delta, Parity sign, cplx s);    // corrected sign, see README
cplx parity_g0_target_literal(double delta, Parity sign, cplx s);
cplx parity_g_inf_target(double delta, cplx s);              // zeta(s, N)

// Each sweep evaluates at tau = g^2 + N on its grid, fills distances and sets `decreasing`
// (strict along the grid) and `pass` (decreasing and final distance <= tolerance when set).
LimitReport zeta_limit_g_inf(double delta, double eps, cplx s, const std::vector<double>& g_grid, double tolerance,
                             const EigenZetaOptions& eig = {});
LimitReport zeta_limit_g0(double delta, double eps, cplx s, const std::vector<double>& g_grid, double tolerance,
                          ZetaRoute route = ZetaRoute::mellin, const MellinSettings& mel = {},
                          const EigenZetaOptions& eig = {});
LimitReport zeta_limit_delta0(double g, double eps, cplx s, const std::vector<double>& delta_grid, double tolerance,
                              ZetaRoute route = ZetaRoute::eigen, const MellinSettings& mel = {},
                              const EigenZetaOptions& eig = {});
LimitReport parity_limit_g0(double delta, Parity sign, cplx s, const std::vector<double>& g_grid, double tolerance,
                            const EigenZetaOptions& eig = {});
LimitReport parity_limit_g_inf(double delta, Parity sign, cplx s, const std::vector<double>& g_grid,
                               double tolerance, const EigenZetaOptions& eig = {});
// Jaynes-Cummings: the swept small parameter is g ("g0") or Delta ("delta0").
LimitReport jc_limit(const std::string& which, double other, cplx s, double tau, const std::vector<double>& grid,
                     double tolerance);

// (1/Gamma(s)) int b^{s-1} (Z^-(b) - Z^+(b)) e^{-b tau} e^{2 g^2 tanh(b/2)} db, tau = g^2 + N.
struct ModifiedMellinResult {
    cplx series{0.0};
    double series_bracket{0.0};
    cplx eigen{0.0};
    double eigen_bracket{0.0};
    cplx limit{0.0};          // 2 s Delta L(s+1, N): the lambda = 0 term, independent of g
    cplx literal_limit{0.0};  // 2 Delta L(s-1, 1)
};
ModifiedMellinResult modified_mellin_difference(const ModelParams& params, cplx s, const MellinSettings& mel = {},
                                                const EigenZetaOptions& eig = {});

// g = 0: zeta compared with the Delta^{2l} shell expansion through lambda_max (1 or 2);
// the residual is O(Delta^{2 lambda_max + 2}). Requires eps != 0.
struct MultizetaCheck {
    cplx zeta{0.0};
    cplx expansion{0.0};
    double residual{0.0};
    double bracket{0.0};
};
MultizetaCheck multizeta_expansion_check(const ModelParams& params, cplx s, int lambda_max,
                                         const MellinSettings& mel = {});

}  // namespace rabi
