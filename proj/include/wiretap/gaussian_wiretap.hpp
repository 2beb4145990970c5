#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wiretap/curve.hpp"
#include "wiretap/info_gaussian.hpp"

// Distortion-based secrecy bounds for the scalar Gaussian wiretap model of
// info_gaussian.hpp. Curves trade Bob's reconstruction distortion d against
// the least mean-square distortion de that Eve can be forced to suffer; both
// are normalized by the unit source variance, so 0 <= de <= 1. An
// equivocation rate Delta corresponds to de = 2^(2 Delta) / (2 pi e).

namespace wiretap {

// Smallest distortion Bob can reach with full channel rate and side info.
double d_min(const GaussianModelParams& m);

// Eve's distortion can never exceed Var(A | E) = 1 / (1 + 1/p_e).
double de_ceiling(const GaussianModelParams& m);

double de_from_equivocation(double delta);
double equivocation_from_de(double de);

// Converse bounds on Eve's distortion at Bob-distortion d, by regime.

// Bob's side information is at least as clean as Eve's (p_b <= p_e).
double outer_de_strong_bob_si(const GaussianModelParams& m, double d);

// Eve's side information is cleaner (p_b > p_e or absent) and her channel
// is no noisier than Bob's (p_y >= p_z).
double outer_de_strong_eve(const GaussianModelParams& m, double d);

// Eve's side information is cleaner but her channel is noisier (p_y < p_z).
double outer_de_strong_eve_si(const GaussianModelParams& m, double d);

// Dispatches to the bound for m's regime; p_y == p_z within 1e-12 is routed
// to the p_y >= p_z form.
double outer_de(const GaussianModelParams& m, double d);

// Exact tradeoff for Bob without side information over the stronger channel
// (p_b absent, p_y < p_z): de = 1 / (max{1, (1/d) (1+p/p_z)/(1+p/p_y)} + 1/p_e).
double optimal_de(const GaussianModelParams& m, double d);

struct HybridOutcome {
    double d = 0.0;   // Bob's distortion at this design point
    double de = 0.0;  // Eve's guaranteed distortion
};

// Evaluate one hybrid design point. Returns nullopt when the coefficients
// exceed the channel rate budget
//   alpha^2/gamma^2 + (p/p_y)(alpha+beta)^2 <= (p/p_y)(1 + gamma^2/p_b).
std::optional<HybridOutcome> hybrid_point(const GaussianModelParams& m,
                                          const HybridGaussCoef& c);

// Coefficients whose hybrid_point lands exactly on the optimal tradeoff at
// Bob-distortion d. Needs p_b absent and p_y < p_z; valid for d in
// (d_min, (1+p/p_z)/(1+p/p_y)]. The left endpoint is excluded because it
// forces beta = 1, the degenerate uncoded limit.
HybridGaussCoef hybrid_coef_for_distortion(const GaussianModelParams& m, double d);

struct DigitalOutcome {
    double de = 0.0;
    double mu = 1.0;  // optimized share of the channel carrying the secret layer
};

// Separation-based scheme for Bob without side information: maximize over
// mu in [1/(1+p/p_y), 1]
//   1/(1/mu + 1/p_e) * min{1, d (1+p/p_y) / (1 + mu p/p_z - (1-mu) p_y/p_z)}.
DigitalOutcome digital_de_detail(const GaussianModelParams& m, double d);
double digital_de(const GaussianModelParams& m, double d);

// Uncoded transmission for Bob without side information:
// de = 1 / (1 + 1/p_e + [(1/d - 1) p_y/p_z]_+).
double analog_de(const GaussianModelParams& m, double d);

struct FrontierPoint {
    double d_target = 0.0;
    double d_achieved = 0.0;
    double de = 0.0;
    double alpha = 0.0;
    double beta = 0.0;
};

// Best hybrid design with Bob-distortion at most d: beta swept on a
// 2000-point grid over [0, 1 - 1e-6] with golden-section polish, alpha
// optimized by golden section on [-5, 5] for each beta. Returns nullopt when
// no design meets the target.
std::optional<FrontierPoint> hybrid_frontier_point(const GaussianModelParams& m, double d);

// Upper envelope of hybrid design points over the target grid: candidates
// sorted by achieved distortion, running maximum of de, then linear
// interpolation back onto the requested grid. Infeasible targets are omitted.
TradeoffCurve hybrid_frontier(const GaussianModelParams& m,
                              const std::vector<double>& d_grid,
                              unsigned threads = 1);

enum class GaussianScheme { outer, optimal, digital, analog, hybrid };

const char* to_string(GaussianScheme scheme);
GaussianScheme gaussian_scheme_from_string(const std::string& name);

// Throws when a scheme's closed form does not exist for these parameters
// (optimal, digital and analog are defined for Bob without side information;
// optimal additionally needs p_y < p_z).
void require_scheme_applicable(const GaussianModelParams& m, GaussianScheme scheme);

// One curve per requested scheme over d_grid. Grid values below d_min are
// skipped, so curves may be shorter than the grid. Deterministic for every
// thread count.
std::vector<TradeoffCurve> gaussian_sweep(const GaussianModelParams& m,
                                          const std::vector<double>& d_grid,
                                          const std::vector<GaussianScheme>& schemes,
                                          unsigned threads = 1);

}  // namespace wiretap
