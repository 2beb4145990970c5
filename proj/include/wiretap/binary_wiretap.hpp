#pragma once

#include <string>
#include <vector>

#include "wiretap/curve.hpp"
#include "wiretap/info_discrete.hpp"

// Equivocation bounds for a uniform binary source sent over a wiretap
// channel: Bob receives the channel input noiselessly together with erased
// side information B = BEC(beta)(A), while Eve taps the channel through a
// BSC(zeta) and holds side information E = BSC(eps)(A). Every bound below is
// an equivocation rate Delta = H(A | E, Z) per source symbol, in bits.

namespace wiretap {

struct BinaryModelParams {
    double beta = 0.0;  // erasure rate of Bob's side information
    double eps = 0.0;   // crossover of Eve's side information
    double zeta = 0.0;  // crossover of Eve's channel tap

    void validate() const;  // beta in [0,1], eps and zeta in [0,1/2]
};

// How Bob's side information compares with Eve's as beta grows.
enum class SideInfoOrder { markov_abe, less_noisy, more_capable, unordered };

const char* to_string(SideInfoOrder order);

// Thresholds on beta: 2 eps (Markov chain A-B-E), 4 eps (1-eps) (less
// noisy), h2(eps) (more capable). Boundaries belong to the stronger class.
SideInfoOrder classify_side_info(const BinaryModelParams& m);

// Uncoded transmission: Delta = h2(eps) + h2(zeta) - h2(zeta * eps),
// independent of beta.
double analog_equivocation(const BinaryModelParams& m);

struct OptimizedEquivocation {
    double delta = 0.0;
    double u = 0.0;  // test-channel crossover for the source layer
    double q = 0.0;  // test-channel crossover for the channel layer
};

// Best separation-based scheme: maximize over (u, q) in [0, 1/2]^2
//   h2(eps) + h2(u) - h2(eps * u)
//     - [beta h2(u) - (h2(zeta) + h2(q) - h2(zeta * q))]_+
// subject to the rate-matching condition beta (1 - h2(u)) <= 1 - h2(q).
OptimizedEquivocation digital_equivocation_detail(const BinaryModelParams& m);
double digital_equivocation(const BinaryModelParams& m);

// Converse bound: the same objective with the rate condition dropped.
OptimizedEquivocation outer_equivocation_detail(const BinaryModelParams& m);
double outer_equivocation(const BinaryModelParams& m);

// Joint distribution of the hybrid scheme at source-layer noise u:
// A, V ~ Bernoulli(1/2) independent, W ~ Bernoulli(u), U = V xor W,
// X = V xor A, Y = X, Z = BSC(zeta)(X), E = BSC(eps)(A),
// B = BEC(beta)(A) over {0, erased, 1} with the erasure symbol at index 1.
// Variables are named A, E, B, V, W, U, X, Y, Z.
FiniteJointPmf hybrid_joint_pmf(const BinaryModelParams& m, double u);

struct HybridEquivocation {
    double delta = 0.0;
    double u = 0.0;
};

// Hybrid layered scheme: maximize over u in [0, 1/2]
//   H(A|U,E) - I(V;A|U) - I(X;Z|U,E) + min{ I(V;B,Y|U), I(V;A,Z|U) }
// over the distribution above, restricted to u where the code layers fit:
// I(U;A) <= I(U;B,Y) and I(V;A|U) <= I(V;B,Y|U). Never below zero.
HybridEquivocation hybrid_equivocation_detail(const BinaryModelParams& m);
double hybrid_equivocation(const BinaryModelParams& m);

enum class BinaryScheme { outer, digital, analog, hybrid };

const char* to_string(BinaryScheme scheme);
BinaryScheme binary_scheme_from_string(const std::string& name);

// One curve per requested scheme, sampled on beta_grid (eps and zeta come
// from `base`; its beta is ignored). Grid points are evaluated in parallel;
// the result is identical for every thread count.
std::vector<TradeoffCurve> binary_sweep(const BinaryModelParams& base,
                                        const std::vector<double>& beta_grid,
                                        const std::vector<BinaryScheme>& schemes,
                                        unsigned threads = 1);

}  // namespace wiretap
