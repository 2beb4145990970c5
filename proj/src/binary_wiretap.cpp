#include "wiretap/binary_wiretap.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>

#include "wiretap/optimize.hpp"
#include "wiretap/parallel.hpp"

namespace wiretap {

namespace {

constexpr double kSlack = 1e-12;

// Pinned search resolution: the kinked objectives want a dense scan before
// golden-section polish.
const SearchSpec kSeparationSearch{0.0, 0.5, 1001, 1e-9, 200};
const SearchSpec kLayerSearch{0.0, 0.5, 2001, 1e-9, 200};

}  // namespace

void BinaryModelParams::validate() const {
    if (!(beta >= -kSlack) || !(beta <= 1.0 + kSlack)) {
        throw std::domain_error("erasure rate beta must lie in [0, 1]");
    }
    if (!(eps >= -kSlack) || !(eps <= 0.5 + kSlack)) {
        throw std::domain_error("crossover eps must lie in [0, 1/2]");
    }
    if (!(zeta >= -kSlack) || !(zeta <= 0.5 + kSlack)) {
        throw std::domain_error("crossover zeta must lie in [0, 1/2]");
    }
}

const char* to_string(SideInfoOrder order) {
    switch (order) {
        case SideInfoOrder::markov_abe: return "markov_ABE";
        case SideInfoOrder::less_noisy: return "less_noisy";
        case SideInfoOrder::more_capable: return "more_capable";
        case SideInfoOrder::unordered: return "unordered";
    }
    return "unordered";
}

SideInfoOrder classify_side_info(const BinaryModelParams& m) {
    m.validate();
    if (m.beta <= 2.0 * m.eps) return SideInfoOrder::markov_abe;
    if (m.beta <= 4.0 * m.eps * (1.0 - m.eps)) return SideInfoOrder::less_noisy;
    if (m.beta <= h2(m.eps)) return SideInfoOrder::more_capable;
    return SideInfoOrder::unordered;
}

double analog_equivocation(const BinaryModelParams& m) {
    m.validate();
    return h2(m.eps) + h2(m.zeta) - h2(star(m.zeta, m.eps));
}

namespace {

OptimizedEquivocation best_separation_pair(const BinaryModelParams& m, bool rate_matched) {
    m.validate();
    const double he = h2(m.eps);
    const double hz = h2(m.zeta);
    const auto bonus = [&](double q) { return hz + h2(q) - h2(star(m.zeta, q)); };
    // The objective never decreases in q, so the best q for a given u is the
    // largest one the rate condition allows (or 1/2 once the condition is
    // dropped). That removes the q dimension exactly.
    const auto q_cap = [&](double u) {
        if (!rate_matched) return 0.5;
        return h2_inv(std::min(1.0, 1.0 - m.beta * (1.0 - h2(u))));
    };
    const auto value_at = [&](double u) -> std::optional<double> {
        const double leak = std::max(0.0, m.beta * h2(u) - bonus(q_cap(u)));
        return he + h2(u) - h2(star(m.eps, u)) - leak;
    };
    const auto best = maximize_1d(value_at, kSeparationSearch);
    if (!best) throw std::logic_error("separation search found no feasible point");
    const double u = best->arg;
    // report the smallest q attaining this value: once the secrecy bonus
    // covers the source rate the objective is flat in q
    double q = q_cap(u);
    const double need = m.beta * h2(u);
    if (bonus(q) >= need) {
        double lo = 0.0;
        for (int i = 0; i < 100; ++i) {
            const double mid = 0.5 * (lo + q);
            (bonus(mid) >= need ? q : lo) = mid;
        }
    }
    return {best->value, u, q};
}

}  // namespace

OptimizedEquivocation digital_equivocation_detail(const BinaryModelParams& m) {
    return best_separation_pair(m, true);
}

double digital_equivocation(const BinaryModelParams& m) {
    return digital_equivocation_detail(m).delta;
}

OptimizedEquivocation outer_equivocation_detail(const BinaryModelParams& m) {
    return best_separation_pair(m, false);
}

double outer_equivocation(const BinaryModelParams& m) {
    return outer_equivocation_detail(m).delta;
}

FiniteJointPmf hybrid_joint_pmf(const BinaryModelParams& m, double u) {
    m.validate();
    if (!(u >= -kSlack) || !(u <= 0.5 + kSlack)) {
        throw std::domain_error("layer noise u must lie in [0, 1/2]");
    }
    u = std::min(0.5, std::max(0.0, u));

    const std::vector<Variable> vars = {{"A", 2}, {"E", 2}, {"B", 3}, {"V", 2}, {"W", 2},
                                        {"U", 2}, {"X", 2}, {"Y", 2}, {"Z", 2}};
    std::vector<std::size_t> stride(vars.size());
    std::size_t atoms = 1;
    for (std::size_t i = vars.size(); i-- > 0;) {
        stride[i] = atoms;
        atoms *= vars[i].cardinality;
    }
    std::vector<double> mass(atoms, 0.0);
    for (int a = 0; a < 2; ++a) {
        for (int e = 0; e < 2; ++e) {
            const double pe = 0.5 * (e == a ? 1.0 - m.eps : m.eps);
            for (int b = 0; b < 3; ++b) {
                // b: 0 -> symbol 0, 1 -> erased, 2 -> symbol 1
                double pb;
                if (b == 1) {
                    pb = m.beta;
                } else if ((b == 0 && a == 0) || (b == 2 && a == 1)) {
                    pb = 1.0 - m.beta;
                } else {
                    continue;
                }
                for (int v = 0; v < 2; ++v) {
                    for (int w = 0; w < 2; ++w) {
                        const double pw = 0.5 * (w == 0 ? 1.0 - u : u);
                        const int uu = v ^ w;
                        const int x = v ^ a;
                        for (int z = 0; z < 2; ++z) {
                            const double pz = z == x ? 1.0 - m.zeta : m.zeta;
                            const double prob = pe * pb * pw * pz;
                            if (prob <= 0.0) continue;
                            const std::size_t idx = std::size_t(a) * stride[0] + std::size_t(e) * stride[1] +
                                                    std::size_t(b) * stride[2] + std::size_t(v) * stride[3] +
                                                    std::size_t(w) * stride[4] + std::size_t(uu) * stride[5] +
                                                    std::size_t(x) * stride[6] + std::size_t(x) * stride[7] +
                                                    std::size_t(z) * stride[8];
                            mass[idx] += prob;
                        }
                    }
                }
            }
        }
    }
    return FiniteJointPmf(vars, std::move(mass));
}

namespace {

std::optional<double> hybrid_objective(const BinaryModelParams& m, double u) {
    const FiniteJointPmf p = hybrid_joint_pmf(m, u);
    if (mutual_information(p, {"U"}, {"A"}) > mutual_information(p, {"U"}, {"B", "Y"}) + kSlack) {
        return std::nullopt;
    }
    const double i_v_a = conditional_mutual_information(p, {"V"}, {"A"}, {"U"});
    const double i_v_by = conditional_mutual_information(p, {"V"}, {"B", "Y"}, {"U"});
    if (i_v_a > i_v_by + kSlack) return std::nullopt;
    const double i_v_az = conditional_mutual_information(p, {"V"}, {"A", "Z"}, {"U"});
    return conditional_entropy(p, {"A"}, {"U", "E"}) - i_v_a -
           conditional_mutual_information(p, {"X"}, {"Z"}, {"U", "E"}) + std::min(i_v_by, i_v_az);
}

}  // namespace

HybridEquivocation hybrid_equivocation_detail(const BinaryModelParams& m) {
    m.validate();
    auto objective = [&](double u) { return hybrid_objective(m, u); };
    const auto best = maximize_1d(objective, kLayerSearch);
    if (!best || best->value <= 0.0) return {0.0, best ? best->arg : 0.0};
    return {best->value, best->arg};
}

double hybrid_equivocation(const BinaryModelParams& m) {
    return hybrid_equivocation_detail(m).delta;
}

const char* to_string(BinaryScheme scheme) {
    switch (scheme) {
        case BinaryScheme::outer: return "outer";
        case BinaryScheme::digital: return "digital";
        case BinaryScheme::analog: return "analog";
        case BinaryScheme::hybrid: return "hybrid";
    }
    return "outer";
}

BinaryScheme binary_scheme_from_string(const std::string& name) {
    if (name == "outer") return BinaryScheme::outer;
    if (name == "digital") return BinaryScheme::digital;
    if (name == "analog") return BinaryScheme::analog;
    if (name == "hybrid") return BinaryScheme::hybrid;
    throw std::invalid_argument("unknown binary scheme '" + name + "'");
}

std::vector<TradeoffCurve> binary_sweep(const BinaryModelParams& base,
                                        const std::vector<double>& beta_grid,
                                        const std::vector<BinaryScheme>& schemes,
                                        unsigned threads) {
    base.validate();
    for (std::size_t i = 1; i < beta_grid.size(); ++i) {
        if (!(beta_grid[i] > beta_grid[i - 1])) {
            throw std::invalid_argument("beta grid must be strictly increasing");
        }
    }
    std::vector<TradeoffCurve> curves(schemes.size());
    for (std::size_t s = 0; s < schemes.size(); ++s) {
        curves[s].scheme = to_string(schemes[s]);
        curves[s].samples.resize(beta_grid.size());
    }
    parallel_for(schemes.size() * beta_grid.size(), threads, [&](std::size_t task) {
        const std::size_t s = task / beta_grid.size();
        const std::size_t i = task % beta_grid.size();
        BinaryModelParams m = base;
        m.beta = beta_grid[i];
        double value = 0.0;
        switch (schemes[s]) {
            case BinaryScheme::outer: value = outer_equivocation(m); break;
            case BinaryScheme::digital: value = digital_equivocation(m); break;
            case BinaryScheme::analog: value = analog_equivocation(m); break;
            case BinaryScheme::hybrid: value = hybrid_equivocation(m); break;
        }
        curves[s].samples[i] = {beta_grid[i], value};
    });
    return curves;
}

}  // namespace wiretap
