#include "wiretap/gaussian_wiretap.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "wiretap/optimize.hpp"
#include "wiretap/parallel.hpp"

namespace wiretap {

namespace {

constexpr double kSlack = 1e-12;
constexpr double kTwoPiE = 2.0 * 3.14159265358979323846 * 2.71828182845904523536;

double inv_or_zero(const std::optional<double>& power) {
    return power ? 1.0 / *power : 0.0;
}

double check_distortion(const GaussianModelParams& m, double d) {
    const double dm = d_min(m);
    if (d < dm - kSlack) {
        throw std::domain_error("target distortion lies below the achievable minimum");
    }
    return std::max(d, dm);
}

double clamp_de(const GaussianModelParams& m, double de) {
    return std::min(1.0, std::max(0.0, std::min(de, de_ceiling(m))));
}

}  // namespace

double d_min(const GaussianModelParams& m) {
    m.validate();
    double denom = 1.0 + m.p / m.p_y;
    if (m.p_b) denom *= 1.0 + 1.0 / *m.p_b;
    return 1.0 / denom;
}

double de_ceiling(const GaussianModelParams& m) {
    m.validate();
    return 1.0 / (1.0 + 1.0 / m.p_e);
}

double de_from_equivocation(double delta) {
    return std::exp2(2.0 * delta) / kTwoPiE;
}

double equivocation_from_de(double de) {
    if (!(de > 0.0)) throw std::domain_error("Eve's distortion must be positive");
    return 0.5 * std::log2(kTwoPiE * de);
}

double outer_de_strong_bob_si(const GaussianModelParams& m, double d) {
    m.validate();
    if (!m.p_b || !(*m.p_b <= m.p_e + kSlack)) {
        throw std::domain_error("this bound needs Bob's side information at least as clean as Eve's");
    }
    d = check_distortion(m, d);
    const double gain = std::max(1.0, (1.0 + m.p / m.p_y) / (1.0 + m.p / m.p_z));
    const double scaled = (1.0 + 1.0 / *m.p_b) / (1.0 + 1.0 / m.p_e) * d * gain;
    return clamp_de(m, scaled);
}

double outer_de_strong_eve(const GaussianModelParams& m, double d) {
    m.validate();
    if (m.p_b && !(*m.p_b > m.p_e)) {
        throw std::domain_error("this bound needs Eve's side information cleaner than Bob's");
    }
    if (!(m.p_y >= m.p_z - kSlack)) {
        throw std::domain_error("this bound needs Eve's channel at least as clean as Bob's");
    }
    d = check_distortion(m, d);
    return clamp_de(m, 1.0 / (1.0 / d + 1.0 / m.p_e - inv_or_zero(m.p_b)));
}

double outer_de_strong_eve_si(const GaussianModelParams& m, double d) {
    m.validate();
    if (m.p_b && !(*m.p_b > m.p_e)) {
        throw std::domain_error("this bound needs Eve's side information cleaner than Bob's");
    }
    if (!(m.p_y < m.p_z)) {
        throw std::domain_error("this bound needs Bob's channel cleaner than Eve's");
    }
    d = check_distortion(m, d);
    const double ratio = (1.0 + m.p / m.p_z) / (1.0 + m.p / m.p_y);
    return clamp_de(m, 1.0 / (ratio / d + 1.0 / m.p_e - inv_or_zero(m.p_b)));
}

double outer_de(const GaussianModelParams& m, double d) {
    m.validate();
    if (m.p_b && *m.p_b <= m.p_e) return outer_de_strong_bob_si(m, d);
    if (m.p_y >= m.p_z - kSlack) return outer_de_strong_eve(m, d);
    return outer_de_strong_eve_si(m, d);
}

namespace {

void require_no_bob_si(const GaussianModelParams& m, const char* what) {
    if (m.p_b) {
        throw std::domain_error(std::string(what) + " is only defined for Bob without side information");
    }
}

void require_bob_channel_cleaner(const GaussianModelParams& m, const char* what) {
    if (!(m.p_y < m.p_z - kSlack)) {
        throw std::domain_error(std::string(what) + " needs Bob's channel strictly cleaner (p_y < p_z)");
    }
}

}  // namespace

double optimal_de(const GaussianModelParams& m, double d) {
    m.validate();
    require_no_bob_si(m, "the exact tradeoff");
    require_bob_channel_cleaner(m, "the exact tradeoff");
    d = check_distortion(m, d);
    const double ratio = (1.0 + m.p / m.p_z) / (1.0 + m.p / m.p_y);
    return 1.0 / (std::max(1.0, ratio / d) + 1.0 / m.p_e);
}

std::optional<HybridOutcome> hybrid_point(const GaussianModelParams& m,
                                          const HybridGaussCoef& c) {
    m.validate();
    const double g2 = c.gamma_sq();
    const double inv_b = inv_or_zero(m.p_b);
    const double spread = c.alpha * c.alpha / g2 +
                          (m.p / m.p_y) * (c.alpha + c.beta) * (c.alpha + c.beta);
    if (spread > (m.p / m.p_y) * (1.0 + g2 * inv_b) + kSlack) return std::nullopt;
    const double q = 1.0 + inv_b + spread;
    const double full_rate_q = 1.0 + inv_b + (m.p / m.p_y) * (1.0 + g2 * inv_b);
    const double base = 1.0 / (1.0 + 1.0 / m.p_e + (m.p / m.p_z) * (1.0 + g2 / m.p_e));
    const double de = base * std::min(full_rate_q / q, 1.0 + g2 * m.p / m.p_z);
    return HybridOutcome{1.0 / q, de};
}

HybridGaussCoef hybrid_coef_for_distortion(const GaussianModelParams& m, double d) {
    m.validate();
    require_no_bob_si(m, "the optimal hybrid design");
    require_bob_channel_cleaner(m, "the optimal hybrid design");
    const double upper = (1.0 + m.p / m.p_z) / (1.0 + m.p / m.p_y);
    if (d > upper + kSlack) {
        throw std::domain_error("distortion target beyond the hybrid design range");
    }
    double beta_sq = (m.p_z / m.p) * (1.0 + m.p / m.p_z - d * (1.0 + m.p / m.p_y));
    beta_sq = std::max(0.0, beta_sq);
    if (beta_sq >= 1.0) {
        throw std::domain_error("distortion target degenerates to the uncoded endpoint (beta = 1)");
    }
    const double beta = std::sqrt(beta_sq);
    const double g2 = 1.0 - beta_sq;
    const double alpha =
        (beta + g2 * std::sqrt((1.0 / d) * (m.p / m.p_y - m.p / m.p_z))) /
            (1.0 + g2 * m.p / m.p_y) -
        beta;
    return HybridGaussCoef(alpha, beta);
}

DigitalOutcome digital_de_detail(const GaussianModelParams& m, double d) {
    m.validate();
    require_no_bob_si(m, "the separation-based scheme");
    d = check_distortion(m, d);
    const double mu_lo = 1.0 / (1.0 + m.p / m.p_y);
    auto objective = [&](double mu) -> std::optional<double> {
        const double rate_term = 1.0 + mu * m.p / m.p_z - (1.0 - mu) * m.p_y / m.p_z;
        const double fit = std::min(1.0, d * (1.0 + m.p / m.p_y) / rate_term);
        return fit / (1.0 / mu + 1.0 / m.p_e);
    };
    const SearchSpec spec{mu_lo, 1.0, 2001, 1e-9, 200};
    const auto best = maximize_1d(objective, spec);
    if (!best) throw std::logic_error("share optimization found no feasible point");
    return {best->value, best->arg};
}

double digital_de(const GaussianModelParams& m, double d) {
    return digital_de_detail(m, d).de;
}

double analog_de(const GaussianModelParams& m, double d) {
    m.validate();
    require_no_bob_si(m, "uncoded transmission");
    d = check_distortion(m, d);
    const double excess = std::max(0.0, (1.0 / d - 1.0) * m.p_y / m.p_z);
    return 1.0 / (1.0 + 1.0 / m.p_e + excess);
}

std::optional<FrontierPoint> hybrid_frontier_point(const GaussianModelParams& m, double d) {
    m.validate();
    const SearchSpec beta_spec{0.0, 1.0 - 1e-6, 2000, 1e-9, 200};
    const SearchSpec alpha_spec{-5.0, 5.0, 201, 1e-9, 200};

    auto best_alpha = [&](double beta) {
        return maximize_1d(
            [&](double alpha) -> std::optional<double> {
                const auto out = hybrid_point(m, HybridGaussCoef(alpha, beta));
                if (!out || out->d > d + kSlack) return std::nullopt;
                return out->de;
            },
            alpha_spec);
    };
    const auto best_beta = maximize_1d(
        [&](double beta) -> std::optional<double> {
            const auto inner = best_alpha(beta);
            if (!inner) return std::nullopt;
            return inner->value;
        },
        beta_spec);
    if (!best_beta) return std::nullopt;
    const auto inner = best_alpha(best_beta->arg);
    const auto out = hybrid_point(m, HybridGaussCoef(inner->arg, best_beta->arg));
    return FrontierPoint{d, out->d, inner->value, inner->arg, best_beta->arg};
}

TradeoffCurve hybrid_frontier(const GaussianModelParams& m,
                              const std::vector<double>& d_grid,
                              unsigned threads) {
    m.validate();
    for (std::size_t i = 1; i < d_grid.size(); ++i) {
        if (!(d_grid[i] > d_grid[i - 1])) {
            throw std::invalid_argument("distortion grid must be strictly increasing");
        }
    }
    std::vector<std::optional<FrontierPoint>> points(d_grid.size());
    parallel_for(d_grid.size(), threads,
                 [&](std::size_t i) { points[i] = hybrid_frontier_point(m, d_grid[i]); });

    // Upper envelope over the achieved design points.
    std::vector<FrontierPoint> found;
    for (const auto& pt : points) {
        if (pt) found.push_back(*pt);
    }
    TradeoffCurve curve{"hybrid", {}};
    if (found.empty()) return curve;
    std::sort(found.begin(), found.end(),
              [](const FrontierPoint& a, const FrontierPoint& b) { return a.d_achieved < b.d_achieved; });
    std::vector<CurveSample> env;
    double run = -1.0;
    for (const FrontierPoint& pt : found) {
        run = std::max(run, pt.de);
        if (!env.empty() && env.back().x == pt.d_achieved) {
            env.back().value = run;
        } else {
            env.push_back({pt.d_achieved, run});
        }
    }
    auto envelope_at = [&](double x) {
        if (x <= env.front().x) return env.front().value;
        if (x >= env.back().x) return env.back().value;
        std::size_t hi = 1;
        while (env[hi].x < x) ++hi;
        const CurveSample& a = env[hi - 1];
        const CurveSample& b = env[hi];
        const double t = (x - a.x) / (b.x - a.x);
        return a.value + t * (b.value - a.value);
    };
    for (std::size_t i = 0; i < d_grid.size(); ++i) {
        if (!points[i]) continue;
        curve.samples.push_back({d_grid[i], envelope_at(d_grid[i])});
    }
    return curve;
}

const char* to_string(GaussianScheme scheme) {
    switch (scheme) {
        case GaussianScheme::outer: return "outer";
        case GaussianScheme::optimal: return "optimal";
        case GaussianScheme::digital: return "digital";
        case GaussianScheme::analog: return "analog";
        case GaussianScheme::hybrid: return "hybrid";
    }
    return "outer";
}

GaussianScheme gaussian_scheme_from_string(const std::string& name) {
    if (name == "outer") return GaussianScheme::outer;
    if (name == "optimal") return GaussianScheme::optimal;
    if (name == "digital") return GaussianScheme::digital;
    if (name == "analog") return GaussianScheme::analog;
    if (name == "hybrid") return GaussianScheme::hybrid;
    throw std::invalid_argument("unknown gaussian scheme '" + name + "'");
}

void require_scheme_applicable(const GaussianModelParams& m, GaussianScheme scheme) {
    m.validate();
    switch (scheme) {
        case GaussianScheme::outer:
        case GaussianScheme::hybrid:
            return;
        case GaussianScheme::digital:
            require_no_bob_si(m, "scheme 'digital'");
            return;
        case GaussianScheme::analog:
            require_no_bob_si(m, "scheme 'analog'");
            return;
        case GaussianScheme::optimal:
            require_no_bob_si(m, "scheme 'optimal'");
            require_bob_channel_cleaner(m, "scheme 'optimal'");
            return;
    }
}

std::vector<TradeoffCurve> gaussian_sweep(const GaussianModelParams& m,
                                          const std::vector<double>& d_grid,
                                          const std::vector<GaussianScheme>& schemes,
                                          unsigned threads) {
    m.validate();
    for (std::size_t i = 1; i < d_grid.size(); ++i) {
        if (!(d_grid[i] > d_grid[i - 1])) {
            throw std::invalid_argument("distortion grid must be strictly increasing");
        }
    }
    for (GaussianScheme s : schemes) require_scheme_applicable(m, s);

    const double dm = d_min(m);
    std::vector<double> feasible;
    feasible.reserve(d_grid.size());
    for (double d : d_grid) {
        if (d >= dm - kSlack) feasible.push_back(d);
    }

    std::vector<TradeoffCurve> curves(schemes.size());
    for (std::size_t s = 0; s < schemes.size(); ++s) {
        if (schemes[s] == GaussianScheme::hybrid) {
            curves[s] = hybrid_frontier(m, feasible, threads);
            continue;
        }
        curves[s].scheme = to_string(schemes[s]);
        curves[s].samples.resize(feasible.size());
        parallel_for(feasible.size(), threads, [&, s](std::size_t i) {
            double value = 0.0;
            switch (schemes[s]) {
                case GaussianScheme::outer: value = outer_de(m, feasible[i]); break;
                case GaussianScheme::optimal: value = optimal_de(m, feasible[i]); break;
                case GaussianScheme::digital: value = digital_de(m, feasible[i]); break;
                case GaussianScheme::analog: value = analog_de(m, feasible[i]); break;
                case GaussianScheme::hybrid: break;
            }
            curves[s].samples[i] = {feasible[i], value};
        });
    }
    return curves;
}

}  // namespace wiretap
