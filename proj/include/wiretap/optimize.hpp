#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>

// Deterministic derivative-free maximization: a coarse grid scan followed by
// golden-section refinement around the best sample. Objectives return
// std::nullopt where infeasible, which is treated as minus infinity. The
// routines are grid-based on purpose: the objectives in this project have
// clamped [.]_+ kinks and min{.,.} switches, so curvature-based methods are
// not reliable here.

namespace wiretap {

struct SearchSpec {
    double lo = 0.0;
    double hi = 1.0;
    std::size_t coarse_points = 101;  // samples on [lo, hi], endpoints included
    double refine_tol = 1e-9;         // stop when the bracket is this narrow
    int max_refine_iters = 200;
};

struct Extremum1d {
    double arg = 0.0;
    double value = 0.0;
};

struct Extremum2d {
    double arg_x = 0.0;
    double arg_y = 0.0;
    double value = 0.0;
};

namespace detail {

constexpr double kTieEps = 1e-12;         // values this close count as a tie
constexpr double kInvPhi = 0.6180339887498949;  // 1/phi

// Ties go to the smaller argument so results do not depend on scan order.
inline bool improves(double value, double arg, double best_value, double best_arg) {
    if (value > best_value + kTieEps) return true;
    return value >= best_value - kTieEps && arg < best_arg;
}

// Golden-section ascent on [a, b]; keeps `best` updated with every probe.
template <class F>
void golden_refine(F&& f, double a, double b, const SearchSpec& spec, Extremum1d& best) {
    auto probe = [&](double x) {
        const std::optional<double> v = f(x);
        if (v && improves(*v, x, best.value, best.arg)) best = {x, *v};
        return v;
    };
    double c = b - kInvPhi * (b - a);
    double d = a + kInvPhi * (b - a);
    std::optional<double> fc = probe(c);
    std::optional<double> fd = probe(d);
    for (int i = 0; i < spec.max_refine_iters && b - a > spec.refine_tol; ++i) {
        const double vc = fc.value_or(-1e308);
        const double vd = fd.value_or(-1e308);
        if (vc >= vd) {
            b = d;
            d = c;
            fd = fc;
            c = b - kInvPhi * (b - a);
            fc = probe(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + kInvPhi * (b - a);
            fd = probe(d);
        }
    }
}

}  // namespace detail

// Maximize f over [spec.lo, spec.hi]. Returns nullopt when every probe is
// infeasible; otherwise the refined value never falls below the best coarse
// sample.
template <class F>
std::optional<Extremum1d> maximize_1d(F&& f, const SearchSpec& spec) {
    const std::size_t n = spec.coarse_points;
    const double span = spec.hi - spec.lo;
    const std::size_t samples = (n < 2 || span <= 0.0) ? 1 : n;
    const double step = samples > 1 ? span / double(samples - 1) : 0.0;

    bool found = false;
    Extremum1d best{spec.lo, 0.0};
    std::size_t best_idx = 0;
    for (std::size_t i = 0; i < samples; ++i) {
        const double x = (i + 1 == samples) ? spec.hi : spec.lo + double(i) * step;
        const std::optional<double> v = f(x);
        if (!v) continue;
        if (!found || detail::improves(*v, x, best.value, best.arg)) {
            best = {x, *v};
            best_idx = i;
            found = true;
        }
    }
    if (!found) return std::nullopt;
    if (samples > 1) {
        const double a = best_idx == 0 ? spec.lo : spec.lo + double(best_idx - 1) * step;
        const double b = best_idx + 1 >= samples ? spec.hi : spec.lo + double(best_idx + 1) * step;
        detail::golden_refine(f, a, b, spec, best);
    }
    return best;
}

// Maximize f(x, y) over the product of the two ranges: full coarse grid, then
// three rounds of per-coordinate golden-section refinement around the
// incumbent. Ties prefer smaller x, then smaller y.
template <class F>
std::optional<Extremum2d> maximize_2d(F&& f, const SearchSpec& sx, const SearchSpec& sy) {
    const std::size_t nx = (sx.coarse_points < 2 || sx.hi <= sx.lo) ? 1 : sx.coarse_points;
    const std::size_t ny = (sy.coarse_points < 2 || sy.hi <= sy.lo) ? 1 : sy.coarse_points;
    const double step_x = nx > 1 ? (sx.hi - sx.lo) / double(nx - 1) : 0.0;
    const double step_y = ny > 1 ? (sy.hi - sy.lo) / double(ny - 1) : 0.0;

    bool found = false;
    Extremum2d best{sx.lo, sy.lo, 0.0};
    for (std::size_t i = 0; i < nx; ++i) {
        const double x = (i + 1 == nx) ? sx.hi : sx.lo + double(i) * step_x;
        for (std::size_t j = 0; j < ny; ++j) {
            const double y = (j + 1 == ny) ? sy.hi : sy.lo + double(j) * step_y;
            const std::optional<double> v = f(x, y);
            if (!v) continue;
            const bool better = *v > best.value + detail::kTieEps ||
                                (*v >= best.value - detail::kTieEps &&
                                 (x < best.arg_x || (x == best.arg_x && y < best.arg_y)));
            if (!found || better) {
                best = {x, y, *v};
                found = true;
            }
        }
    }
    if (!found) return std::nullopt;

    const double hx = nx > 1 ? step_x : 0.0;
    const double hy = ny > 1 ? step_y : 0.0;
    for (int round = 0; round < 3; ++round) {
        if (hx > 0.0) {
            const double y = best.arg_y;
            Extremum1d line{best.arg_x, best.value};
            auto fx = [&](double x) { return f(x, y); };
            const double a = std::max(sx.lo, best.arg_x - hx);
            const double b = std::min(sx.hi, best.arg_x + hx);
            detail::golden_refine(fx, a, b, sx, line);
            if (detail::improves(line.value, line.arg, best.value, best.arg_x)) {
                best.arg_x = line.arg;
                best.value = line.value;
            }
        }
        if (hy > 0.0) {
            const double x = best.arg_x;
            Extremum1d line{best.arg_y, best.value};
            auto fy = [&](double y) { return f(x, y); };
            const double a = std::max(sy.lo, best.arg_y - hy);
            const double b = std::min(sy.hi, best.arg_y + hy);
            detail::golden_refine(fy, a, b, sy, line);
            if (detail::improves(line.value, line.arg, best.value, best.arg_y)) {
                best.arg_y = line.arg;
                best.value = line.value;
            }
        }
    }
    return best;
}

}  // namespace wiretap
