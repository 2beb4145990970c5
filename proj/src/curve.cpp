#include "wiretap/curve.hpp"

#include <cmath>
#include <stdexcept>

namespace wiretap {

std::vector<double> linear_grid(double min, double max, std::size_t steps) {
    if (steps == 0) throw std::invalid_argument("grid needs at least one step");
    if (max < min) throw std::invalid_argument("grid max must not be below min");
    if (max == min) return {min};
    std::vector<double> out;
    out.reserve(steps + 1);
    for (std::size_t i = 0; i <= steps; ++i) {
        out.push_back(i == steps ? max : min + (max - min) * double(i) / double(steps));
    }
    return out;
}

std::vector<double> log_grid(double min, double max, std::size_t steps) {
    if (!(min > 0.0) || !(max > 0.0)) throw std::invalid_argument("log grid endpoints must be positive");
    if (steps == 0) throw std::invalid_argument("grid needs at least one step");
    if (max < min) throw std::invalid_argument("grid max must not be below min");
    if (max == min) return {min};
    const double lmin = std::log(min);
    const double lmax = std::log(max);
    std::vector<double> out;
    out.reserve(steps + 1);
    for (std::size_t i = 0; i <= steps; ++i) {
        out.push_back(i == steps ? max : std::exp(lmin + (lmax - lmin) * double(i) / double(steps)));
    }
    return out;
}

}  // namespace wiretap
