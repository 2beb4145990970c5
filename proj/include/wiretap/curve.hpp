#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace wiretap {

struct CurveSample {
    double x = 0.0;
    double value = 0.0;
};

// One scheme's samples along the sweep axis, x strictly increasing.
struct TradeoffCurve {
    std::string scheme;
    std::vector<CurveSample> samples;
};

// Evenly spaced grid with `steps` intervals (steps + 1 points). A degenerate
// range (max == min) collapses to a single point.
std::vector<double> linear_grid(double min, double max, std::size_t steps);

// Log-uniform grid with `steps` intervals; requires positive endpoints.
std::vector<double> log_grid(double min, double max, std::size_t steps);

}  // namespace wiretap
