#include "wiretap/optimize.hpp"

#include <cmath>
#include <optional>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "wiretap/curve.hpp"

using namespace wiretap;

TEST_CASE("1d search finds a smooth interior maximum") {
    const SearchSpec spec{0.0, 1.0, 101, 1e-10, 300};
    const auto r = maximize_1d(
        [](double x) { return std::optional<double>(-(x - 0.3125) * (x - 0.3125)); }, spec);
    REQUIRE(r.has_value());
    // the tie rule caps argument resolution near a smooth peak at roughly
    // the square root of the value tolerance
    CHECK(r->arg == doctest::Approx(0.3125).epsilon(1e-5));
    CHECK(r->value == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("1d search resolves a kinked maximum") {
    const SearchSpec spec{0.0, 1.0, 101, 1e-10, 300};
    const auto r = maximize_1d(
        [](double x) { return std::optional<double>(std::min(2.0 * x, 1.0 - x)); }, spec);
    REQUIRE(r.has_value());
    CHECK(r->arg == doctest::Approx(1.0 / 3.0).epsilon(1e-8));
    CHECK(r->value == doctest::Approx(2.0 / 3.0).epsilon(1e-9));
}

TEST_CASE("1d search is deterministic and endpoint-exact") {
    const SearchSpec spec{0.0, 1.0, 67, 1e-9, 200};
    const auto f = [](double x) { return std::optional<double>(std::sin(7.0 * x) + 0.3 * x); };
    const auto a = maximize_1d(f, spec);
    const auto b = maximize_1d(f, spec);
    REQUIRE(a.has_value());
    CHECK(a->arg == b->arg);
    CHECK(a->value == b->value);
    // increasing objective peaks at the right endpoint
    const auto edge = maximize_1d([](double x) { return std::optional<double>(x); }, spec);
    REQUIRE(edge.has_value());
    CHECK(edge->arg == 1.0);
    CHECK(edge->value == 1.0);
}

TEST_CASE("1d refinement never falls below the best coarse sample") {
    const SearchSpec spec{0.0, 1.0, 101, 1e-9, 200};
    const auto f = [](double x) {
        return std::optional<double>(std::sin(55.0 * x) * std::exp(-x));
    };
    double coarse_best = -1e300;
    const double step = 1.0 / 100.0;  // same probe arithmetic as the implementation
    for (int i = 0; i <= 100; ++i) {
        const auto v = f(i == 100 ? 1.0 : i * step);
        coarse_best = std::max(coarse_best, *v);
    }
    const auto r = maximize_1d(f, spec);
    REQUIRE(r.has_value());
    CHECK(r->value >= coarse_best);
}

TEST_CASE("1d plateau ties resolve to the smallest argument") {
    const SearchSpec spec{0.0, 1.0, 101, 1e-9, 200};
    const auto r = maximize_1d([](double) { return std::optional<double>(2.5); }, spec);
    REQUIRE(r.has_value());
    CHECK(r->arg == 0.0);
    CHECK(r->value == 2.5);
}

TEST_CASE("1d search skips infeasible probes") {
    const SearchSpec spec{0.0, 1.0, 101, 1e-9, 200};
    const auto r = maximize_1d(
        [](double x) {
            if (x < 0.6) return std::optional<double>();
            return std::optional<double>(-(x - 0.8) * (x - 0.8));
        },
        spec);
    REQUIRE(r.has_value());
    CHECK(r->arg == doctest::Approx(0.8).epsilon(1e-5));
    CHECK_FALSE(maximize_1d([](double) { return std::optional<double>(); }, spec).has_value());
}

TEST_CASE("1d search handles degenerate ranges") {
    const auto r = maximize_1d([](double x) { return std::optional<double>(x * x); },
                               SearchSpec{0.25, 0.25, 51, 1e-9, 200});
    REQUIRE(r.has_value());
    CHECK(r->arg == 0.25);
    CHECK(r->value == doctest::Approx(0.0625).epsilon(1e-15));
}

TEST_CASE("2d search finds a separable interior maximum") {
    const SearchSpec sx{0.0, 1.0, 41, 1e-9, 200};
    const SearchSpec sy{0.0, 1.0, 41, 1e-9, 200};
    const auto r = maximize_2d(
        [](double x, double y) {
            return std::optional<double>(-(x - 0.3) * (x - 0.3) - 2.0 * (y - 0.7) * (y - 0.7));
        },
        sx, sy);
    REQUIRE(r.has_value());
    CHECK(r->arg_x == doctest::Approx(0.3).epsilon(1e-6));
    CHECK(r->arg_y == doctest::Approx(0.7).epsilon(1e-6));
    CHECK(r->value == doctest::Approx(0.0).epsilon(1e-10));
}

TEST_CASE("2d search respects infeasible regions") {
    const SearchSpec s{0.0, 1.0, 41, 1e-9, 200};
    // feasible only inside a disk around (0.5, 0.5); the peak is interior
    const auto r = maximize_2d(
        [](double x, double y) -> std::optional<double> {
            const double rr = (x - 0.5) * (x - 0.5) + (y - 0.5) * (y - 0.5);
            if (rr > 0.09) return std::nullopt;
            return -(x - 0.55) * (x - 0.55) - (y - 0.6) * (y - 0.6);
        },
        s, s);
    REQUIRE(r.has_value());
    CHECK(r->arg_x == doctest::Approx(0.55).epsilon(1e-6));
    CHECK(r->arg_y == doctest::Approx(0.6).epsilon(1e-6));
    CHECK(r->value == doctest::Approx(0.0).epsilon(1e-10));
    CHECK_FALSE(
        maximize_2d([](double, double) { return std::optional<double>(); }, s, s).has_value());
}

TEST_CASE("2d plateau ties pick the lexicographically smallest point") {
    const SearchSpec s{0.0, 1.0, 21, 1e-9, 50};
    const auto r = maximize_2d([](double, double) { return std::optional<double>(1.0); }, s, s);
    REQUIRE(r.has_value());
    CHECK(r->arg_x == 0.0);
    CHECK(r->arg_y == 0.0);
}

TEST_CASE("grid construction counts intervals") {
    const std::vector<double> g = linear_grid(0.0, 1.0, 64);
    CHECK(g.size() == 65);
    CHECK(g.front() == 0.0);
    CHECK(g.back() == 1.0);
    CHECK(g[32] == doctest::Approx(0.5).epsilon(1e-15));
    const std::vector<double> single = linear_grid(0.4, 0.4, 7);
    CHECK(single.size() == 1);
    CHECK(single[0] == 0.4);
    CHECK_THROWS_AS(linear_grid(0.0, 1.0, 0), std::invalid_argument);
    CHECK_THROWS_AS(linear_grid(1.0, 0.0, 4), std::invalid_argument);
    const std::vector<double> lg = log_grid(0.01, 100.0, 4);
    CHECK(lg.size() == 5);
    CHECK(lg[2] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK_THROWS_AS(log_grid(0.0, 1.0, 4), std::invalid_argument);
}
