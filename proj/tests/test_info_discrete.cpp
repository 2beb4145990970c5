#include "wiretap/info_discrete.hpp"

#include <cmath>
#include <map>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "doctest.h"

using namespace wiretap;

namespace {

FiniteJointPmf random_pmf(std::mt19937_64& rng, std::vector<Variable> vars) {
    std::size_t n = 1;
    for (const auto& v : vars) n *= v.cardinality;
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<double> mass(n);
    double total = 0.0;
    for (double& m : mass) {
        m = -std::log(std::max(unit(rng), 1e-300));
        total += m;
    }
    for (double& m : mass) m /= total;
    return FiniteJointPmf(std::move(vars), std::move(mass));
}

}  // namespace

TEST_CASE("binary entropy reference values") {
    CHECK(h2(0.0) == 0.0);
    CHECK(h2(1.0) == 0.0);
    CHECK(h2(0.5) == 1.0);
    CHECK(h2(0.1) == doctest::Approx(0.4689955935892812).epsilon(1e-14));
    CHECK(h2(0.2) == doctest::Approx(0.7219280948873623).epsilon(1e-14));
    CHECK(h2(0.26) == doctest::Approx(0.8267463724926178).epsilon(1e-14));
    CHECK(h2(0.9) == doctest::Approx(h2(0.1)).epsilon(1e-15));
    CHECK_THROWS_AS(h2(-0.01), std::domain_error);
    CHECK_THROWS_AS(h2(1.01), std::domain_error);
}

TEST_CASE("binary entropy inverse round trips to 1e-10") {
    CHECK(h2_inv(0.0) == 0.0);
    CHECK(h2_inv(1.0) == doctest::Approx(0.5).epsilon(1e-11));
    for (int i = 0; i <= 100; ++i) {
        const double y = i / 100.0;
        CHECK(h2(h2_inv(y)) == doctest::Approx(y).epsilon(1e-10));
    }
    for (int i = 0; i <= 100; ++i) {
        const double x = 0.5 * i / 100.0;
        CHECK(h2_inv(h2(x)) == doctest::Approx(x).epsilon(1e-10));
    }
    CHECK_THROWS_AS(h2_inv(-0.01), std::domain_error);
    CHECK_THROWS_AS(h2_inv(1.01), std::domain_error);
}

TEST_CASE("binary convolution basics and associativity to 1e-14") {
    CHECK(star(0.1, 0.2) == doctest::Approx(0.26).epsilon(1e-15));
    CHECK(star(0.3, 0.0) == doctest::Approx(0.3).epsilon(1e-15));
    CHECK(star(0.3, 0.5) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(star(0.3, 1.0) == doctest::Approx(0.7).epsilon(1e-15));
    std::mt19937_64 rng(90001);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int i = 0; i < 200; ++i) {
        const double a = unit(rng), b = unit(rng), c = unit(rng);
        CHECK(star(star(a, b), c) == doctest::Approx(star(a, star(b, c))).epsilon(1e-14));
        CHECK(star(a, b) == doctest::Approx(star(b, a)).epsilon(1e-14));
    }
    CHECK_THROWS_AS(star(-0.1, 0.2), std::domain_error);
    CHECK_THROWS_AS(star(0.1, 1.2), std::domain_error);
}

TEST_CASE("entropy floor of a symmetric channel output") {
    CHECK(mrs_gerber_bound(1.0, 0.3) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(mrs_gerber_bound(0.0, 0.3) == doctest::Approx(h2(0.3)).epsilon(1e-12));
    CHECK(mrs_gerber_bound(0.7, 0.0) == doctest::Approx(0.7).epsilon(1e-10));
    // h = h2(0.1) maps back to crossover 0.1, then 0.1 * 0.1 = 0.18
    CHECK(mrs_gerber_bound(h2(0.1), 0.1) == doctest::Approx(0.6800770457282798).epsilon(1e-10));
    double prev = -1.0;
    for (int i = 0; i <= 40; ++i) {
        const double v = mrs_gerber_bound(i / 40.0, 0.17);
        CHECK(v >= prev - 1e-12);
        prev = v;
    }
}

TEST_CASE("joint pmf construction validates its input") {
    CHECK_THROWS_AS(FiniteJointPmf({}, {}), std::invalid_argument);
    CHECK_THROWS_AS(FiniteJointPmf({{"a", 2}}, {0.5, 0.25, 0.25}), std::invalid_argument);
    CHECK_THROWS_AS(FiniteJointPmf({{"a", 2}}, {0.7, 0.2}), std::invalid_argument);
    CHECK_THROWS_AS(FiniteJointPmf({{"a", 2}}, {1.2, -0.2}), std::invalid_argument);
    CHECK_THROWS_AS(FiniteJointPmf({{"a", 2}, {"a", 2}}, {0.25, 0.25, 0.25, 0.25}),
                    std::invalid_argument);
    CHECK_THROWS_AS(FiniteJointPmf({{"a", 0}}, {}), std::invalid_argument);
    const FiniteJointPmf p({{"a", 2}, {"b", 3}}, {0.1, 0.2, 0.1, 0.3, 0.2, 0.1});
    CHECK(p.atom_count() == 6);
    CHECK(p.index_of("b") == 1);
    CHECK_THROWS_AS(p.index_of("c"), std::invalid_argument);
}

TEST_CASE("entropy of an independent pair matches the closed form") {
    // A uniform bit observed through crossover 0.1
    const double e = 0.1;
    const FiniteJointPmf p({{"A", 2}, {"E", 2}},
                           {0.5 * (1 - e), 0.5 * e, 0.5 * e, 0.5 * (1 - e)});
    CHECK(entropy(p, {"A"}) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(entropy(p, {"A", "E"}) == doctest::Approx(1.4689955935892813).epsilon(1e-14));
    CHECK(entropy(p, {}) == 0.0);
    CHECK(conditional_entropy(p, {"E"}, {"A"}) == doctest::Approx(h2(e)).epsilon(1e-13));
    CHECK(mutual_information(p, {"A"}, {"E"}) ==
          doctest::Approx(0.5310044064107188).epsilon(1e-13));
    CHECK_THROWS_AS(entropy(p, {"missing"}), std::invalid_argument);
}

TEST_CASE("marginal entropy agrees with a brute-force accumulation") {
    std::mt19937_64 rng(90002);
    const std::vector<Variable> vars = {{"a", 2}, {"b", 3}, {"c", 2}, {"d", 2}};
    for (int t = 0; t < 200; ++t) {
        const FiniteJointPmf p = random_pmf(rng, vars);
        std::map<std::pair<int, int>, double> marginal;
        const auto& mass = p.mass();
        for (std::size_t idx = 0; idx < mass.size(); ++idx) {
            std::size_t rest = idx;
            int coord[4];
            for (int k = 3; k >= 0; --k) {
                coord[k] = static_cast<int>(rest % vars[k].cardinality);
                rest /= vars[k].cardinality;
            }
            marginal[{coord[1], coord[3]}] += mass[idx];
        }
        double reference = 0.0;
        for (const auto& kv : marginal)
            if (kv.second > 0.0) reference -= kv.second * std::log2(kv.second);
        CHECK(entropy(p, {"b", "d"}) == doctest::Approx(reference).epsilon(1e-10));
    }
}

TEST_CASE("mutual information chain rule holds on random distributions") {
    std::mt19937_64 rng(90003);
    for (int t = 0; t < 200; ++t) {
        const FiniteJointPmf p = random_pmf(rng, {{"x", 3}, {"y", 2}, {"z", 3}});
        const double joint = mutual_information(p, {"x"}, {"y", "z"});
        const double chained = mutual_information(p, {"x"}, {"y"}) +
                               conditional_mutual_information(p, {"x"}, {"z"}, {"y"});
        CHECK(joint == doctest::Approx(chained).epsilon(1e-10));
        CHECK(conditional_mutual_information(p, {"y"}, {"z"}, {"x"}) >= 0.0);
        const double h_chain = entropy(p, {"x"}) + conditional_entropy(p, {"y"}, {"x"}) +
                               conditional_entropy(p, {"z"}, {"x", "y"});
        CHECK(entropy(p, {"x", "y", "z"}) == doctest::Approx(h_chain).epsilon(1e-10));
    }
}

TEST_CASE("deterministic functions carry zero conditional entropy") {
    // y = x xor w with w ~ Bernoulli(0.2) independent of x
    std::vector<double> mass(8, 0.0);
    for (int x = 0; x < 2; ++x)
        for (int w = 0; w < 2; ++w) {
            const int y = x ^ w;
            mass[std::size_t(x) * 4 + std::size_t(w) * 2 + std::size_t(y)] =
                0.5 * (w ? 0.2 : 0.8);
        }
    const FiniteJointPmf p({{"x", 2}, {"w", 2}, {"y", 2}}, mass);
    CHECK(conditional_entropy(p, {"y"}, {"x", "w"}) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(conditional_entropy(p, {"y"}, {"x"}) == doctest::Approx(h2(0.2)).epsilon(1e-13));
    CHECK(mutual_information(p, {"x"}, {"w"}) == doctest::Approx(0.0).epsilon(1e-12));
}
