#include "wiretap/binary_wiretap.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "wiretap/curve.hpp"
#include "wiretap/info_discrete.hpp"

using namespace wiretap;

namespace {

BinaryModelParams at_beta(double beta) { return BinaryModelParams{beta, 0.1, 0.1}; }

}  // namespace

TEST_CASE("binary parameters are validated") {
    CHECK_NOTHROW((BinaryModelParams{0.5, 0.1, 0.1}).validate());
    CHECK_THROWS_AS((BinaryModelParams{-0.1, 0.1, 0.1}).validate(), std::domain_error);
    CHECK_THROWS_AS((BinaryModelParams{1.1, 0.1, 0.1}).validate(), std::domain_error);
    CHECK_THROWS_AS((BinaryModelParams{0.5, 0.6, 0.1}).validate(), std::domain_error);
    CHECK_THROWS_AS((BinaryModelParams{0.5, 0.1, -0.2}).validate(), std::domain_error);
}

TEST_CASE("side information ordering moves through all four classes") {
    CHECK(classify_side_info(at_beta(0.0)) == SideInfoOrder::markov_abe);
    CHECK(classify_side_info(at_beta(0.2)) == SideInfoOrder::markov_abe);
    CHECK(classify_side_info(at_beta(0.21)) == SideInfoOrder::less_noisy);
    CHECK(classify_side_info(at_beta(0.36)) == SideInfoOrder::less_noisy);
    CHECK(classify_side_info(at_beta(0.3601)) == SideInfoOrder::more_capable);
    CHECK(classify_side_info(at_beta(0.4689955)) == SideInfoOrder::more_capable);
    CHECK(classify_side_info(at_beta(0.469)) == SideInfoOrder::unordered);
    CHECK(classify_side_info(at_beta(1.0)) == SideInfoOrder::unordered);
    CHECK(to_string(SideInfoOrder::markov_abe) == std::string("markov_ABE"));
    CHECK(to_string(SideInfoOrder::unordered) == std::string("unordered"));
}

TEST_CASE("uncoded transmission equivocation is closed form") {
    CHECK(analog_equivocation(at_beta(0.5)) ==
          doctest::Approx(0.2579141414502826).epsilon(1e-13));
    for (double beta : {0.0, 0.3, 0.7, 1.0}) {
        CHECK(analog_equivocation(at_beta(beta)) ==
              doctest::Approx(analog_equivocation(at_beta(0.5))).epsilon(1e-15));
    }
    // formula is symmetric in the two crossovers
    CHECK(analog_equivocation({0.5, 0.07, 0.23}) ==
          doctest::Approx(analog_equivocation({0.5, 0.23, 0.07})).epsilon(1e-14));
}

TEST_CASE("separation scheme reproduces frozen optimization values") {
    CHECK(digital_equivocation(at_beta(1.0)) == doctest::Approx(0.0560261254).epsilon(1e-8));
    CHECK(digital_equivocation(at_beta(0.999)) ==
          doctest::Approx(0.0566778505).epsilon(1e-8));
    CHECK(digital_equivocation(at_beta(0.699)) ==
          doctest::Approx(0.2587563272).epsilon(1e-8));
    CHECK(digital_equivocation(at_beta(0.599)) ==
          doctest::Approx(0.3407633346).epsilon(1e-8));
    CHECK(digital_equivocation(at_beta(0.3)) ==
          doctest::Approx(0.4689955935892812).epsilon(1e-9));
    const OptimizedEquivocation detail = digital_equivocation_detail(at_beta(1.0));
    CHECK(detail.delta == doctest::Approx(0.0560261254).epsilon(1e-8));
    CHECK(detail.u == doctest::Approx(0.054101).epsilon(2e-3));
    CHECK(detail.q == doctest::Approx(0.054101).epsilon(2e-3));
}

TEST_CASE("converse bound reproduces frozen optimization values") {
    CHECK(outer_equivocation(at_beta(1.0)) ==
          doctest::Approx(0.2579141414502826).epsilon(1e-9));
    CHECK(outer_equivocation(at_beta(0.999)) == doctest::Approx(0.2581243885).epsilon(1e-8));
    CHECK(outer_equivocation(at_beta(0.699)) == doctest::Approx(0.3437556277).epsilon(1e-8));
    CHECK(outer_equivocation(at_beta(0.599)) == doctest::Approx(0.3880817003).epsilon(1e-8));
    CHECK(outer_equivocation(at_beta(0.3)) ==
          doctest::Approx(0.4689955935892812).epsilon(1e-9));
    // at full erasure the bound has a kink maximum at u = zeta, q = 1/2
    const OptimizedEquivocation detail = outer_equivocation_detail(at_beta(1.0));
    CHECK(detail.u == doctest::Approx(0.1).epsilon(1e-6));
    CHECK(detail.q == doctest::Approx(0.5).epsilon(1e-6));
    const OptimizedEquivocation low = outer_equivocation_detail(at_beta(0.3));
    CHECK(low.u == doctest::Approx(0.5).epsilon(1e-6));
}

TEST_CASE("layered scheme reproduces frozen optimization values") {
    CHECK(hybrid_equivocation(at_beta(1.0)) ==
          doctest::Approx(0.2579141414502826).epsilon(1e-9));
    CHECK(hybrid_equivocation(at_beta(0.999)) ==
          doctest::Approx(0.2579141414502826).epsilon(1e-7));
    CHECK(hybrid_equivocation(at_beta(0.699)) == doctest::Approx(0.279354920).epsilon(1e-6));
    CHECK(hybrid_equivocation(at_beta(0.599)) == doctest::Approx(0.339314183).epsilon(1e-6));
    CHECK(hybrid_equivocation(at_beta(0.3)) ==
          doctest::Approx(0.4689955935892812).epsilon(1e-9));
    const HybridEquivocation detail = hybrid_equivocation_detail(at_beta(1.0));
    CHECK(detail.u == doctest::Approx(0.0).epsilon(1e-6));
    const HybridEquivocation mid = hybrid_equivocation_detail(at_beta(0.699));
    CHECK(mid.u == doctest::Approx(0.0644).epsilon(2e-3));
}

TEST_CASE("the layered scheme beats separation under heavy erasure") {
    // the counterexample to separation: uncoded and layered transmission keep
    // a quarter bit of equivocation where the separation scheme collapses
    const double digital = digital_equivocation(at_beta(1.0));
    const double analog = analog_equivocation(at_beta(1.0));
    const double hybrid = hybrid_equivocation(at_beta(1.0));
    CHECK(analog > digital + 0.2);
    CHECK(hybrid > digital + 0.2);
}

TEST_CASE("a perfectly informed eavesdropper leaves zero equivocation") {
    const BinaryModelParams m{0.7, 0.0, 0.1};
    CHECK(analog_equivocation(m) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(digital_equivocation(m) == doctest::Approx(0.0).epsilon(1e-9));
    CHECK(outer_equivocation(m) == doctest::Approx(0.0).epsilon(1e-9));
    CHECK(hybrid_equivocation(m) == doctest::Approx(0.0).epsilon(1e-9));
}

TEST_CASE("hybrid joint distribution has the advertised structure") {
    const BinaryModelParams m{0.5, 0.1, 0.1};
    const FiniteJointPmf p = hybrid_joint_pmf(m, 0.2);
    CHECK(p.variables().size() == 9);
    CHECK(p.atom_count() == 768);
    CHECK(entropy(p, {"A", "E", "B", "V", "W", "U", "X", "Y", "Z"}) ==
          doctest::Approx(4.6599192820659239).epsilon(1e-12));
    CHECK(entropy(p, {"A"}) == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(conditional_entropy(p, {"E"}, {"A"}) == doctest::Approx(h2(0.1)).epsilon(1e-12));
    CHECK(conditional_entropy(p, {"B"}, {"A"}) == doctest::Approx(h2(0.5)).epsilon(1e-12));
    CHECK(conditional_entropy(p, {"Z"}, {"X"}) == doctest::Approx(h2(0.1)).epsilon(1e-12));
    CHECK(conditional_entropy(p, {"U"}, {"V"}) == doctest::Approx(h2(0.2)).epsilon(1e-12));
    CHECK(conditional_entropy(p, {"X"}, {"V", "A"}) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(conditional_entropy(p, {"Y"}, {"X"}) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(mutual_information(p, {"A"}, {"V"}) == doctest::Approx(0.0).epsilon(1e-12));

    // erasure symbol sits at index 1 and carries mass beta
    const auto& vars = p.variables();
    const std::size_t b_pos = p.index_of("B");
    std::size_t stride = 1;
    for (std::size_t i = vars.size(); i-- > b_pos + 1;) stride *= vars[i].cardinality;
    double erased = 0.0;
    for (std::size_t idx = 0; idx < p.atom_count(); ++idx) {
        if ((idx / stride) % vars[b_pos].cardinality == 1) erased += p.mass()[idx];
    }
    CHECK(erased == doctest::Approx(0.5).epsilon(1e-13));

    CHECK_THROWS_AS(hybrid_joint_pmf(m, 0.6), std::domain_error);
    CHECK_THROWS_AS(hybrid_joint_pmf(m, -0.1), std::domain_error);
}

TEST_CASE("scheme names round trip") {
    CHECK(binary_scheme_from_string("outer") == BinaryScheme::outer);
    CHECK(binary_scheme_from_string("hybrid") == BinaryScheme::hybrid);
    CHECK(to_string(BinaryScheme::digital) == std::string("digital"));
    CHECK_THROWS_AS(binary_scheme_from_string("优"), std::invalid_argument);
    CHECK_THROWS_AS(binary_scheme_from_string("optimal"), std::invalid_argument);
}

TEST_CASE("beta sweeps are scheme-major and thread-count invariant") {
    const BinaryModelParams base{0.0, 0.1, 0.1};
    const std::vector<double> grid = linear_grid(0.0, 1.0, 2);
    const std::vector<BinaryScheme> schemes = {BinaryScheme::analog, BinaryScheme::digital};
    const auto curves = binary_sweep(base, grid, schemes, 1);
    REQUIRE(curves.size() == 2);
    CHECK(curves[0].scheme == "analog");
    CHECK(curves[1].scheme == "digital");
    for (const auto& curve : curves) {
        REQUIRE(curve.samples.size() == grid.size());
        for (std::size_t i = 0; i < grid.size(); ++i) CHECK(curve.samples[i].x == grid[i]);
    }
    const auto threaded = binary_sweep(base, grid, schemes, 3);
    for (std::size_t s = 0; s < curves.size(); ++s)
        for (std::size_t i = 0; i < grid.size(); ++i)
            CHECK(curves[s].samples[i].value == threaded[s].samples[i].value);

    CHECK_THROWS_AS(binary_sweep(base, {0.5, 0.2}, schemes, 1), std::invalid_argument);
    CHECK_THROWS_AS(binary_sweep(base, {0.5, 1.5}, schemes, 1), std::domain_error);
}
