#include "curvelab/certifier.hpp"
#include "curvelab/errors.hpp"

#include <doctest.h>

using namespace curvelab;

namespace {

BundleDescriptor bundle(int g, int lower) {
    BundleDescriptor b;
    b.genus = g;
    b.monodromy = TwistWord(g, {{1, 1}, {2, -1}});
    b.bounds.word = b.monodromy;
    if (lower > 0) b.bounds = attach_external_lower(b.bounds, lower, "assumed");
    return b;
}

} // namespace

TEST_SUITE("certifier") {

TEST_CASE("standard splitting") {
    CHECK(standard_splitting_stats(2).genus == 5);
    CHECK(standard_splitting_stats(2).minus_chi == 8);
    CHECK(standard_splitting_stats(3).genus == 7);
    CHECK(standard_splitting_stats(3).minus_chi == 12);
    CHECK(standard_splitting_stats(3).always_weakly_reducible);
    CHECK_THROWS_AS(standard_splitting_stats(1), InvalidInput);
}

TEST_CASE("low genus stabilization") {
    const auto v = strongly_irreducible_rule(bundle(2, 9), 5);
    CHECK(v.verdict == Verdict::StabilizationOfStandard);
    CHECK(v.external());
    CHECK(v.strongly_irreducible_min_genus == 6);
    CHECK(strongly_irreducible_rule(bundle(2, 9), 6).verdict == Verdict::NoConclusion);
    for (int h = 2; h < 8; ++h) CHECK(strongly_irreducible_rule(bundle(2, 0), h).verdict == Verdict::NoConclusion);
    CHECK_FALSE(strongly_irreducible_rule(bundle(2, 0), 3).external());
    CHECK_THROWS_AS(strongly_irreducible_rule(bundle(2, 9), 1), InvalidInput);
}

TEST_CASE("uniqueness needs a strict inequality") {
    CHECK(minimal_genus_uniqueness_rule(bundle(2, 9)).verdict == Verdict::UniqueMinimalGenus);
    CHECK(minimal_genus_uniqueness_rule(bundle(2, 8)).verdict == Verdict::NoConclusion);
    CHECK(minimal_genus_uniqueness_rule(bundle(3, 12)).verdict == Verdict::NoConclusion);
}

TEST_CASE("incompressible surfaces") {
    CHECK(incompressible_rule(bundle(2, 5), -2, false).verdict == Verdict::IsotopicToFibre);
    CHECK(incompressible_rule(bundle(2, 2), -2, false).verdict == Verdict::NoConclusion);
    CHECK(incompressible_rule(bundle(2, 2), 0, true).verdict == Verdict::NoIncompressibleTorus);
    CHECK(incompressible_rule(bundle(2, 1), 0, true).verdict == Verdict::NoConclusion);
    CHECK_THROWS_AS(incompressible_rule(bundle(2, 5), 2, false), InvalidInput);
    CHECK_THROWS_AS(incompressible_rule(bundle(2, 5), -3, false), InvalidInput);
    CHECK_THROWS_AS(incompressible_rule(bundle(2, 5), 0, false), InvalidInput);
}

TEST_CASE("high powers") {
    auto b = bundle(2, 0);
    for (int n = 1; n <= 12; ++n) b.power_schedule.emplace_back(n, n);
    b.schedule_provenance = "d grows linearly";
    const auto v = high_power_rule(b);
    CHECK(v.verdict == Verdict::UniqueFromPower);
    CHECK(v.subject_value == 9);
    CHECK(v.external());

    auto flat = bundle(2, 0);
    for (int n = 1; n <= 12; ++n) flat.power_schedule.emplace_back(n, 0);
    CHECK(high_power_rule(flat).verdict == Verdict::NoConclusion);
    CHECK_THROWS_AS(high_power_rule(bundle(2, 0)), InvalidInput);
}

TEST_CASE("contradictory bounds are refused") {
    auto b = bundle(2, 9);
    b.bounds.upper = 2;
    CHECK_THROWS_AS(minimal_genus_uniqueness_rule(b), ContradictoryBounds);
    CHECK_THROWS_AS(strongly_irreducible_rule(b, 5), ContradictoryBounds);
}

TEST_CASE("machine lines") {
    const auto line = strongly_irreducible_rule(bundle(2, 9), 5).to_line();
    CHECK(line.find("rule=low-genus-stabilization") != std::string::npos);
    CHECK(line.find("verdict=stabilization-of-standard") != std::string::npos);
    CHECK(line.find("external-assumption") != std::string::npos);
}

} // TEST_SUITE
