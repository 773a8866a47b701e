#include "curvelab/curve_complex.hpp"
#include "curvelab/curves.hpp"
#include "curvelab/errors.hpp"
#include "curvelab/intersection.hpp"
#include "curvelab/mcg.hpp"

#include "bigon_oracle.hpp"
#include "corpus.hpp"

#include <doctest.h>

using namespace curvelab;

namespace {

int euler_sum(const MinimalConfiguration& m) {
    int sum = 0;
    for (const auto& r : m.regions) sum += r.euler_characteristic;
    return sum;
}

// c3 against phi^2(c1), phi a product of every chain twist: i = 5, and the
// complement census shows only disks.
NormalCurve filling_partner(const Surface& s) {
    const TwistWord w = parse_twist_word(2, "T1 T3 T5 T2^-1 T4^-1");
    const auto c1 = humphries_curves(s)[0];
    return apply_word(s, compose_words(w, w), c1);
}

} // namespace

TEST_SUITE("intersection") {

TEST_CASE("chain examples") {
    const Surface s(2);
    const auto h = humphries_curves(s);
    CHECK(h.size() == 5);
    CHECK(geometric_intersection(s, h[0], h[0]) == 0);
    CHECK(geometric_intersection(s, h[0], h[1]) == 1);
    CHECK(geometric_intersection(s, h[0], h[2]) == 0);
    CHECK(geometric_intersection(s, h[1], h[1]) == 0);
    CHECK(is_disjoint(s, h[0], h[2]));
    CHECK_FALSE(is_disjoint(s, h[0], h[1]));
    CHECK(is_disjoint(s, h[0], h[0]));
}

TEST_CASE("twist example") {
    const Surface s(2);
    const auto h = humphries_curves(s);
    const auto t = twist(s, h[1], h[0], 3);
    CHECK(geometric_intersection(s, t, h[0]) == 3);
    CHECK(oracle::intersection(s, t, h[0]) == 3);
}

TEST_CASE("fills") {
    const Surface s(2);
    const auto h = humphries_curves(s);
    CHECK_FALSE(fills(s, h[0], h[1]));
    CHECK_THROWS_AS(fills(s, h[0], h[2]), InvalidInput);
    const auto p = filling_partner(s);
    CHECK(geometric_intersection(s, h[2], p) == 5);
    CHECK(fills(s, h[2], p));
    CHECK_FALSE(fills(s, h[0], p));
    const auto m = minimal_configuration(s, h[2], p);
    for (const auto& r : m.regions) CHECK(r.is_disk());
    CHECK(static_cast<Weight>(m.regions.size()) == m.crossings + 2 - 2 * 2);
}

TEST_CASE("euler accounting of minimal configurations") {
    const Surface s(2);
    const auto h = humphries_curves(s);
    const auto m12 = minimal_configuration(s, h[0], h[1]);
    CHECK(m12.crossings == 1);
    CHECK(euler_sum(m12) == -1);
    CHECK_FALSE(m12.has_bigon());
    const auto m13 = minimal_configuration(s, h[0], h[2]);
    CHECK(m13.crossings == 0);
    CHECK(euler_sum(m13) == -2);
    CHECK_THROWS_AS(minimal_configuration(s, h[0], h[0]), InvalidInput);
}

TEST_CASE("agrees with the bigon oracle on a small corpus") {
    const Surface s(2);
    const auto cs = corpus::spread(s, 12, 25);
    for (std::size_t i = 0; i < cs.size(); ++i) {
        for (std::size_t j = i; j < cs.size(); ++j) {
            CHECK(geometric_intersection(s, cs[i], cs[j]) == oracle::intersection(s, cs[i], cs[j]));
        }
    }
}

TEST_CASE("symmetric and at most the overlay count") {
    const Surface s(3);
    const auto h = humphries_curves(s);
    const auto x = apply_word(s, parse_twist_word(3, "T2 T4^-1 T6"), h[2]);
    for (const auto& c : h) {
        const Weight i = geometric_intersection(s, c, x);
        CHECK(i == geometric_intersection(s, x, c));
        CHECK(i <= oracle::overlay_crossings(s, c, x));
    }
}

} // TEST_SUITE
