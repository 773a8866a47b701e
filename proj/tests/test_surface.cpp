#include "curvelab/curves.hpp"
#include "curvelab/errors.hpp"
#include "curvelab/surface.hpp"

#include "bigon_oracle.hpp"
#include "normal_oracle.hpp"

#include <doctest.h>

#include <numeric>

using namespace curvelab;

namespace {

NormalCurve add(const NormalCurve& a, const NormalCurve& b) {
    NormalCurve c = a;
    for (std::size_t i = 0; i < c.weights.size(); ++i) c.weights[i] += b.weights[i];
    return c;
}

} // namespace

TEST_SUITE("surface") {

TEST_CASE("counts of the standard triangulation") {
    const Surface s2(2), s3(3);
    CHECK(s2.num_edges() == 9);
    CHECK(s2.num_triangles() == 6);
    CHECK(s2.euler_characteristic() == -2);
    CHECK(s3.num_edges() == 15);
    CHECK(s3.num_triangles() == 10);
    CHECK(s3.euler_characteristic() == -4);
    CHECK_THROWS_AS(Surface(1), InvalidInput);
}

TEST_CASE("every edge is glued twice, once each way") {
    for (int g = 2; g <= 5; ++g) {
        const Surface s(g);
        std::vector<int> seen(s.num_edges(), 0), forward(s.num_edges(), 0);
        for (const auto& t : s.triangles()) {
            for (const auto& side : t.sides) {
                ++seen[side.edge];
                forward[side.edge] += side.agrees;
            }
        }
        for (int e = 0; e < s.num_edges(); ++e) {
            CHECK(seen[e] == 2);
            CHECK(forward[e] == 1);
        }
    }
}

TEST_CASE("validate: zero vector, vertex link, chain curve") {
    const Surface s(2);
    const auto zero = validate_curve(s, std::vector<Weight>(9, 0));
    CHECK(zero.normal);
    CHECK(zero.components == 0);
    CHECK_FALSE(zero.is_curve());

    const auto link = vertex_link(s);
    CHECK(oracle::is_vertex_link(link.weights));
    const auto r = validate_curve(s, link.weights);
    CHECK(r.normal);
    CHECK(r.connected);
    CHECK_FALSE(r.essential);

    const auto c1 = humphries_curves(s)[0];
    const auto rc = validate_curve(s, c1.weights);
    CHECK(rc.is_curve());
    CHECK(oracle::count_components(s, c1.weights) == 1);
}

TEST_CASE("validate: wrong length and negative entries are rejected") {
    const Surface s(2);
    CHECK_THROWS_AS(validate_curve(s, std::vector<Weight>(8, 0)), InvalidInput);
    std::vector<Weight> w(9, 0);
    w[3] = -1;
    CHECK_THROWS_AS(validate_curve(s, w), InvalidInput);
}

TEST_CASE("validate agrees with a brute-force checker on all entries <= 4") {
    const Surface s(2);
    std::vector<Weight> w(9, 0);
    long checked = 0, curves = 0, mismatches = 0;
    for (;;) {
        const auto r = validate_curve(s, w);
        const bool normal = oracle::satisfies_matching(s, w);
        bool ok = r.normal == normal;
        if (ok && normal) {
            const int k = oracle::count_components(s, w);
            ok = r.components == k && r.connected == (k == 1) &&
                 r.is_curve() == (k == 1 && !oracle::is_vertex_link(w));
            curves += r.is_curve();
        }
        mismatches += !ok;
        ++checked;
        int i = 0;
        while (i < 9 && w[i] == 4) w[i++] = 0;
        if (i == 9) break;
        ++w[i];
    }
    CHECK(checked == 1953125);
    CHECK(mismatches == 0);
    CHECK(curves > 0);
}

TEST_CASE("trace_components") {
    const Surface s(2);
    const auto h = humphries_curves(s);
    const auto one = trace_components(s, h[0].weights);
    REQUIRE(one.size() == 1);
    CHECK(one[0] == h[0]);

    const auto two = trace_components(s, add(h[0], h[2]).weights);
    REQUIRE(two.size() == 2);
    CHECK(((two[0] == h[0] && two[1] == h[2]) || (two[0] == h[2] && two[1] == h[0])));

    const auto parallel = trace_components(s, add(h[0], h[0]).weights);
    REQUIRE(parallel.size() == 2);
    CHECK(parallel[0] == h[0]);
    CHECK(parallel[1] == h[0]);
}

TEST_CASE("side words of curves are nontrivial in the surface group") {
    // essential means not null-homotopic; the vertex link is excluded
    for (int g = 2; g <= 3; ++g) {
        const Surface s(g);
        for (const auto& c : humphries_curves(s)) {
            CHECK_FALSE(oracle::dehn_reduce(g, side_word(s, c)).empty());
        }
    }
    CHECK(oracle::dehn_reduce(2, oracle::vertex_relator(2)).empty());
}

TEST_CASE("chain curves are canonical and have the chain pattern") {
    for (int g = 2; g <= 4; ++g) {
        const Surface s(g);
        const auto h = humphries_curves(s);
        REQUIRE(h.size() == static_cast<std::size_t>(2 * g + 1));
        for (std::size_t i = 0; i < h.size(); ++i) {
            CHECK(is_canonical(s, h[i]));
            for (std::size_t j = i + 1; j < h.size(); ++j) {
                CHECK(oracle::intersection(s, h[i], h[j]) == (j == i + 1 ? 1 : 0));
            }
        }
    }
}

TEST_CASE("canonical forms pick one vector per isotopy class") {
    const Surface s(2);
    const auto h = humphries_curves(s);
    std::vector<Weight> w(9, 0);
    int noncanonical = 0;
    for (;;) {
        if (std::accumulate(w.begin(), w.end(), Weight{0}) <= 8 && validate_curve(s, w).is_curve()) {
            const NormalCurve raw{w};
            const NormalCurve c = canonical_form(s, raw);
            CHECK(canonical_form(s, c) == c);
            if (!(c == raw)) {
                ++noncanonical;
                // isotopic curves meet every test curve equally often
                CHECK(oracle::intersection(s, raw, c) == 0);
                for (const auto& x : h) CHECK(oracle::intersection(s, raw, x) == oracle::intersection(s, c, x));
            }
        }
        int i = 0;
        while (i < 9 && w[i] == 4) w[i++] = 0;
        if (i == 9) break;
        ++w[i];
    }
    CHECK(noncanonical == 2); // out of 26 curve vectors in range
}

} // TEST_SUITE
