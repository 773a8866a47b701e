#pragma once

#include "curvelab/curves.hpp"
#include "curvelab/errors.hpp"
#include "curvelab/geometry.hpp"
#include "curvelab/surface.hpp"

#include <vector>

namespace curvelab {

/// A complementary region of alpha u beta.
struct Region {
    /// Number of arcs of alpha u beta (between crossings) on the boundary,
    /// counted with multiplicity.
    int boundary_edges = 0;
    int euler_characteristic = 0;
    /// Side words of the boundary components pushed into the region.
    std::vector<std::vector<int>> boundary_words;

    bool is_disk() const { return euler_characteristic == 1; }
};

/// Two curves in minimal position together with the census of the
/// complement of their union.
struct MinimalConfiguration {
    NormalCurve alpha;
    NormalCurve beta;
    Weight crossings = 0;
    std::vector<Region> regions;

    int euler_sum() const;
    bool has_bigon() const;
};

Weight geometric_intersection(const Surface& surface, const NormalCurve& alpha, const NormalCurve& beta);

bool is_disjoint(const Surface& surface, const NormalCurve& alpha, const NormalCurve& beta);

/// True when every complementary region of alpha u beta is a disk. Throws
/// InvalidInput for disjoint pairs.
bool fills(const Surface& surface, const NormalCurve& alpha, const NormalCurve& beta);

MinimalConfiguration minimal_configuration(const Surface& surface, const NormalCurve& alpha,
                                           const NormalCurve& beta);

namespace detail {

struct ChordCrossing {
    std::size_t a_chord;
    geometry::Real t;
    std::size_t b_chord;
    geometry::Real u;
    int sign; ///< sign of dir(a) x dir(b)
};

/// Transverse crossings between the chords of two distinct geodesics. Must be
/// called inside a PrecisionScope at least as fine as either geodesic.
std::vector<ChordCrossing> chord_crossings(const geometry::Geodesic& a, const geometry::Geodesic& b);

/// Runs f(ga, gb) on the geodesics of alpha and beta, refining precision on
/// degeneracies.
template <class F>
auto with_geodesics(const Surface& surface, const NormalCurve& alpha, const NormalCurve& beta, F&& f) {
    unsigned digits = 0;
    for (int attempt = 0;; ++attempt) {
        auto ga = geodesic_of(surface, alpha, digits);
        auto gb = geodesic_of(surface, beta, digits);
        const unsigned working = std::max(ga->digits, gb->digits);
        try {
            geometry::PrecisionScope scope(working);
            return f(*ga, *gb);
        } catch (const DegenerateGeometry&) {
            if (attempt >= 3) throw;
            digits = 2 * working;
        }
    }
}

} // namespace detail

} // namespace curvelab
