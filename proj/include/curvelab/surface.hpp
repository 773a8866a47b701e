#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace curvelab {

using Weight = std::int64_t;

/// One side of an oriented triangle. `agrees` is true when the side runs in
/// the canonical direction of its edge.
struct TriangleSide {
    int edge = -1;
    bool agrees = true;
};

/// Triangle with sides listed counter-clockwise: side i runs from corner i
/// to corner i+1.
struct Triangle {
    std::array<TriangleSide, 3> sides;
};

/// Where an edge is glued: triangle index and side index.
struct SideRef {
    int triangle = -1;
    int side = -1;
    friend bool operator==(const SideRef&, const SideRef&) = default;
};

/// The standard one-vertex triangulation ("std-v1") of the closed orientable
/// surface of genus g.
///
/// It comes from the 4g-gon with boundary word a1 b1 a1^-1 b1^-1 ... and
/// polygon vertices v_0..v_{4g-1}; polygon side j runs from v_j to v_{j+1}
/// and is glued to side j^2 (xor). The polygon is fanned from v_0 into
/// triangles t_k = (v_0, v_k, v_{k+1}), k = 1..4g-2.
///
/// Edge ids: 2i is the side pair (4i, 4i+2), 2i+1 the pair (4i+1, 4i+3),
/// and 2g + (k-2) is the diagonal v_0 v_k for k = 2..4g-2.
class Surface {
public:
    explicit Surface(int genus);

    int genus() const { return genus_; }
    int num_edges() const { return 6 * genus_ - 3; }
    int num_triangles() const { return 4 * genus_ - 2; }
    int num_polygon_sides() const { return 4 * genus_; }
    int vertex_count() const { return 1; }
    int euler_characteristic() const { return vertex_count() - num_edges() + num_triangles(); }

    const std::vector<Triangle>& triangles() const { return triangles_; }
    const Triangle& triangle(int t) const { return triangles_[t]; }

    /// The two places edge e is glued; first() is the canonical direction.
    const std::array<SideRef, 2>& appearances(int edge) const { return appearances_[edge]; }

    /// Polygon side index of a triangle side, or -1 for a diagonal.
    int polygon_side(SideRef ref) const { return polygon_side_[ref.triangle][ref.side]; }

    /// Triangle side occupied by polygon side j.
    SideRef polygon_side_ref(int j) const { return polygon_ref_[j]; }

    int edge_of_polygon_side(int j) const;
    int edge_of_diagonal(int k) const { return 2 * genus_ + (k - 2); }

    static int paired_side(int j) { return j ^ 2; }

    friend bool operator==(const Surface& a, const Surface& b) { return a.genus_ == b.genus_; }

private:
    int genus_;
    std::vector<Triangle> triangles_;
    std::vector<std::array<SideRef, 2>> appearances_;
    std::vector<std::array<int, 3>> polygon_side_;
    std::vector<SideRef> polygon_ref_;
};

Surface build_surface(int genus);

/// Edge-weight vector of a normal multicurve.
struct NormalCurve {
    std::vector<Weight> weights;

    Weight total_weight() const;
    friend bool operator==(const NormalCurve&, const NormalCurve&) = default;
    friend auto operator<=>(const NormalCurve&, const NormalCurve&) = default;
};

struct ValidityReport {
    bool normal = false;
    bool connected = false;
    bool essential = false;
    int components = 0;
    /// First violated constraint, empty when everything holds.
    std::string violation;

    bool is_curve() const { return normal && connected && essential; }
};

/// Checks the matching equations, then traces arcs to count components and
/// compares against the vertex link. Throws InvalidInput on a wrong length or
/// a negative entry.
ValidityReport validate_curve(const Surface& surface, std::span<const Weight> weights);

/// Normal coordinates of the link of the unique vertex.
NormalCurve vertex_link(const Surface& surface);

/// Splits a normal multicurve into connected components, in order of their
/// first point (lowest edge, lowest position).
std::vector<NormalCurve> trace_components(const Surface& surface, std::span<const Weight> weights);

/// Cyclic sequence of polygon sides crossed (exit side of the polygon) when
/// following a connected normal curve. Letter j means "leave the polygon
/// through side j and re-enter through side j^2".
std::vector<int> side_word(const Surface& surface, const NormalCurve& curve);

/// Checked addition for weights.
Weight checked_add(Weight a, Weight b);

} // namespace curvelab
