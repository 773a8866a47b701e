#pragma once

#include "curvelab/surface.hpp"

#include <boost/multiprecision/mpfr.hpp>

#include <span>
#include <vector>

namespace curvelab::geometry {

using Real = boost::multiprecision::mpfr_float;

struct Point {
    Real x;
    Real y;
};

/// A piece of a closed geodesic inside the fundamental polygon, oriented
/// from `entry` (on polygon side entry_side) to `exit` (on exit_side).
/// `from`/`to` are the ideal endpoints of the full geodesic line.
struct Chord {
    int entry_side = -1;
    int exit_side = -1;
    Point from;
    Point to;
    Point entry;
    Point exit;
    Real entry_param; ///< position on entry_side, 0 at v_side, 1 at v_side+1
    Real exit_param;
};

/// Closed geodesic of a conjugacy class, cut into chords of the fundamental
/// 4g-gon (Klein model). The cutting sequence is chords[k].exit_side.
struct Geodesic {
    int genus = 0;
    unsigned digits = 0;
    std::vector<Chord> chords;

    std::vector<int> cutting_sequence() const;
};

/// True when both are the same unoriented closed geodesic.
bool same_geodesic(const Geodesic& a, const Geodesic& b);

/// Cyclically and freely reduced copy of a side word (letter j inverts j^2).
std::vector<int> reduce_word(std::span<const int> word);

/// Realizes the closed geodesic freely homotopic to the loop with the given
/// side word on the fixed genus-g structure. Throws InvalidInput when the
/// loop is null-homotopic and DegenerateGeometry when the geodesic can not be
/// traced robustly with the requested digits.
Geodesic realize(int genus, std::span<const int> word, unsigned digits);

/// Retries `realize` with growing precision until no degeneracy is raised.
Geodesic realize_adaptive(int genus, std::span<const int> word);

/// Edge weights of the geodesic, i.e. the canonical normal coordinates.
NormalCurve normal_coordinates(const Surface& surface, const Geodesic& g);


/// Working precision for tracing this loop, from the size of its trace.
unsigned digits_for_word(int genus, std::span<const int> word);

/// Klein coordinates of polygon vertex v_j at the given precision.
Point polygon_vertex(int genus, int j);

/// Orientation of (b - a) x (c - a).
Real cross(const Point& a, const Point& b, const Point& c);

/// Segment crossing parameters (t along p, u along q) when the open segments
/// cross transversally. Throws DegenerateGeometry on near-degenerate
/// configurations relative to `eps`.
struct Crossing {
    Real t;
    Real u;
    int sign; ///< sign of dir(p) x dir(q)
};
bool segment_crossing(const Point& p0, const Point& p1, const Point& q0, const Point& q1, const Real& eps,
                      Crossing& out);

/// Relative tolerance used for degeneracy tests at the current precision.
Real tolerance();

/// RAII precision scope for mpfr_float defaults.
class PrecisionScope {
public:
    explicit PrecisionScope(unsigned digits);
    ~PrecisionScope();
    PrecisionScope(const PrecisionScope&) = delete;
    PrecisionScope& operator=(const PrecisionScope&) = delete;

private:
    unsigned saved_;
};

} // namespace curvelab::geometry
