#include "curvelab/intersection.hpp"

#include "curvelab/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace curvelab {

namespace detail {

namespace {

struct FastSegment {
    double x0, y0, x1, y1;
    double minx, maxx, miny, maxy;
};

FastSegment fast(const geometry::Chord& c) {
    FastSegment s{c.entry.x.convert_to<double>(), c.entry.y.convert_to<double>(), c.exit.x.convert_to<double>(),
                  c.exit.y.convert_to<double>(), 0, 0, 0, 0};
    s.minx = std::min(s.x0, s.x1);
    s.maxx = std::max(s.x0, s.x1);
    s.miny = std::min(s.y0, s.y1);
    s.maxy = std::max(s.y0, s.y1);
    return s;
}

double orient(double ax, double ay, double bx, double by, double cx, double cy) {
    return (bx - ax) * (cy - ay) - (by - ay) * (cx - ax);
}

// -1: certainly disjoint, 1: certainly crossing, 0: undecided in doubles.
int quick_test(const FastSegment& p, const FastSegment& q) {
    constexpr double slack = 1e-9;
    if (p.maxx < q.minx - slack || q.maxx < p.minx - slack || p.maxy < q.miny - slack || q.maxy < p.miny - slack) {
        return -1;
    }
    const double o1 = orient(p.x0, p.y0, p.x1, p.y1, q.x0, q.y0);
    const double o2 = orient(p.x0, p.y0, p.x1, p.y1, q.x1, q.y1);
    const double o3 = orient(q.x0, q.y0, q.x1, q.y1, p.x0, p.y0);
    const double o4 = orient(q.x0, q.y0, q.x1, q.y1, p.x1, p.y1);
    constexpr double margin = 1e-10;
    if (std::abs(o1) < margin || std::abs(o2) < margin || std::abs(o3) < margin || std::abs(o4) < margin) return 0;
    const bool crosses = (o1 > 0) != (o2 > 0) && (o3 > 0) != (o4 > 0);
    return crosses ? 1 : -1;
}

} // namespace

std::vector<ChordCrossing> chord_crossings(const geometry::Geodesic& a, const geometry::Geodesic& b) {
    const geometry::Real eps = geometry::tolerance();
    std::vector<FastSegment> fa;
    std::vector<FastSegment> fb;
    for (const auto& c : a.chords) fa.push_back(fast(c));
    for (const auto& c : b.chords) fb.push_back(fast(c));
    std::vector<ChordCrossing> out;
    for (std::size_t i = 0; i < fa.size(); ++i) {
        for (std::size_t j = 0; j < fb.size(); ++j) {
            if (quick_test(fa[i], fb[j]) < 0) continue;
            geometry::Crossing x;
            const auto& ca = a.chords[i];
            const auto& cb = b.chords[j];
            if (geometry::segment_crossing(ca.entry, ca.exit, cb.entry, cb.exit, eps, x)) {
                out.push_back({i, x.t, j, x.u, x.sign});
            }
        }
    }
    return out;
}

} // namespace detail

namespace {

// Planar arrangement of both geodesics inside the fundamental polygon, with
// faces glued across paired sides into complementary regions.
class Arrangement {
public:
    Arrangement(int genus, const geometry::Geodesic& a, const geometry::Geodesic& b,
                const std::vector<detail::ChordCrossing>& crossings)
        : genus_(genus) {
        const int sides = 4 * genus;
        for (int j = 0; j < sides; ++j) nodes_.push_back(Node{NodeKind::Vertex});
        side_points_.resize(sides);

        for (const auto& x : crossings) {
            Node n{NodeKind::Crossing};
            n.sign = x.sign;
            nodes_.push_back(n);
        }
        // crossing events along each chord: (param, crossing index)
        const geometry::Geodesic* geos[2] = {&a, &b};
        for (int q = 0; q < 2; ++q) {
            std::vector<std::vector<std::pair<const geometry::Real*, int>>> events(geos[q]->chords.size());
            for (std::size_t c = 0; c < crossings.size(); ++c) {
                const auto& x = crossings[c];
                if (q == 0) {
                    events[x.a_chord].push_back({&x.t, static_cast<int>(c)});
                } else {
                    events[x.b_chord].push_back({&x.u, static_cast<int>(c)});
                }
            }
            curve_first_dart_[q] = static_cast<int>(darts_.size());
            curve_has_crossing_[q] = !crossings.empty();
            for (std::size_t k = 0; k < geos[q]->chords.size(); ++k) {
                auto& ev = events[k];
                std::sort(ev.begin(), ev.end(), [](const auto& l, const auto& r) { return *l.first < *r.first; });
                const auto& chord = geos[q]->chords[k];
                const int entry = add_endpoint(chord.entry_side, chord.entry_param);
                const int exit = add_endpoint(chord.exit_side, chord.exit_param);
                std::vector<int> seq{entry};
                for (const auto& e : ev) seq.push_back(sides + e.second);
                seq.push_back(exit);
                int prev_back = -1;
                for (std::size_t p = 0; p + 1 < seq.size(); ++p) {
                    const int fwd = add_dart(seq[p], seq[p + 1], true);
                    const int back = add_dart(seq[p + 1], seq[p], true);
                    darts_[fwd].twin = back;
                    darts_[back].twin = fwd;
                    Node& origin = nodes_[seq[p]];
                    if (origin.kind == NodeKind::Crossing) {
                        (q == 0 ? origin.a_plus : origin.b_plus) = fwd;
                        (q == 0 ? origin.a_minus : origin.b_minus) = prev_back;
                    } else {
                        origin.chord_out = fwd;
                    }
                    prev_back = back;
                }
                nodes_[exit].chord_out = prev_back;
            }
        }
        for (std::size_t n = 0; n < nodes_.size(); ++n) {
            Node& node = nodes_[n];
            if (node.kind != NodeKind::Crossing) continue;
            if (node.sign > 0) {
                node.ccw = {node.a_plus, node.b_plus, node.a_minus, node.b_minus};
            } else {
                node.ccw = {node.a_plus, node.b_minus, node.a_minus, node.b_plus};
            }
        }
        // polygon sides, forward direction only (interior on the left)
        side_darts_.resize(sides);
        for (int j = 0; j < sides; ++j) {
            auto& pts = side_points_[j];
            std::sort(pts.begin(), pts.end(), [&](int l, int r) { return params_[l] < params_[r]; });
            for (std::size_t i = 0; i < pts.size(); ++i) nodes_[pts[i]].side_index = static_cast<int>(i);
            std::vector<int> seq{j};
            seq.insert(seq.end(), pts.begin(), pts.end());
            seq.push_back((j + 1) % sides);
            for (std::size_t p = 0; p + 1 < seq.size(); ++p) {
                const int d = add_dart(seq[p], seq[p + 1], false);
                nodes_[seq[p]].fwd = d;
                side_darts_[j].push_back(d);
            }
        }
        trace_faces();
        build_regions();
    }

    std::vector<Region> regions() const { return regions_; }

private:
    enum class NodeKind { Vertex, Crossing, Endpoint };

    struct Node {
        NodeKind kind;
        int sign = 0;
        int a_plus = -1, a_minus = -1, b_plus = -1, b_minus = -1;
        std::array<int, 4> ccw{-1, -1, -1, -1};
        int fwd = -1;
        int chord_out = -1;
        int side = -1;
        int side_index = -1;
    };

    struct Dart {
        int origin;
        int target;
        bool curve;
        int twin = -1;
        int face = -1;
    };

    int add_endpoint(int side, const geometry::Real& param) {
        const int id = static_cast<int>(nodes_.size());
        Node n{NodeKind::Endpoint};
        n.side = side;
        nodes_.push_back(n);
        params_.resize(nodes_.size());
        params_[id] = param;
        side_points_[side].push_back(id);
        return id;
    }

    int add_dart(int from, int to, bool curve) {
        darts_.push_back(Dart{from, to, curve});
        return static_cast<int>(darts_.size()) - 1;
    }

    int next(int d) const {
        const Node& n = nodes_[darts_[d].target];
        switch (n.kind) {
        case NodeKind::Crossing: {
            const int tw = darts_[d].twin;
            const auto pos = std::find(n.ccw.begin(), n.ccw.end(), tw) - n.ccw.begin();
            return n.ccw[(pos + 3) % 4];
        }
        case NodeKind::Endpoint:
            return darts_[d].curve ? n.fwd : n.chord_out;
        case NodeKind::Vertex:
            return n.fwd;
        }
        return -1;
    }

    // Endpoint identified with `node` across the side pairing.
    int partner(int node) const {
        const Node& n = nodes_[node];
        const int other = Surface::paired_side(n.side);
        const auto& pts = side_points_[other];
        return pts[pts.size() - 1 - static_cast<std::size_t>(n.side_index)];
    }

    void trace_faces() {
        int faces = 0;
        for (std::size_t d = 0; d < darts_.size(); ++d) {
            if (darts_[d].face >= 0) continue;
            int cur = static_cast<int>(d);
            while (darts_[cur].face < 0) {
                darts_[cur].face = faces;
                cur = next(cur);
            }
            ++faces;
        }
        face_count_ = faces;
    }

    int find(std::vector<int>& uf, int x) const {
        while (uf[x] != x) x = uf[x] = uf[uf[x]];
        return x;
    }

    void build_regions() {
        const int sides = 4 * genus_;
        std::vector<int> uf(face_count_);
        std::iota(uf.begin(), uf.end(), 0);
        auto unite = [&](int x, int y) { uf[find(uf, x)] = find(uf, y); };
        int glued_pieces = 0;
        for (int j = 0; j < sides; ++j) {
            const int other = Surface::paired_side(j);
            if (j > other) continue;
            const auto& here = side_darts_[j];
            const auto& there = side_darts_[other];
            for (std::size_t i = 0; i < here.size(); ++i) {
                unite(darts_[here[i]].face, darts_[there[there.size() - 1 - i]].face);
                ++glued_pieces;
            }
        }
        // corners at the single vertex
        const int corner_face = darts_[side_darts_[0].back()].face;
        for (int j = 0; j < sides; ++j) unite(darts_[side_darts_[j].back()].face, corner_face);

        std::vector<int> region_of(face_count_, -1);
        int count = 0;
        for (int f = 0; f < face_count_; ++f) {
            const int root = find(uf, f);
            if (region_of[root] < 0) region_of[root] = count++;
            region_of[f] = region_of[root];
        }
        regions_.assign(count, Region{});
        std::vector<int> faces_in(count, 0);
        for (int f = 0; f < face_count_; ++f) ++faces_in[region_of[f]];
        std::vector<int> pieces_in(count, 0);
        for (int j = 0; j < sides; ++j) {
            for (int d : side_darts_[j]) ++pieces_in[region_of[darts_[d].face]];
        }
        const int vertex_region = region_of[corner_face];
        for (int r = 0; r < count; ++r) {
            regions_[r].euler_characteristic = faces_in[r] - pieces_in[r] / 2 + (r == vertex_region ? 1 : 0);
        }
        (void)glued_pieces;

        // boundary arcs and boundary loops
        std::vector<bool> seen(darts_.size(), false);
        for (std::size_t d = 0; d < darts_.size(); ++d) {
            if (!darts_[d].curve) continue;
            const int r = region_of[darts_[d].face];
            if (nodes_[darts_[d].origin].kind == NodeKind::Crossing) ++regions_[r].boundary_edges;
            if (seen[d]) continue;
            std::vector<int> word;
            int cur = static_cast<int>(d);
            while (!seen[cur]) {
                seen[cur] = true;
                const Node& end = nodes_[darts_[cur].target];
                if (end.kind == NodeKind::Crossing) {
                    cur = next(cur);
                } else {
                    word.push_back(end.side);
                    cur = nodes_[partner(darts_[cur].target)].chord_out;
                }
            }
            regions_[r].boundary_words.push_back(std::move(word));
        }
        for (int q = 0; q < 2; ++q) {
            if (curve_has_crossing_[q]) continue;
            const int fwd = curve_first_dart_[q];
            ++regions_[region_of[darts_[fwd].face]].boundary_edges;
            ++regions_[region_of[darts_[darts_[fwd].twin].face]].boundary_edges;
        }
    }

    int genus_;
    std::vector<Node> nodes_;
    std::vector<Dart> darts_;
    std::vector<geometry::Real> params_;
    std::vector<std::vector<int>> side_points_;
    std::vector<std::vector<int>> side_darts_;
    int face_count_ = 0;
    int curve_first_dart_[2] = {-1, -1};
    bool curve_has_crossing_[2] = {false, false};
    std::vector<Region> regions_;
};

} // namespace

int MinimalConfiguration::euler_sum() const {
    int s = 0;
    for (const auto& r : regions) s += r.euler_characteristic;
    return s;
}

bool MinimalConfiguration::has_bigon() const {
    if (crossings == 0) return false;
    return std::ranges::any_of(regions, [](const Region& r) { return r.is_disk() && r.boundary_edges == 2; });
}

Weight geometric_intersection(const Surface& surface, const NormalCurve& alpha, const NormalCurve& beta) {
    require_curve(surface, alpha, "alpha");
    require_curve(surface, beta, "beta");
    if (alpha == beta) return 0;
    return detail::with_geodesics(surface, alpha, beta, [](const geometry::Geodesic& a, const geometry::Geodesic& b) {
        if (geometry::same_geodesic(a, b)) return Weight{0};
        return static_cast<Weight>(detail::chord_crossings(a, b).size());
    });
}

bool is_disjoint(const Surface& surface, const NormalCurve& alpha, const NormalCurve& beta) {
    return geometric_intersection(surface, alpha, beta) == 0;
}

MinimalConfiguration minimal_configuration(const Surface& surface, const NormalCurve& alpha,
                                           const NormalCurve& beta) {
    require_curve(surface, alpha, "alpha");
    require_curve(surface, beta, "beta");
    if (alpha == beta) throw InvalidInput("minimal configuration needs two distinct curves");
    return detail::with_geodesics(surface, alpha, beta, [&](const geometry::Geodesic& a, const geometry::Geodesic& b) {
        if (geometry::same_geodesic(a, b)) throw InvalidInput("minimal configuration needs two distinct curves");
        MinimalConfiguration mc;
        mc.alpha = alpha;
        mc.beta = beta;
        auto crossings = detail::chord_crossings(a, b);
        mc.crossings = static_cast<Weight>(crossings.size());
        mc.regions = Arrangement(surface.genus(), a, b, crossings).regions();
        return mc;
    });
}

bool fills(const Surface& surface, const NormalCurve& alpha, const NormalCurve& beta) {
    if (is_disjoint(surface, alpha, beta)) throw InvalidInput("filling is undefined for disjoint curves");
    auto mc = minimal_configuration(surface, alpha, beta);
    return std::ranges::all_of(mc.regions, [](const Region& r) { return r.is_disk(); });
}

} // namespace curvelab
