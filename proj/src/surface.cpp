#include "curvelab/surface.hpp"

#include "curvelab/errors.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace curvelab {

Surface::Surface(int genus) : genus_(genus) {
    if (genus < 2) {
        throw InvalidInput("genus must be at least 2, got " + std::to_string(genus));
    }
    const int n = 4 * genus;
    triangles_.resize(n - 2);
    polygon_side_.assign(n - 2, {-1, -1, -1});
    polygon_ref_.assign(n, SideRef{});
    appearances_.assign(num_edges(), {});

    auto place_polygon_side = [&](int t, int s, int j) {
        const int e = edge_of_polygon_side(j);
        const bool first = (j % 4) < 2;
        triangles_[t].sides[s] = {e, first};
        appearances_[e][first ? 0 : 1] = {t, s};
        polygon_side_[t][s] = j;
        polygon_ref_[j] = {t, s};
    };

    for (int k = 1; k <= n - 2; ++k) {
        const int t = k - 1;
        if (k == 1) {
            place_polygon_side(t, 0, 0);
        } else {
            const int e = edge_of_diagonal(k);
            triangles_[t].sides[0] = {e, true};
            appearances_[e][0] = {t, 0};
        }
        place_polygon_side(t, 1, k);
        if (k == n - 2) {
            place_polygon_side(t, 2, n - 1);
        } else {
            const int e = edge_of_diagonal(k + 1);
            triangles_[t].sides[2] = {e, false};
            appearances_[e][1] = {t, 2};
        }
    }
}

int Surface::edge_of_polygon_side(int j) const {
    const int block = j / 4;
    return 2 * block + (j % 2);
}

Surface build_surface(int genus) { return Surface(genus); }

Weight checked_add(Weight a, Weight b) {
    Weight r = 0;
    if (__builtin_add_overflow(a, b, &r)) {
        throw InvalidInput("edge weight overflow");
    }
    return r;
}

Weight NormalCurve::total_weight() const {
    Weight total = 0;
    for (Weight w : weights) total = checked_add(total, w);
    return total;
}

namespace {

struct ArcPoint {
    int edge;
    Weight pos;
};

// Walks normal arcs of a multicurve known to satisfy the matching equations.
class ArcWalker {
public:
    ArcWalker(const Surface& s, std::span<const Weight> w) : s_(s), w_(w) {}

    Weight side_weight(int t, int side) const { return w_[s_.triangle(t).sides[side].edge]; }

    Weight corner(int t, int c) const {
        // corner c sits between side c-1 and side c
        const Weight prev = side_weight(t, (c + 2) % 3);
        const Weight here = side_weight(t, c);
        const Weight opp = side_weight(t, (c + 1) % 3);
        return (prev + here - opp) / 2;
    }

    Weight local(int t, int side, Weight canonical) const {
        const TriangleSide& ts = s_.triangle(t).sides[side];
        return ts.agrees ? canonical : w_[ts.edge] - 1 - canonical;
    }

    // Enter triangle t through `side` at local position q; returns exit side
    // and local position there.
    std::pair<int, Weight> cross(int t, int side, Weight q) const {
        const Weight near_start = corner(t, side);
        if (q < near_start) {
            const int prev = (side + 2) % 3;
            return {prev, side_weight(t, prev) - 1 - q};
        }
        const int next = (side + 1) % 3;
        return {next, side_weight(t, side) - 1 - q};
    }

    SideRef other(int edge, SideRef here) const {
        const auto& app = s_.appearances(edge);
        return app[0] == here ? app[1] : app[0];
    }

    // Follows the component through `start`. Calls visit(edge, canonical_pos,
    // exit_ref) for each point crossed, starting with `start` itself.
    template <class Visit>
    void follow(ArcPoint start, Visit&& visit) const {
        SideRef entry = s_.appearances(start.edge)[1];
        Weight pos = start.pos;
        // The start point is crossed leaving the first appearance.
        visit(start.edge, start.pos, s_.appearances(start.edge)[0]);
        for (;;) {
            const Weight q = local(entry.triangle, entry.side, pos);
            auto [exit_side, exit_q] = cross(entry.triangle, entry.side, q);
            const SideRef exit_ref{entry.triangle, exit_side};
            const TriangleSide& ts = s_.triangle(entry.triangle).sides[exit_side];
            const Weight canon = ts.agrees ? exit_q : w_[ts.edge] - 1 - exit_q;
            if (ts.edge == start.edge && canon == start.pos) return;
            visit(ts.edge, canon, exit_ref);
            entry = other(ts.edge, exit_ref);
            pos = canon;
        }
    }

private:
    const Surface& s_;
    std::span<const Weight> w_;
};

std::string check_normal(const Surface& s, std::span<const Weight> w) {
    for (int t = 0; t < s.num_triangles(); ++t) {
        const auto& tri = s.triangle(t);
        const Weight a = w[tri.sides[0].edge];
        const Weight b = w[tri.sides[1].edge];
        const Weight c = w[tri.sides[2].edge];
        const std::string where = "triangle " + std::to_string(t);
        if ((checked_add(checked_add(a, b), c)) % 2 != 0) return where + ": odd side sum";
        if (a > b + c || b > a + c || c > a + b) return where + ": negative corner count";
    }
    return {};
}

void check_shape(const Surface& s, std::span<const Weight> w) {
    if (static_cast<int>(w.size()) != s.num_edges()) {
        throw InvalidInput("weight vector has length " + std::to_string(w.size()) + ", expected " +
                           std::to_string(s.num_edges()));
    }
    for (Weight x : w) {
        if (x < 0) throw InvalidInput("negative edge weight");
        if (x > std::numeric_limits<Weight>::max() / 4) throw InvalidInput("edge weight overflow");
    }
}

} // namespace

NormalCurve vertex_link(const Surface& surface) {
    return NormalCurve{std::vector<Weight>(surface.num_edges(), 2)};
}

std::vector<NormalCurve> trace_components(const Surface& surface, std::span<const Weight> weights) {
    check_shape(surface, weights);
    if (auto bad = check_normal(surface, weights); !bad.empty()) {
        throw InvalidInput("not a normal curve: " + bad);
    }
    ArcWalker walker(surface, weights);
    std::vector<std::vector<bool>> seen(surface.num_edges());
    for (int e = 0; e < surface.num_edges(); ++e) seen[e].assign(weights[e], false);

    std::vector<NormalCurve> out;
    for (int e = 0; e < surface.num_edges(); ++e) {
        for (Weight p = 0; p < weights[e]; ++p) {
            if (seen[e][p]) continue;
            NormalCurve comp{std::vector<Weight>(surface.num_edges(), 0)};
            walker.follow({e, p}, [&](int edge, Weight pos, SideRef) {
                seen[edge][pos] = true;
                ++comp.weights[edge];
            });
            out.push_back(std::move(comp));
        }
    }
    return out;
}

ValidityReport validate_curve(const Surface& surface, std::span<const Weight> weights) {
    check_shape(surface, weights);
    ValidityReport r;
    r.violation = check_normal(surface, weights);
    if (!r.violation.empty()) return r;
    r.normal = true;
    auto comps = trace_components(surface, weights);
    r.components = static_cast<int>(comps.size());
    if (comps.empty()) {
        r.violation = "zero vector has no components";
        return r;
    }
    if (comps.size() > 1) {
        r.violation = std::to_string(comps.size()) + " components";
        return r;
    }
    r.connected = true;
    if (std::ranges::equal(weights, vertex_link(surface).weights)) {
        r.violation = "vertex link bounds a disk";
        return r;
    }
    r.essential = true;
    return r;
}

std::vector<int> side_word(const Surface& surface, const NormalCurve& curve) {
    check_shape(surface, curve.weights);
    if (auto bad = check_normal(surface, curve.weights); !bad.empty()) {
        throw InvalidInput("not a normal curve: " + bad);
    }
    int first_edge = -1;
    for (int e = 0; e < surface.num_edges(); ++e) {
        if (curve.weights[e] > 0) {
            first_edge = e;
            break;
        }
    }
    if (first_edge < 0) throw InvalidInput("zero vector has no components");
    ArcWalker walker(surface, curve.weights);
    std::vector<int> word;
    Weight points = 0;
    walker.follow({first_edge, 0}, [&](int, Weight, SideRef exit) {
        ++points;
        const int j = surface.polygon_side(exit);
        if (j >= 0) word.push_back(j);
    });
    if (points != curve.total_weight()) throw InvalidInput("normal curve is not connected");
    return word;
}

} // namespace curvelab
