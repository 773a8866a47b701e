#include "bigon_oracle.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

using curvelab::NormalCurve;
using curvelab::SideRef;
using curvelab::Surface;

namespace oracle {

namespace {

int inv(int s) { return s ^ 2; }

Word free_reduce(const Word& w) {
    Word out;
    for (int x : w) {
        if (!out.empty() && out.back() == inv(x))
            out.pop_back();
        else
            out.push_back(x);
    }
    return out;
}

Word inverse(const Word& w) {
    Word out;
    for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(inv(*it));
    return out;
}

Word cat(std::initializer_list<const Word*> parts) {
    Word out;
    for (const Word* p : parts) out.insert(out.end(), p->begin(), p->end());
    return out;
}

const std::vector<Word>& relator_rotations(int genus) {
    static thread_local std::map<int, std::vector<Word>> cache;
    auto it = cache.find(genus);
    if (it != cache.end()) return it->second;
    std::vector<Word> rots;
    const Word r = vertex_relator(genus);
    for (const Word& base : {r, inverse(r)}) {
        for (std::size_t k = 0; k < base.size(); ++k) {
            Word rot(base.begin() + k, base.end());
            rot.insert(rot.end(), base.begin(), base.begin() + k);
            rots.push_back(rot);
        }
    }
    return cache.emplace(genus, std::move(rots)).first->second;
}

struct Arc {
    int tri;
    int side_in, q_in;   // own local coordinates
    int side_out, q_out;
    Word prefix;         // letters crossed before this arc
};

struct Traced {
    std::vector<Arc> arcs;
    Word loop;
};

// Walks a connected normal curve arc by arc.
Traced trace(const Surface& s, const NormalCurve& c) {
    const auto& w = c.weights;
    const int nt = s.num_triangles();
    std::vector<std::array<long, 3>> corner(nt);
    for (int t = 0; t < nt; ++t) {
        const auto& tr = s.triangle(t);
        for (int i = 0; i < 3; ++i) {
            const long a = w[tr.sides[(i + 2) % 3].edge], b = w[tr.sides[i].edge], d = w[tr.sides[(i + 1) % 3].edge];
            corner[t][i] = (a + b - d) / 2;
        }
    }
    int e0 = 0;
    while (w[e0] == 0) ++e0;
    Traced out;
    SideRef ref = s.appearances(e0)[0];
    long p = 0;
    Word letters;
    for (;;) {
        const auto& tr = s.triangle(ref.triangle);
        const int i = ref.side;
        const long wi = w[tr.sides[i].edge];
        const int q = static_cast<int>(tr.sides[i].agrees ? p : wi - 1 - p);
        int side_out, q_out;
        if (q < corner[ref.triangle][i]) {
            side_out = (i + 2) % 3;
            q_out = static_cast<int>(w[tr.sides[side_out].edge] - 1 - q);
        } else {
            side_out = (i + 1) % 3;
            q_out = static_cast<int>(wi - 1 - q);
        }
        out.arcs.push_back({ref.triangle, i, q, side_out, q_out, letters});
        const SideRef exit{ref.triangle, side_out};
        const int ps = s.polygon_side(exit);
        if (ps >= 0) letters.push_back(ps);
        const auto& ts = tr.sides[side_out];
        p = ts.agrees ? q_out : w[ts.edge] - 1 - q_out;
        const auto& app = s.appearances(ts.edge);
        ref = app[0] == exit ? app[1] : app[0];
        if (ts.edge == e0 && p == 0 && ref == s.appearances(e0)[0]) break;
        if (out.arcs.size() > 1u << 22) throw std::runtime_error("oracle trace runaway");
    }
    out.loop = letters;
    return out;
}

// Position of an endpoint on the triangle boundary, for linking tests.
long boundary_key(const Surface& s, const NormalCurve& a, const NormalCurve& b, bool first, int tri, int side, int q) {
    const auto& ts = s.triangle(tri).sides[side];
    const long wa = a.weights[ts.edge], wb = b.weights[ts.edge];
    const long own = first ? wa : wb;
    const long canon = ts.agrees ? q : own - 1 - q;
    const long rank = first ? canon : wa + canon;
    const long local = ts.agrees ? rank : wa + wb - 1 - rank;
    return side * (1L << 40) + local;
}

struct Overlay {
    Traced ta, tb;
    std::vector<std::pair<std::size_t, std::size_t>> crossings;
};

Overlay overlay(const Surface& s, const NormalCurve& a, const NormalCurve& b) {
    Overlay o{trace(s, a), trace(s, b), {}};
    std::vector<std::vector<std::size_t>> by_tri(s.num_triangles());
    for (std::size_t k = 0; k < o.tb.arcs.size(); ++k) by_tri[o.tb.arcs[k].tri].push_back(k);
    for (std::size_t i = 0; i < o.ta.arcs.size(); ++i) {
        const Arc& x = o.ta.arcs[i];
        long a1 = boundary_key(s, a, b, true, x.tri, x.side_in, x.q_in);
        long a2 = boundary_key(s, a, b, true, x.tri, x.side_out, x.q_out);
        if (a1 > a2) std::swap(a1, a2);
        for (std::size_t j : by_tri[x.tri]) {
            const Arc& y = o.tb.arcs[j];
            const long b1 = boundary_key(s, a, b, false, y.tri, y.side_in, y.q_in);
            const long b2 = boundary_key(s, a, b, false, y.tri, y.side_out, y.q_out);
            const bool in1 = a1 < b1 && b1 < a2;
            const bool in2 = a1 < b2 && b2 < a2;
            if (in1 != in2) o.crossings.emplace_back(i, j);
        }
    }
    return o;
}

bool trivial(int genus, const Word& w) { return dehn_reduce(genus, w).empty(); }

bool commute(int genus, const Word& u, const Word& v) {
    const Word iu = inverse(u), iv = inverse(v);
    return trivial(genus, cat({&u, &v, &iu, &iv}));
}

} // namespace

Word vertex_relator(int genus) {
    const int n = 4 * genus;
    Word r;
    int vertex = 0, side = 0;
    do {
        r.push_back(side);
        const int t = inv(side);
        int entered;
        if (vertex == side) {
            vertex = (t + 1) % n;
            entered = t;
            side = (t + 1) % n;
        } else {
            vertex = t;
            entered = t;
            side = (t + n - 1) % n;
        }
        (void)entered;
    } while (!(vertex == 0 && side == 0));
    return r;
}

Word dehn_reduce(int genus, Word w) {
    const auto& rots = relator_rotations(genus);
    const std::size_t len = 4 * static_cast<std::size_t>(genus);
    w = free_reduce(w);
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t i = 0; i < w.size() && !changed; ++i) {
            for (const Word& r : rots) {
                std::size_t m = 0;
                while (m < len && i + m < w.size() && w[i + m] == r[m]) ++m;
                if (2 * m <= len) continue;
                Word rest(r.begin() + m, r.end());
                Word rep = inverse(rest);
                Word next(w.begin(), w.begin() + i);
                next.insert(next.end(), rep.begin(), rep.end());
                next.insert(next.end(), w.begin() + i + m, w.end());
                w = free_reduce(next);
                changed = true;
                break;
            }
        }
    }
    return w;
}

long overlay_crossings(const Surface& s, const NormalCurve& a, const NormalCurve& b) {
    return static_cast<long>(overlay(s, a, b).crossings.size());
}

long intersection(const Surface& s, const NormalCurve& a, const NormalCurve& b, int wraps) {
    const int g = s.genus();
    const Overlay o = overlay(s, a, b);
    const Word& A = o.ta.loop;
    const Word& B = o.tb.loop;
    const std::size_t k = o.crossings.size();
    std::vector<Word> h(k);
    for (std::size_t x = 0; x < k; ++x) {
        const Word ib = inverse(o.tb.arcs[o.crossings[x].second].prefix);
        h[x] = dehn_reduce(g, cat({&o.ta.arcs[o.crossings[x].first].prefix, &ib}));
    }
    std::vector<Word> powers;  // A^m for m = -wraps..wraps
    const Word iA = inverse(A);
    for (int m = -wraps; m <= wraps; ++m) {
        Word p;
        for (int r = 0; r < std::abs(m); ++r) p.insert(p.end(), (m < 0 ? iA : A).begin(), (m < 0 ? iA : A).end());
        powers.push_back(dehn_reduce(g, p));
    }
    std::vector<std::size_t> parent(k);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::size_t x = 0; x < k; ++x) {
        for (std::size_t y = x + 1; y < k; ++y) {
            if (find(x) == find(y)) continue;
            const Word ihy = inverse(h[y]);
            for (const Word& p : powers) {
                if (commute(g, cat({&ihy, &p, &h[x]}), B)) {
                    parent[find(x)] = find(y);
                    break;
                }
            }
        }
    }
    std::map<std::size_t, long> size;
    for (std::size_t x = 0; x < k; ++x) ++size[find(x)];
    long count = 0;
    for (auto [root, n] : size) {
        // a lift of b that shares its axis with the lift of a contributes nothing
        const Word ih = inverse(h[root]);
        if (commute(g, cat({&h[root], &B, &ih}), A)) continue;
        if (n % 2 == 1) ++count;
    }
    return count;
}

} // namespace oracle
