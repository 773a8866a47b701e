#include "curvelab/curve_complex.hpp"

#include "curvelab/curves.hpp"
#include "curvelab/errors.hpp"
#include "curvelab/intersection.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <sstream>

namespace curvelab {

namespace {

bool lighter(const NormalCurve& a, const NormalCurve& b) {
    const Weight wa = a.total_weight(), wb = b.total_weight();
    return wa != wb ? wa < wb : a < b;
}

std::vector<NormalCurve> enumerate_canonical(const Surface& s, Weight max_weight) {
    const int ne = s.num_edges();
    // assign edges in order of first appearance so triangles close early
    std::vector<int> order;
    std::vector<int> slot(ne, -1);
    for (const auto& t : s.triangles()) {
        for (const auto& side : t.sides) {
            if (slot[side.edge] < 0) {
                slot[side.edge] = static_cast<int>(order.size());
                order.push_back(side.edge);
            }
        }
    }
    std::vector<std::vector<int>> closes(ne);
    for (int t = 0; t < s.num_triangles(); ++t) {
        int last = 0;
        for (const auto& side : s.triangle(t).sides) last = std::max(last, slot[side.edge]);
        closes[last].push_back(t);
    }
    std::vector<Weight> w(ne, 0);
    std::vector<NormalCurve> out;
    auto triangle_ok = [&](int t) {
        const auto& sd = s.triangle(t).sides;
        const Weight a = w[sd[0].edge], b = w[sd[1].edge], c = w[sd[2].edge];
        return (a + b + c) % 2 == 0 && a <= b + c && b <= a + c && c <= a + b;
    };
    auto rec = [&](auto&& self, int k, Weight left) -> void {
        if (k == ne) {
            if (left == max_weight) return;
            if (!validate_curve(s, w).is_curve()) return;
            NormalCurve c{w};
            if (is_canonical(s, c)) out.push_back(std::move(c));
            return;
        }
        for (Weight x = 0; x <= left; ++x) {
            w[order[k]] = x;
            bool ok = true;
            for (int t : closes[k]) ok = ok && triangle_ok(t);
            if (ok) self(self, k + 1, left - x);
        }
        w[order[k]] = 0;
    };
    rec(rec, 0, max_weight);
    std::sort(out.begin(), out.end());
    return out;
}

struct Searcher {
    const Surface& s;
    Weight k;
    std::size_t frontier;

    std::vector<NormalCurve> expand(const std::vector<NormalCurve>& level, std::set<NormalCurve>& seen,
                                    std::map<NormalCurve, NormalCurve>& parent) const {
        std::vector<NormalCurve> next;
        for (const auto& x : level) {
            for (auto& y : neighbors_bounded(s, x, k)) {
                if (seen.count(y)) continue;
                seen.insert(y);
                parent.emplace(y, x);
                next.push_back(y);
            }
        }
        std::sort(next.begin(), next.end(), lighter);
        if (next.size() > frontier) next.resize(frontier);
        return next;
    }
};

std::vector<NormalCurve> chain_back(const std::map<NormalCurve, NormalCurve>& parent, NormalCurve x) {
    std::vector<NormalCurve> out{x};
    for (auto it = parent.find(x); it != parent.end(); it = parent.find(out.back())) out.push_back(it->second);
    return out;
}

std::optional<NormalCurve> region_witness(const Surface& s, const NormalCurve& a, const NormalCurve& b) {
    const auto mc = minimal_configuration(s, a, b);
    std::vector<NormalCurve> found;
    for (const auto& region : mc.regions) {
        if (region.is_disk()) continue;
        for (const auto& word : region.boundary_words) {
            NormalCurve g;
            try {
                g = curve_from_word(s, word);
            } catch (const InvalidInput&) {
                continue; // inessential or not simple
            }
            if (g == a || g == b) continue;
            if (is_disjoint(s, g, a) && is_disjoint(s, g, b)) found.push_back(g);
        }
    }
    if (found.empty()) return std::nullopt;
    return *std::min_element(found.begin(), found.end(), lighter);
}

PathCertificate join(const std::map<NormalCurve, NormalCurve>& par_a, const NormalCurve& x,
                     const std::map<NormalCurve, NormalCurve>& par_b, const NormalCurve& y,
                     const std::optional<NormalCurve>& middle) {
    auto left = chain_back(par_a, x);
    std::reverse(left.begin(), left.end());
    PathCertificate p;
    p.vertices = left;
    if (middle) p.vertices.push_back(*middle);
    const auto right = chain_back(par_b, y);
    p.vertices.insert(p.vertices.end(), right.begin(), right.end());
    return p;
}

// Shortest path a..b found within the budget, if any. Frontiers grow from
// both ends through light curves; two frontier vertices are joined either
// directly (disjoint) or through a region witness (intersecting, not filling).
std::optional<PathCertificate> search(const Surface& s, const NormalCurve& a, const NormalCurve& b, int lo,
                                      const Budget& budget, const Carry& carry) {
    Searcher sr{s, budget.weight_for(s), budget.frontier};
    std::vector<std::vector<NormalCurve>> fa{{a}}, fb{{b}};
    std::set<NormalCurve> seen_a{a}, seen_b{b};
    std::map<NormalCurve, NormalCurve> par_a, par_b;
    std::map<std::pair<NormalCurve, NormalCurve>, std::optional<NormalCurve>> witnesses;
    auto witness = [&](const NormalCurve& x, const NormalCurve& y) -> const std::optional<NormalCurve>& {
        auto key = std::make_pair(x, y);
        auto it = witnesses.find(key);
        if (it == witnesses.end()) {
            std::optional<NormalCurve> w;
            if (!fills(s, x, y)) w = region_witness(s, x, y);
            it = witnesses.emplace(std::move(key), std::move(w)).first;
        }
        return it->second;
    };
    const int r = std::max(budget.radius, 0);
    for (int len = std::max(lo, 2); len <= 2 * r + 2; ++len) {
        for (int ra = 0; ra <= r; ++ra) {
            for (int rb = 0; rb <= r; ++rb) {
                const bool direct = ra + rb + 1 == len;
                const bool via = ra + rb + 2 == len;
                if (!direct && !via) continue;
                while (static_cast<int>(fa.size()) <= ra) fa.push_back(sr.expand(fa.back(), seen_a, par_a));
                while (static_cast<int>(fb.size()) <= rb) {
                    if (!carry) {
                        fb.push_back(sr.expand(fb.back(), seen_b, par_b));
                        continue;
                    }
                    // b = carry(a): carry the a-side level over instead of enumerating
                    while (static_cast<int>(fa.size()) < static_cast<int>(fb.size()) + 1) {
                        fa.push_back(sr.expand(fa.back(), seen_a, par_a));
                    }
                    std::vector<NormalCurve> level;
                    for (const auto& x : fa[fb.size()]) {
                        NormalCurve y = carry(x);
                        if (!seen_b.insert(y).second) continue;
                        par_b.emplace(y, carry(par_a.at(x)));
                        level.push_back(std::move(y));
                    }
                    fb.push_back(std::move(level));
                }
                for (const auto& x : fa[ra]) {
                    for (const auto& y : fb[rb]) {
                        if (x == y) continue;
                        const bool apart = is_disjoint(s, x, y);
                        if (direct && apart) return join(par_a, x, par_b, y, std::nullopt);
                        if (via && !apart) {
                            if (const auto& w = witness(x, y)) return join(par_a, x, par_b, y, w);
                        }
                    }
                }
            }
        }
    }
    return std::nullopt;
}

} // namespace

Weight Budget::weight_for(const Surface& s) const {
    const Weight link = 2 * static_cast<Weight>(s.num_edges());
    return weight == 0 ? link : weight;
}

Budget parse_budget(const std::string& text) {
    Budget b;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto eq = item.find('=');
        if (eq == std::string::npos) throw InvalidInput("budget entry '" + item + "' is not key=value");
        const std::string key = item.substr(0, eq);
        long long v = 0;
        try {
            std::size_t used = 0;
            v = std::stoll(item.substr(eq + 1), &used);
            if (used != item.size() - eq - 1) throw std::invalid_argument("trailing");
        } catch (const std::exception&) {
            throw InvalidInput("budget value in '" + item + "' is not an integer");
        }
        if (v < 0) throw InvalidInput("budget values must be non-negative");
        if (key == "weight")
            b.weight = v;
        else if (key == "frontier")
            b.frontier = static_cast<std::size_t>(v);
        else if (key == "radius")
            b.radius = static_cast<int>(std::min<long long>(v, 16));
        else
            throw InvalidInput("unknown budget key '" + key + "'");
    }
    return b;
}

std::string to_string(const Budget& b) {
    std::ostringstream os;
    os << "weight=" << b.weight << ",frontier=" << b.frontier << ",radius=" << b.radius;
    return os.str();
}

const char* tag(LowerCert c) {
    switch (c) {
    case LowerCert::EqualCoordinates: return "equal-coordinates";
    case LowerCert::Disjoint: return "distinct-disjoint";
    case LowerCert::PositiveIntersection: return "positive-intersection";
    case LowerCert::FillingPair: return "filling-pair";
    }
    return "?";
}

const char* tag(UpperCert c) {
    switch (c) {
    case UpperCert::Path: return "path";
    case UpperCert::LogIntersection: return "log";
    case UpperCert::None: return "none";
    }
    return "?";
}

const std::vector<NormalCurve>& curves_up_to(const Surface& surface, Weight max_weight) {
    if (max_weight < 0) throw InvalidInput("weight budget must be non-negative");
    thread_local std::map<std::pair<int, Weight>, std::vector<NormalCurve>> cache;
    const auto key = std::make_pair(surface.genus(), max_weight);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, enumerate_canonical(surface, max_weight)).first;
    return it->second;
}

std::vector<NormalCurve> neighbors_bounded(const Surface& surface, const NormalCurve& alpha, Weight max_weight) {
    require_curve(surface, alpha);
    const NormalCurve a = canonical_form(surface, alpha);
    std::vector<NormalCurve> out;
    for (const auto& g : curves_up_to(surface, max_weight)) {
        if (g != a && is_disjoint(surface, g, a)) out.push_back(g);
    }
    return out;
}

DistanceInterval distance(const Surface& surface, const NormalCurve& alpha, const NormalCurve& beta,
                          const Budget& budget) {
    return distance_carried(surface, alpha, beta, budget, {});
}

DistanceInterval distance_carried(const Surface& surface, const NormalCurve& alpha, const NormalCurve& beta,
                                  const Budget& budget, const Carry& carry) {
    require_curve(surface, alpha, "alpha");
    require_curve(surface, beta, "beta");
    const NormalCurve a = canonical_form(surface, alpha);
    const NormalCurve b = canonical_form(surface, beta);
    DistanceInterval d;
    auto set_path = [&](PathCertificate p) {
        d.hi = static_cast<int>(p.length());
        d.hi_source = UpperCert::Path;
        d.hi_certificate = std::move(p);
    };
    if (a == b) {
        d.lo = 0;
        d.lo_certificate = LowerCert::EqualCoordinates;
        set_path(PathCertificate{{a}});
        return d;
    }
    const Weight i = geometric_intersection(surface, a, b);
    if (i == 0) {
        d.lo = 1;
        d.lo_certificate = LowerCert::Disjoint;
        set_path(PathCertificate{{a, b}});
        return d;
    }
    if (!fills(surface, a, b)) {
        d.lo = 2;
        d.lo_certificate = LowerCert::PositiveIntersection;
        if (auto g = region_witness(surface, a, b)) {
            set_path(PathCertificate{{a, *g, b}});
            return d;
        }
    } else {
        d.lo = 3;
        d.lo_certificate = LowerCert::FillingPair;
    }
    if (auto p = search(surface, a, b, d.lo, budget, carry)) {
        set_path(std::move(*p));
        return d;
    }
    int log2i = 0;
    while ((Weight{1} << log2i) < i) ++log2i;
    d.hi = 2 * log2i + 2;
    d.hi_source = UpperCert::LogIntersection;
    if (*d.hi < d.lo) throw ContradictoryBounds("logarithmic upper bound below the ladder lower bound");
    return d;
}

PathCheck verify_path(const Surface& surface, const PathCertificate& path) {
    if (path.vertices.empty()) return {false, 0, "empty path"};
    std::vector<NormalCurve> canon;
    for (std::size_t j = 0; j < path.vertices.size(); ++j) {
        const auto& v = path.vertices[j];
        if (static_cast<int>(v.weights.size()) != surface.num_edges()) return {false, j, "wrong number of weights"};
        if (std::any_of(v.weights.begin(), v.weights.end(), [](Weight x) { return x < 0; })) {
            return {false, j, "negative weight"};
        }
        const auto report = validate_curve(surface, v.weights);
        if (!report.is_curve()) return {false, j, "not an essential simple closed curve: " + report.violation};
        canon.push_back(canonical_form(surface, v));
    }
    for (std::size_t j = 0; j + 1 < canon.size(); ++j) {
        if (canon[j] == canon[j + 1]) return {false, j, "consecutive vertices are isotopic"};
        if (!is_disjoint(surface, canon[j], canon[j + 1])) return {false, j, "consecutive vertices intersect"};
    }
    return {};
}

} // namespace curvelab
