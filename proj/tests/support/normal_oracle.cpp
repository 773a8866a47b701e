#include "normal_oracle.hpp"

#include <numeric>
#include <vector>

namespace oracle {

using curvelab::Weight;

bool satisfies_matching(const curvelab::Surface& s, std::span<const Weight> w) {
    for (const auto& t : s.triangles()) {
        const Weight a = w[t.sides[0].edge], b = w[t.sides[1].edge], c = w[t.sides[2].edge];
        if ((a + b + c) % 2 != 0) return false;
        if (a > b + c || b > a + c || c > a + b) return false;
    }
    return true;
}

int count_components(const curvelab::Surface& s, std::span<const Weight> w) {
    std::vector<long> offset(w.size() + 1, 0);
    for (std::size_t e = 0; e < w.size(); ++e) offset[e + 1] = offset[e] + w[e];
    std::vector<long> parent(offset.back());
    std::iota(parent.begin(), parent.end(), 0L);
    auto find = [&](long x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    auto unite = [&](long x, long y) { parent[find(x)] = find(y); };

    for (const auto& t : s.triangles()) {
        Weight x[3];
        for (int i = 0; i < 3; ++i) x[i] = w[t.sides[i].edge];
        // point p on side i, counted from the side's start corner
        auto id = [&](int i, Weight p) {
            const auto& side = t.sides[i];
            return offset[side.edge] + (side.agrees ? p : x[i] - 1 - p);
        };
        for (int i = 0; i < 3; ++i) {
            const int prev = (i + 2) % 3, next = (i + 1) % 3;
            const Weight around = (x[prev] + x[i] - x[next]) / 2; // arcs cutting off corner i
            for (Weight p = 0; p < around; ++p) unite(id(i, p), id(prev, x[prev] - 1 - p));
        }
    }
    int roots = 0;
    for (long i = 0; i < static_cast<long>(parent.size()); ++i) roots += find(i) == i;
    return roots;
}

bool is_vertex_link(std::span<const Weight> w) {
    for (Weight x : w) {
        if (x != 2) return false;
    }
    return !w.empty();
}

} // namespace oracle
