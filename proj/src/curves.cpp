#include "curvelab/curves.hpp"

#include "curvelab/errors.hpp"

#include <algorithm>
#include <map>

namespace curvelab {

namespace {

using GeodesicPtr = std::shared_ptr<const geometry::Geodesic>;

struct CacheKey {
    int genus;
    std::vector<Weight> weights;
    auto operator<=>(const CacheKey&) const = default;
};

class GeodesicCache {
public:
    GeodesicPtr find(const CacheKey& key, unsigned min_digits) const {
        auto it = map_.find(key);
        if (it == map_.end() || it->second->digits < min_digits) return nullptr;
        return it->second;
    }

    void put(CacheKey key, GeodesicPtr g) {
        if (map_.size() > 8192) map_.clear();
        map_[std::move(key)] = std::move(g);
    }

private:
    std::map<CacheKey, GeodesicPtr> map_;
};

GeodesicCache& cache() {
    thread_local GeodesicCache c;
    return c;
}

bool cyclic_match(const std::vector<int>& a, const std::vector<int>& b) {
    if (a.size() != b.size()) return false;
    if (a.empty()) return true;
    std::vector<int> doubled(a);
    doubled.insert(doubled.end(), a.begin(), a.end());
    return std::search(doubled.begin(), doubled.end(), b.begin(), b.end()) != doubled.end();
}

std::vector<int> reversed_loop(const std::vector<int>& w) {
    std::vector<int> r;
    r.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) r.push_back(Surface::paired_side(*it));
    return r;
}

} // namespace

void require_curve(const Surface& surface, const NormalCurve& curve, const char* what) {
    auto report = validate_curve(surface, curve.weights);
    if (!report.is_curve()) {
        throw InvalidInput(std::string(what) + " is not an essential simple closed curve: " + report.violation);
    }
}

GeodesicPtr geodesic_of(const Surface& surface, const NormalCurve& curve, unsigned min_digits) {
    CacheKey key{surface.genus(), curve.weights};
    if (auto hit = cache().find(key, min_digits)) return hit;
    require_curve(surface, curve);
    const std::vector<int> word = side_word(surface, curve);
    unsigned digits = std::max(min_digits, geometry::digits_for_word(surface.genus(), word));
    for (int attempt = 0;; ++attempt) {
        try {
            auto g = std::make_shared<const geometry::Geodesic>(geometry::realize(surface.genus(), word, digits));
            cache().put(std::move(key), g);
            return g;
        } catch (const DegenerateGeometry&) {
            if (attempt >= 4) throw;
            digits *= 2;
        }
    }
}

NormalCurve curve_from_word(const Surface& surface, std::span<const int> word) {
    auto geo = geometry::realize_adaptive(surface.genus(), word);
    NormalCurve curve = geometry::normal_coordinates(surface, geo);
    auto report = validate_curve(surface, curve.weights);
    if (!report.is_curve()) throw InvalidInput("loop is not homotopic to a simple curve");
    const std::vector<int> seq = geo.cutting_sequence();
    const std::vector<int> traced = side_word(surface, curve);
    if (!cyclic_match(seq, traced) && !cyclic_match(seq, reversed_loop(traced))) {
        throw InvalidInput("loop is not homotopic to a simple curve");
    }
    cache().put(CacheKey{surface.genus(), curve.weights}, std::make_shared<const geometry::Geodesic>(std::move(geo)));
    return curve;
}

NormalCurve canonical_form(const Surface& surface, const NormalCurve& curve) {
    require_curve(surface, curve);
    return curve_from_word(surface, side_word(surface, curve));
}

bool is_canonical(const Surface& surface, const NormalCurve& curve) {
    return canonical_form(surface, curve) == curve;
}

std::vector<std::vector<int>> chain_words(int genus) {
    // a_i is the loop through side 4i, b_i the loop through side 4i+1.
    // the first connector crosses sides 0 and 4; later ones are rotations of
    // a longer loop, chosen (by search) to miss the previous connector.
    std::vector<std::vector<int>> words;
    words.push_back({0});
    for (int i = 0; i < genus; ++i) {
        words.push_back({4 * i + 1});
        if (i + 1 == genus) continue;
        if (i == 0)
            words.push_back({0, 4});
        else
            words.push_back({4 * i, 4 * i + 1, 4 * i + 6, 4 * i + 3});
    }
    words.push_back({4 * (genus - 1)});
    return words;
}

std::vector<NormalCurve> humphries_curves(const Surface& surface) {
    std::vector<NormalCurve> out;
    for (const auto& w : chain_words(surface.genus())) out.push_back(curve_from_word(surface, w));
    return out;
}

} // namespace curvelab
