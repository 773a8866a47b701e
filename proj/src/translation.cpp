#include "curvelab/translation.hpp"

#include "curvelab/curves.hpp"
#include "curvelab/errors.hpp"

#include <algorithm>

namespace curvelab {

const char* tag(LowerSource s) { return s == LowerSource::Trivial0 ? "trivial-0" : "external-assumption"; }

std::optional<int> TranslationResult::best_upper() const {
    if (upper && log_upper) return std::min(*upper, *log_upper);
    return upper ? upper : log_upper;
}

std::vector<NormalCurve> default_seeds(const Surface& surface, const TwistWord& w) {
    if (w.genus() != surface.genus()) throw InvalidInput("twist word genus does not match the surface");
    const auto chain = humphries_curves(surface);
    std::vector<NormalCurve> out = chain;
    const auto& letters = w.letters();
    for (std::size_t i = 0; i < letters.size(); ++i) {
        for (std::size_t len = 1; len <= 2 && i + len <= letters.size(); ++len) {
            const TwistWord sub(w.genus(), {letters.begin() + i, letters.begin() + i + len});
            for (const auto& c : chain) out.push_back(apply_word(surface, sub, c));
        }
    }
    std::vector<NormalCurve> unique;
    for (auto& c : out) {
        if (std::find(unique.begin(), unique.end(), c) == unique.end()) unique.push_back(std::move(c));
    }
    return unique;
}

TranslationResult translation_upper(const Surface& surface, const TwistWord& w, const std::vector<NormalCurve>& seeds,
                                    const Budget& budget) {
    if (seeds.empty()) throw InvalidInput("translation bound needs at least one seed");
    if (w.genus() != surface.genus()) throw InvalidInput("twist word genus does not match the surface");
    TranslationResult r;
    r.word = w;
    const Carry carry = [&](const NormalCurve& c) { return apply_word(surface, w, c); };
    for (const auto& raw : seeds) {
        require_curve(surface, raw, "seed");
        const NormalCurve a = canonical_form(surface, raw);
        if (std::find(r.seeds_tried.begin(), r.seeds_tried.end(), a) != r.seeds_tried.end()) continue;
        r.seeds_tried.push_back(a);
        const NormalCurve b = carry(a);
        const DistanceInterval d = distance_carried(surface, a, b, budget, carry);
        if (d.hi_source == UpperCert::Path && (!r.upper || *d.hi < *r.upper)) {
            r.upper = *d.hi;
            r.certificate = *d.hi_certificate;
            r.seed = a;
        } else if (d.hi_source == UpperCert::LogIntersection && (!r.log_upper || *d.hi < *r.log_upper)) {
            r.log_upper = *d.hi;
        }
        if (r.upper && *r.upper == 0) break;
    }
    return r;
}

std::optional<NormalCurve> fixed_curve_scan(const Surface& surface, const TwistWord& w,
                                            const std::vector<NormalCurve>& seeds) {
    for (const auto& raw : seeds) {
        require_curve(surface, raw, "seed");
        const NormalCurve a = canonical_form(surface, raw);
        if (apply_word(surface, w, a) == a) return a;
    }
    return std::nullopt;
}

TranslationResult attach_external_lower(TranslationResult r, int value, std::string provenance) {
    if (value < 0) throw InvalidInput("external lower bound must be non-negative");
    r.lower = value;
    r.lower_source = LowerSource::ExternalAssumption;
    r.lower_provenance = std::move(provenance);
    return r;
}

PathCheck attach_path(const Surface& surface, TranslationResult& r, const PathCertificate& path) {
    PathCheck check = verify_path(surface, path);
    if (!check.ok) return check;
    const NormalCurve first = canonical_form(surface, path.vertices.front());
    const NormalCurve last = canonical_form(surface, path.vertices.back());
    if (apply_word(surface, r.word, first) != last) {
        return {false, path.vertices.size() - 1, "last vertex is not the image of the first under the word"};
    }
    const int n = static_cast<int>(path.length());
    if (!r.upper || n < *r.upper) {
        r.upper = n;
        r.certificate = path;
        r.seed = first;
    }
    return check;
}

} // namespace curvelab
