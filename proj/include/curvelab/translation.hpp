#pragma once

#include "curvelab/curve_complex.hpp"
#include "curvelab/mcg.hpp"

#include <optional>
#include <string>
#include <vector>

namespace curvelab {

enum class LowerSource { Trivial0, ExternalAssumption };
const char* tag(LowerSource s);

struct TranslationResult {
    TwistWord word;
    /// Path-certified upper bound, from `seed` to word(seed).
    std::optional<int> upper;
    std::optional<PathCertificate> certificate;
    std::optional<NormalCurve> seed;
    /// Best logarithmic bound seen; reported apart from path bounds.
    std::optional<int> log_upper;
    int lower = 0;
    LowerSource lower_source = LowerSource::Trivial0;
    std::string lower_provenance;
    std::vector<NormalCurve> seeds_tried;

    /// Best upper bound of either kind and whether it is path-certified.
    std::optional<int> best_upper() const;
};

/// Chain curves plus their images under every subword of at most two letters.
std::vector<NormalCurve> default_seeds(const Surface& surface, const TwistWord& w);

TranslationResult translation_upper(const Surface& surface, const TwistWord& w, const std::vector<NormalCurve>& seeds,
                                    const Budget& budget = {});

/// First seed with w(seed) = seed, if any. Finding none proves nothing.
std::optional<NormalCurve> fixed_curve_scan(const Surface& surface, const TwistWord& w,
                                            const std::vector<NormalCurve>& seeds);

TranslationResult attach_external_lower(TranslationResult r, int value, std::string provenance);

/// Checks a user path: valid, and its last vertex is w(first vertex). On
/// success the path becomes the upper certificate when it improves it.
PathCheck attach_path(const Surface& surface, TranslationResult& r, const PathCertificate& path);

} // namespace curvelab
