#pragma once

#include "curvelab/curve_complex.hpp"
#include "curvelab/curves.hpp"

#include <vector>

namespace corpus {

/// n curves spread evenly through the lexicographic list of canonical
/// curves of weight <= K. No randomness, so runs repeat exactly.
inline std::vector<curvelab::NormalCurve> spread(const curvelab::Surface& s, curvelab::Weight k, std::size_t n) {
    const auto& all = curvelab::curves_up_to(s, k);
    std::vector<curvelab::NormalCurve> out;
    if (all.empty() || n == 0) return out;
    for (std::size_t i = 0; i < n && i < all.size(); ++i) out.push_back(all[i * all.size() / n]);
    return out;
}

} // namespace corpus
