#pragma once

#include "curvelab/surface.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace curvelab {

/// Search limits: max total weight of an enumerated vertex, max number of
/// vertices kept per search frontier, and max frontier radius per side.
struct Budget {
    Weight weight = 0; ///< 0 means the vertex-link weight of the surface
    std::size_t frontier = 64;
    int radius = 2;

    Weight weight_for(const Surface& s) const;
};

/// Parses "weight=K,frontier=N[,radius=R]" (any subset, any order).
Budget parse_budget(const std::string& text);
std::string to_string(const Budget& b);

enum class LowerCert { EqualCoordinates, Disjoint, PositiveIntersection, FillingPair };
enum class UpperCert { Path, LogIntersection, None };

const char* tag(LowerCert c);
const char* tag(UpperCert c);

struct PathCertificate {
    std::vector<NormalCurve> vertices;
    std::size_t length() const { return vertices.empty() ? 0 : vertices.size() - 1; }
};

struct DistanceInterval {
    int lo = 0;
    std::optional<int> hi;
    LowerCert lo_certificate = LowerCert::EqualCoordinates;
    UpperCert hi_source = UpperCert::None;
    std::optional<PathCertificate> hi_certificate;

    bool exact() const { return hi && *hi == lo; }
};

struct PathCheck {
    bool ok = true;
    /// First failing vertex (or pair start) when !ok.
    std::size_t index = 0;
    std::string reason;
};

/// Every canonical essential curve with total weight <= K, lexicographic.
/// Cached per thread.
const std::vector<NormalCurve>& curves_up_to(const Surface& surface, Weight max_weight);

/// Canonical curves of total weight <= K, disjoint from and not isotopic to
/// alpha, in lexicographic order.
std::vector<NormalCurve> neighbors_bounded(const Surface& surface, const NormalCurve& alpha, Weight max_weight);

DistanceInterval distance(const Surface& surface, const NormalCurve& alpha, const NormalCurve& beta,
                          const Budget& budget = {});

/// An isometry of the curve complex taking alpha to beta, used to grow the
/// search frontier around beta as the image of the one around alpha.
using Carry = std::function<NormalCurve(const NormalCurve&)>;

/// distance() where beta = carry(alpha) on canonical forms.
DistanceInterval distance_carried(const Surface& surface, const NormalCurve& alpha, const NormalCurve& beta,
                                  const Budget& budget, const Carry& carry);

PathCheck verify_path(const Surface& surface, const PathCertificate& path);

} // namespace curvelab
