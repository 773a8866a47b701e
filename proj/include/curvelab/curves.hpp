#pragma once

#include "curvelab/geometry.hpp"
#include "curvelab/surface.hpp"

#include <memory>
#include <span>
#include <vector>

namespace curvelab {

/// Geodesic representative of an essential simple closed curve. Cached per
/// thread; the returned object is immutable.
std::shared_ptr<const geometry::Geodesic> geodesic_of(const Surface& surface, const NormalCurve& curve,
                                                      unsigned min_digits = 0);

/// Canonical normal coordinates of the simple closed curve with this side
/// word: the edge weights of its closed geodesic. Throws InvalidInput when
/// the loop is null-homotopic or not homotopic to a simple curve.
NormalCurve curve_from_word(const Surface& surface, std::span<const int> word);

/// Canonical representative of an essential connected normal curve. Two
/// inputs are isotopic exactly when their canonical forms are equal.
NormalCurve canonical_form(const Surface& surface, const NormalCurve& curve);

/// True when the weights already are the canonical form.
bool is_canonical(const Surface& surface, const NormalCurve& curve);

/// Throws InvalidInput unless the curve is normal, connected and essential.
void require_curve(const Surface& surface, const NormalCurve& curve, const char* what = "curve");

/// Side words of the chain c_1..c_{2g+1}.
std::vector<std::vector<int>> chain_words(int genus);

/// The chain c_1, ..., c_{2g+1} with i(c_j, c_{j+1}) = 1 and all other pairs
/// disjoint.
std::vector<NormalCurve> humphries_curves(const Surface& surface);

} // namespace curvelab
