#pragma once

#include "curvelab/certifier.hpp"
#include "curvelab/curve_complex.hpp"
#include "curvelab/mcg.hpp"
#include "curvelab/surface.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace curvelab::io {

inline constexpr const char* kToolVersion = "curvelab 0.1.0";

/// "triangulation std-v1 genus=<g>" followed by the triangle list, one line
/// per triangle: `triangle <k> <edge><+|-> x3`. Parsing only accepts the
/// standard triangulation of that genus.
std::string format_triangulation(const Surface& s);
Surface parse_triangulation(const std::string& text, const std::string& source = "<input>");

/// Named curves over the standard triangulation. A file with a `path` line
/// after the header lists the vertices of a path certificate, in order.
struct CurveFile {
    int genus = 2;
    bool is_path = false;
    std::vector<std::pair<std::string, NormalCurve>> curves;

    const NormalCurve& get(const std::string& name) const;
    PathCertificate path() const;
};

CurveFile parse_curve_file(const std::string& text, const std::string& source = "<input>");
std::string format_curve_file(const CurveFile& f);
CurveFile path_file(int genus, const PathCertificate& p);

/// Bundle file:
///   bundle genus=<g>
///   monodromy T1^2 T2^-1 ...
///   lower <d> <provenance...>         (optional, external)
///   schedule <n>:<d> <n>:<d> ...      (optional)
///   schedule-provenance <text>        (optional)
BundleDescriptor parse_bundle_file(const std::string& text, const std::string& source = "<input>");
std::string format_bundle_file(const BundleDescriptor& b);

std::vector<std::pair<std::string, TwistWord>> parse_word_file(const std::string& text, int genus,
                                                               const std::string& source = "<input>");

std::string read_file(const std::string& path);
/// Writes through a temporary file in the same directory and renames it.
void write_file_atomic(const std::string& path, const std::string& content);

std::uint64_t fnv1a64(const std::string& data);
std::string hex64(std::uint64_t v);

} // namespace curvelab::io
