#pragma once

#include "curvelab/mcg.hpp"
#include "curvelab/translation.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace curvelab {

/// The surface bundle over the circle with fibre of genus g and the given
/// monodromy. Metadata only.
struct BundleDescriptor {
    int genus = 2;
    TwistWord monodromy;
    TranslationResult bounds;
    /// Optional growth data for powers: (n, lower bound on d_C(phi^n)).
    std::vector<std::pair<int, int>> power_schedule;
    std::string schedule_provenance;

    void validate() const;
};

struct SplittingStats {
    int genus;
    int minus_chi;
    bool always_weakly_reducible;
};

/// The standard splitting of the bundle: genus 2g+1, -chi = 4g.
SplittingStats standard_splitting_stats(int g);

enum class SubjectKind { HeegaardSplitting, IncompressibleSurface, PowerFamily };

enum class Verdict {
    StabilizationOfStandard,
    UniqueMinimalGenus,
    NoIncompressibleTorus,
    IsotopicToFibre,
    UniqueFromPower,
    NoConclusion,
};

const char* tag(Verdict v);

struct SplittingVerdict {
    SubjectKind subject = SubjectKind::HeegaardSplitting;
    int subject_value = 0; ///< splitting genus, euler characteristic, or power
    Verdict verdict = Verdict::NoConclusion;
    std::string rule;
    /// Tags of every bound the verdict rests on; includes
    /// "external-assumption" whenever one of them is external.
    std::vector<std::string> provenance;
    std::string detail;
    /// Least genus a strongly irreducible splitting can have, when the rule
    /// yields one.
    std::optional<int> strongly_irreducible_min_genus;

    bool external() const;
    std::string to_line() const;
};

/// -chi(H) of a closed genus-h surface.
int minus_chi_of_genus(int h);

SplittingVerdict strongly_irreducible_rule(const BundleDescriptor& b, int h);
SplittingVerdict minimal_genus_uniqueness_rule(const BundleDescriptor& b);
SplittingVerdict incompressible_rule(const BundleDescriptor& b, int chi_g, bool is_torus);
SplittingVerdict high_power_rule(const BundleDescriptor& b);

} // namespace curvelab
