#include "curvelab/certifier.hpp"

#include "curvelab/errors.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace curvelab {

namespace {

std::vector<std::string> lower_provenance(const BundleDescriptor& b) {
    std::vector<std::string> p{tag(b.bounds.lower_source)};
    if (!b.bounds.lower_provenance.empty()) p.push_back(b.bounds.lower_provenance);
    return p;
}

// A rule that needs d_C(phi) > t cannot run when some upper bound is <= t
// while the claimed lower bound is above it.
void check_consistent(const BundleDescriptor& b) {
    b.validate();
    const auto up = b.bounds.best_upper();
    if (up && b.bounds.lower > *up) {
        throw ContradictoryBounds("lower bound " + std::to_string(b.bounds.lower) + " exceeds upper bound " +
                                  std::to_string(*up));
    }
}

} // namespace

void BundleDescriptor::validate() const {
    if (genus < 2) throw InvalidInput("fibre genus must be at least 2");
    if (monodromy.genus() != genus) throw InvalidInput("monodromy genus does not match the fibre");
    if (bounds.lower < 0) throw InvalidInput("negative lower bound");
}

SplittingStats standard_splitting_stats(int g) {
    if (g < 2) throw InvalidInput("fibre genus must be at least 2");
    const int h = 2 * g + 1;
    return {h, minus_chi_of_genus(h), true};
}

int minus_chi_of_genus(int h) { return 2 * h - 2; }

const char* tag(Verdict v) {
    switch (v) {
    case Verdict::StabilizationOfStandard: return "stabilization-of-standard";
    case Verdict::UniqueMinimalGenus: return "standard-is-unique-minimal-genus";
    case Verdict::NoIncompressibleTorus: return "no-incompressible-torus";
    case Verdict::IsotopicToFibre: return "isotopic-to-fibre";
    case Verdict::UniqueFromPower: return "unique-minimal-genus-from-power";
    case Verdict::NoConclusion: return "no-conclusion";
    }
    return "?";
}

bool SplittingVerdict::external() const {
    for (const auto& p : provenance) {
        if (p == "external-assumption") return true;
    }
    return false;
}

std::string SplittingVerdict::to_line() const {
    std::ostringstream os;
    os << "rule=" << rule << " subject=";
    switch (subject) {
    case SubjectKind::HeegaardSplitting: os << "splitting-genus:" << subject_value; break;
    case SubjectKind::IncompressibleSurface: os << "surface-chi:" << subject_value; break;
    case SubjectKind::PowerFamily: os << "powers"; break;
    }
    os << " verdict=" << tag(verdict);
    if (subject == SubjectKind::PowerFamily && verdict == Verdict::UniqueFromPower) os << " from-n=" << subject_value;
    if (strongly_irreducible_min_genus) os << " strongly-irreducible-genus>=" << *strongly_irreducible_min_genus;
    // quoted: provenance text is free-form
    std::string prov;
    for (std::size_t i = 0; i < provenance.size(); ++i) prov += (i ? ";" : "") + provenance[i];
    os << " provenance=" << std::quoted(prov);
    return os.str();
}

SplittingVerdict strongly_irreducible_rule(const BundleDescriptor& b, int h) {
    check_consistent(b);
    if (h < 2) throw InvalidInput("splitting genus must be at least 2");
    SplittingVerdict v;
    v.subject = SubjectKind::HeegaardSplitting;
    v.subject_value = h;
    v.rule = "low-genus-stabilization";
    v.provenance = lower_provenance(b);
    const int d = b.bounds.lower;
    const int mchi = minus_chi_of_genus(h);
    if (mchi < d) {
        v.verdict = Verdict::StabilizationOfStandard;
        v.detail = "-chi(H)=" + std::to_string(mchi) + " < d_lo=" + std::to_string(d);
    } else {
        v.verdict = Verdict::NoConclusion;
        v.detail = "-chi(H)=" + std::to_string(mchi) + " >= d_lo=" + std::to_string(d);
    }
    // strongly irreducible needs 2h-2 >= d, i.e. h >= ceil(d/2) + 1
    if (d > 0) v.strongly_irreducible_min_genus = (d + 1) / 2 + 1;
    return v;
}

SplittingVerdict minimal_genus_uniqueness_rule(const BundleDescriptor& b) {
    check_consistent(b);
    SplittingVerdict v;
    const auto stats = standard_splitting_stats(b.genus);
    v.subject = SubjectKind::HeegaardSplitting;
    v.subject_value = stats.genus;
    v.rule = "distance-uniqueness";
    v.provenance = lower_provenance(b);
    const int threshold = 4 * b.genus;
    if (b.bounds.lower > threshold) {
        v.verdict = Verdict::UniqueMinimalGenus;
        v.detail = "d_lo=" + std::to_string(b.bounds.lower) + " > 4g=" + std::to_string(threshold);
    } else {
        v.verdict = Verdict::NoConclusion;
        v.detail = "d_lo=" + std::to_string(b.bounds.lower) + " <= 4g=" + std::to_string(threshold);
    }
    return v;
}

SplittingVerdict incompressible_rule(const BundleDescriptor& b, int chi_g, bool is_torus) {
    check_consistent(b);
    if (chi_g > 0) throw InvalidInput("incompressible surfaces have non-positive euler characteristic");
    if (chi_g % 2 != 0) throw InvalidInput("closed orientable surfaces have even euler characteristic");
    if (is_torus != (chi_g == 0)) throw InvalidInput("euler characteristic 0 means a torus and only then");
    SplittingVerdict v;
    v.subject = SubjectKind::IncompressibleSurface;
    v.subject_value = chi_g;
    v.provenance = lower_provenance(b);
    const int d = b.bounds.lower;
    if (is_torus) {
        v.rule = "incompressible-torus";
        v.verdict = d >= 2 ? Verdict::NoIncompressibleTorus : Verdict::NoConclusion;
        v.detail = "d_lo=" + std::to_string(d) + (d >= 2 ? " >= 2" : " < 2");
    } else {
        v.rule = "incompressible-fibre";
        v.verdict = d > -chi_g ? Verdict::IsotopicToFibre : Verdict::NoConclusion;
        v.detail = "d_lo=" + std::to_string(d) + (d > -chi_g ? " > " : " <= ") + "-chi(G)=" + std::to_string(-chi_g);
    }
    return v;
}

SplittingVerdict high_power_rule(const BundleDescriptor& b) {
    b.validate();
    if (b.power_schedule.empty()) throw InvalidInput("high power rule needs a lower bound schedule");
    SplittingVerdict v;
    v.subject = SubjectKind::PowerFamily;
    v.rule = "high-power-uniqueness";
    v.provenance = {"external-assumption"};
    if (!b.schedule_provenance.empty()) v.provenance.push_back(b.schedule_provenance);
    const int threshold = 4 * b.genus;
    auto schedule = b.power_schedule;
    std::sort(schedule.begin(), schedule.end());
    for (const auto& [n, d] : schedule) {
        if (n < 1) throw InvalidInput("schedule powers must be positive");
        if (d < 0) throw InvalidInput("schedule bounds must be non-negative");
        if (d > threshold) {
            v.verdict = Verdict::UniqueFromPower;
            v.subject_value = n;
            v.detail = "d_lo(" + std::to_string(n) + ")=" + std::to_string(d) + " > 4g=" + std::to_string(threshold) +
                       "; holds from n onward per supplied schedule";
            return v;
        }
    }
    v.verdict = Verdict::NoConclusion;
    v.detail = "no n in the schedule with d_lo(n) > 4g";
    return v;
}

} // namespace curvelab
