#pragma once

#include "curvelab/surface.hpp"

#include <functional>
#include <istream>
#include <string>
#include <utility>
#include <vector>

namespace curvelab {

struct TwistLetter {
    int generator = 1; ///< 1..2g+1, index into the chain
    Weight exponent = 1;
    bool operator==(const TwistLetter&) const = default;
};

/// A word in the chain twists, read left to right: the first letter acts
/// first. Adjacent letters on the same generator are merged.
class TwistWord {
public:
    TwistWord() = default;
    TwistWord(int genus, std::vector<TwistLetter> letters);

    int genus() const { return genus_; }
    const std::vector<TwistLetter>& letters() const { return letters_; }
    bool empty() const { return letters_.empty(); }
    /// Sum of |exponent|.
    Weight length() const;
    std::string to_string() const;

    bool operator==(const TwistWord&) const = default;

private:
    int genus_ = 2;
    std::vector<TwistLetter> letters_;
};

TwistWord inverse_word(const TwistWord& w);
TwistWord compose_words(const TwistWord& first, const TwistWord& second);

/// T_c^n(gamma). Positive n is a left twist: gamma turns left onto c.
NormalCurve twist(const Surface& surface, const NormalCurve& c, const NormalCurve& gamma, Weight n);

/// Called after each single twist with (done, total); returning false
/// cancels and apply_word throws Cancelled.
using Progress = std::function<bool(std::size_t, std::size_t)>;

NormalCurve apply_word(const Surface& surface, const TwistWord& w, const NormalCurve& gamma,
                       const Progress& progress = {});

/// Parses "T1^2 T3^-1 T2" (exponent defaults to 1, zero is rejected).
TwistWord parse_twist_word(int genus, const std::string& text);

/// Reads `word <name> = <letters>` lines; blank lines and '#' comments skipped.
std::vector<std::pair<std::string, TwistWord>> read_word_file(std::istream& in, int genus);

} // namespace curvelab
