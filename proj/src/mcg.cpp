#include "curvelab/mcg.hpp"

#include "curvelab/curves.hpp"
#include "curvelab/errors.hpp"
#include "curvelab/intersection.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <regex>
#include <sstream>

namespace curvelab {

namespace {

// beyond this the required precision makes realization impractical
constexpr std::size_t kMaxWordLetters = 1u << 16;

void merge_into(std::vector<TwistLetter>& out, const TwistLetter& l) {
    if (l.exponent == 0) return;
    if (!out.empty() && out.back().generator == l.generator) {
        out.back().exponent = checked_add(out.back().exponent, l.exponent);
        if (out.back().exponent == 0) out.pop_back();
        return;
    }
    out.push_back(l);
}

const std::vector<NormalCurve>& generators(const Surface& surface) {
    thread_local std::map<int, std::vector<NormalCurve>> cache;
    auto it = cache.find(surface.genus());
    if (it == cache.end()) it = cache.emplace(surface.genus(), humphries_curves(surface)).first;
    return it->second;
}

} // namespace

TwistWord::TwistWord(int genus, std::vector<TwistLetter> letters) : genus_(genus) {
    if (genus < 2) throw InvalidInput("twist word genus must be at least 2");
    for (const auto& l : letters) {
        if (l.generator < 1 || l.generator > 2 * genus + 1) {
            throw InvalidInput("generator index " + std::to_string(l.generator) + " out of range 1.." +
                               std::to_string(2 * genus + 1));
        }
        if (l.exponent == 0) throw InvalidInput("twist exponent must be nonzero");
        if (l.exponent == std::numeric_limits<Weight>::min()) throw InvalidInput("twist exponent out of range");
        merge_into(letters_, l);
    }
}

Weight TwistWord::length() const {
    Weight total = 0;
    for (const auto& l : letters_) total = checked_add(total, l.exponent < 0 ? -l.exponent : l.exponent);
    return total;
}

std::string TwistWord::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < letters_.size(); ++i) {
        if (i) os << ' ';
        os << 'T' << letters_[i].generator << '^' << letters_[i].exponent;
    }
    return os.str();
}

TwistWord inverse_word(const TwistWord& w) {
    std::vector<TwistLetter> out;
    for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) out.push_back({it->generator, -it->exponent});
    return TwistWord(w.genus(), std::move(out));
}

TwistWord compose_words(const TwistWord& first, const TwistWord& second) {
    if (first.genus() != second.genus()) throw InvalidInput("cannot compose twist words of different genus");
    std::vector<TwistLetter> out = first.letters();
    out.insert(out.end(), second.letters().begin(), second.letters().end());
    return TwistWord(first.genus(), std::move(out));
}

NormalCurve twist(const Surface& surface, const NormalCurve& c, const NormalCurve& gamma, Weight n) {
    require_curve(surface, c, "twisting curve");
    require_curve(surface, gamma);
    if (n == 0 || geometric_intersection(surface, c, gamma) == 0) return gamma;
    const Weight reps = n < 0 ? -n : n;

    // Splice |n| copies of c into gamma's cutting sequence at every crossing.
    const std::vector<int> word =
        detail::with_geodesics(surface, gamma, c, [&](const geometry::Geodesic& gg, const geometry::Geodesic& gc) {
            auto xs = detail::chord_crossings(gg, gc);
            std::sort(xs.begin(), xs.end(), [](const auto& a, const auto& b) {
                return a.a_chord != b.a_chord ? a.a_chord < b.a_chord : a.t < b.t;
            });
            const std::vector<int> sg = gg.cutting_sequence();
            const std::vector<int> sc = gc.cutting_sequence();
            const std::size_t m = sc.size();
            const std::size_t total = sg.size() + static_cast<std::size_t>(reps) * xs.size() * m;
            if (reps > static_cast<Weight>(kMaxWordLetters) || total > kMaxWordLetters) {
                throw InvalidInput("twist result exceeds the supported curve size");
            }
            std::vector<int> out;
            out.reserve(total);
            std::size_t next = 0;
            for (std::size_t k = 0; k < sg.size(); ++k) {
                for (; next < xs.size() && xs[next].a_chord == k; ++next) {
                    const std::size_t j = xs[next].b_chord;
                    // turning left onto c means following c forwards when c
                    // crosses from right to left
                    const bool forward = (xs[next].sign > 0) == (n > 0);
                    for (Weight r = 0; r < reps; ++r) {
                        for (std::size_t q = 0; q < m; ++q) {
                            if (forward)
                                out.push_back(sc[(j + q) % m]);
                            else
                                out.push_back(Surface::paired_side(sc[(j + 2 * m - 1 - q) % m]));
                        }
                    }
                }
                out.push_back(sg[k]);
            }
            return out;
        });
    return curve_from_word(surface, word);
}

NormalCurve apply_word(const Surface& surface, const TwistWord& w, const NormalCurve& gamma, const Progress& progress) {
    if (w.genus() != surface.genus()) throw InvalidInput("twist word genus does not match the surface");
    require_curve(surface, gamma);
    const auto& gens = generators(surface);
    NormalCurve current = gamma;
    const std::size_t total = w.letters().size();
    for (std::size_t i = 0; i < total; ++i) {
        const auto& l = w.letters()[i];
        current = twist(surface, gens[l.generator - 1], current, l.exponent);
        if (progress && !progress(i + 1, total)) throw Cancelled();
    }
    return current;
}

TwistWord parse_twist_word(int genus, const std::string& text) {
    static const std::regex token(R"(T(\d+)(?:\^([+-]?\d+))?)");
    std::istringstream is(text);
    std::string tok;
    std::vector<TwistLetter> letters;
    while (is >> tok) {
        std::smatch m;
        if (!std::regex_match(tok, m, token)) throw InvalidInput("bad twist letter '" + tok + "'");
        TwistLetter l;
        try {
            l.generator = std::stoi(m[1].str());
            l.exponent = m[2].matched ? std::stoll(m[2].str()) : 1;
        } catch (const std::out_of_range&) {
            throw InvalidInput("twist letter out of range '" + tok + "'");
        }
        if (l.exponent == 0) throw InvalidInput("zero exponent in '" + tok + "'");
        letters.push_back(l);
    }
    return TwistWord(genus, std::move(letters));
}

std::vector<std::pair<std::string, TwistWord>> read_word_file(std::istream& in, int genus) {
    static const std::regex line_re(R"(\s*word\s+(\S+)\s*=(.*))");
    std::vector<std::pair<std::string, TwistWord>> out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::smatch m;
        if (!std::regex_match(line, m, line_re)) {
            throw InvalidInput("word file line " + std::to_string(lineno) + ": expected 'word <name> = ...'");
        }
        try {
            out.emplace_back(m[1].str(), parse_twist_word(genus, m[2].str()));
        } catch (const InvalidInput& e) {
            throw InvalidInput("word file line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    return out;
}

} // namespace curvelab
