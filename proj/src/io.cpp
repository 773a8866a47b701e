#include "curvelab/io.hpp"

#include "curvelab/errors.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <limits>
#include <optional>
#include <regex>
#include <sstream>

namespace curvelab::io {

namespace {

[[noreturn]] void fail(const std::string& source, int line, int col, const std::string& msg) {
    throw InvalidInput(source + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " + msg);
}

struct Token {
    std::string text;
    int col; // 1-based
};

std::vector<Token> split(const std::string& line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        if (i >= line.size()) break;
        const std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
        out.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
    }
    return out;
}

bool skip(const std::string& line) {
    const auto p = line.find_first_not_of(" \t\r");
    return p == std::string::npos || line[p] == '#';
}

long long parse_int(const Token& t, const std::string& source, int line, long long lo, long long hi) {
    static const std::regex re(R"([+-]?\d+)");
    if (!std::regex_match(t.text, re)) fail(source, line, t.col, "expected an integer, got '" + t.text + "'");
    long long v = 0;
    try {
        v = std::stoll(t.text);
    } catch (const std::out_of_range&) {
        fail(source, line, t.col, "integer out of range '" + t.text + "'");
    }
    if (v < lo || v > hi) fail(source, line, t.col, "value " + t.text + " out of range");
    return v;
}

int parse_key_int(const Token& t, const std::string& key, const std::string& source, int line) {
    const std::string prefix = key + "=";
    if (t.text.rfind(prefix, 0) != 0) fail(source, line, t.col, "expected " + prefix + "<value>");
    Token v{t.text.substr(prefix.size()), t.col + static_cast<int>(prefix.size())};
    return static_cast<int>(parse_int(v, source, line, 2, 1000));
}

std::string rest_of_line(const std::string& line, const Token& from) {
    std::string s = line.substr(from.col - 1);
    while (!s.empty() && (s.back() == '\r' || s.back() == ' ' || s.back() == '\t')) s.pop_back();
    return s;
}

} // namespace

std::string format_triangulation(const Surface& s) {
    std::ostringstream os;
    os << "triangulation std-v1 genus=" << s.genus() << '\n';
    os << "vertices " << s.vertex_count() << '\n';
    os << "edges " << s.num_edges() << '\n';
    for (int t = 0; t < s.num_triangles(); ++t) {
        os << "triangle " << t;
        for (const auto& side : s.triangle(t).sides) os << ' ' << side.edge << (side.agrees ? '+' : '-');
        os << '\n';
    }
    return os.str();
}

Surface parse_triangulation(const std::string& text, const std::string& source) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    std::optional<Surface> s;
    int next = 0;
    bool have_vertices = false, have_edges = false;
    while (std::getline(in, line)) {
        ++lineno;
        if (skip(line)) continue;
        const auto toks = split(line);
        if (!s) {
            if (toks.size() != 3 || toks[0].text != "triangulation" || toks[1].text != "std-v1") {
                fail(source, lineno, 1, "expected header 'triangulation std-v1 genus=<g>'");
            }
            s.emplace(parse_key_int(toks[2], "genus", source, lineno));
            continue;
        }
        const std::string& key = toks[0].text;
        if ((key == "vertices" || key == "edges") && toks.size() == 2) {
            const long long want = key == "vertices" ? s->vertex_count() : s->num_edges();
            if (parse_int(toks[1], source, lineno, 0, 1 << 30) != want) {
                fail(source, lineno, toks[1].col, key + " count does not match genus");
            }
            (key == "vertices" ? have_vertices : have_edges) = true;
        } else if (key == "triangle" && toks.size() == 5) {
            if (parse_int(toks[1], source, lineno, 0, 1 << 30) != next || next >= s->num_triangles()) {
                fail(source, lineno, toks[1].col, "triangles must be listed in order");
            }
            for (int i = 0; i < 3; ++i) {
                const Token& t = toks[2 + i];
                const char sign = t.text.empty() ? ' ' : t.text.back();
                if (sign != '+' && sign != '-') fail(source, lineno, t.col, "expected <edge>+ or <edge>-");
                Token num{t.text.substr(0, t.text.size() - 1), t.col};
                const auto e = parse_int(num, source, lineno, 0, s->num_edges() - 1);
                const auto& want = s->triangle(next).sides[i];
                if (e != want.edge || (sign == '+') != want.agrees) {
                    fail(source, lineno, t.col, "triangle does not match the standard triangulation");
                }
            }
            ++next;
        } else {
            fail(source, lineno, 1, "unexpected line");
        }
    }
    if (!s) fail(source, lineno + 1, 1, "missing 'triangulation' header");
    if (!have_vertices || !have_edges || next != s->num_triangles()) {
        fail(source, lineno + 1, 1, "incomplete triangulation");
    }
    return *s;
}

const NormalCurve& CurveFile::get(const std::string& name) const {
    for (const auto& [n, c] : curves) {
        if (n == name) return c;
    }
    throw InvalidInput("no curve named '" + name + "'");
}

PathCertificate CurveFile::path() const {
    PathCertificate p;
    for (const auto& [n, c] : curves) p.vertices.push_back(c);
    return p;
}

CurveFile parse_curve_file(const std::string& text, const std::string& source) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    CurveFile f;
    bool header = false;
    while (std::getline(in, line)) {
        ++lineno;
        if (skip(line)) continue;
        const auto toks = split(line);
        if (!header) {
            if (toks.size() != 3 || toks[0].text != "surface") {
                fail(source, lineno, 1, "expected header 'surface genus=<g> triangulation=std-v1'");
            }
            f.genus = parse_key_int(toks[1], "genus", source, lineno);
            if (toks[2].text != "triangulation=std-v1") {
                fail(source, lineno, toks[2].col, "unsupported triangulation '" + toks[2].text + "'");
            }
            header = true;
            continue;
        }
        if (toks[0].text == "path") {
            if (f.is_path || !f.curves.empty()) fail(source, lineno, 1, "'path' must directly follow the header");
            if (toks.size() != 1) fail(source, lineno, toks[1].col, "unexpected text after 'path'");
            f.is_path = true;
            continue;
        }
        const int edges = 6 * f.genus - 3;
        if (static_cast<int>(toks.size()) != edges + 1) {
            fail(source, lineno, 1,
                 "curve '" + toks[0].text + "' needs " + std::to_string(edges) + " weights, got " +
                     std::to_string(toks.size() - 1));
        }
        for (const auto& [n, c] : f.curves) {
            if (n == toks[0].text && !f.is_path) fail(source, lineno, 1, "duplicate curve name '" + n + "'");
        }
        NormalCurve c;
        for (int e = 0; e < edges; ++e) {
            c.weights.push_back(
                parse_int(toks[e + 1], source, lineno, 0, std::numeric_limits<Weight>::max()));
        }
        f.curves.emplace_back(toks[0].text, std::move(c));
    }
    if (!header) fail(source, lineno + 1, 1, "missing 'surface' header");
    return f;
}

std::string format_curve_file(const CurveFile& f) {
    std::ostringstream os;
    os << "surface genus=" << f.genus << " triangulation=std-v1\n";
    if (f.is_path) os << "path\n";
    for (const auto& [n, c] : f.curves) {
        os << n;
        for (Weight w : c.weights) os << ' ' << w;
        os << '\n';
    }
    return os.str();
}

CurveFile path_file(int genus, const PathCertificate& p) {
    CurveFile f;
    f.genus = genus;
    f.is_path = true;
    for (std::size_t i = 0; i < p.vertices.size(); ++i) f.curves.emplace_back("v" + std::to_string(i), p.vertices[i]);
    return f;
}

BundleDescriptor parse_bundle_file(const std::string& text, const std::string& source) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    BundleDescriptor b;
    bool header = false, have_word = false;
    while (std::getline(in, line)) {
        ++lineno;
        if (skip(line)) continue;
        const auto toks = split(line);
        if (!header) {
            if (toks.size() != 2 || toks[0].text != "bundle") fail(source, lineno, 1, "expected header 'bundle genus=<g>'");
            b.genus = parse_key_int(toks[1], "genus", source, lineno);
            b.monodromy = TwistWord(b.genus, {});
            b.bounds.word = b.monodromy;
            header = true;
            continue;
        }
        const std::string& key = toks[0].text;
        if (key == "monodromy") {
            if (have_word) fail(source, lineno, 1, "duplicate monodromy");
            const std::string letters = toks.size() > 1 ? rest_of_line(line, toks[1]) : "";
            try {
                b.monodromy = parse_twist_word(b.genus, letters);
            } catch (const InvalidInput& e) {
                fail(source, lineno, toks.size() > 1 ? toks[1].col : 1, e.what());
            }
            b.bounds.word = b.monodromy;
            have_word = true;
        } else if (key == "lower") {
            if (toks.size() < 2) fail(source, lineno, 1, "expected 'lower <d> <provenance>'");
            const int d = static_cast<int>(parse_int(toks[1], source, lineno, 0, 1000000));
            const std::string prov = toks.size() > 2 ? rest_of_line(line, toks[2]) : "";
            if (prov.empty()) fail(source, lineno, toks[1].col, "external lower bounds need a provenance");
            b.bounds = attach_external_lower(b.bounds, d, prov);
        } else if (key == "schedule") {
            for (std::size_t i = 1; i < toks.size(); ++i) {
                const auto colon = toks[i].text.find(':');
                if (colon == std::string::npos) fail(source, lineno, toks[i].col, "expected <n>:<d>");
                Token n{toks[i].text.substr(0, colon), toks[i].col};
                Token d{toks[i].text.substr(colon + 1), toks[i].col + static_cast<int>(colon) + 1};
                b.power_schedule.emplace_back(static_cast<int>(parse_int(n, source, lineno, 1, 1000000)),
                                              static_cast<int>(parse_int(d, source, lineno, 0, 1000000)));
            }
            if (toks.size() < 2) fail(source, lineno, 1, "empty schedule");
        } else if (key == "schedule-provenance") {
            if (toks.size() < 2) fail(source, lineno, 1, "empty provenance");
            b.schedule_provenance = rest_of_line(line, toks[1]);
        } else {
            fail(source, lineno, 1, "unknown bundle entry '" + key + "'");
        }
    }
    if (!header) fail(source, lineno + 1, 1, "missing 'bundle' header");
    if (!have_word) fail(source, lineno + 1, 1, "missing monodromy");
    return b;
}

std::string format_bundle_file(const BundleDescriptor& b) {
    std::ostringstream os;
    os << "bundle genus=" << b.genus << '\n';
    os << "monodromy " << b.monodromy.to_string() << '\n';
    if (b.bounds.lower_source == LowerSource::ExternalAssumption) {
        os << "lower " << b.bounds.lower << ' ' << b.bounds.lower_provenance << '\n';
    }
    if (!b.power_schedule.empty()) {
        os << "schedule";
        for (const auto& [n, d] : b.power_schedule) os << ' ' << n << ':' << d;
        os << '\n';
    }
    if (!b.schedule_provenance.empty()) os << "schedule-provenance " << b.schedule_provenance << '\n';
    return os.str();
}

std::vector<std::pair<std::string, TwistWord>> parse_word_file(const std::string& text, int genus,
                                                               const std::string& source) {
    std::istringstream in(text);
    try {
        return read_word_file(in, genus);
    } catch (const InvalidInput& e) {
        throw InvalidInput(source + ": " + e.what());
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidInput("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file_atomic(const std::string& path, const std::string& content) {
    namespace fs = std::filesystem;
    const fs::path target(path);
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw InvalidInput("cannot write '" + tmp.string() + "'");
        out << content;
        out.flush();
        if (!out) throw InvalidInput("write failed for '" + tmp.string() + "'");
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) {
        fs::remove(tmp);
        throw InvalidInput("cannot replace '" + path + "': " + ec.message());
    }
}

std::uint64_t fnv1a64(const std::string& data) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

std::string hex64(std::uint64_t v) {
    std::ostringstream os;
    os << std::hex << std::setw(16) << std::setfill('0') << v;
    return os.str();
}

} // namespace curvelab::io
