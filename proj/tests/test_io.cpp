#include "curvelab/curves.hpp"
#include "curvelab/errors.hpp"
#include "curvelab/io.hpp"

#include <doctest.h>

#include <filesystem>

using namespace curvelab;

namespace {

std::string message_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const InvalidInput& e) {
        return e.what();
    }
    return "";
}

} // namespace

TEST_SUITE("io") {

TEST_CASE("curve files round-trip") {
    const Surface s(3);
    io::CurveFile f;
    f.genus = 3;
    const auto h = humphries_curves(s);
    for (std::size_t i = 0; i < h.size(); ++i) f.curves.emplace_back("c" + std::to_string(i + 1), h[i]);
    NormalCurve big;
    big.weights.assign(15, 0);
    big.weights[4] = 9007199254740993LL; // not a double
    f.curves.emplace_back("big", big);
    const std::string text = io::format_curve_file(f);
    const auto back = io::parse_curve_file(text);
    CHECK(back.genus == 3);
    CHECK(back.curves == f.curves);
    CHECK(io::format_curve_file(back) == text);
    CHECK(back.get("c2") == h[1]);
    CHECK_THROWS_AS(back.get("missing"), InvalidInput);
}

TEST_CASE("path files") {
    const Surface s(2);
    const auto h = humphries_curves(s);
    const PathCertificate p{{h[0], h[2], h[4]}};
    const std::string text = io::format_curve_file(io::path_file(2, p));
    CHECK(text.rfind("surface genus=2 triangulation=std-v1\npath\n", 0) == 0);
    const auto back = io::parse_curve_file(text);
    CHECK(back.is_path);
    CHECK(back.path().vertices == p.vertices);
}

TEST_CASE("curve file errors carry line and column") {
    CHECK(message_of([] { io::parse_curve_file("surface genus=2 triangulation=std-v1\nc1 1 0 0\n", "f.txt"); })
              .rfind("f.txt:2:1:", 0) == 0);
    CHECK(message_of([] { io::parse_curve_file("surface genus=2 triangulation=std-v1\nc1 1 0 x 0 1 0 0 0 0\n", "f"); })
              .rfind("f:2:8:", 0) == 0);
    CHECK(message_of([] { io::parse_curve_file("surface genus=2 triangulation=other\n", "f"); }).rfind("f:1:17:", 0) ==
          0);
    CHECK_THROWS_AS(io::parse_curve_file(""), InvalidInput);
    CHECK_THROWS_AS(io::parse_curve_file("surface genus=2 triangulation=std-v1\nc -1 0 0 0 0 0 0 0 0\n"), InvalidInput);
    CHECK_THROWS_AS(io::parse_curve_file("surface genus=2 triangulation=std-v1\nc 99999999999999999999 0 0 0 0 0 0 0 0\n"),
                    InvalidInput);
    CHECK_THROWS_AS(io::parse_curve_file("surface genus=2 triangulation=std-v1\nc 1 0 0 0 1 0 0 0 0\nc 1 0 0 0 1 0 0 0 0\n"),
                    InvalidInput);
}

TEST_CASE("triangulation description round-trips") {
    for (int g = 2; g <= 4; ++g) {
        const Surface s(g);
        const std::string text = io::format_triangulation(s);
        CHECK(io::parse_triangulation(text) == s);
    }
    std::string text = io::format_triangulation(Surface(2));
    const auto pos = text.find("triangle 0 ");
    text[pos + 11] = text[pos + 11] == '1' ? '2' : '1';
    CHECK_THROWS_AS(io::parse_triangulation(text), InvalidInput);
}

TEST_CASE("bundle files round-trip") {
    const std::string text = "bundle genus=2\n"
                             "monodromy T1^2 T3^-1\n"
                             "lower 9 pseudo-Anosov high power\n"
                             "schedule 1:1 2:4\n"
                             "schedule-provenance measured growth\n";
    const auto b = io::parse_bundle_file(text);
    CHECK(b.genus == 2);
    CHECK(b.monodromy == TwistWord(2, {{1, 2}, {3, -1}}));
    CHECK(b.bounds.lower == 9);
    CHECK(b.bounds.lower_source == LowerSource::ExternalAssumption);
    CHECK(b.bounds.lower_provenance == "pseudo-Anosov high power");
    CHECK(b.power_schedule == std::vector<std::pair<int, int>>{{1, 1}, {2, 4}});
    CHECK(io::format_bundle_file(b) == text);
    CHECK(message_of([] { io::parse_bundle_file("bundle genus=2\nmonodromy T1^0\n", "b"); }).rfind("b:2:11:", 0) == 0);
    CHECK_THROWS_AS(io::parse_bundle_file("bundle genus=2\n"), InvalidInput);
    CHECK_THROWS_AS(io::parse_bundle_file("bundle genus=2\nmonodromy T1\nlower 3\n"), InvalidInput);
    CHECK_THROWS_AS(io::parse_bundle_file("bundle genus=2\nmonodromy T1\ncolour red\n"), InvalidInput);
}

TEST_CASE("atomic writes and digests") {
    const std::string path = "io_test_output.txt";
    io::write_file_atomic(path, "one\n");
    io::write_file_atomic(path, "two\n");
    CHECK(io::read_file(path) == "two\n");
    CHECK_FALSE(std::filesystem::exists(path + ".tmp"));
    std::filesystem::remove(path);
    CHECK_THROWS_AS(io::read_file("no/such/file"), InvalidInput);
    CHECK(io::hex64(io::fnv1a64("")) == "cbf29ce484222325");
    CHECK(io::hex64(io::fnv1a64("a")) == "af63dc4c8601ec8c");
}

} // TEST_SUITE
