#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <string>

#include "frobkit/errors.hpp"
#include "frobkit/weyl_data.hpp"

using namespace frobkit;

namespace {

std::string error_of(const std::string& text) {
    try {
        parse_weyl_data(text);
    } catch (const PreconditionViolated& e) {
        return e.what();
    }
    return {};
}

} // namespace

TEST_CASE("embedded table") {
    const auto& t = embedded_weyl_data();
    CHECK(t.datum("G2.d1").order == 12);
    CHECK(t.datum("G2.d1").classes == 6);
    CHECK(t.datum("G2.d1").provenance == "paper");
    CHECK(t.datum("E8.d1").order == 696729600);
    CHECK(t.datum("E8.d1").classes == 112);
    CHECK_FALSE(t.datum("E7.d4").order.has_value());
    CHECK(t.datum("E7.d4.T").order == 768);
    CHECK(t.family("E6").degrees == std::vector<std::uint64_t>{2, 5, 6, 8, 9, 12});
    for (const auto& [name, f] : t.families()) {
        std::uint64_t sum = 0;
        for (auto d : f.degrees) sum += d - 1;
        // Number of positive roots: 6, 24, 36, 63, 120.
        const std::uint64_t expected = name == "G2" ? 6 : name == "F4" ? 24 : name == "E6" ? 36 : name == "E7" ? 63 : 120;
        CHECK(sum == expected);
    }
    for (const auto& [key, d] : t.data()) {
        if (d.order && d.classes) CHECK(*d.classes <= *d.order);
    }
    CHECK_THROWS_AS(t.datum("E9.d1"), PreconditionViolated);
    CHECK_THROWS_AS(t.family("E9"), UnsupportedFamily);
}

TEST_CASE("loading from a file matches the embedded copy") {
    const std::string path = "weyl_data_roundtrip.txt";
    {
        std::ofstream out(path);
        out << embedded_weyl_data_text();
    }
    const auto loaded = load_weyl_data(path);
    std::remove(path.c_str());
    const auto& e = embedded_weyl_data();
    REQUIRE(loaded.data().size() == e.data().size());
    for (const auto& [key, d] : e.data()) {
        const auto& l = loaded.datum(key);
        CHECK(l.order == d.order);
        CHECK(l.classes == d.classes);
        CHECK(l.rank == d.rank);
        CHECK(l.provenance == d.provenance);
    }
    CHECK(loaded.families().size() == e.families().size());
    CHECK_THROWS(load_weyl_data("/nonexistent/weyl.txt"));
}

TEST_CASE("malformed input") {
    CHECK(error_of("weyl X.d1 12 6 2 paper\n").empty());
    CHECK(error_of("# c\nweyl X.d1 12 6 paper\n").find("line 2") != std::string::npos);
    CHECK(error_of("weyl X.d1 twelve 6 2 paper\n").find("line 1") != std::string::npos);
    CHECK_FALSE(error_of("weyl X.d1 12 6 2 folklore\n").empty());
    CHECK_FALSE(error_of("weyl X.d1 6 12 2 paper\n").empty());
    CHECK_FALSE(error_of("weyl X.d1 12 6 0 paper\n").empty());
    CHECK_FALSE(error_of("family X\n").empty());
    CHECK_FALSE(error_of("family X 2 zero\n").empty());
    CHECK_FALSE(error_of("torus X 1 2 3\n").empty());
    const auto t = parse_weyl_data("weyl X.d1 - 6 2 external\nfamily X 2 3\n");
    CHECK_FALSE(t.datum("X.d1").order.has_value());
    CHECK(t.datum("X.d1").classes == 6);
    CHECK(t.family("X").degrees.size() == 2);
}
