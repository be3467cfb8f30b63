// Dataset parsing, serialization, projection, and the bundled fixtures.
#include <catch2/catch_amalgamated.hpp>

#include <fstream>
#include <sstream>
#include <string>

#include "ivrough/datasets.hpp"
#include "ivrough/info_system.hpp"

using ivrough::InformationSystem;
using ivrough::Interval;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

TEST_CASE("bundled 5x4 dataset parses to the expected cells") {
    const InformationSystem s = ivrough::parse_dataset(ivrough::datasets::table1_csv);
    REQUIRE(s.object_count() == 5);
    REQUIRE(s.attribute_count() == 4);
    CHECK(s.objects() == std::vector<std::string>{"x1", "x2", "x3", "x4", "x5"});
    CHECK(s.attributes() == std::vector<std::string>{"a1", "a2", "a3", "a4"});
    CHECK(s.cell(0, 0) == Interval(0, 0.5));
    CHECK(s.cell(0, 3) == Interval(0.1, 0.3));
    CHECK(s.cell(2, 2) == Interval(0, 0.8));
    CHECK(s.cell(4, 0) == Interval(0.6, 1));
    CHECK(s.cell(4, 3) == Interval(0.8, 1));
    CHECK(s.object_index("x3") == 2);
    CHECK(s.attribute_index("a4") == 3);
    CHECK(s.has_attribute("a1"));
    CHECK_FALSE(s.has_attribute("a9"));
    CHECK_THROWS_AS(s.object_index("nope"), ivrough::Error);
    CHECK_THROWS_AS(s.attribute_index("nope"), ivrough::Error);
}

TEST_CASE("bundled 27x6 dataset parses") {
    const InformationSystem s = ivrough::parse_dataset(ivrough::datasets::face27_csv);
    REQUIRE(s.object_count() == 27);
    REQUIRE(s.attribute_count() == 6);
    CHECK(s.attributes() == std::vector<std::string>{"AD", "BC", "AH", "DH", "EH", "GH"});
    CHECK(s.objects().front() == "FRA1");
    CHECK(s.objects().back() == "ROM3");
    // Spot checks against the published measurements.
    CHECK(s.cell(0, 0) == Interval(155.00, 157.00));
    CHECK(s.cell(26, 5) == Interval(50.99, 60.46));
}

TEST_CASE("the on-disk fixture files equal the embedded copies") {
    CHECK(read_file(std::string(IVROUGH_DATA_DIR) + "/table1.csv") == ivrough::datasets::table1_csv);
    CHECK(read_file(std::string(IVROUGH_DATA_DIR) + "/face27.csv") == ivrough::datasets::face27_csv);
}

TEST_CASE("comments, blank lines and surrounding spaces are tolerated") {
    const char* text =
        "# leading comment\n"
        "\n"
        "object, a1 , a2\n"
        "  x1 , 0:1 , 2 \n"
        "# interlude\n"
        "x2,0.25:0.75,1:4\n"
        "\n";
    const InformationSystem s = ivrough::parse_dataset(text);
    REQUIRE(s.object_count() == 2);
    REQUIRE(s.attribute_count() == 2);
    CHECK(s.cell(0, 0) == Interval(0, 1));
    CHECK(s.cell(0, 1) == Interval(2, 2));  // bare number means a point interval
    CHECK(s.cell(1, 1) == Interval(1, 4));
}

TEST_CASE("parse errors carry line and field positions") {
    using Catch::Matchers::ContainsSubstring;

    CHECK_THROWS_WITH(ivrough::parse_dataset("x,a\n"), ContainsSubstring("header"));
    CHECK_THROWS_WITH(ivrough::parse_dataset(""), ContainsSubstring("no header"));
    CHECK_THROWS_WITH(ivrough::parse_dataset("object,a1\n"), ContainsSubstring("no data rows"));

    // Ragged row: line number and expected field count.
    CHECK_THROWS_WITH(ivrough::parse_dataset("object,a1,a2\nx1,0:1\n"),
                      ContainsSubstring("line 2") && ContainsSubstring("expected 3"));

    // Bad numeric cell: line, field and attribute name.
    CHECK_THROWS_WITH(ivrough::parse_dataset("object,a1,a2\nx1,0:1,oops\n"),
                      ContainsSubstring("line 2, field 3") && ContainsSubstring("(a2)"));

    // Inverted interval.
    CHECK_THROWS_WITH(ivrough::parse_dataset("object,a1\nx1,5:4\n"),
                      ContainsSubstring("line 2") && ContainsSubstring("exceeds"));

    // Duplicates.
    CHECK_THROWS_WITH(ivrough::parse_dataset("object,a1\nx1,0:1\nx1,0:2\n"),
                      ContainsSubstring("duplicate object"));
    CHECK_THROWS_WITH(ivrough::parse_dataset("object,a1,a1\nx1,0:1,0:2\n"),
                      ContainsSubstring("duplicate attribute"));

    // Empty identifiers.
    CHECK_THROWS_WITH(ivrough::parse_dataset("object,a1\n,0:1\n"),
                      ContainsSubstring("empty object identifier"));
}

TEST_CASE("serialize/parse round-trip preserves everything") {
    for (const char* fixture : {ivrough::datasets::table1_csv, ivrough::datasets::face27_csv}) {
        const InformationSystem a = ivrough::parse_dataset(fixture);
        const InformationSystem b = ivrough::parse_dataset(ivrough::serialize_dataset(a));
        REQUIRE(a.objects() == b.objects());
        REQUIRE(a.attributes() == b.attributes());
        for (std::size_t i = 0; i < a.object_count(); ++i)
            for (std::size_t j = 0; j < a.attribute_count(); ++j)
                REQUIRE(a.cell(i, j) == b.cell(i, j));
    }
}

TEST_CASE("projection keeps canonical attribute order and all cells") {
    const InformationSystem s = ivrough::parse_dataset(ivrough::datasets::table1_csv);

    const InformationSystem p = ivrough::project(s, {"a3", "a1"});  // deliberately reversed
    CHECK(p.attributes() == std::vector<std::string>{"a1", "a3"});
    CHECK(p.objects() == s.objects());
    for (std::size_t i = 0; i < s.object_count(); ++i) {
        CHECK(p.cell(i, 0) == s.cell(i, 0));
        CHECK(p.cell(i, 1) == s.cell(i, 2));
    }

    // Projecting to all attributes is the identity.
    const InformationSystem full = ivrough::project(s, s.attributes());
    CHECK(full.attributes() == s.attributes());

    // Nested projection equals direct projection.
    const InformationSystem p2 = ivrough::project(ivrough::project(s, {"a1", "a2", "a3"}), {"a1", "a3"});
    CHECK(p2.attributes() == p.attributes());
    for (std::size_t i = 0; i < s.object_count(); ++i)
        for (std::size_t j = 0; j < 2; ++j) CHECK(p2.cell(i, j) == p.cell(i, j));

    CHECK_THROWS_AS(ivrough::project(s, {}), ivrough::Error);
    CHECK_THROWS_AS(ivrough::project(s, {"zz"}), ivrough::Error);
}
