#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ihx/io.hpp"
#include "ihx/spaces.hpp"

using namespace ihx;

namespace {

const char* cone_hexagon_file = R"(# cone over the hexagon, apex 6
dim 2
simplex 0 1 6
simplex 1 2 6
simplex 2 3 6
simplex 3 4 6
simplex 4 5 6
simplex 0 5 6
skeleton 0
simplex 6
)";

const char* dual_numbers_file = R"(dim 2
basis 1 x
mul 1 1 : 1 0
mul 1 x : 0 1
mul x 1 : 0 1
mul x x : 0 0
)";

} // namespace

TEST_CASE("complex file parses into a filtered complex")
{
    auto pc = parse_complex_file(cone_hexagon_file);
    CHECK(pc.has_filtration);
    CHECK(pc.filtered.n == 2);
    CHECK(pc.filtered.ambient.size() == 6 + 7 + 12); // triangles, vertices, edges
    CHECK(pc.filtered.skeleton(0).contains(Simplex({6})));
    CHECK(pc.filtered.skeleton(1).size() == 1); // nothing new declared at level 1

    auto b = intersection_betti(pc.filtered, zero_perversity(2));
    CHECK(b == std::map<int, long>{{0, 1}, {1, 0}, {2, 0}});
}

TEST_CASE("complex file diagnostics carry line numbers")
{
    CHECK_THROWS_WITH_AS(parse_complex_file("dim 2\n"), doctest::Contains("empty complex"),
                         ParseError);
    CHECK_THROWS_WITH_AS(parse_complex_file("simplex 0 1\n"), doctest::Contains("line 1"),
                         ParseError);
    CHECK_THROWS_WITH_AS(parse_complex_file("dim 1\nsimplex 0 1\nskeleton 0\nsimplex 7\n"),
                         doctest::Contains("[7] is not in the ambient complex"), ParseError);
    CHECK_THROWS_WITH_AS(parse_complex_file("dim 1\nsimplex 0 0\n"), doctest::Contains("line 2"),
                         ParseError);
    CHECK_THROWS_WITH_AS(parse_complex_file("dim 1\nfoo bar\n"),
                         doctest::Contains("unknown directive 'foo'"), ParseError);
    CHECK_THROWS_WITH_AS(parse_complex_file("dim 1\nsimplex 0 1\nskeleton 3\n"),
                         doctest::Contains("skeleton index"), ParseError);
    // declared dimension must bound the complex dimension
    CHECK_THROWS_AS(parse_complex_file("dim 0\nsimplex 0 1\n"), ParseError);
}

TEST_CASE("complex files round-trip through the canonical form")
{
    for (const char* text : {cone_hexagon_file, "dim 1\nsimplex 0 1\nsimplex 1 2\n"}) {
        auto once = serialize_complex(parse_complex_file(text));
        auto twice = serialize_complex(parse_complex_file(once));
        CHECK(once == twice);
    }
}

TEST_CASE("algebra file parses and round-trips")
{
    auto a = parse_algebra_file(dual_numbers_file);
    CHECK(a.dim() == 2);
    CHECK(a.labels() == std::vector<std::string>{"1", "x"});
    CHECK(a.product(1, 1) == std::vector<Rational>{0, 0});

    for (const auto& b : {algebras::ground_field(), algebras::dual_numbers(),
                          algebras::field_product(), algebras::matrix2(),
                          algebras::upper_triangular2()}) {
        auto text = serialize_algebra(b);
        auto back = parse_algebra_file(text);
        CHECK(serialize_algebra(back) == text);
    }
}

TEST_CASE("algebra file diagnostics")
{
    CHECK_THROWS_WITH_AS(parse_algebra_file("dim 2\nbasis 1 x\nmul 1 1 : 1 0\n"),
                         doctest::Contains("missing product"), ParseError);
    CHECK_THROWS_WITH_AS(parse_algebra_file("dim 2\nbasis 1 1\n"),
                         doctest::Contains("duplicate basis label"), ParseError);
    CHECK_THROWS_WITH_AS(parse_algebra_file("dim 1\nbasis 1\nmul 1 1 : 0.5\n"),
                         doctest::Contains("line 3"), ParseError);
    // associative structure is validated after parsing, naming the triple
    std::string bad = "dim 3\nbasis 1 a b\n"
                      "mul 1 1 : 1 0 0\nmul 1 a : 0 1 0\nmul 1 b : 0 0 1\n"
                      "mul a 1 : 0 1 0\nmul b 1 : 0 0 1\n"
                      "mul a a : 0 0 1\nmul a b : 1 0 0\nmul b a : 0 1 0\nmul b b : 0 0 0\n";
    CHECK_THROWS_WITH_AS(parse_algebra_file(bad), doctest::Contains("triple"), ParseError);
}

TEST_CASE("reports render deterministically")
{
    Report r;
    r.note("example summary");
    r.add("tool", tool_version);
    r.add("betti.0", 1L);
    r.add("betti.1", 2L);
    CHECK(r.render_records() == "tool=ihx 1.0.0\nbetti.0=1\nbetti.1=2\n");
    Report same = r;
    CHECK(r.render_records() == same.render_records());
    CHECK(r.render_table().find("example summary") == 0);
}

TEST_CASE("digest is stable and content sensitive")
{
    CHECK(digest_hex("") == digest_hex(""));
    CHECK(digest_hex("a") != digest_hex("b"));
    CHECK(digest_hex(cone_hexagon_file).size() == 16);
    // FNV-1a 64 reference value for the empty string
    CHECK(fnv1a("") == 14695981039346656037ull);
}
