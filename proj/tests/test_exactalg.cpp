#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ihx/graded.hpp"
#include "ihx/matrix.hpp"

#include <random>

using namespace ihx;

namespace {

RationalMatrix hollow_triangle_d1()
{
    // edges 01, 02, 12 against vertices 0, 1, 2
    RationalMatrix d(3, 3);
    d.set(0, 0, -1);
    d.set(1, 0, 1);
    d.set(0, 1, -1);
    d.set(2, 1, 1);
    d.set(1, 2, -1);
    d.set(2, 2, 1);
    return d;
}

RationalMatrix random_int_matrix(std::mt19937_64& rng, int rows, int cols)
{
    std::uniform_int_distribution<int> entry(-4, 4);
    std::uniform_int_distribution<int> fill(0, 2);
    RationalMatrix m(rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            if (fill(rng) == 0)
                m.set(r, c, entry(rng));
    return m;
}

} // namespace

TEST_CASE("rank of trivial matrices")
{
    CHECK(rank(RationalMatrix(3, 3)) == 0);
    CHECK(rank(RationalMatrix::identity(4)) == 4);
}

TEST_CASE("rank of hollow triangle boundary is 2")
{
    CHECK(rank(hollow_triangle_d1()) == 2);
}

TEST_CASE("kernel of identity and zero matrices")
{
    CHECK(kernel_basis(RationalMatrix::identity(3)).empty());
    CHECK(kernel_basis(RationalMatrix(2, 5)).size() == 5);
}

TEST_CASE("kernel of hollow triangle boundary is the fundamental cycle")
{
    auto d = hollow_triangle_d1();
    auto ker = kernel_basis(d);
    REQUIRE(ker.size() == 1);
    for (const auto& x : d.apply(ker[0]))
        CHECK(x == 0);
    // (1, -1, 1) up to scale
    CHECK(ker[0][0] * ker[0][2] == -ker[0][0] * ker[0][1]);
    CHECK(ker[0][0] != 0);
}

TEST_CASE("smith normal form instances")
{
    CHECK(smith_normal_form(RationalMatrix::identity(3)) == std::vector<Int>{1, 1, 1});
    RationalMatrix diag(2, 2);
    diag.set(0, 0, 2);
    diag.set(1, 1, 4);
    CHECK(smith_normal_form(diag) == std::vector<Int>{2, 4});
    CHECK(smith_normal_form(hollow_triangle_d1()) == std::vector<Int>{1, 1});
}

TEST_CASE("betti of the one-point complex")
{
    GradedComplex c;
    c.dir = Direction::chain;
    c.lo = 0;
    c.hi = 0;
    c.dims = {1};
    auto b = betti(c);
    CHECK(b.at(0) == 1);
}

TEST_CASE("betti rejects d∘d != 0")
{
    GradedComplex c;
    c.dir = Direction::chain;
    c.lo = 0;
    c.hi = 2;
    c.dims = {1, 1, 1};
    c.diff[1] = RationalMatrix::identity(1);
    c.diff[2] = RationalMatrix::identity(1);
    CHECK_THROWS(betti(c));
}

TEST_CASE("rank-nullity and rank agreement with SNF on random matrices")
{
    std::mt19937_64 rng(20240817);
    for (int trial = 0; trial < 40; ++trial) {
        auto m = random_int_matrix(rng, 5 + trial % 4, 6 + trial % 3);
        long r = rank(m);
        CHECK(r + static_cast<long>(kernel_basis(m).size()) == m.cols());
        CHECK(static_cast<long>(smith_normal_form(m).size()) == r);
        for (const auto& v : kernel_basis(m))
            for (const auto& x : m.apply(v))
                CHECK(x == 0);
    }
}

TEST_CASE("sparse and dense elimination agree")
{
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 10; ++trial) {
        auto small = random_int_matrix(rng, 12, 9);
        // embed into a >=64 wide matrix so the sparse path runs
        RationalMatrix wide(12, 80);
        for (const auto& [rc, v] : small.entries())
            wide.set(rc.first, rc.second * 8, v);
        CHECK(rank(wide) == rank(small));
    }
}

TEST_CASE("solve_columns finds exact preimages")
{
    auto d = hollow_triangle_d1();
    RationalMatrix y = matrix_from_columns(3, {{Rational(-1), Rational(1), Rational(0)}});
    auto x = solve_columns(d, y);
    CHECK((d * x) == y);
    RationalMatrix bad = matrix_from_columns(3, {{Rational(1), Rational(0), Rational(0)}});
    CHECK_THROWS_AS(solve_columns(d, bad), std::domain_error);
}

TEST_CASE("in_column_span")
{
    auto d = hollow_triangle_d1();
    CHECK(in_column_span(d, {Rational(-1), Rational(1), Rational(0)}));
    CHECK_FALSE(in_column_span(d, {Rational(1), Rational(0), Rational(0)}));
}

TEST_CASE("rational parsing round trip")
{
    CHECK(parse_rational("3/2") == Rational(3, 2));
    CHECK(parse_rational("-7") == Rational(-7));
    CHECK(rational_to_string(Rational(-4, 6)) == "-2/3");
    CHECK_THROWS(parse_rational("1.5"));
    CHECK(rat_floor(Rational(-3, 2)) == -2);
    CHECK(rat_floor(Rational(5, 2)) == 2);
}
