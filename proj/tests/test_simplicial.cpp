#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ihx/simplicial.hpp"
#include "ihx/spaces.hpp"

using namespace ihx;

TEST_CASE("boundary of an edge")
{
    auto k = SimplicialComplex::from_maximal({Simplex({0, 1})});
    auto d = boundary_matrix(k, 1);
    CHECK(d.at(0, 0) == -1); // -[v0]
    CHECK(d.at(1, 0) == 1);  // +[v1]
}

TEST_CASE("d∘d = 0 on the full 3-simplex")
{
    auto k = spaces::full_simplex(3);
    for (int i = 1; i < 3; ++i)
        CHECK((boundary_matrix(k, i) * boundary_matrix(k, i + 1)).is_zero());
    CHECK_NOTHROW(chain_complex(k).validate());
}

TEST_CASE("boundary degree out of range")
{
    CHECK_THROWS(boundary_matrix(spaces::hexagon(), 2));
    CHECK_THROWS(boundary_matrix(spaces::hexagon(), 0));
}

TEST_CASE("hollow triangle ranks and betti")
{
    auto k = spaces::hollow_triangle();
    CHECK(rank(boundary_matrix(k, 1)) == 2);
    auto b = betti_numbers(k);
    CHECK(b.at(0) == 1);
    CHECK(b.at(1) == 1);
}

TEST_CASE("full 2-simplex is acyclic")
{
    auto b = betti_numbers(spaces::full_simplex(2));
    CHECK(b.at(0) == 1);
    CHECK(b.at(1) == 0);
    CHECK(b.at(2) == 0);
}

TEST_CASE("cone over hexagon counts")
{
    auto c = cone(spaces::hexagon(), 6);
    CHECK(c.simplices_of_dim(0).size() == 7);
    CHECK(c.simplices_of_dim(1).size() == 12);
    CHECK(c.simplices_of_dim(2).size() == 6);
    CHECK(c.euler_characteristic() == 1);
    CHECK_THROWS(cone(spaces::hexagon(), 3)); // apex collision
}

TEST_CASE("cones are acyclic")
{
    for (const auto& k : {spaces::hexagon(), spaces::torus7(), spaces::two_hexagons()}) {
        auto b = betti_numbers(cone(k, 99));
        CHECK(b.at(0) == 1);
        for (const auto& [deg, val] : b)
            if (deg > 0)
                CHECK(val == 0);
        CHECK(cone(k, 99).euler_characteristic() == 1);
    }
}

TEST_CASE("torus7 is a torus")
{
    auto k = spaces::torus7();
    CHECK(k.simplices_of_dim(0).size() == 7);
    CHECK(k.simplices_of_dim(1).size() == 21);
    CHECK(k.simplices_of_dim(2).size() == 14);
    auto b = betti_numbers(k);
    CHECK(b.at(0) == 1);
    CHECK(b.at(1) == 2);
    CHECK(b.at(2) == 1);
    CHECK(is_pseudomanifold(k).ok);
}

TEST_CASE("suspensions")
{
    auto s1 = suspension(spaces::two_points(), 8, 9); // square circle
    auto b1 = betti_numbers(s1);
    CHECK(b1.at(0) == 1);
    CHECK(b1.at(1) == 1);

    auto s2 = suspension(spaces::hexagon(), 8, 9); // S^2
    auto b2 = betti_numbers(s2);
    CHECK(b2.at(0) == 1);
    CHECK(b2.at(1) == 0);
    CHECK(b2.at(2) == 1);

    CHECK(s2.euler_characteristic() == 2 - spaces::hexagon().euler_characteristic());
    CHECK(s1.euler_characteristic() == 2 - spaces::two_points().euler_characteristic());
}

TEST_CASE("barycentric subdivision")
{
    auto seg = barycentric_subdivision(SimplicialComplex::from_maximal({Simplex({0, 1})}));
    CHECK(seg.complex.simplices_of_dim(0).size() == 3);
    CHECK(seg.complex.simplices_of_dim(1).size() == 2);

    auto tri = barycentric_subdivision(spaces::full_simplex(2));
    CHECK(tri.complex.euler_characteristic() == 1);

    auto hollow = barycentric_subdivision(spaces::hollow_triangle());
    auto b = betti_numbers(hollow.complex);
    CHECK(b.at(0) == 1);
    CHECK(b.at(1) == 1);

    // carrier map sends each new vertex to the simplex it subdivides
    for (const auto& [v, s] : hollow.carrier)
        CHECK(spaces::hollow_triangle().contains(s));
}

TEST_CASE("subdivision preserves betti on the torus")
{
    auto sub = barycentric_subdivision(spaces::torus7());
    auto b = betti_numbers(sub.complex);
    CHECK(b.at(0) == 1);
    CHECK(b.at(1) == 2);
    CHECK(b.at(2) == 1);
}

TEST_CASE("pseudomanifold detection")
{
    CHECK(is_pseudomanifold(spaces::hollow_triangle()).ok);
    auto r = is_pseudomanifold(spaces::full_simplex(2));
    CHECK_FALSE(r.ok);
    CHECK(r.bad_ridges.size() == 3); // each boundary edge has one coface
}

TEST_CASE("cochain complex validates")
{
    auto c = cochain_complex(spaces::torus7());
    CHECK_NOTHROW(c.validate());
    auto b = betti(c);
    CHECK(b.at(0) == 1);
    CHECK(b.at(1) == 2);
    CHECK(b.at(2) == 1);
}
