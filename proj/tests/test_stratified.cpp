#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ihx/spaces.hpp"
#include "ihx/stratified.hpp"

using namespace ihx;

namespace {

Perversity with_top(int n, int p_top)
{
    // minimal-growth perversity hitting p_n at the top; p_top may be negative
    Perversity p = zero_perversity(n);
    for (int j = 3; j <= n; ++j)
        p.values[static_cast<std::size_t>(j)] = std::max(0, p_top - (n - j));
    p.values[static_cast<std::size_t>(n)] = p_top;
    return p;
}

} // namespace

TEST_CASE("perversity arithmetic")
{
    CHECK(total_perversity(4).values == std::vector<int>{0, 0, 0, 1, 2});
    CHECK(complement(zero_perversity(4)) == total_perversity(4));
    CHECK(complement(total_perversity(4)) == zero_perversity(4));
    CHECK(zero_perversity(5).valid_gm());
    CHECK(total_perversity(5).valid_gm());
    Perversity bad{{0, 0, 0, 2}};
    CHECK_FALSE(bad.valid_gm());
    CHECK_THROWS(complement(Perversity{{0, 0, 0, 2}}));
}

TEST_CASE("all_perversities enumerates 2^(n-2)")
{
    CHECK(all_perversities(2).size() == 1);
    CHECK(all_perversities(3).size() == 2);
    CHECK(all_perversities(6).size() == 16);
    for (const auto& p : all_perversities(6))
        CHECK(p.valid_gm());
}

TEST_CASE("allowability on the cone over the hexagon")
{
    auto f = FilteredComplex::cone_over(spaces::hexagon(), 6);
    auto p = zero_perversity(2);

    // apex as a 0-chain: needs dim <= 0-2+0 = -2, fails
    CHECK_FALSE(simplex_allowable(Simplex({6}), 0, p, f));
    // 2-simplex containing the apex: 0 <= 2-2+0
    CHECK(simplex_allowable(Simplex({0, 1, 6}), 2, p, f));
    // simplex disjoint from Σ is vacuously allowable
    CHECK(simplex_allowable(Simplex({0, 1}), 1, p, f));
    CHECK_THROWS(simplex_allowable(Simplex({0, 3}), 1, p, f)); // not in complex
}

TEST_CASE("IC of the cone over the hexagon at zero perversity")
{
    auto f = FilteredComplex::cone_over(spaces::hexagon(), 6);
    auto ic = intersection_chain_complex(f, zero_perversity(2));
    CHECK(ic.dim(0) == 6); // apex vertex excluded
    CHECK(ic.dim(1) == 6); // only link edges; apex edges fail
    // every 2-simplex is allowable, but the boundary condition cuts IC_2
    // down to the single apex-edge-cancelling combination
    CHECK(ic.allowable[2].size() == 6);
    CHECK(ic.dim(2) == 1);
    auto b = intersection_betti(ic);
    CHECK(b.at(0) == 1);
    CHECK(b.at(1) == 0);
    CHECK(b.at(2) == 0);
}

TEST_CASE("empty singular set gives ordinary homology")
{
    auto f = FilteredComplex::unstratified(spaces::torus7());
    for (const auto& p : all_perversities(2)) {
        auto b = intersection_betti(f, p);
        CHECK(b.at(0) == 1);
        CHECK(b.at(1) == 2);
        CHECK(b.at(2) == 1);
        // every chain is allowable
        auto ic = intersection_chain_complex(f, p);
        CHECK(ic.dim(1) == 21);
    }
}

TEST_CASE("cone over the torus against the cone formula")
{
    auto f = FilteredComplex::cone_over(spaces::torus7(), 7);
    auto link_b = betti_numbers(spaces::torus7());

    auto b0 = intersection_betti(f, with_top(3, 0));
    CHECK(b0.at(0) == 1);
    CHECK(b0.at(1) == 2);
    CHECK(b0.at(2) == 0);
    CHECK(b0.at(3) == 0);
    CHECK(b0 == cone_formula_expected(link_b, 3, 0));

    auto b1 = intersection_betti(f, with_top(3, 1));
    CHECK(b1.at(0) == 1);
    CHECK(b1.at(1) == 0);
    CHECK(b1 == cone_formula_expected(link_b, 3, 1));
}

TEST_CASE("cone formula closed form instances")
{
    std::map<int, long> s1{{0, 1}, {1, 1}};
    CHECK(cone_formula_expected(s1, 2, 0) == std::map<int, long>{{0, 1}, {1, 0}, {2, 0}});
    std::map<int, long> t2{{0, 1}, {1, 2}, {2, 1}};
    CHECK(cone_formula_expected(t2, 3, 0) ==
          std::map<int, long>{{0, 1}, {1, 2}, {2, 0}, {3, 0}});
    CHECK(cone_formula_expected(t2, 3, 1) ==
          std::map<int, long>{{0, 1}, {1, 0}, {2, 0}, {3, 0}});
}

TEST_CASE("negative top perversity empties the cone point entirely")
{
    auto f = FilteredComplex::cone_over(spaces::hexagon(), 6);
    auto b = intersection_betti(f, with_top(2, -1));
    // only apex-free chains survive, so IH is the homology of the link
    CHECK(b.at(0) == 1);
    CHECK(b.at(1) == 1);
    CHECK(b.at(2) == 0);
}

TEST_CASE("duality ranks on the suspension of the hexagon")
{
    auto f = FilteredComplex::suspension_over(spaces::hexagon(), 6, 7);
    auto rep = duality_rank_check(f, zero_perversity(2));
    CHECK(rep.applicable);
    CHECK(rep.symmetric);
    CHECK(rep.ih_p.at(0) == 1);
    CHECK(rep.ih_p.at(1) == 0);
    CHECK(rep.ih_p.at(2) == 1);
}

TEST_CASE("duality ranks on the suspension of the torus")
{
    auto f = FilteredComplex::suspension_over(spaces::torus7(), 7, 8);
    auto rep = duality_rank_check(f, zero_perversity(3));
    CHECK(rep.applicable);
    CHECK(rep.symmetric);
    CHECK(rep.ih_p == std::map<int, long>{{0, 1}, {1, 2}, {2, 0}, {3, 1}});
    CHECK(rep.ih_q == std::map<int, long>{{0, 1}, {1, 0}, {2, 2}, {3, 1}});
}

TEST_CASE("duality on a closed manifold with trivial filtration")
{
    auto f = FilteredComplex::unstratified(spaces::torus7());
    auto rep = duality_rank_check(f, zero_perversity(2));
    CHECK(rep.applicable);
    CHECK(rep.symmetric); // ordinary Poincare duality ranks
}

TEST_CASE("duality check skips non-pseudomanifolds")
{
    auto f = FilteredComplex::unstratified(spaces::full_simplex(2));
    auto rep = duality_rank_check(f, zero_perversity(2));
    CHECK_FALSE(rep.applicable);
}

TEST_CASE("monotone perversities give nested intersection complexes")
{
    auto f = FilteredComplex::cone_over(spaces::torus7(), 7);
    auto small = intersection_chain_complex(f, with_top(3, 0));
    auto large = intersection_chain_complex(f, with_top(3, 1));
    for (int i = 0; i <= 3; ++i) {
        CHECK(small.dim(i) <= large.dim(i));
        for (int c = 0; c < small.dim(i); ++c) {
            std::vector<Rational> v(
                static_cast<std::size_t>(small.basis[static_cast<std::size_t>(i)].rows()));
            for (const auto& [rc, val] : small.basis[static_cast<std::size_t>(i)].entries())
                if (rc.second == c)
                    v[static_cast<std::size_t>(rc.first)] = val;
            CHECK(in_column_span(large.basis[static_cast<std::size_t>(i)], v));
        }
    }
}

TEST_CASE("chain allowability equals the conjunction over the support")
{
    auto f = FilteredComplex::cone_over(spaces::hexagon(), 6);
    auto p = zero_perversity(2);
    // a 1-chain mixing a link edge and an apex edge: allowable iff both are
    CHECK(simplex_allowable(Simplex({0, 1}), 1, p, f));
    CHECK_FALSE(simplex_allowable(Simplex({0, 6}), 1, p, f));
}

TEST_CASE("filtration validation rejects malformed inputs")
{
    FilteredComplex f;
    f.ambient = spaces::hexagon();
    f.n = 1;
    f.skeleta = {SimplicialComplex::from_maximal({Simplex({0, 1})})}; // dim 1 > 0
    CHECK_THROWS(f.validate());
}
