#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ihx/control.hpp"
#include "ihx/spaces.hpp"

#include <random>

using namespace ihx;

TEST_CASE("pole exponent floors exactly and rejects integral ratios")
{
    CHECK(pole_exponent(ControlParams::single(2, 1, Rational(3, 2)), 2) == 1);
    CHECK(pole_exponent(ControlParams::single(2, 2, 5), 2) == 2);
    CHECK_THROWS_AS(pole_exponent(ControlParams::single(2, 1, 2), 2), std::domain_error);
    CHECK_THROWS_AS(pole_exponent(ControlParams::single(3, Rational(1, 3), 1), 3),
                    std::domain_error);
    // scaling both parameters leaves the floor unchanged
    for (int c = 1; c <= 7; ++c)
        CHECK(pole_exponent(ControlParams::single(2, Rational(3 * c, 5), Rational(7 * c, 5)), 2) ==
              2);
}

TEST_CASE("perversity from control parameters")
{
    CHECK(perversity_from_control(ControlParams::single(3, 1, Rational(3, 2))) ==
          zero_perversity(3));

    ControlParams two;
    two.n = 4;
    two.alpha[3] = 1;
    two.beta[3] = Rational(3, 2); // floor 1 -> p_3 = 0
    two.alpha[4] = 1;
    two.beta[4] = Rational(5, 2); // floor 2 -> p_4 = 0
    CHECK(perversity_from_control(two) == zero_perversity(4));

    two.beta[4] = Rational(7, 2); // floor 3 jumps by 2
    CHECK_THROWS_WITH_AS(perversity_from_control(two), doctest::Contains("floor condition"),
                         std::invalid_argument);

    // floor 1 at codimension 2 would need p_2 = -1
    CHECK_THROWS_WITH_AS(perversity_from_control(ControlParams::single(2, 1, Rational(3, 2))),
                         doctest::Contains("over-controlled"), std::invalid_argument);

    // gap filling: active only at j = 5 with floor 1 -> p_5 = 2
    auto p = perversity_from_control(ControlParams::single(5, 1, Rational(3, 2)));
    CHECK(p.values == std::vector<int>{0, 0, 0, 0, 1, 2});
    CHECK(p.valid_gm());
}

TEST_CASE("random control parameters always yield valid perversities")
{
    std::mt19937_64 rng(20260825);
    int checked = 0;
    for (int trial = 0; trial < 400; ++trial) {
        int n = 2 + static_cast<int>(rng() % 5);
        ControlParams params;
        params.n = n;
        for (int j = 2; j <= n; ++j) {
            if (rng() % 3 == 0)
                continue; // leave the codimension inactive
            long den = 1 + static_cast<long>(rng() % 20);
            long num = 1 + static_cast<long>(rng() % (den * (j - 1)));
            Rational ratio(num, den);
            if (rat_is_integer(ratio))
                continue;
            params.alpha[j] = den;
            params.beta[j] = num;
        }
        try {
            Perversity p = perversity_from_control(params);
            CHECK(p.valid_gm());
            ++checked;
            // scaling invariance
            ControlParams scaled = params;
            for (auto& [j, a] : scaled.alpha)
                a *= Rational(7, 3);
            for (auto& [j, b] : scaled.beta)
                b *= Rational(7, 3);
            CHECK(perversity_from_control(scaled) == p);
        } catch (const std::invalid_argument&) {
            // floor condition violated: the hypothesis of the property fails
        }
    }
    CHECK(checked > 100);
}

TEST_CASE("canonical truncation has the truncated cohomology")
{
    auto s1 = cochain_complex(spaces::hexagon());
    CHECK(betti(truncate_cochain(s1, 1)) == betti(s1));
    CHECK(betti(truncate_cochain(s1, 0)) == std::map<int, long>{{0, 1}});
    CHECK(betti(truncate_cochain(s1, -1)) == std::map<int, long>{{0, 0}});

    auto t2 = cochain_complex(spaces::torus7());
    CHECK(betti(truncate_cochain(t2, 1)) == std::map<int, long>{{0, 1}, {1, 2}});

    for (const auto& k : {spaces::hexagon(), spaces::torus7(), spaces::sphere_s2()}) {
        auto omega = cochain_complex(k);
        auto full = betti(omega);
        for (int t = -1; t <= omega.hi; ++t) {
            auto got = betti(truncate_cochain(omega, t));
            for (const auto& [deg, v] : got)
                CHECK(v == (deg <= t ? full.at(deg) : 0));
        }
    }
}

TEST_CASE("theorem 0 crosscheck matches the t = m convention")
{
    auto hex = theorem0_crosscheck(spaces::hexagon(), ControlParams::single(2, 1, Rational(3, 2)));
    CHECK(hex.m == 1);
    CHECK(hex.chain_ih == std::map<int, long>{{0, 1}, {1, 1}, {2, 0}});
    CHECK(hex.trunc_m == hex.chain_ih);
    CHECK(hex.matched == "m");

    auto torus = theorem0_crosscheck(spaces::torus7(), ControlParams::single(3, 1, Rational(3, 2)));
    CHECK(torus.m == 1);
    CHECK(torus.used == zero_perversity(3));
    CHECK(torus.chain_ih == std::map<int, long>{{0, 1}, {1, 2}, {2, 0}, {3, 0}});
    CHECK(torus.matched == "m");

    auto pair = theorem0_crosscheck(spaces::two_hexagons(),
                                    ControlParams::single(2, 1, Rational(3, 2)));
    CHECK(pair.chain_ih.at(0) == 2);
    CHECK(pair.matched == "m");

    auto deep = theorem0_crosscheck(spaces::torus7(), ControlParams::single(3, 1, Rational(5, 2)));
    CHECK(deep.m == 2);
    CHECK(deep.chain_ih == std::map<int, long>{{0, 1}, {1, 2}, {2, 1}, {3, 0}});
    CHECK(deep.matched == "m");
}

TEST_CASE("theorem 3 crosscheck against intersection betti sums")
{
    auto hex = theorem3_crosscheck(spaces::hexagon(), ControlParams::single(2, 1, Rational(3, 2)));
    CHECK(hex.stabilized);
    CHECK(hex.cutoff == 1);
    CHECK(hex.model_even == 1);
    CHECK(hex.model_odd == 1);
    CHECK(hex.agrees_p);
    CHECK_FALSE(hex.agrees_q);

    auto torus = theorem3_crosscheck(spaces::torus7(), ControlParams::single(3, 1, Rational(5, 2)));
    CHECK(torus.m == 2);
    CHECK(torus.model_even == 2);
    CHECK(torus.model_odd == 2);
    CHECK(torus.agrees_p);

    auto degenerate = theorem3_crosscheck(spaces::point(), ControlParams::single(1, 1, 1));
    CHECK(degenerate.model_even == 1);
    CHECK(degenerate.model_odd == 0);
    CHECK(degenerate.agrees_p);
    CHECK(degenerate.agrees_q);
}
