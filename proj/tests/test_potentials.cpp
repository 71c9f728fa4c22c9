#include <doctest.h>

#include "mpg/oracle.hpp"
#include "mpg/potentials.hpp"
#include "mpg/rational.hpp"
#include "support.hpp"

using namespace mpg;
using test::levels;
using test::strategy;

namespace {

Arena gamma_ex_shifted()
{
    return reweight(test::data("gamma_ex.arena"), Rational(-1));
}

PositionalStrategy ex_strategy(const Arena& a, const char* at_e)
{
    return strategy(a, {{"B", "C"}, {"D", "A"}, {"E", at_e}, {"G", "F"}});
}

} // namespace

TEST_CASE("least feasible potentials of the four optimal strategies")
{
    const Arena a = gamma_ex_shifted();
    const Level cap = energy_cap(a);
    const auto base = levels(a, {{"A", 0}, {"B", 4}, {"C", 8}, {"D", 4}, {"E", 0}, {"F", 4}, {"G", 0}});
    auto with_e = [&](Level e) {
        EnergyFunction f = base;
        f[test::vid(a, "E")] = EnergyValue::finite(e);
        return f;
    };
    CHECK(least_feasible_potential(restrict(a, ex_strategy(a, "A")), cap) == base);
    CHECK(least_feasible_potential(restrict(a, ex_strategy(a, "G")), cap) == base);
    CHECK(least_feasible_potential(restrict(a, ex_strategy(a, "F")), cap) == with_e(3));
    CHECK(least_feasible_potential(restrict(a, ex_strategy(a, "C")), cap) == with_e(7));

    CHECK(delta_membership(a, with_e(3), ex_strategy(a, "F")));
    CHECK_FALSE(delta_membership(a, base, ex_strategy(a, "F")));
    CHECK(delta_membership(a, base, ex_strategy(a, "G")));
}

TEST_CASE("negative cycles give Top to everything that reaches them")
{
    // a <-> b has weight -1; c feeds into it; z loops at 0.
    OnePlayerGraph g(4, {{0, 1, -1}, {1, 0, 0}, {2, 0, 0}, {3, 3, 0}});
    const EnergyFunction f = least_feasible_potential(g, 10);
    CHECK(f[0].is_top());
    CHECK(f[1].is_top());
    CHECK(f[2].is_top());
    CHECK(f[3] == EnergyValue::finite(0));
    CHECK_FALSE(is_conservative(g));
    CHECK(is_conservative(OnePlayerGraph(2, {{0, 1, -3}, {1, 1, 0}})));
}

TEST_CASE("a finite potential above the cap is an internal error")
{
    OnePlayerGraph g(2, {{0, 1, -5}, {1, 1, 0}});
    CHECK(least_feasible_potential(g, 5)[0] == EnergyValue::finite(5));
    CHECK_THROWS_AS(least_feasible_potential(g, 2), std::logic_error);
}

TEST_CASE("restrict rejects strategies of another arena")
{
    const Arena a = gamma_ex_shifted();
    PositionalStrategy s = ex_strategy(a, "A");
    CHECK(s.valid_for(a));
    s.set(test::vid(a, "E"), test::vid(a, "B"));
    CHECK_FALSE(s.valid_for(a));
    CHECK_THROWS_AS(restrict(a, s), std::invalid_argument);
    CHECK_THROWS_AS(restrict(a, PositionalStrategy(3)), std::invalid_argument);
}

TEST_CASE("conservativeness agrees with finiteness of the least potential")
{
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const Arena a = oracle::gen_random_arena(1 + seed % 6, 3, 4, seed);
        const std::uint64_t n = oracle::strategy_count(a);
        for (std::uint64_t i = 0; i < n; ++i) {
            const OnePlayerGraph g = restrict(a, oracle::strategy_at(a, i));
            CHECK(is_conservative(g) == least_feasible_potential(g, energy_cap(a)).all_finite());
        }
    }
}
