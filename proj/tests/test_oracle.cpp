#include <doctest.h>

#include <fstream>
#include <sstream>

#include "mpg/oracle.hpp"
#include "support.hpp"

using namespace mpg;
using test::strategy;

TEST_CASE("minimum cycle mean")
{
    CHECK(oracle::min_cycle_mean_reachable(OnePlayerGraph(1, {{0, 0, 5}}), 0) == Rational(5));
    // Two loops reachable from 0: means 1/2 and -1/3.
    OnePlayerGraph g(6, {{0, 1, 0}, {0, 3, 0}, {1, 2, 1}, {2, 1, 0}, {3, 4, -1}, {4, 5, 0}, {5, 3, 0}});
    CHECK(oracle::min_cycle_mean_reachable(g, 0) == Rational(-1, 3));
    CHECK(oracle::min_cycle_mean_reachable(g, 1) == Rational(1, 2));

    const Arena a = test::data("gamma_ex.arena");
    const auto s = strategy(a, {{"B", "C"}, {"D", "A"}, {"E", "G"}, {"G", "F"}});
    for (const Rational& x : oracle::min_cycle_mean_all(restrict(a, s))) CHECK(x == Rational(-1));
}

TEST_CASE("every move out of E is optimal")
{
    const Arena a = test::data("gamma_ex.arena");
    CHECK(oracle::strategy_count(a) == 4);
    const auto ex = oracle::exhaustive_opt(a);
    CHECK(ex.optimal.size() == 4);
    CHECK(ex.values == std::vector<Rational>(7, Rational(-1)));
    CHECK(oracle::exhaustive_opt(a, 1'000'000, 3).optimal == ex.optimal);
    CHECK_THROWS_AS(oracle::exhaustive_opt(a, 3), oracle::BoundExceeded);

    const auto lattice = oracle::reference_energy_lattice(a, Rational(-1), ex.optimal);
    REQUIRE(lattice.size() == 3);
    const VertexId e = test::vid(a, "E");
    CHECK(lattice[0][e] == EnergyValue::finite(0));
    CHECK(lattice[1][e] == EnergyValue::finite(3));
    CHECK(lattice[2][e] == EnergyValue::finite(7));
}

TEST_CASE("single-choice arena has one optimal strategy")
{
    const Arena a = parse_arena("v x 0\nv y 1\ne x y 2\ne y x -1\n");
    const auto ex = oracle::exhaustive_opt(a);
    CHECK(ex.optimal.size() == 1);
    CHECK(ex.values[0] == Rational(1, 2));
    CHECK(oracle::reference_energy_lattice(a, Rational(1, 2), ex.optimal).size() == 1);
}

TEST_CASE("naive Kleene iteration")
{
    const Arena a = reweight(test::data("gamma_ex.arena"), Rational(-1));
    const auto f = oracle::naive_least_sepm(a);
    std::vector<EnergyValue> want;
    for (Level l : {0, 4, 8, 4, 0, 4, 0}) want.push_back(EnergyValue::finite(l));
    CHECK(f.values() == want);

    const Arena pos = parse_arena("v p 0\nv q 1\ne p q 2\ne q p 0\ne q q 5\n");
    CHECK(oracle::naive_least_sepm(pos) == EnergyFunction(2, energy_cap(pos)));
}

TEST_CASE("random arenas are deterministic and well formed")
{
    const Arena one = oracle::gen_random_arena(1, 1, 3, 42);
    CHECK(one.num_vertices() == 1);
    CHECK(one.num_arcs() == 1);
    CHECK(one.arc(0).src == 0);
    CHECK(one.arc(0).dst == 0);

    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const Arena a = oracle::gen_random_arena(6, 3, 4, seed);
        CHECK(a == oracle::gen_random_arena(6, 3, 4, seed));
        CHECK(a.max_abs_weight() <= 4);
        for (VertexId v = 0; v < a.num_vertices(); ++v) {
            CHECK(a.out_degree(v) >= 1);
            CHECK(a.out_degree(v) <= 3);
        }
    }
    CHECK_THROWS_AS(oracle::gen_random_arena(0, 1, 1, 0), std::invalid_argument);
}

TEST_CASE("generator output is frozen")
{
    std::ifstream in(std::string(MPG_TEST_DATA) + "/random_6_3_4_7.arena");
    REQUIRE(in);
    std::stringstream ss;
    ss << in.rdbuf();
    CHECK(serialize_arena(oracle::gen_random_arena(6, 3, 4, 7)) == ss.str());
}

TEST_CASE("game-tree search for truncated games")
{
    const Arena a = parse_arena("v x 0\nv y 1\ne x y 2\ne x x 0\ne y x -3\ne y y 1\n");
    CHECK(oracle::brute_force_ttpg(a, 0) == std::vector<Weight>{0, 0});
    CHECK(oracle::brute_force_ttpg(a, 1) == std::vector<Weight>{2, -3});
    // x stays then moves to y; y loops then returns.
    CHECK(oracle::brute_force_ttpg(a, 2) == std::vector<Weight>{2, -2});
}
