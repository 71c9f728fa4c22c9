#include <doctest.h>

#include "mpg/energy.hpp"
#include "mpg/oracle.hpp"
#include "mpg/rational.hpp"
#include "support.hpp"

using namespace mpg;
using test::levels;
using test::vid;

namespace {

Arena gamma_ex_shifted()
{
    return reweight(test::data("gamma_ex.arena"), Rational(-1));
}

} // namespace

TEST_CASE("ominus saturates at zero and at the cap")
{
    CHECK(ominus(EnergyValue::finite(3), 5, 10) == EnergyValue::finite(0));
    CHECK(ominus(EnergyValue::finite(3), -5, 10) == EnergyValue::finite(8));
    CHECK(ominus(EnergyValue::finite(5), -5, 10) == EnergyValue::finite(10));
    CHECK(ominus(EnergyValue::finite(8), -5, 10) == EnergyValue::top());
    CHECK(ominus(EnergyValue::top(), 100, 10) == EnergyValue::top());
    CHECK(EnergyValue::finite(10) < EnergyValue::top());
}

TEST_CASE("least SEPM of the example arena shifted by +1")
{
    const Arena a = gamma_ex_shifted();
    CHECK(energy_cap(a) == 24);
    const EnergyFunction f = least_sepm(a);
    CHECK(f == levels(a, {{"A", 0}, {"B", 4}, {"C", 8}, {"D", 4}, {"E", 0}, {"F", 4}, {"G", 0}}));
    CHECK(is_sepm(a, f));
    CHECK(f.all_finite());
    CHECK(winning_regions(a).player1.empty());

    std::vector<std::string> comp;
    for (ArcId e : compatible_arcs(a, f, vid(a, "E"))) comp.push_back(a.name(a.arc(e).dst));
    CHECK(comp == std::vector<std::string>{"A", "G"});
}

TEST_CASE("least SEPM of the degenerate arena")
{
    const Arena a = test::data("gamma_d.arena");
    const EnergyFunction f = least_sepm(a);
    CHECK(f == levels(a, {{"u3", 1}, {"v3", 1}}));
    CHECK(f[vid(a, "t")] == EnergyValue::finite(0));
}

TEST_CASE("a negative self-loop is lost by Player 0")
{
    const Arena a = parse_arena("v x 0\ne x x -1\n");
    const EnergyFunction f = least_sepm(a);
    CHECK(f[0].is_top());
    const WinningRegions r = winning_regions(f);
    CHECK(r.player0.empty());
    CHECK(r.player1 == std::vector<VertexId>{0});
}

TEST_CASE("is_sepm distinguishes the two owners")
{
    const Arena a = parse_arena("v p 0\nv q 1\ne p q -2\ne p p 0\ne q p -3\ne q q 0\n");
    // p can loop at 0; q must cover both arcs, so q >= 0 (-) -3 = 3 at p = 0.
    const EnergyFunction least = least_sepm(a);
    CHECK(least == levels(a, {{"p", 0}, {"q", 3}}));
    CHECK_FALSE(is_sepm(a, levels(a, {{"p", 0}, {"q", 2}})));
    CHECK(is_sepm(a, levels(a, {{"p", -1}, {"q", -1}})));
}

TEST_CASE("seeded restarts reach the same fixpoint")
{
    const Arena a = gamma_ex_shifted();
    const EnergyFunction root = least_sepm(a);
    // Force E onto C: the least SEPM rises at E only.
    SubgameMask m = SubgameMask::full(a);
    const VertexId e = vid(a, "E");
    std::vector<ArcId> keep{*a.find_arc(e, vid(a, "C"))};
    m.restrict_vertex(a, e, keep);
    const Arena sub = apply_mask(a, m);

    LiftStats cold_stats, warm_stats;
    const EnergyFunction cold = least_sepm(sub, {.stats = &cold_stats});
    const EnergyFunction warm = least_sepm(sub, {.seed = &root, .stats = &warm_stats});
    CHECK(cold == warm);
    CHECK(cold[e] == EnergyValue::finite(7));
    CHECK(warm_stats.lifts < cold_stats.lifts);
}

TEST_CASE("worklist iteration agrees with Kleene iteration on random arenas")
{
    for (std::uint64_t seed = 0; seed < 150; ++seed) {
        const Arena a = oracle::gen_random_arena(1 + seed % 7, 3, 4, seed);
        CAPTURE(seed);
        const EnergyFunction f = least_sepm(a);
        CHECK(f == oracle::naive_least_sepm(a));
        CHECK(is_sepm(a, f));
    }
}

TEST_CASE("minimality: lowering any finite positive level breaks the SEPM")
{
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        const Arena a = oracle::gen_random_arena(6, 3, 4, seed);
        const EnergyFunction f = least_sepm(a);
        for (VertexId v = 0; v < a.num_vertices(); ++v) {
            if (f[v].is_top() || f[v].level() == 0) continue;
            EnergyFunction g = f;
            g[v] = EnergyValue::finite(f[v].level() - 1);
            CHECK_FALSE(is_sepm(a, g));
        }
    }
}
