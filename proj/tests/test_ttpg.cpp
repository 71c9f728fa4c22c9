#include <doctest.h>

#include "mpg/oracle.hpp"
#include "mpg/rational.hpp"
#include "mpg/ttpg.hpp"
#include "support.hpp"

using namespace mpg;
using test::levels;

TEST_CASE("row zero is zero for both variants")
{
    const Arena a = test::data("not_positional.arena");
    for (const auto& t : {plain_ttpg(a, 0), min_ttpg(a, 0)}) {
        CHECK(t.k_max() == 0);
        CHECK(t.row(0) == std::vector<Weight>(a.num_vertices(), 0));
    }
}

TEST_CASE("self-loops")
{
    const Arena up = parse_arena("v x 1\ne x x 3\n");
    const TruncatedValueTable t = plain_ttpg(up, 5);
    for (std::size_t k = 0; k <= 5; ++k) CHECK(t.row(k)[0] == static_cast<Weight>(3 * k));
    CHECK(min_ttpg(up, 5).last()[0] == 0);

    const Arena down = parse_arena("v x 0\ne x x -1\n");
    const TruncatedValueTable m = min_ttpg(down, 7);
    for (std::size_t k = 0; k <= 7; ++k) CHECK(m.row(k)[0] == -static_cast<Weight>(k));
    CHECK(audit_min_ttpg(down, m).empty());

    const Arena zero = parse_arena("v x 0\ne x x 0\n");
    const TtpgFixpoint fp = min_ttpg_fixpoint(zero);
    CHECK(fp.k_reached == 1);
    CHECK(fp.f[0] == EnergyValue::finite(0));
}

TEST_CASE("plain recursion matches game-tree search on the horizon-dependent arena")
{
    const Arena a = test::data("not_positional.arena");
    const TruncatedValueTable t = plain_ttpg(a, 6);
    for (std::size_t k = 0; k <= 6; ++k) CHECK(t.row(k) == oracle::brute_force_ttpg(a, k));
}

TEST_CASE("rolling tables keep the last two rows")
{
    const Arena a = test::data("not_positional.arena");
    const TruncatedValueTable full = min_ttpg(a, 9);
    const TruncatedValueTable roll = min_ttpg(a, 9, false);
    CHECK_FALSE(roll.full_history());
    CHECK(roll.rows().size() == 2);
    CHECK(roll.first_k() == 8);
    CHECK(roll.row(9) == full.row(9));
    CHECK_THROWS_AS(audit_min_ttpg(a, roll), std::invalid_argument);
}

TEST_CASE("Min-k values converge to minus the least SEPM on the shifted example")
{
    const Arena a = reweight(test::data("gamma_ex.arena"), Rational(-1));
    CHECK(min_ttpg_bound(a) == 6 * 7 * 4 + 3);
    CHECK(min_ttpg_bound(parse_arena("v x 0\ne x x -5\n")) == -1);
    const TtpgFixpoint fp = min_ttpg_fixpoint(a);
    CHECK(fp.f == levels(a, {{"A", 0}, {"B", 4}, {"C", 8}, {"D", 4}, {"E", 0}, {"F", 4}, {"G", 0}}));
    CHECK(fp.k_reached <= fp.k_limit());
    const TruncatedValueTable t = min_ttpg(a, fp.k_limit() + 5);
    CHECK(t.last() == std::vector<Weight>{0, -4, -8, -4, 0, -4, 0});
    CHECK(audit_min_ttpg(a, t).empty());
}

TEST_CASE("Min-k audits on the fixed arenas")
{
    for (const char* f : {"gamma_d.arena", "not_positional.arena", "gamma_ex.arena"}) {
        CAPTURE(f);
        const Arena a = test::data(f);
        const TtpgFixpoint fp = min_ttpg_fixpoint(a);
        CHECK(fp.f == least_sepm(a));
        CHECK(audit_min_ttpg(a, min_ttpg(a, fp.k_limit() + 3)).empty());
    }
}

TEST_CASE("Min-k fixpoint agrees with the least SEPM on random arenas")
{
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        const Arena a = oracle::gen_random_arena(1 + seed % 6, 3, 4, seed);
        CAPTURE(seed);
        const TtpgFixpoint fp = min_ttpg_fixpoint(a);
        CHECK(fp.f == least_sepm(a));
        CHECK(fp.k_reached <= fp.k_limit());
        CHECK(audit_min_ttpg(a, min_ttpg(a, fp.k_limit() + 2)).empty());
    }
}

TEST_CASE("audit catches a tampered table")
{
    const Arena a = test::data("gamma_d.arena");
    TruncatedValueTable t = min_ttpg(a, 4);
    auto rows = t.rows();
    rows[3][0] = 1;
    CHECK_FALSE(audit_min_ttpg(a, TruncatedValueTable(TtpgKind::Min, 4, 0, rows)).empty());
}
