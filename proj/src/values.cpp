#include "mpg/values.hpp"

#include <map>
#include <optional>
#include <stdexcept>

#include "mpg/checked.hpp"
#include "mpg/oracle.hpp"

namespace mpg {

namespace {

// Largest fraction p/q <= x with 1 <= q <= max_den.
Rational candidate_at_most(const Rational& x, std::int64_t max_den)
{
    std::optional<Rational> best;
    for (std::int64_t d = 1; d <= max_den; ++d) {
        Rational c((x * Rational(d)).floor(), d);
        if (!best || c > *best) best = c;
    }
    return *best;
}

// Smallest fraction p/q > x with 1 <= q <= max_den.
Rational candidate_above(const Rational& x, std::int64_t max_den)
{
    std::optional<Rational> best;
    for (std::int64_t d = 1; d <= max_den; ++d) {
        Rational c(checked_add((x * Rational(d)).floor(), 1), d);
        if (!best || c < *best) best = c;
    }
    return *best;
}

struct Pending
{
    std::vector<VertexId> vertices;
    Rational lo;  // val >= lo, lo is a candidate
    Rational hi;  // val < hi
};

} // namespace

ValueAssignment solve_values(const Arena& a, SolveStats* stats)
{
    const auto n = static_cast<std::int64_t>(a.num_vertices());
    const Weight w = a.max_abs_weight();

    std::map<Rational, std::vector<bool>> probes;
    auto winners = [&](const Rational& nu) -> const std::vector<bool>& {
        auto it = probes.find(nu);
        if (it == probes.end()) {
            it = probes.emplace(nu, winning_regions(reweight(a, nu)).in_player0).first;
            if (stats != nullptr) ++stats->probes;
        }
        return it->second;
    };

    ValueAssignment vals(a.num_vertices());
    std::vector<Pending> work;
    {
        Pending all{{}, Rational(-w), Rational(checked_add(w, 1))};
        for (VertexId v = 0; v < a.num_vertices(); ++v) all.vertices.push_back(v);
        work.push_back(std::move(all));
    }
    while (!work.empty()) {
        Pending cur = std::move(work.back());
        work.pop_back();
        if (cur.vertices.empty()) continue;

        Rational mid = (cur.lo + cur.hi) / Rational(2);
        Rational probe = candidate_at_most(mid, n);
        if (probe <= cur.lo) probe = candidate_above(cur.lo, n);
        if (probe >= cur.hi) {
            // lo is the only candidate left in [lo, hi).
            for (VertexId v : cur.vertices) vals[v] = cur.lo;
            continue;
        }

        const std::vector<bool>& win = winners(probe);
        Pending below{{}, cur.lo, probe};
        Pending above{{}, probe, cur.hi};
        for (VertexId v : cur.vertices) (win[v] ? above : below).vertices.push_back(v);
        work.push_back(std::move(below));
        work.push_back(std::move(above));
    }
    return vals;
}

ErgodicPartition ergodic_partition(const Arena& a, const ValueAssignment& vals)
{
    if (vals.size() != a.num_vertices()) throw std::invalid_argument("value assignment does not match arena");
    std::map<Rational, std::vector<VertexId>> groups;
    for (VertexId v = 0; v < a.num_vertices(); ++v) groups[vals[v]].push_back(v);

    ErgodicPartition part;
    for (auto& [nu, vs] : groups) {
        try {
            part.classes.push_back({nu, vs, induced_subarena(a, vs)});
        } catch (const ArenaError& e) {
            throw std::logic_error("value class " + nu.str() + " does not induce a game: " + e.what());
        }
    }
    return part;
}

std::vector<ClassSolution> solve_classes(const ErgodicPartition& part)
{
    std::vector<ClassSolution> out;
    for (const ValueClass& c : part.classes) {
        Arena rw = reweight(c.subgame, c.nu);
        EnergyFunction f = least_sepm(rw);
        if (!f.all_finite())
            throw std::logic_error("class with value " + c.nu.str() + " is not won everywhere after reweighting");
        out.push_back({c.nu, c.vertices, std::move(rw), std::move(f)});
    }
    return out;
}

PositionalStrategy synthesize_optimal(const Arena& a, const ValueAssignment& vals)
{
    PositionalStrategy s(a.num_vertices());
    for (const ClassSolution& c : solve_classes(ergodic_partition(a, vals))) {
        for (VertexId u = 0; u < c.vertices.size(); ++u) {
            if (c.reweighted.owner(u) != Player::Zero) continue;
            auto comp = compatible_arcs(c.reweighted, c.least_sepm, u);
            if (comp.empty()) throw std::logic_error("no compatible arc at '" + c.reweighted.name(u) + "'");
            s.set(c.vertices[u], c.vertices[c.reweighted.arc(comp.front()).dst]);
        }
    }
    return s;
}

bool is_optimal(const Arena& a, const ValueAssignment& vals, const PositionalStrategy& s)
{
    if (!s.valid_for(a)) return false;

    const auto payoff = oracle::min_cycle_mean_all(restrict(a, s));
    for (VertexId v = 0; v < a.num_vertices(); ++v) {
        if (payoff[v] < vals[v]) return false;
    }

    for (const ValueClass& c : ergodic_partition(a, vals).classes) {
        std::vector<VertexId> local(a.num_vertices(), kNoVertex);
        for (VertexId i = 0; i < c.vertices.size(); ++i) local[c.vertices[i]] = i;
        PositionalStrategy ls(c.vertices.size());
        for (VertexId i = 0; i < c.vertices.size(); ++i) {
            if (c.subgame.owner(i) != Player::Zero) continue;
            VertexId succ = s[c.vertices[i]];
            if (local[succ] == kNoVertex) return false;
            ls.set(i, local[succ]);
        }
        if (!is_conservative(restrict(reweight(c.subgame, c.nu), ls))) return false;
    }
    return true;
}

} // namespace mpg
