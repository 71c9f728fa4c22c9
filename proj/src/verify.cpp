#include "mpg/verify.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <thread>

#include "mpg/energy.hpp"
#include "mpg/io.hpp"
#include "mpg/lattice.hpp"
#include "mpg/oracle.hpp"
#include "mpg/potentials.hpp"
#include "mpg/ttpg.hpp"
#include "mpg/values.hpp"

namespace mpg {

namespace {

const std::vector<std::string> kChecks = {
    "roundtrip",       "values",          "synthesis",     "optimal_iff_conservative",
    "worklist_vs_naive", "energy_lattice", "decomposition", "seeded_vs_unseeded",
    "store_hygiene",   "deterministic_output", "ttpg_plain", "ttpg_fixpoint",
    "ttpg_audit",
};

class Recorder
{
public:
    Recorder()
    {
        for (const auto& n : kChecks) checks_.push_back({n, true, {}});
    }

    void fail(const std::string& name, const std::string& detail)
    {
        for (auto& c : checks_) {
            if (c.name != name) continue;
            if (c.ok) c.detail = detail;
            c.ok = false;
            return;
        }
        throw std::logic_error("unknown check " + name);
    }

    void expect(bool cond, const std::string& name, const std::string& detail)
    {
        if (!cond) fail(name, detail);
    }

    std::vector<CheckResult> take() { return std::move(checks_); }

private:
    std::vector<CheckResult> checks_;
};

bool lex_less(const EnergyFunction& x, const EnergyFunction& y)
{
    return x.values() < y.values();
}

std::vector<PositionalStrategy> all_strategies(const Arena& a)
{
    std::vector<PositionalStrategy> out;
    const std::uint64_t n = oracle::strategy_count(a);
    for (std::uint64_t i = 0; i < n; ++i) out.push_back(oracle::strategy_at(a, i));
    return out;
}

void check_ttpg(Recorder& rec, const Arena& a, const std::string& label, const VerifyOptions& opts)
{
    try {
        TtpgFixpoint fp = min_ttpg_fixpoint(a);
        rec.expect(fp.f == least_sepm(a), "ttpg_fixpoint", label + ": f^nu' differs from the least SEPM");
        rec.expect(fp.k_reached <= fp.k_limit(), "ttpg_fixpoint", label + ": k_reached above k'");
        TruncatedValueTable t = min_ttpg(a, fp.k_limit() + opts.ttpg_extra_rows);
        auto violations = audit_min_ttpg(a, t);
        if (!violations.empty()) rec.fail("ttpg_audit", label + ": " + violations.front());
    } catch (const std::logic_error& e) {
        rec.fail("ttpg_fixpoint", label + ": " + e.what());
    }
}

void check_class(Recorder& rec, VerifyReport& rep, const ValueClass& c, const VerifyOptions& opts)
{
    const std::string label = "class " + c.nu.str();
    const Arena& g = c.subgame;
    const Arena rw = reweight(g, c.nu);
    const Level cap = energy_cap(rw);

    const oracle::ExhaustiveResult ex = oracle::exhaustive_opt(g, opts.max_strategies, 1);
    rec.expect(std::all_of(ex.values.begin(), ex.values.end(), [&](const Rational& x) { return x == c.nu; }), "values",
               label + ": class subgame is not " + c.nu.str() + "-valued");

    // Optimal in the class iff the reweighted strategy graph is conservative.
    for (const PositionalStrategy& s : all_strategies(g)) {
        bool opt = std::find(ex.optimal.begin(), ex.optimal.end(), s) != ex.optimal.end();
        if (opt != is_conservative(restrict(rw, s))) {
            rec.fail("optimal_iff_conservative", label + ": " + strategy_to_text(g, s));
            break;
        }
    }

    rec.expect(least_sepm(rw) == oracle::naive_least_sepm(rw), "worklist_vs_naive", label + ": reweighted class");

    const EnumerationResult r = enumerate(g, c.nu);
    rep.degenerate = rep.degenerate || r.degenerate();

    // Energy lattice against the oracle's pi* set over opt.
    std::vector<EnergyFunction> got = r.energy.elements;
    std::sort(got.begin(), got.end(), lex_less);
    const std::vector<EnergyFunction> want = oracle::reference_energy_lattice(g, c.nu, ex.optimal);
    rec.expect(got == want, "energy_lattice",
               label + ": " + std::to_string(got.size()) + " extremal SEPMs, oracle has " + std::to_string(want.size()));
    const EnergyFunction& top = r.energy.elements.front();
    for (const EnergyFunction& f : r.energy.elements) {
        rec.expect(f.all_finite() && is_sepm(rw, f), "energy_lattice", label + ": emitted function is not a finite SEPM");
        rec.expect(top.leq(f), "energy_lattice", label + ": f* is not the pointwise minimum");
    }

    // Delta blocks partition opt.
    DecomposeOptions dopts;
    dopts.max_listed = static_cast<std::size_t>(opts.max_strategies);
    const std::vector<DeltaBlock> blocks = decompose(g, c.nu, r.energy, dopts);
    std::vector<PositionalStrategy> uni;
    std::uint64_t total = 0;
    for (const DeltaBlock& b : blocks) {
        rec.expect(b.count > 0, "decomposition", label + ": empty block");
        rec.expect(b.count == b.strategies.size(), "decomposition", label + ": count differs from listing");
        for (const PositionalStrategy& s : b.strategies) {
            rec.expect(least_feasible_potential(restrict(rw, s), cap) == r.energy.elements[b.sepm_id], "decomposition",
                       label + ": strategy regroups to a different pi*");
        }
        total += b.count;
        uni.insert(uni.end(), b.strategies.begin(), b.strategies.end());
    }
    std::sort(uni.begin(), uni.end());
    rec.expect(std::adjacent_find(uni.begin(), uni.end()) == uni.end(), "decomposition", label + ": blocks overlap");
    std::vector<PositionalStrategy> opt_sorted = ex.optimal;
    std::sort(opt_sorted.begin(), opt_sorted.end());
    rec.expect(uni == opt_sorted && total == opt_sorted.size(), "decomposition",
               label + ": union has " + std::to_string(total) + " strategies, opt has " + std::to_string(opt_sorted.size()));

    // Every recursion edge: seeded restart equals a cold start.
    for (const RecursionEdge& e : r.edges) {
        const BasicSubgame& child = r.subgames.nodes[e.child];
        const EnergyFunction& pf = r.energy.elements[r.subgames.nodes[e.parent].sepm_id];
        const EnergyFunction& cf = r.energy.elements[child.sepm_id];
        Arena sub = apply_mask(rw, child.mask);
        EnergyFunction cold = least_sepm(sub, {.cap = cap});
        EnergyFunction warm = least_sepm(sub, {.seed = &pf, .cap = cap});
        rec.expect(cold == warm && cold == cf, "seeded_vs_unseeded",
                   label + ": edge " + std::to_string(e.parent) + "->" + std::to_string(e.child));
        rec.expect(cold == oracle::naive_least_sepm(sub, cap), "worklist_vs_naive", label + ": child subgame");
        rec.expect(pf.leq(cf), "store_hygiene", label + ": least SEPMs not antitone along an edge");
        ++rep.recursion_edges;
    }

    // No repetitions; phi onto.
    {
        std::set<std::vector<EnergyValue>> seen_f;
        for (const EnergyFunction& f : r.energy.elements) seen_f.insert(f.values());
        rec.expect(seen_f.size() == r.energy.elements.size(), "store_hygiene", label + ": repeated SEPM");
        std::set<std::vector<bool>> seen_m;
        std::set<std::size_t> hit;
        for (const BasicSubgame& b : r.subgames.nodes) {
            seen_m.insert(b.mask.bits());
            hit.insert(b.sepm_id);
        }
        rec.expect(seen_m.size() == r.subgames.nodes.size(), "store_hygiene", label + ": repeated subgame");
        rec.expect(hit.size() == r.energy.elements.size(), "store_hygiene", label + ": phi is not onto");
    }

    const EnumerationResult again = enumerate(g, c.nu);
    rec.expect(enum_report_json(g, r, blocks).dump() == enum_report_json(g, again, decompose(g, c.nu, again.energy, dopts)).dump(),
               "deterministic_output", label);

    check_ttpg(rec, rw, label + " reweighted", opts);
}

} // namespace

bool VerifyReport::ok() const
{
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.ok; });
}

const CheckResult* VerifyReport::find(const std::string& name) const
{
    for (const auto& c : checks) {
        if (c.name == name) return &c;
    }
    return nullptr;
}

const std::vector<std::string>& verify_check_names()
{
    return kChecks;
}

VerifyReport verify_arena(const Arena& a, const VerifyOptions& opts)
{
    Recorder rec;
    VerifyReport rep;

    {
        const std::string text = serialize_arena(a);
        Arena back = parse_arena(text);
        rec.expect(back == a && serialize_arena(back) == text, "roundtrip", "parse(serialize(a)) differs");
    }

    const oracle::ExhaustiveResult ex = oracle::exhaustive_opt(a, opts.max_strategies, opts.jobs);
    const ValueAssignment vals = solve_values(a);
    for (VertexId v = 0; v < a.num_vertices(); ++v) {
        if (vals[v] != ex.values[v]) {
            rec.fail("values", a.name(v) + ": solver " + vals[v].str() + ", oracle " + ex.values[v].str());
            break;
        }
    }

    const PositionalStrategy s = synthesize_optimal(a, vals);
    rec.expect(is_optimal(a, vals, s), "synthesis", "synthesized strategy fails is_optimal");
    rec.expect(std::find(ex.optimal.begin(), ex.optimal.end(), s) != ex.optimal.end(), "synthesis",
               "synthesized strategy is not in the oracle's opt set");
    for (const PositionalStrategy& t : all_strategies(a)) {
        bool opt = std::find(ex.optimal.begin(), ex.optimal.end(), t) != ex.optimal.end();
        if (opt != is_optimal(a, vals, t)) {
            rec.fail("optimal_iff_conservative", "is_optimal disagrees with the oracle on " + strategy_to_text(a, t));
            break;
        }
    }

    rec.expect(least_sepm(a) == oracle::naive_least_sepm(a), "worklist_vs_naive", "input arena");

    const std::size_t k = opts.plain_ttpg_k;
    const TruncatedValueTable plain = plain_ttpg(a, k);
    for (std::size_t i = 0; i <= k; ++i) {
        if (plain.row(i) != oracle::brute_force_ttpg(a, i)) {
            rec.fail("ttpg_plain", "row " + std::to_string(i) + " differs from game-tree search");
            break;
        }
    }
    check_ttpg(rec, a, "input arena", opts);

    const ErgodicPartition part = ergodic_partition(a, vals);
    rep.classes = part.classes.size();
    for (const ValueClass& c : part.classes) {
        try {
            check_class(rec, rep, c, opts);
        } catch (const oracle::BoundExceeded&) {
            throw;
        } catch (const std::exception& e) {
            rec.fail("energy_lattice", "class " + c.nu.str() + ": " + e.what());
        }
    }

    rep.checks = rec.take();
    return rep;
}

std::vector<VerifyReport> verify_many(const std::vector<Arena>& arenas, const VerifyOptions& opts)
{
    std::vector<VerifyReport> out(arenas.size());
    std::vector<std::exception_ptr> errors(arenas.size());
    VerifyOptions inner = opts;
    inner.jobs = 1;
    const unsigned jobs = std::max(1u, opts.jobs);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < arenas.size(); i = next++) {
            try {
                out[i] = verify_arena(arenas[i], inner);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
    return out;
}

} // namespace mpg
