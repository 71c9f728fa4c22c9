// Acceptance suite: one PASS/FAIL line per criterion.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <thread>

#include "mpg/io.hpp"
#include "mpg/lattice.hpp"
#include "mpg/oracle.hpp"
#include "mpg/ttpg.hpp"
#include "mpg/values.hpp"
#include "mpg/verify.hpp"

using namespace mpg;

namespace {

constexpr std::size_t kCorpusSize = 240;

Arena data(const std::string& name)
{
    return load_arena(std::string(MPG_TEST_DATA) + "/" + name);
}

VertexId vid(const Arena& a, const char* name)
{
    return a.find_vertex(name).value();
}

struct Outcome
{
    bool ok = true;
    std::string detail;

    void expect(bool cond, const std::string& what)
    {
        if (!cond && ok) detail = what;
        ok = ok && cond;
    }
};

EnergyFunction levels(const Arena& a, std::initializer_list<std::pair<const char*, Level>> xs)
{
    EnergyFunction f(a.num_vertices(), energy_cap(a));
    for (const auto& [n, l] : xs) f[vid(a, n)] = EnergyValue::finite(l);
    return f;
}

Outcome example_golden()
{
    Outcome o;
    const Arena a = data("gamma_ex.arena");
    o.expect(a.num_vertices() == 7 && a.num_arcs() == 10, "arena shape");
    const ValueAssignment vals = solve_values(a);
    o.expect(std::all_of(vals.begin(), vals.end(), [](const Rational& x) { return x == Rational(-1); }), "values");

    const Arena shifted = reweight(a, Rational(-1));
    const EnergyFunction fstar = levels(shifted, {{"A", 0}, {"B", 4}, {"C", 8}, {"D", 4}, {"E", 0}, {"F", 4}, {"G", 0}});
    o.expect(least_sepm(shifted) == fstar, "least SEPM of the +1 shift");

    const EnumerationResult r = enumerate(a, Rational(-1));
    EnergyFunction f1 = fstar, f2 = fstar;
    f1[vid(a, "E")] = EnergyValue::finite(3);
    f2[vid(a, "E")] = EnergyValue::finite(7);
    std::vector<EnergyFunction> got = r.energy.elements;
    std::sort(got.begin(), got.end(), [](const auto& x, const auto& y) { return x.values() < y.values(); });
    o.expect(got == std::vector<EnergyFunction>{fstar, f1, f2}, "extremal SEPMs");
    o.expect(r.energy.elements.front() == fstar, "f* listed first");

    const auto blocks = decompose(a, Rational(-1), r.energy);
    std::vector<std::uint64_t> sizes;
    std::uint64_t total = 0;
    for (const DeltaBlock& b : blocks) {
        sizes.push_back(b.count);
        total += b.count;
    }
    o.expect(sizes == std::vector<std::uint64_t>{2, 1, 1}, "decomposition sizes");
    o.expect(total == 4 && oracle::exhaustive_opt(a).optimal.size() == 4, "|opt| = 4");
    o.expect(r.subgames.nodes.size() == 3, "three basic subgames");
    return o;
}

Outcome degenerate_golden()
{
    Outcome o;
    const Arena a = data("gamma_d.arena");
    const ValueAssignment vals = solve_values(a);
    o.expect(std::all_of(vals.begin(), vals.end(), [](const Rational& x) { return x == Rational(0); }), "values");
    o.expect(vals == oracle::exhaustive_opt(a).values, "values against the oracle");

    EnergyFunction root(a.num_vertices(), energy_cap(a));
    root[vid(a, "u3")] = EnergyValue::finite(1);
    root[vid(a, "v3")] = EnergyValue::finite(1);
    o.expect(least_sepm(a) == root, "root least SEPM");

    const EnumerationResult r = enumerate(a, Rational(0));
    EnergyFunction shared(a.num_vertices(), energy_cap(a));
    shared[vid(a, "u3")] = EnergyValue::finite(2);
    shared[vid(a, "v3")] = EnergyValue::finite(2);
    shared[vid(a, "t")] = EnergyValue::finite(10);
    std::vector<const BasicSubgame*> hits;
    for (const BasicSubgame& b : r.subgames.nodes) {
        if (r.energy.elements[b.sepm_id] == shared) hits.push_back(&b);
    }
    o.expect(hits.size() >= 2 && hits[0]->mask != hits[1]->mask, "two distinct subgames with the shared least SEPM");
    o.expect(r.degenerate(), "|B*| > |X*| reported");
    return o;
}

std::vector<Arena> corpus()
{
    std::vector<Arena> out;
    for (std::size_t i = 0; i < kCorpusSize; ++i) out.push_back(oracle::gen_random_arena(1 + i % 6, 3, 4, 1000 + i));
    return out;
}

Outcome from_reports(const std::vector<VerifyReport>& reps, std::initializer_list<const char*> names)
{
    Outcome o;
    for (std::size_t i = 0; i < reps.size(); ++i) {
        for (const char* n : names) {
            const CheckResult* c = reps[i].find(n);
            o.expect(c != nullptr && c->ok, "arena " + std::to_string(i) + ", " + n + ": " + (c ? c->detail : "missing"));
        }
    }
    return o;
}

Outcome ttpg_goldens()
{
    Outcome o;
    const std::vector<std::pair<std::string, Arena>> arenas = {
        {"shifted example", reweight(data("gamma_ex.arena"), Rational(-1))},
        {"degenerate", data("gamma_d.arena")},
    };
    for (const auto& [name, a] : arenas) {
        const TtpgFixpoint fp = min_ttpg_fixpoint(a);
        o.expect(fp.f == least_sepm(a), name + ": fixpoint differs from f*");
        o.expect(fp.k_reached <= fp.k_limit(), name + ": k_reached above k'");
        const auto v = audit_min_ttpg(a, min_ttpg(a, fp.k_limit() + 4));
        o.expect(v.empty(), name + ": " + (v.empty() ? "" : v.front()));
    }
    return o;
}

Outcome roundtrip_all(const std::vector<Arena>& generated)
{
    Outcome o;
    std::vector<Arena> all = generated;
    for (const char* f : {"gamma_ex.arena", "gamma_d.arena", "not_positional.arena", "two_classes.arena",
                          "single_loop.arena", "random_6_3_4_7.arena"}) {
        all.push_back(data(f));
    }
    for (const Arena& a : all) {
        const std::string text = serialize_arena(a);
        o.expect(parse_arena(text) == a && serialize_arena(parse_arena(text)) == text, text);
    }
    o.expect(serialize_arena(oracle::gen_random_arena(6, 3, 4, 7)) == serialize_arena(data("random_6_3_4_7.arena")),
             "frozen generator output");
    return o;
}

Outcome golden_determinism()
{
    Outcome o;
    for (const char* f : {"gamma_ex.arena", "gamma_d.arena"}) {
        const Arena a = data(f);
        const Rational nu = solve_values(a).front();
        auto render = [&] {
            const EnumerationResult r = enumerate(a, nu);
            return enum_report_json(a, r, decompose(a, nu, r.energy)).dump();
        };
        o.expect(render() == render(), std::string(f) + ": output differs between runs");
    }
    return o;
}

double seconds_since(std::chrono::steady_clock::time_point t0)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

} // namespace

int main()
{
    bool all_ok = true;
    auto report = [&](int n, const std::string& title, Outcome o, double secs, double limit) {
        if (limit > 0 && secs >= limit) o.expect(false, "took " + std::to_string(secs) + " s, limit " + std::to_string(limit) + " s");
        all_ok = all_ok && o.ok;
        std::cout << "criterion " << n << " (" << title << "): " << (o.ok ? "PASS" : "FAIL") << " [" << std::fixed
                  << std::setprecision(3) << secs << " s]";
        if (!o.ok) std::cout << " -- " << o.detail;
        std::cout << std::endl;
    };
    auto timed = [&](const std::function<Outcome()>& fn, double& secs) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = fn();
        } catch (const std::exception& e) {
            o.expect(false, std::string("exception: ") + e.what());
        }
        secs = seconds_since(t0);
        return o;
    };

    double s1 = 0, s2 = 0, s3 = 0, s4 = 0, s6 = 0, s7 = 0;
    Outcome c1 = timed(example_golden, s1);
    report(1, "example arena golden values, lattice and decomposition", c1, s1, 1.0);
    Outcome c2 = timed(degenerate_golden, s2);
    report(2, "degenerate arena", c2, s2, 1.0);

    const std::vector<Arena> gen = corpus();
    std::vector<VerifyReport> reps;
    std::vector<VerifyReport> golden_reps;
    Outcome c3 = timed(
        [&] {
            VerifyOptions opts;
            opts.jobs = std::clamp(std::thread::hardware_concurrency(), 1u, 8u);
            reps = verify_many(gen, opts);
            golden_reps = verify_many({data("gamma_ex.arena"), data("gamma_d.arena"), data("not_positional.arena"),
                                       data("two_classes.arena"), data("random_6_3_4_7.arena")},
                                      opts);
            Outcome o = from_reports(reps, {"values", "synthesis", "energy_lattice", "decomposition",
                                            "optimal_iff_conservative"});
            o.expect(reps.size() >= 200, "corpus too small");
            return o;
        },
        s3);
    report(3, "oracle equivalence on " + std::to_string(gen.size()) + " random arenas", c3, s3, 120.0);

    Outcome c4 = timed(
        [&] {
            Outcome o = from_reports(reps, {"ttpg_fixpoint", "ttpg_audit", "ttpg_plain"});
            Outcome g = ttpg_goldens();
            o.expect(g.ok, g.detail);
            return o;
        },
        s4);
    report(4, "Min-k-TTPG convergence and bounds", c4, s4, 0);

    std::size_t edges = 0;
    for (const auto& r : reps) edges += r.recursion_edges;
    Outcome c5 = from_reports(reps, {"worklist_vs_naive", "seeded_vs_unseeded"});
    c5.expect(edges > 0, "no recursion edges exercised");
    report(5, "fixpoint cross-checks over " + std::to_string(edges) + " recursion edges", c5, 0, 0);

    Outcome c6 = timed(
        [&] {
            Outcome o = from_reports(reps, {"store_hygiene", "deterministic_output"});
            Outcome g = from_reports(golden_reps, {"store_hygiene", "deterministic_output"});
            o.expect(g.ok, "golden: " + g.detail);
            Outcome d = golden_determinism();
            o.expect(d.ok, d.detail);
            return o;
        },
        s6);
    report(6, "enumeration hygiene and deterministic output", c6, s6, 0);

    Outcome c7 = timed([&] { return roundtrip_all(gen); }, s7);
    report(7, "format round-trip", c7, s7, 0);

    std::size_t degenerate = 0;
    for (const auto& r : reps) degenerate += r.degenerate;
    std::cout << "corpus: " << reps.size() << " arenas, " << degenerate << " with a degenerate class" << std::endl;
    return all_ok ? 0 : 1;
}
