#include "mpg/oracle.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <thread>

#include "mpg/checked.hpp"

namespace mpg::oracle {

namespace {

// Tarjan's SCC, iterative. Components come out in reverse topological order.
std::vector<std::vector<VertexId>> strongly_connected(const OnePlayerGraph& g)
{
    const std::size_t n = g.num_vertices();
    std::vector<int> index(n, -1), low(n, 0);
    std::vector<bool> on_stack(n, false);
    std::vector<VertexId> stack;
    std::vector<std::vector<VertexId>> comps;
    int counter = 0;

    struct Frame
    {
        VertexId v;
        std::size_t next;
    };
    for (VertexId root = 0; root < n; ++root) {
        if (index[root] != -1) continue;
        std::vector<Frame> call{{root, 0}};
        index[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = true;
        while (!call.empty()) {
            Frame& fr = call.back();
            auto outs = g.out_arcs(fr.v);
            if (fr.next < outs.size()) {
                VertexId w = outs[fr.next++].dst;
                if (index[w] == -1) {
                    index[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    call.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[fr.v] = std::min(low[fr.v], index[w]);
                }
                continue;
            }
            VertexId v = fr.v;
            call.pop_back();
            if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
            if (low[v] == index[v]) {
                std::vector<VertexId> comp;
                VertexId w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = false;
                    comp.push_back(w);
                } while (w != v);
                comps.push_back(std::move(comp));
            }
        }
    }
    return comps;
}

// Karp's minimum cycle mean inside one strongly connected component.
std::optional<Rational> karp(const OnePlayerGraph& g, const std::vector<VertexId>& comp,
                             const std::vector<std::size_t>& comp_of, std::size_t cid)
{
    const std::size_t m = comp.size();
    std::vector<std::size_t> local(g.num_vertices(), 0);
    for (std::size_t i = 0; i < m; ++i) local[comp[i]] = i;

    bool has_arc = false;
    for (VertexId v : comp) {
        for (const Arc& e : g.out_arcs(v)) has_arc = has_arc || comp_of[e.dst] == cid;
    }
    if (!has_arc) return std::nullopt;

    constexpr Weight inf = std::numeric_limits<Weight>::max();
    std::vector<std::vector<Weight>> d(m + 1, std::vector<Weight>(m, inf));
    d[0][0] = 0;
    for (std::size_t k = 1; k <= m; ++k) {
        for (std::size_t i = 0; i < m; ++i) {
            if (d[k - 1][i] == inf) continue;
            for (const Arc& e : g.out_arcs(comp[i])) {
                if (comp_of[e.dst] != cid) continue;
                Weight cand = checked_add(d[k - 1][i], e.weight);
                Weight& slot = d[k][local[e.dst]];
                slot = std::min(slot, cand);
            }
        }
    }

    std::optional<Rational> best;
    for (std::size_t i = 0; i < m; ++i) {
        if (d[m][i] == inf) continue;
        std::optional<Rational> worst;
        for (std::size_t k = 0; k < m; ++k) {
            if (d[k][i] == inf) continue;
            Rational r(checked_sub(d[m][i], d[k][i]), static_cast<std::int64_t>(m - k));
            if (!worst || r > *worst) worst = r;
        }
        if (worst && (!best || *worst < *best)) best = worst;
    }
    return best;
}

std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound)
{
    // Uniform in [0, bound) by rejection; independent of the standard
    // library's distribution implementation.
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % bound;
}

} // namespace

std::vector<Rational> min_cycle_mean_all(const OnePlayerGraph& g)
{
    auto comps = strongly_connected(g);
    std::vector<std::size_t> comp_of(g.num_vertices(), 0);
    for (std::size_t c = 0; c < comps.size(); ++c) {
        for (VertexId v : comps[c]) comp_of[v] = c;
    }
    // Reverse topological order: every successor component is already done.
    std::vector<std::optional<Rational>> best(comps.size());
    for (std::size_t c = 0; c < comps.size(); ++c) {
        std::optional<Rational> b = karp(g, comps[c], comp_of, c);
        for (VertexId v : comps[c]) {
            for (const Arc& e : g.out_arcs(v)) {
                std::size_t d = comp_of[e.dst];
                if (d != c && best[d] && (!b || *best[d] < *b)) b = best[d];
            }
        }
        best[c] = b;
    }
    std::vector<Rational> out(g.num_vertices());
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
        if (!best[comp_of[v]]) throw std::invalid_argument("no cycle reachable: graph has a dead end");
        out[v] = *best[comp_of[v]];
    }
    return out;
}

Rational min_cycle_mean_reachable(const OnePlayerGraph& g, VertexId v)
{
    return min_cycle_mean_all(g)[v];
}

std::uint64_t strategy_count(const Arena& a)
{
    std::uint64_t total = 1;
    for (VertexId u = 0; u < a.num_vertices(); ++u) {
        if (a.owner(u) != Player::Zero) continue;
        if (__builtin_mul_overflow(total, a.out_degree(u), &total)) return std::numeric_limits<std::uint64_t>::max();
    }
    return total;
}

PositionalStrategy strategy_at(const Arena& a, std::uint64_t index)
{
    PositionalStrategy s(a.num_vertices());
    for (VertexId u = 0; u < a.num_vertices(); ++u) {
        if (a.owner(u) != Player::Zero) continue;
        const std::uint64_t deg = a.out_degree(u);
        s.set(u, a.arc(a.out_begin(u) + static_cast<ArcId>(index % deg)).dst);
        index /= deg;
    }
    return s;
}

ExhaustiveResult exhaustive_opt(const Arena& a, std::uint64_t max_strategies, unsigned jobs)
{
    const std::uint64_t total = strategy_count(a);
    if (total > max_strategies)
        throw BoundExceeded("arena has " + std::to_string(total) + " positional strategies, bound is " +
                            std::to_string(max_strategies));
    jobs = std::max(1u, jobs);
    const std::size_t n = a.num_vertices();

    // Pass 1: per-vertex maximum payoff. Pass 2: strategies attaining it.
    auto evaluate = [&](std::uint64_t i) { return min_cycle_mean_all(restrict(a, strategy_at(a, i))); };

    std::vector<std::vector<std::optional<Rational>>> partial(jobs, std::vector<std::optional<Rational>>(n));
    auto pass1 = [&](unsigned t) {
        for (std::uint64_t i = t; i < total; i += jobs) {
            auto pay = evaluate(i);
            for (VertexId v = 0; v < n; ++v) {
                if (!partial[t][v] || pay[v] > *partial[t][v]) partial[t][v] = pay[v];
            }
        }
    };
    std::vector<std::vector<std::uint64_t>> hits(jobs);
    ExhaustiveResult res;
    auto pass2 = [&](unsigned t) {
        for (std::uint64_t i = t; i < total; i += jobs) {
            if (evaluate(i) == res.values) hits[t].push_back(i);
        }
    };
    auto run = [&](auto&& body) {
        if (jobs == 1) {
            body(0u);
            return;
        }
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(body, t);
        for (auto& th : pool) th.join();
    };

    run(pass1);
    res.values.assign(n, Rational());
    for (VertexId v = 0; v < n; ++v) {
        std::optional<Rational> m;
        for (unsigned t = 0; t < jobs; ++t) {
            if (partial[t][v] && (!m || *partial[t][v] > *m)) m = partial[t][v];
        }
        res.values[v] = *m;
    }
    run(pass2);
    std::vector<std::uint64_t> all;
    for (auto& h : hits) all.insert(all.end(), h.begin(), h.end());
    std::sort(all.begin(), all.end());
    for (std::uint64_t i : all) res.optimal.push_back(strategy_at(a, i));
    return res;
}

std::vector<EnergyFunction> reference_energy_lattice(const Arena& a, const Rational& nu,
                                                     std::span<const PositionalStrategy> opt)
{
    const Arena rw = reweight(a, nu);
    const Level cap = energy_cap(rw);
    std::vector<EnergyFunction> out;
    for (const PositionalStrategy& s : opt) out.push_back(least_feasible_potential(restrict(rw, s), cap));
    std::sort(out.begin(), out.end(), [](const EnergyFunction& x, const EnergyFunction& y) { return x.values() < y.values(); });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

EnergyFunction naive_least_sepm(const Arena& a, std::optional<Level> cap_opt)
{
    const Level cap = cap_opt.value_or(energy_cap(a));
    EnergyFunction f(a.num_vertices(), cap);
    for (;;) {
        EnergyFunction next = f;
        for (VertexId u = 0; u < a.num_vertices(); ++u) {
            const bool p0 = a.owner(u) == Player::Zero;
            EnergyValue need = p0 ? EnergyValue::top() : EnergyValue::finite(0);
            for (const Arc& e : a.out_arcs(u)) {
                EnergyValue x = ominus(f[e.dst], e.weight, cap);
                need = p0 ? std::min(need, x) : std::max(need, x);
            }
            next[u] = std::max(f[u], need);
        }
        if (next == f) return f;
        f = std::move(next);
    }
}

Arena gen_random_arena(std::size_t n, std::size_t max_out, Weight w_max, std::uint64_t seed)
{
    if (n < 1 || max_out < 1 || w_max < 0) throw std::invalid_argument("gen_random_arena: need n >= 1, max_out >= 1, w_max >= 0");
    std::mt19937_64 rng(seed);
    std::vector<VertexDecl> vertices;
    for (std::size_t i = 0; i < n; ++i) {
        vertices.push_back({"v" + std::to_string(i), draw(rng, 2) == 0 ? Player::Zero : Player::One});
    }
    std::vector<Arc> arcs;
    std::vector<VertexId> pool(n);
    const std::size_t deg_cap = std::min(max_out, n);
    for (VertexId u = 0; u < n; ++u) {
        const std::size_t deg = 1 + draw(rng, deg_cap);
        for (VertexId i = 0; i < n; ++i) pool[i] = i;
        for (std::size_t i = 0; i < deg; ++i) {
            std::size_t j = i + draw(rng, n - i);
            std::swap(pool[i], pool[j]);
            Weight w = static_cast<Weight>(draw(rng, static_cast<std::uint64_t>(2 * w_max + 1))) - w_max;
            arcs.push_back({u, pool[i], w});
        }
    }
    return Arena::build(std::move(vertices), std::move(arcs));
}

std::vector<Weight> brute_force_ttpg(const Arena& a, std::size_t k)
{
    std::function<Weight(VertexId, std::size_t)> play = [&](VertexId u, std::size_t left) -> Weight {
        if (left == 0) return 0;
        const bool p0 = a.owner(u) == Player::Zero;
        std::optional<Weight> best;
        for (const Arc& e : a.out_arcs(u)) {
            Weight x = checked_add(e.weight, play(e.dst, left - 1));
            if (!best || (p0 ? x > *best : x < *best)) best = x;
        }
        return *best;
    };
    std::vector<Weight> out(a.num_vertices());
    for (VertexId v = 0; v < a.num_vertices(); ++v) out[v] = play(v, k);
    return out;
}

} // namespace mpg::oracle
