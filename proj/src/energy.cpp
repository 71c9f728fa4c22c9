#include "mpg/energy.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "mpg/checked.hpp"

namespace mpg {

EnergyValue ominus(EnergyValue a, Weight w, Level cap)
{
    if (a.is_top()) return a;
    Level n = checked_sub(a.level(), w);
    if (n < 0) n = 0;
    if (n > cap) return EnergyValue::top();
    return EnergyValue::finite(n);
}

std::size_t EnergyFunction::finite_count() const
{
    return static_cast<std::size_t>(
        std::count_if(values_.begin(), values_.end(), [](EnergyValue x) { return !x.is_top(); }));
}

bool EnergyFunction::leq(const EnergyFunction& other) const
{
    if (size() != other.size()) throw std::invalid_argument("comparing energy functions of different size");
    for (std::size_t i = 0; i < size(); ++i) {
        if (values_[i] > other.values_[i]) return false;
    }
    return true;
}

Level energy_cap(const Arena& a)
{
    return checked_mul(static_cast<Level>(a.num_vertices() - 1), a.max_abs_weight());
}

bool is_compatible(const Arena& a, const EnergyFunction& f, ArcId e)
{
    const Arc& arc = a.arc(e);
    return f[arc.src] >= ominus(f[arc.dst], arc.weight, f.cap());
}

bool is_sepm(const Arena& a, const EnergyFunction& f)
{
    if (f.size() != a.num_vertices()) throw std::invalid_argument("energy function does not match arena");
    for (VertexId u = 0; u < a.num_vertices(); ++u) {
        bool any = false;
        bool all = true;
        for (ArcId e = a.out_begin(u); e < a.out_end(u); ++e) {
            bool ok = is_compatible(a, f, e);
            any = any || ok;
            all = all && ok;
        }
        if (a.owner(u) == Player::Zero ? !any : !all) return false;
    }
    return true;
}

std::vector<ArcId> compatible_arcs(const Arena& a, const EnergyFunction& f, VertexId u)
{
    std::vector<ArcId> out;
    for (ArcId e = a.out_begin(u); e < a.out_end(u); ++e) {
        if (is_compatible(a, f, e)) out.push_back(e);
    }
    return out;
}

namespace {

// Smallest value satisfying u's SEPM condition given its successors.
EnergyValue lifted(const Arena& a, const EnergyFunction& f, VertexId u)
{
    const bool p0 = a.owner(u) == Player::Zero;
    EnergyValue best = p0 ? EnergyValue::top() : EnergyValue::finite(0);
    for (const Arc& e : a.out_arcs(u)) {
        EnergyValue x = ominus(f[e.dst], e.weight, f.cap());
        best = p0 ? std::min(best, x) : std::max(best, x);
    }
    return best;
}

} // namespace

EnergyFunction least_sepm(const Arena& a, const SepmOptions& opts)
{
    const std::size_t n = a.num_vertices();
    const Level cap = opts.cap.value_or(energy_cap(a));

    EnergyFunction f(n, cap);
    if (opts.seed != nullptr) {
        if (opts.seed->size() != n) throw std::invalid_argument("seed does not match arena");
        for (VertexId v = 0; v < n; ++v) {
            EnergyValue x = (*opts.seed)[v];
            f[v] = (!x.is_top() && x.level() > cap) ? EnergyValue::top() : x;
        }
    }
    if (opts.stats != nullptr) {
        opts.stats->lifts = 0;
        opts.stats->per_vertex.assign(n, 0);
    }

    // count[u] for Player-0 u: number of out-arcs currently compatible.
    std::vector<std::size_t> count(n, 0);
    std::vector<bool> queued(n, false);
    std::deque<VertexId> todo;

    auto violated = [&](VertexId u) {
        if (a.owner(u) == Player::Zero) return count[u] == 0;
        for (ArcId e = a.out_begin(u); e < a.out_end(u); ++e) {
            if (!is_compatible(a, f, e)) return true;
        }
        return false;
    };
    auto recount = [&](VertexId u) {
        std::size_t c = 0;
        for (ArcId e = a.out_begin(u); e < a.out_end(u); ++e) c += is_compatible(a, f, e) ? 1 : 0;
        count[u] = c;
    };

    for (VertexId u = 0; u < n; ++u) {
        if (a.owner(u) == Player::Zero) recount(u);
        if (violated(u)) {
            todo.push_back(u);
            queued[u] = true;
        }
    }

    while (!todo.empty()) {
        VertexId u = todo.front();
        todo.pop_front();
        queued[u] = false;
        if (f[u].is_top() || !violated(u)) continue;

        EnergyValue old = f[u];
        f[u] = std::max(old, lifted(a, f, u));
        if (opts.stats != nullptr) {
            ++opts.stats->lifts;
            ++opts.stats->per_vertex[u];
        }
        if (a.owner(u) == Player::Zero) recount(u);
        // A self-loop may still be violated after the lift.
        if (!f[u].is_top() && violated(u)) {
            todo.push_back(u);
            queued[u] = true;
        }

        for (ArcId e : a.in_arcs(u)) {
            const VertexId p = a.arc(e).src;
            if (p == u || f[p].is_top()) continue;
            const Weight w = a.arc(e).weight;
            const bool was = f[p] >= ominus(old, w, cap);
            const bool now = f[p] >= ominus(f[u], w, cap);
            if (!was || now) continue;
            if (a.owner(p) == Player::Zero) {
                if (--count[p] != 0) continue;
            }
            if (!queued[p]) {
                todo.push_back(p);
                queued[p] = true;
            }
        }
    }
    return f;
}

WinningRegions winning_regions(const EnergyFunction& least)
{
    WinningRegions r;
    r.in_player0.assign(least.size(), false);
    for (VertexId v = 0; v < least.size(); ++v) {
        if (least[v].is_top()) {
            r.player1.push_back(v);
        } else {
            r.player0.push_back(v);
            r.in_player0[v] = true;
        }
    }
    return r;
}

WinningRegions winning_regions(const Arena& a)
{
    return winning_regions(least_sepm(a));
}

} // namespace mpg
