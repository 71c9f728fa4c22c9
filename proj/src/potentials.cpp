#include "mpg/potentials.hpp"

#include <algorithm>
#include <stdexcept>

#include "mpg/checked.hpp"

namespace mpg {

bool PositionalStrategy::valid_for(const Arena& a) const
{
    if (choice_.size() != a.num_vertices()) return false;
    for (VertexId u = 0; u < a.num_vertices(); ++u) {
        if (a.owner(u) == Player::One) {
            if (choice_[u] != kNoVertex) return false;
        } else if (choice_[u] == kNoVertex || !a.find_arc(u, choice_[u])) {
            return false;
        }
    }
    return true;
}

OnePlayerGraph::OnePlayerGraph(std::size_t n, std::vector<Arc> arcs) : n_(n), arcs_(std::move(arcs))
{
    std::stable_sort(arcs_.begin(), arcs_.end(), [](const Arc& x, const Arc& y) { return x.src < y.src; });
    offset_.assign(n + 1, 0);
    for (const Arc& e : arcs_) {
        if (e.src >= n || e.dst >= n) throw std::invalid_argument("arc endpoint out of range");
        ++offset_[e.src + 1];
    }
    for (std::size_t v = 0; v < n; ++v) offset_[v + 1] += offset_[v];
}

OnePlayerGraph restrict(const Arena& a, const PositionalStrategy& s)
{
    if (!s.valid_for(a)) throw std::invalid_argument("strategy is not valid for the arena");
    std::vector<Arc> arcs;
    for (const Arc& e : a.arcs()) {
        if (a.owner(e.src) == Player::One || s[e.src] == e.dst) arcs.push_back(e);
    }
    return OnePlayerGraph(a.num_vertices(), std::move(arcs));
}

EnergyFunction least_feasible_potential(const OnePlayerGraph& g, Level cap)
{
    const std::size_t n = g.num_vertices();
    // Unbounded levels first; the cap is applied once the fixpoint is known.
    std::vector<Level> pi(n, 0);
    auto relax_once = [&]() {
        bool changed = false;
        for (const Arc& e : g.arcs()) {
            Level need = std::max<Level>(checked_sub(pi[e.dst], e.weight), 0);
            if (need > pi[e.src]) {
                pi[e.src] = need;
                changed = true;
            }
        }
        return changed;
    };
    for (std::size_t round = 0; round + 1 < n; ++round) {
        if (!relax_once()) break;
    }

    // Any arc still violated sits on a negative cycle's backward closure.
    std::vector<bool> top(n, false);
    std::vector<VertexId> stack;
    for (const Arc& e : g.arcs()) {
        if (std::max<Level>(checked_sub(pi[e.dst], e.weight), 0) > pi[e.src] && !top[e.src]) {
            top[e.src] = true;
            stack.push_back(e.src);
        }
    }
    std::vector<std::vector<VertexId>> preds(n);
    for (const Arc& e : g.arcs()) preds[e.dst].push_back(e.src);
    while (!stack.empty()) {
        VertexId v = stack.back();
        stack.pop_back();
        for (VertexId p : preds[v]) {
            if (!top[p]) {
                top[p] = true;
                stack.push_back(p);
            }
        }
    }

    EnergyFunction f(n, cap);
    for (VertexId v = 0; v < n; ++v) {
        if (top[v]) {
            f[v] = EnergyValue::top();
        } else if (pi[v] > cap) {
            throw std::logic_error("least feasible potential exceeds the energy cap");
        } else {
            f[v] = EnergyValue::finite(pi[v]);
        }
    }
    return f;
}

bool is_conservative(const OnePlayerGraph& g)
{
    const std::size_t n = g.num_vertices();
    std::vector<Weight> dist(n, 0);
    for (std::size_t round = 0; round < n; ++round) {
        bool changed = false;
        for (const Arc& e : g.arcs()) {
            Weight d = checked_add(dist[e.src], e.weight);
            if (d < dist[e.dst]) {
                dist[e.dst] = d;
                changed = true;
            }
        }
        if (!changed) return true;
    }
    return false;
}

bool delta_membership(const Arena& a, const EnergyFunction& f, const PositionalStrategy& s)
{
    return least_feasible_potential(restrict(a, s), f.cap()) == f;
}

} // namespace mpg
