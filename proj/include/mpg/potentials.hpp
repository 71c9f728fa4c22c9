#pragma once

#include <span>
#include <vector>

#include "mpg/arena.hpp"
#include "mpg/energy.hpp"

namespace mpg {

/// Positional strategy of Player 0: one successor per Player-0 vertex.
/// Entries of Player-1 vertices hold kNoVertex.
class PositionalStrategy
{
public:
    PositionalStrategy() = default;
    explicit PositionalStrategy(std::size_t n) : choice_(n, kNoVertex) {}

    std::size_t size() const { return choice_.size(); }
    VertexId operator[](VertexId u) const { return choice_[u]; }
    void set(VertexId u, VertexId succ) { choice_[u] = succ; }
    const std::vector<VertexId>& choices() const { return choice_; }

    /// True iff every Player-0 vertex maps to one of its successors and
    /// Player-1 vertices map to nothing.
    bool valid_for(const Arena& a) const;

    friend bool operator==(const PositionalStrategy&, const PositionalStrategy&) = default;
    friend auto operator<=>(const PositionalStrategy&, const PositionalStrategy&) = default;

private:
    std::vector<VertexId> choice_;
};

/// Plain weighted digraph; arcs grouped by source in canonical order.
class OnePlayerGraph
{
public:
    OnePlayerGraph(std::size_t n, std::vector<Arc> arcs);

    std::size_t num_vertices() const { return n_; }
    std::size_t num_arcs() const { return arcs_.size(); }
    std::span<const Arc> arcs() const { return arcs_; }
    std::span<const Arc> out_arcs(VertexId v) const
    {
        return std::span<const Arc>(arcs_).subspan(offset_[v], offset_[v + 1] - offset_[v]);
    }

private:
    std::size_t n_;
    std::vector<Arc> arcs_;
    std::vector<std::size_t> offset_;
};

/// G(a, s): keeps s's arc at each Player-0 vertex and every Player-1 arc.
/// Throws std::invalid_argument if s is not a strategy of a.
OnePlayerGraph restrict(const Arena& a, const PositionalStrategy& s);

/// Pointwise-least pi with pi(u) >= pi(v) (-) w(u,v) on every arc. Vertices
/// that reach a negative cycle get Top. Throws std::logic_error if a finite
/// level would exceed the cap.
EnergyFunction least_feasible_potential(const OnePlayerGraph& g, Level cap);

/// No cycle of negative total weight (plain Bellman-Ford).
bool is_conservative(const OnePlayerGraph& g);

/// s belongs to Delta(f): the least feasible potential of G(a, s) equals f.
/// `a` must already be reweighted.
bool delta_membership(const Arena& a, const EnergyFunction& f, const PositionalStrategy& s);

} // namespace mpg
