#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <unordered_map>
#include <vector>

#include "mpg/arena.hpp"
#include "mpg/energy.hpp"
#include "mpg/potentials.hpp"
#include "mpg/rational.hpp"

namespace mpg {

/// Exact-membership index of visited subgames and emitted SEPMs. Subgames
/// are keyed by their retained-arc bitmap (equivalently the out-neighbourhood
/// of every Player-0 vertex), SEPMs by their value vector.
class SubgameStore
{
public:
    bool contains(const SubgameMask& m) const { return subgames_.count(m.bits()) != 0; }
    bool contains(const EnergyFunction& f) const { return sepms_.count(key(f)) != 0; }

    /// Check-and-insert: returns the id and whether it was new.
    std::pair<std::size_t, bool> insert(const SubgameMask& m);
    std::pair<std::size_t, bool> insert(const EnergyFunction& f);

    std::optional<std::size_t> find(const SubgameMask& m) const;
    std::optional<std::size_t> find(const EnergyFunction& f) const;

    std::size_t num_subgames() const { return subgames_.size(); }
    std::size_t num_sepms() const { return sepms_.size(); }

    /// Total insert attempts, including ones that hit an existing entry.
    std::uint64_t subgame_attempts() const { return subgame_attempts_; }
    std::uint64_t sepm_attempts() const { return sepm_attempts_; }

private:
    struct VecHash
    {
        std::size_t operator()(const std::vector<Level>& v) const;
    };
    static std::vector<Level> key(const EnergyFunction& f);

    std::unordered_map<std::vector<bool>, std::size_t> subgames_;
    std::unordered_map<std::vector<Level>, std::size_t, VecHash> sepms_;
    std::uint64_t subgame_attempts_ = 0;
    std::uint64_t sepm_attempts_ = 0;
};

/// Extremal SEPMs; element 0 is the least SEPM of the root.
struct EnergyLattice
{
    std::vector<EnergyFunction> elements;
};

struct BasicSubgame
{
    std::size_t id = 0;
    SubgameMask mask;                    ///< relative to the root arena
    std::vector<ArcId> removed_arcs;     ///< root ArcIds not retained
    std::size_t sepm_id = 0;             ///< phi: index into EnergyLattice
    std::optional<std::size_t> parent;   ///< recursion-tree parent
    std::vector<std::size_t> parent_ids; ///< every subgame whose step produced this one
};

/// Basic subgames in discovery order; node 0 is the root.
struct SubgameLattice
{
    std::vector<BasicSubgame> nodes;
};

struct RecursionEdge
{
    std::size_t parent;
    std::size_t child;
};

struct EnumerationResult
{
    Rational nu;
    Arena reweighted;  ///< root arena with weights w*den - num
    Level cap = 0;
    EnergyLattice energy;
    SubgameLattice subgames;
    std::vector<RecursionEdge> edges;      ///< recursion-tree edges (first discovery)
    std::uint64_t sepm_computations = 0;   ///< least-SEPM runs, root included
    std::uint64_t pruned_children = 0;     ///< children not won everywhere

    bool degenerate() const { return subgames.nodes.size() > energy.elements.size(); }
};

struct EnumerationObserver
{
    std::function<void(std::size_t id, const EnergyFunction&)> on_sepm;
    std::function<void(const BasicSubgame&)> on_subgame;
};

/// Arcs (u, v) with f(u) < f(v) (-) w(u, v), strictly incompatible with f.
/// `a` must already be reweighted.
std::vector<ArcId> incompatible_arcs(const Arena& a, const EnergyFunction& f, VertexId u);

/// Recursive enumeration of basic subgames and extremal SEPMs of a
/// nu-valued arena, without repetitions. Each item is reported to the
/// observer once, as soon as it is found. Throws std::invalid_argument if
/// the root is not won everywhere after reweighting by nu.
EnumerationResult enumerate(const Arena& a, const Rational& nu, const EnumerationObserver* observer = nullptr);

struct DeltaBlock
{
    std::size_t sepm_id = 0;
    std::uint64_t count = 0;                     ///< exact
    std::vector<PositionalStrategy> strategies;  ///< first max_listed, lexicographic
};

struct DecomposeOptions
{
    std::size_t max_listed = 16;
    /// Guard on the candidate product examined for non-least SEPMs.
    std::uint64_t max_candidates = 10'000'000;
};

/// Delta(f) for every f in x. Strategies are over the root arena `a`.
/// Throws std::length_error if a candidate product exceeds the guard.
std::vector<DeltaBlock> decompose(const Arena& a, const Rational& nu, const EnergyLattice& x,
                                  const DecomposeOptions& opts = {});

} // namespace mpg
