#pragma once

#include <cstdint>
#include <vector>

#include "mpg/arena.hpp"
#include "mpg/energy.hpp"
#include "mpg/potentials.hpp"
#include "mpg/rational.hpp"

namespace mpg {

/// val(v) for every vertex, indexed by VertexId.
using ValueAssignment = std::vector<Rational>;

struct SolveStats
{
    std::uint64_t probes = 0;  ///< distinct winning-region computations
};

/// Exact game values. Each probe nu decides val(v) >= nu for all v at once
/// through the energy winning region of the arena reweighted by nu; only
/// candidates with denominator <= |V| are probed.
ValueAssignment solve_values(const Arena& a, SolveStats* stats = nullptr);

struct ValueClass
{
    Rational nu;
    std::vector<VertexId> vertices;  ///< global ids, increasing
    Arena subgame;                   ///< induced on `vertices`, local ids
};

struct ErgodicPartition
{
    std::vector<ValueClass> classes;  ///< ordered by increasing nu
};

/// Groups vertices by value and induces each class's subgame. Throws
/// std::logic_error if a class subgame has a dead end (values inconsistent).
ErgodicPartition ergodic_partition(const Arena& a, const ValueAssignment& vals);

struct ClassSolution
{
    Rational nu;
    std::vector<VertexId> vertices;
    Arena reweighted;           ///< class subgame with weights w*den - num
    EnergyFunction least_sepm;  ///< of `reweighted`, all finite
};

/// Least SEPM of every class subgame reweighted by its value.
std::vector<ClassSolution> solve_classes(const ErgodicPartition& part);

/// Optimal strategy from the least SEPMs: in each class, every Player-0
/// vertex takes its first compatible arc in canonical order.
PositionalStrategy synthesize_optimal(const Arena& a, const ValueAssignment& vals);

/// s secures val(v) from every v, and within every class its reweighted
/// strategy graph is conservative.
bool is_optimal(const Arena& a, const ValueAssignment& vals, const PositionalStrategy& s);

} // namespace mpg
