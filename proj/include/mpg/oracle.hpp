#pragma once

// Brute-force ground truth for small instances. Nothing here shares code
// paths with the solvers it is used to check, apart from the shared data
// types and the least feasible potential (the definition of the energy
// lattice itself).

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "mpg/arena.hpp"
#include "mpg/energy.hpp"
#include "mpg/potentials.hpp"
#include "mpg/rational.hpp"

namespace mpg::oracle {

class BoundExceeded : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// Minimum mean weight over cycles reachable from each vertex (Karp per SCC).
std::vector<Rational> min_cycle_mean_all(const OnePlayerGraph& g);
Rational min_cycle_mean_reachable(const OnePlayerGraph& g, VertexId v);

/// Product of Player-0 out-degrees, saturating at UINT64_MAX.
std::uint64_t strategy_count(const Arena& a);

/// The i-th strategy in mixed-radix order (first Player-0 vertex varies fastest).
PositionalStrategy strategy_at(const Arena& a, std::uint64_t index);

struct ExhaustiveResult
{
    std::vector<Rational> values;
    std::vector<PositionalStrategy> optimal;  ///< in enumeration order
};

/// Evaluates every positional strategy of Player 0 against Player 1's best
/// reply. Throws BoundExceeded if there are more than max_strategies.
ExhaustiveResult exhaustive_opt(const Arena& a, std::uint64_t max_strategies = 1'000'000, unsigned jobs = 1);

/// Distinct least feasible potentials of G(a^{w-nu}, s) over s in opt, in
/// lexicographic order of their value vectors.
std::vector<EnergyFunction> reference_energy_lattice(const Arena& a, const Rational& nu,
                                                     std::span<const PositionalStrategy> opt);

/// Least SEPM by synchronous Kleene iteration from the all-zero function.
EnergyFunction naive_least_sepm(const Arena& a, std::optional<Level> cap = std::nullopt);

/// Deterministic random arena: out-degree uniform in [1, min(max_out, n)],
/// distinct successors, owners and weights uniform.
Arena gen_random_arena(std::size_t n, std::size_t max_out, Weight w_max, std::uint64_t seed);

/// Exhaustive k-step truncated total payoff by explicit game-tree search
/// (plain variant). Exponential in k.
std::vector<Weight> brute_force_ttpg(const Arena& a, std::size_t k);

} // namespace mpg::oracle
