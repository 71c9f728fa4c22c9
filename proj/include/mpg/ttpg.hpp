#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "mpg/arena.hpp"
#include "mpg/energy.hpp"

namespace mpg {

enum class TtpgKind { Plain, Min };

/// Rows nu_0 .. nu_{k_max} of a truncated total-payoff game, one column
/// per vertex. Without history only the last two rows are kept and
/// first_k() says which k rows()[0] holds.
class TruncatedValueTable
{
public:
    TruncatedValueTable(TtpgKind kind, std::size_t k_max, std::size_t first_k, std::vector<std::vector<Weight>> rows)
        : kind_(kind), k_max_(k_max), first_k_(first_k), rows_(std::move(rows))
    {
    }

    TtpgKind kind() const { return kind_; }
    std::size_t k_max() const { return k_max_; }
    std::size_t first_k() const { return first_k_; }
    bool full_history() const { return first_k_ == 0 && rows_.size() == k_max_ + 1; }

    const std::vector<std::vector<Weight>>& rows() const { return rows_; }
    /// Row k; k must be within [first_k, k_max].
    const std::vector<Weight>& row(std::size_t k) const { return rows_.at(k - first_k_); }
    const std::vector<Weight>& last() const { return rows_.back(); }

private:
    TtpgKind kind_;
    std::size_t k_max_;
    std::size_t first_k_;
    std::vector<std::vector<Weight>> rows_;
};

/// nu_k(u) = max/min over out-arcs of w + nu_{k-1}(v), nu_0 = 0.
TruncatedValueTable plain_ttpg(const Arena& a, std::size_t k, bool keep_history = true);

/// nu'_k(u) = min(nu'_{k-1}(u), max/min over out-arcs of w + nu'_{k-1}(v)),
/// nu'_0 = 0: Player 1 may end the play before any move.
TruncatedValueTable min_ttpg(const Arena& a, std::size_t k, bool keep_history = true);

/// One step of either recursion from `prev`.
std::vector<Weight> ttpg_step(const Arena& a, TtpgKind kind, const std::vector<Weight>& prev);

/// k' = (|V|W - 2W + 1)|W1| + (|W0| - 1)|W0|W + 3 with W1, W0 the energy
/// winning regions of `a`. Can be below 1 on one-vertex arenas.
std::int64_t min_ttpg_bound(const Arena& a);

struct TtpgFixpoint
{
    EnergyFunction f;          ///< f^{nu'}: -nu' on W0, Top on W1
    std::size_t k_reached = 0; ///< least k >= 1 with f^{nu'_k} = f*
    std::int64_t k_bound = 0;  ///< k'

    /// Horizon by which agreement must be witnessed: max(k', 1).
    std::size_t k_limit() const { return static_cast<std::size_t>(std::max<std::int64_t>(k_bound, 1)); }
};

/// Iterates the Min-k recursion until nu'_k equals -f* on W0 (where it is
/// then stationary) and lies below -(|W0| - 1)W on W1. Throws std::logic_error if that
/// does not happen by max(k', 1).
TtpgFixpoint min_ttpg_fixpoint(const Arena& a);

/// Threshold construction: -nu(u) if nu(u) >= -(|W0| - 1)W, Top otherwise.
EnergyFunction threshold_energy(const Arena& a, const std::vector<Weight>& nu, std::size_t w0_size);

/// Checks every row of a full-history Min-k table against the proven
/// bounds: non-increasing columns, nu' <= 0, the [-(|W0|-1)W, 0] band and
/// nu' >= -f* on W0, nu' = -f* on W0 from row k' on, the divergence bound
/// on W1, and stop-is-gameover.
/// Returns one message per violation.
std::vector<std::string> audit_min_ttpg(const Arena& a, const TruncatedValueTable& t);

} // namespace mpg
