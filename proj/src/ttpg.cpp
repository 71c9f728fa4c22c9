#include "mpg/ttpg.hpp"

#include <algorithm>
#include <stdexcept>

#include "mpg/checked.hpp"

namespace mpg {

namespace {

// Best one-move continuation: max over out-arcs for Player 0, min for Player 1.
Weight move_term(const Arena& a, const std::vector<Weight>& prev, VertexId u)
{
    const bool p0 = a.owner(u) == Player::Zero;
    Weight best = 0;
    bool first = true;
    for (const Arc& e : a.out_arcs(u)) {
        Weight x = checked_add(e.weight, prev[e.dst]);
        if (first || (p0 ? x > best : x < best)) best = x;
        first = false;
    }
    return best;
}

TruncatedValueTable iterate(const Arena& a, TtpgKind kind, std::size_t k, bool keep_history)
{
    std::vector<std::vector<Weight>> rows{std::vector<Weight>(a.num_vertices(), 0)};
    std::size_t first = 0;
    for (std::size_t i = 1; i <= k; ++i) {
        rows.push_back(ttpg_step(a, kind, rows.back()));
        if (!keep_history && rows.size() > 2) {
            rows.erase(rows.begin());
            ++first;
        }
    }
    return TruncatedValueTable(kind, k, first, std::move(rows));
}

} // namespace

std::vector<Weight> ttpg_step(const Arena& a, TtpgKind kind, const std::vector<Weight>& prev)
{
    std::vector<Weight> next(a.num_vertices());
    for (VertexId u = 0; u < a.num_vertices(); ++u) {
        Weight t = move_term(a, prev, u);
        next[u] = kind == TtpgKind::Plain ? t : std::min(prev[u], t);
    }
    return next;
}

TruncatedValueTable plain_ttpg(const Arena& a, std::size_t k, bool keep_history)
{
    return iterate(a, TtpgKind::Plain, k, keep_history);
}

TruncatedValueTable min_ttpg(const Arena& a, std::size_t k, bool keep_history)
{
    return iterate(a, TtpgKind::Min, k, keep_history);
}

std::int64_t min_ttpg_bound(const Arena& a)
{
    const WinningRegions r = winning_regions(a);
    const std::int64_t n = static_cast<std::int64_t>(a.num_vertices());
    const std::int64_t w = a.max_abs_weight();
    const std::int64_t w0 = static_cast<std::int64_t>(r.player0.size());
    const std::int64_t w1 = static_cast<std::int64_t>(r.player1.size());
    std::int64_t first = checked_mul(checked_add(checked_sub(checked_mul(n, w), checked_mul(2, w)), 1), w1);
    std::int64_t second = w0 == 0 ? 0 : checked_mul(checked_mul(w0 - 1, w0), w);
    return checked_add(checked_add(first, second), 3);
}

EnergyFunction threshold_energy(const Arena& a, const std::vector<Weight>& nu, std::size_t w0_size)
{
    const Weight floor_level = -checked_mul(static_cast<Weight>(w0_size) - 1, a.max_abs_weight());
    EnergyFunction f(a.num_vertices(), energy_cap(a));
    for (VertexId v = 0; v < a.num_vertices(); ++v) {
        f[v] = nu[v] >= floor_level ? EnergyValue::finite(-nu[v]) : EnergyValue::top();
    }
    return f;
}

TtpgFixpoint min_ttpg_fixpoint(const Arena& a)
{
    const EnergyFunction least = least_sepm(a);
    const WinningRegions reg = winning_regions(least);
    const std::int64_t bound = min_ttpg_bound(a);
    // Agreement needs at least one step to be witnessed; k' drops below 1
    // only on one-vertex arenas, where row 0 already agrees.
    const std::int64_t last = std::max<std::int64_t>(bound, 1);

    std::vector<Weight> prev(a.num_vertices(), 0);
    for (std::int64_t k = 1;; ++k) {
        // Columns are non-increasing and bounded below by -f* on W0, so once
        // they agree with -f* they stay there.
        std::vector<Weight> row = ttpg_step(a, TtpgKind::Min, prev);
        EnergyFunction f = threshold_energy(a, row, reg.player0.size());
        if (f == least) return {std::move(f), static_cast<std::size_t>(k), bound};
        if (k >= last)
            throw std::logic_error("Min-k-TTPG values do not match the least SEPM at k' = " + std::to_string(bound));
        prev = std::move(row);
    }
}

std::vector<std::string> audit_min_ttpg(const Arena& a, const TruncatedValueTable& t)
{
    if (t.kind() != TtpgKind::Min) throw std::invalid_argument("audit_min_ttpg needs a Min-k table");
    if (!t.full_history()) throw std::invalid_argument("audit_min_ttpg needs the full history");

    const EnergyFunction least = least_sepm(a);
    const WinningRegions reg = winning_regions(least);
    const Weight w = a.max_abs_weight();
    const auto w0 = static_cast<Weight>(reg.player0.size());
    const auto w1 = static_cast<Weight>(reg.player1.size());
    const Weight band = w0 == 0 ? 0 : -(w0 - 1) * w;
    const std::int64_t settle = std::max<std::int64_t>(min_ttpg_bound(a), 0);

    std::vector<std::string> out;
    auto fail = [&](std::size_t k, VertexId v, const std::string& what) {
        out.push_back("k=" + std::to_string(k) + " " + a.name(v) + ": " + what);
    };

    for (std::size_t k = 0; k <= t.k_max(); ++k) {
        const std::vector<Weight>& row = t.row(k);
        for (VertexId v = 0; v < a.num_vertices(); ++v) {
            const Weight x = row[v];
            if (k == 0 && x != 0) fail(k, v, "row 0 is not zero");
            if (x > 0) fail(k, v, "positive value " + std::to_string(x));
            if (reg.in_player0[v]) {
                if (x < band) fail(k, v, "below the W0 band: " + std::to_string(x));
                if (x < -least[v].level()) fail(k, v, "below -f*: " + std::to_string(x));
                if (static_cast<std::int64_t>(k) >= settle && x != -least[v].level())
                    fail(k, v, "differs from -f* at or after k'");
            } else if (w1 > 0) {
                const Weight lim = -static_cast<Weight>(k) / w1 + (w1 - 1) * w;
                if (x > lim) fail(k, v, "above the W1 divergence bound " + std::to_string(lim));
            }
            if (k == 0) continue;
            const std::vector<Weight>& prev = t.row(k - 1);
            if (x > prev[v]) fail(k, v, "increased from " + std::to_string(prev[v]));
            const Weight term = move_term(a, prev, v);
            if (x != std::min(prev[v], term)) fail(k, v, "does not satisfy the recursion");
            if (prev[v] < term && x != 0) fail(k, v, "stopping is preferred but the value is " + std::to_string(x));
        }
    }
    return out;
}

} // namespace mpg
