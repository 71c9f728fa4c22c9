#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mpg/arena.hpp"

namespace mpg {

using Level = std::int64_t;

/// Element of the bounded energy codomain {0, ..., K} u {Top}.
class EnergyValue
{
public:
    constexpr EnergyValue() = default;

    static constexpr EnergyValue finite(Level n) { return EnergyValue(n); }
    static constexpr EnergyValue top() { return EnergyValue(kTop); }

    constexpr bool is_top() const { return level_ == kTop; }
    /// Only meaningful when !is_top().
    constexpr Level level() const { return level_; }

    friend constexpr bool operator==(EnergyValue, EnergyValue) = default;
    friend constexpr std::strong_ordering operator<=>(EnergyValue a, EnergyValue b)
    {
        // kTop is the largest representable level, so numeric order works.
        return a.level_ <=> b.level_;
    }

    std::string str() const { return is_top() ? "top" : std::to_string(level_); }

private:
    static constexpr Level kTop = INT64_MAX;
    constexpr explicit EnergyValue(Level n) : level_(n) {}
    Level level_ = 0;
};

/// a (-) w in the codomain capped at K: Top stays Top, otherwise
/// max(a - w, 0) if that is at most K, else Top.
EnergyValue ominus(EnergyValue a, Weight w, Level cap);

/// Total map V -> {0..K} u {Top}.
class EnergyFunction
{
public:
    EnergyFunction() = default;
    EnergyFunction(std::size_t n, Level cap, EnergyValue init = EnergyValue::finite(0))
        : values_(n, init), cap_(cap)
    {
    }
    EnergyFunction(std::vector<EnergyValue> values, Level cap) : values_(std::move(values)), cap_(cap) {}

    std::size_t size() const { return values_.size(); }
    Level cap() const { return cap_; }

    EnergyValue operator[](VertexId v) const { return values_[v]; }
    EnergyValue& operator[](VertexId v) { return values_[v]; }
    const std::vector<EnergyValue>& values() const { return values_; }

    /// V_f: number of vertices with a finite level.
    std::size_t finite_count() const;
    bool all_finite() const { return finite_count() == size(); }

    /// Pointwise order.
    bool leq(const EnergyFunction& other) const;

    friend bool operator==(const EnergyFunction&, const EnergyFunction&) = default;

private:
    std::vector<EnergyValue> values_;
    Level cap_ = 0;
};

/// Cap K = (|V| - 1) * W of the arena.
Level energy_cap(const Arena& a);

/// f(u) >= f(v) (-) w(u,v).
bool is_compatible(const Arena& a, const EnergyFunction& f, ArcId e);

/// Every Player-0 vertex has some compatible out-arc and every Player-1
/// vertex has only compatible out-arcs.
bool is_sepm(const Arena& a, const EnergyFunction& f);

/// Out-arcs of u compatible with f.
std::vector<ArcId> compatible_arcs(const Arena& a, const EnergyFunction& f, VertexId u);

struct LiftStats
{
    std::uint64_t lifts = 0;
    std::vector<std::uint64_t> per_vertex;
};

struct SepmOptions
{
    /// Starting point; must lie pointwise below the least SEPM.
    const EnergyFunction* seed = nullptr;
    /// Defaults to energy_cap(arena).
    std::optional<Level> cap;
    LiftStats* stats = nullptr;
};

/// Least SEPM by worklist value iteration (FIFO, declaration order).
EnergyFunction least_sepm(const Arena& a, const SepmOptions& opts = {});

struct WinningRegions
{
    std::vector<VertexId> player0;
    std::vector<VertexId> player1;
    std::vector<bool> in_player0;
};

/// Player-0 energy winning region is V_{f*} for the least SEPM f*.
WinningRegions winning_regions(const Arena& a);
WinningRegions winning_regions(const EnergyFunction& least);

} // namespace mpg
