#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mpg/rational.hpp"

namespace mpg {

using VertexId = std::uint32_t;
using ArcId = std::uint32_t;
using Weight = std::int64_t;

inline constexpr VertexId kNoVertex = static_cast<VertexId>(-1);

enum class Player : std::uint8_t { Zero = 0, One = 1 };

struct Arc
{
    VertexId src;
    VertexId dst;
    Weight weight;

    friend bool operator==(const Arc&, const Arc&) = default;
};

struct VertexDecl
{
    std::string name;
    Player owner;

    friend bool operator==(const VertexDecl&, const VertexDecl&) = default;
};

/// Raised for malformed arena text. Line and column are 1-based; column 0
/// means the problem concerns the whole line.
class ParseError : public std::runtime_error
{
public:
    ParseError(const std::string& msg, std::size_t line, std::size_t column);

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

/// Structural violation of the arena invariants (dead end, duplicate arc, ...).
class ArenaError : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

/// Weighted game graph with vertices owned by Player 0 or Player 1.
///
/// Immutable once built. Vertices keep declaration order; arcs are stored in
/// canonical (src, dst) order so that the out-arcs of a vertex form a
/// contiguous ArcId range and ArcIds are deterministic. The scale records the
/// accumulated denominator of reweightings: energy levels of a reweighted
/// arena are expressed in units of 1/scale of the original weights.
class Arena
{
public:
    Arena() = default;

    /// Validates and builds. Throws ArenaError on dead ends, unknown
    /// endpoints, duplicate arcs or duplicate vertex names.
    static Arena build(std::vector<VertexDecl> vertices, std::vector<Arc> arcs, std::int64_t scale = 1);

    std::size_t num_vertices() const { return vertices_.size(); }
    std::size_t num_arcs() const { return arcs_.size(); }

    const std::string& name(VertexId v) const { return vertices_[v].name; }
    Player owner(VertexId v) const { return vertices_[v].owner; }
    const std::vector<VertexDecl>& vertices() const { return vertices_; }

    std::span<const Arc> arcs() const { return arcs_; }
    const Arc& arc(ArcId e) const { return arcs_[e]; }

    /// ArcIds [out_begin(v), out_end(v)) are the out-arcs of v.
    ArcId out_begin(VertexId v) const { return out_offset_[v]; }
    ArcId out_end(VertexId v) const { return out_offset_[v + 1]; }
    std::size_t out_degree(VertexId v) const { return out_end(v) - out_begin(v); }
    std::span<const Arc> out_arcs(VertexId v) const
    {
        return std::span<const Arc>(arcs_).subspan(out_begin(v), out_degree(v));
    }
    std::span<const ArcId> in_arcs(VertexId v) const
    {
        return std::span<const ArcId>(in_arcs_).subspan(in_offset_[v], in_offset_[v + 1] - in_offset_[v]);
    }

    /// W: the largest absolute arc weight.
    Weight max_abs_weight() const { return max_abs_weight_; }
    std::int64_t scale() const { return scale_; }

    std::optional<VertexId> find_vertex(std::string_view name) const;
    std::optional<ArcId> find_arc(VertexId src, VertexId dst) const;

    friend bool operator==(const Arena& a, const Arena& b)
    {
        return a.vertices_ == b.vertices_ && a.arcs_ == b.arcs_ && a.scale_ == b.scale_;
    }

private:
    std::vector<VertexDecl> vertices_;
    std::vector<Arc> arcs_;
    std::vector<ArcId> out_offset_;
    std::vector<ArcId> in_arcs_;
    std::vector<std::size_t> in_offset_;
    Weight max_abs_weight_ = 0;
    std::int64_t scale_ = 1;
};

/// Parses the line-based arena format:
///   # comment
///   v <id> <0|1>
///   e <src> <dst> <int>
/// Arcs may reference vertices declared later in the file.
Arena parse_arena(std::string_view text);

/// Reads and parses a file. Throws ParseError (line 0) if unreadable.
Arena load_arena(const std::string& path);

/// Canonical text: header comment, `v` lines in declaration order, `e` lines
/// sorted by (src, dst) declaration index.
std::string serialize_arena(const Arena& a);

/// Graphviz rendering for inspection only; never parsed back.
std::string arena_to_dot(const Arena& a);

/// Replaces every weight w by w*den - num, i.e. the weighting w - nu scaled by
/// den so it stays integral. The result's scale is a.scale() * den.
Arena reweight(const Arena& a, const Rational& nu);

/// Arena induced on a vertex subset (arcs with both endpoints inside).
/// Vertices keep their relative declaration order. Throws ArenaError if the
/// induced graph has a dead end.
Arena induced_subarena(const Arena& a, std::span<const VertexId> vertices);

/// Selection of Player-0 arcs kept in a subgame; Player-1 arcs are always kept.
class SubgameMask
{
public:
    SubgameMask() = default;

    static SubgameMask full(const Arena& a);

    bool retains(ArcId e) const { return retained_[e]; }
    std::size_t size() const { return retained_.size(); }

    /// Keeps, among the out-arcs of u, exactly those in `keep`.
    void restrict_vertex(const Arena& a, VertexId u, std::span<const ArcId> keep);
    void remove_arc(ArcId e) { retained_[e] = false; }

    /// Throws ArenaError unless the mask has one entry per arc, keeps every
    /// Player-1 arc and leaves each Player-0 vertex at least one arc.
    void validate(const Arena& a) const;

    const std::vector<bool>& bits() const { return retained_; }

    friend bool operator==(const SubgameMask&, const SubgameMask&) = default;

private:
    std::vector<bool> retained_;
};

/// Subgame with the arcs selected by m. Vertex set is unchanged.
Arena apply_mask(const Arena& a, const SubgameMask& m);

} // namespace mpg
