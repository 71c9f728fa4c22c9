#include "mpg/arena.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "mpg/checked.hpp"

namespace mpg {

ParseError::ParseError(const std::string& msg, std::size_t line, std::size_t column)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg),
      line_(line), column_(column)
{
}

Arena Arena::build(std::vector<VertexDecl> vertices, std::vector<Arc> arcs, std::int64_t scale)
{
    if (vertices.empty()) throw ArenaError("arena has no vertices");
    if (scale < 1) throw ArenaError("arena scale must be positive");

    std::unordered_map<std::string, VertexId> seen;
    for (VertexId v = 0; v < vertices.size(); ++v) {
        if (!seen.emplace(vertices[v].name, v).second)
            throw ArenaError("duplicate vertex '" + vertices[v].name + "'");
    }
    const auto n = static_cast<VertexId>(vertices.size());
    for (const Arc& e : arcs) {
        if (e.src >= n || e.dst >= n) throw ArenaError("arc endpoint out of range");
    }

    std::sort(arcs.begin(), arcs.end(), [](const Arc& x, const Arc& y) {
        return std::tie(x.src, x.dst) < std::tie(y.src, y.dst);
    });
    for (std::size_t i = 1; i < arcs.size(); ++i) {
        if (arcs[i].src == arcs[i - 1].src && arcs[i].dst == arcs[i - 1].dst)
            throw ArenaError("duplicate arc (" + vertices[arcs[i].src].name + ", " + vertices[arcs[i].dst].name + ")");
    }

    Arena a;
    a.vertices_ = std::move(vertices);
    a.arcs_ = std::move(arcs);
    a.scale_ = scale;

    a.out_offset_.assign(n + 1, 0);
    std::vector<std::size_t> indeg(n, 0);
    for (const Arc& e : a.arcs_) {
        ++a.out_offset_[e.src + 1];
        ++indeg[e.dst];
        Weight mag = e.weight < 0 ? checked_neg(e.weight) : e.weight;
        a.max_abs_weight_ = std::max(a.max_abs_weight_, mag);
    }
    for (VertexId v = 0; v < n; ++v) {
        if (a.out_offset_[v + 1] == 0) throw ArenaError("vertex '" + a.vertices_[v].name + "' has no outgoing arc");
        a.out_offset_[v + 1] += a.out_offset_[v];
    }

    a.in_offset_.assign(n + 1, 0);
    for (VertexId v = 0; v < n; ++v) a.in_offset_[v + 1] = a.in_offset_[v] + indeg[v];
    a.in_arcs_.resize(a.arcs_.size());
    std::vector<std::size_t> fill(a.in_offset_.begin(), a.in_offset_.end() - 1);
    for (ArcId e = 0; e < a.arcs_.size(); ++e) a.in_arcs_[fill[a.arcs_[e].dst]++] = e;
    return a;
}

std::optional<VertexId> Arena::find_vertex(std::string_view name) const
{
    for (VertexId v = 0; v < vertices_.size(); ++v) {
        if (vertices_[v].name == name) return v;
    }
    return std::nullopt;
}

std::optional<ArcId> Arena::find_arc(VertexId src, VertexId dst) const
{
    auto first = arcs_.begin() + out_begin(src);
    auto last = arcs_.begin() + out_end(src);
    auto it = std::lower_bound(first, last, dst, [](const Arc& e, VertexId d) { return e.dst < d; });
    if (it == last || it->dst != dst) return std::nullopt;
    return static_cast<ArcId>(it - arcs_.begin());
}

namespace {

struct Token
{
    std::string_view text;
    std::size_t column;
};

std::vector<Token> tokenize(std::string_view line)
{
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        if (i >= line.size()) break;
        std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
        out.push_back({line.substr(start, i - start), start + 1});
    }
    return out;
}

bool valid_id(std::string_view id)
{
    if (id.empty()) return false;
    return std::all_of(id.begin(), id.end(), [](char c) {
        return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
    });
}

struct PendingArc
{
    Token src;
    Token dst;
    Weight weight;
    std::size_t line;
};

} // namespace

Arena parse_arena(std::string_view text)
{
    std::vector<VertexDecl> vertices;
    std::vector<std::size_t> vertex_line;
    std::unordered_map<std::string, VertexId> index;
    std::vector<PendingArc> pending;

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t nl = text.find('\n', pos);
        std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        ++line_no;
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;

        auto toks = tokenize(line);
        if (toks.empty() || toks[0].text.front() == '#') continue;

        const Token& kind = toks[0];
        if (kind.text == "v") {
            if (toks.size() != 3) throw ParseError("expected 'v <id> <0|1>'", line_no, kind.column);
            if (!valid_id(toks[1].text)) throw ParseError("invalid vertex id", line_no, toks[1].column);
            if (toks[2].text != "0" && toks[2].text != "1")
                throw ParseError("owner must be 0 or 1", line_no, toks[2].column);
            std::string id(toks[1].text);
            if (index.count(id)) throw ParseError("duplicate vertex '" + id + "'", line_no, toks[1].column);
            index.emplace(id, static_cast<VertexId>(vertices.size()));
            vertices.push_back({id, toks[2].text == "0" ? Player::Zero : Player::One});
            vertex_line.push_back(line_no);
        } else if (kind.text == "e") {
            if (toks.size() != 4) throw ParseError("expected 'e <src> <dst> <int>'", line_no, kind.column);
            for (int i = 1; i <= 2; ++i) {
                if (!valid_id(toks[i].text)) throw ParseError("invalid vertex id", line_no, toks[i].column);
            }
            Weight w = 0;
            std::string_view wt = toks[3].text;
            const char* begin = wt.data();
            if (!wt.empty() && wt.front() == '+') ++begin;
            auto [ptr, ec] = std::from_chars(begin, wt.data() + wt.size(), w);
            if (ec == std::errc::result_out_of_range)
                throw ParseError("weight out of 64-bit range", line_no, toks[3].column);
            if (ec != std::errc() || ptr != wt.data() + wt.size() || begin == wt.data() + wt.size())
                throw ParseError("weight must be an integer", line_no, toks[3].column);
            pending.push_back({toks[1], toks[2], w, line_no});
        } else {
            throw ParseError("unknown directive '" + std::string(kind.text) + "'", line_no, kind.column);
        }
    }

    if (vertices.empty()) throw ParseError("arena declares no vertices", line_no, 0);

    std::vector<Arc> arcs;
    arcs.reserve(pending.size());
    std::vector<std::size_t> arc_line;
    for (const PendingArc& p : pending) {
        auto s = index.find(std::string(p.src.text));
        if (s == index.end()) throw ParseError("unknown vertex '" + std::string(p.src.text) + "'", p.line, p.src.column);
        auto d = index.find(std::string(p.dst.text));
        if (d == index.end()) throw ParseError("unknown vertex '" + std::string(p.dst.text) + "'", p.line, p.dst.column);
        arcs.push_back({s->second, d->second, p.weight});
    }

    // Report structural problems against the offending source line.
    {
        std::vector<std::pair<std::pair<VertexId, VertexId>, std::size_t>> keys;
        for (std::size_t i = 0; i < arcs.size(); ++i) keys.push_back({{arcs[i].src, arcs[i].dst}, pending[i].line});
        std::stable_sort(keys.begin(), keys.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
        for (std::size_t i = 1; i < keys.size(); ++i) {
            if (keys[i].first == keys[i - 1].first)
                throw ParseError("duplicate arc (" + vertices[keys[i].first.first].name + ", " +
                                     vertices[keys[i].first.second].name + ")",
                                 keys[i].second, 1);
        }
        std::vector<bool> has_out(vertices.size(), false);
        for (const Arc& e : arcs) has_out[e.src] = true;
        for (VertexId v = 0; v < vertices.size(); ++v) {
            if (!has_out[v])
                throw ParseError("dead end: vertex '" + vertices[v].name + "' has no outgoing arc", vertex_line[v], 0);
        }
    }

    return Arena::build(std::move(vertices), std::move(arcs));
}

Arena load_arena(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path + "'", 0, 0);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_arena(ss.str());
}

std::string serialize_arena(const Arena& a)
{
    std::ostringstream out;
    out << "# arena: " << a.num_vertices() << " vertices, " << a.num_arcs() << " arcs\n";
    for (const VertexDecl& v : a.vertices()) out << "v " << v.name << ' ' << (v.owner == Player::Zero ? 0 : 1) << '\n';
    for (const Arc& e : a.arcs()) out << "e " << a.name(e.src) << ' ' << a.name(e.dst) << ' ' << e.weight << '\n';
    return out.str();
}

std::string arena_to_dot(const Arena& a)
{
    std::ostringstream out;
    out << "digraph arena {\n";
    for (const VertexDecl& v : a.vertices()) {
        out << "  \"" << v.name << "\" [shape=" << (v.owner == Player::Zero ? "circle" : "box") << "];\n";
    }
    for (const Arc& e : a.arcs()) {
        out << "  \"" << a.name(e.src) << "\" -> \"" << a.name(e.dst) << "\" [label=\"" << e.weight << "\"];\n";
    }
    out << "}\n";
    return out.str();
}

Arena reweight(const Arena& a, const Rational& nu)
{
    std::vector<Arc> arcs(a.arcs().begin(), a.arcs().end());
    for (Arc& e : arcs) e.weight = checked_sub(checked_mul(e.weight, nu.den()), nu.num());
    return Arena::build(a.vertices(), std::move(arcs), checked_mul(a.scale(), nu.den()));
}

Arena induced_subarena(const Arena& a, std::span<const VertexId> vertices)
{
    std::vector<VertexId> sorted(vertices.begin(), vertices.end());
    std::sort(sorted.begin(), sorted.end());
    std::vector<VertexId> local(a.num_vertices(), kNoVertex);
    std::vector<VertexDecl> decls;
    for (VertexId v : sorted) {
        local[v] = static_cast<VertexId>(decls.size());
        decls.push_back(a.vertices()[v]);
    }
    std::vector<Arc> arcs;
    for (const Arc& e : a.arcs()) {
        if (local[e.src] != kNoVertex && local[e.dst] != kNoVertex) arcs.push_back({local[e.src], local[e.dst], e.weight});
    }
    return Arena::build(std::move(decls), std::move(arcs), a.scale());
}

SubgameMask SubgameMask::full(const Arena& a)
{
    SubgameMask m;
    m.retained_.assign(a.num_arcs(), true);
    return m;
}

void SubgameMask::restrict_vertex(const Arena& a, VertexId u, std::span<const ArcId> keep)
{
    for (ArcId e = a.out_begin(u); e < a.out_end(u); ++e) retained_[e] = false;
    for (ArcId e : keep) {
        if (a.arc(e).src != u) throw ArenaError("restrict_vertex: arc does not leave the vertex");
        retained_[e] = true;
    }
}

void SubgameMask::validate(const Arena& a) const
{
    if (retained_.size() != a.num_arcs()) throw ArenaError("mask size does not match arena");
    for (VertexId v = 0; v < a.num_vertices(); ++v) {
        std::size_t kept = 0;
        for (ArcId e = a.out_begin(v); e < a.out_end(v); ++e) {
            if (retained_[e]) {
                ++kept;
            } else if (a.owner(v) == Player::One) {
                throw ArenaError("mask removes an arc of Player-1 vertex '" + a.name(v) + "'");
            }
        }
        if (kept == 0) throw ArenaError("mask leaves vertex '" + a.name(v) + "' without outgoing arcs");
    }
}

Arena apply_mask(const Arena& a, const SubgameMask& m)
{
    m.validate(a);
    std::vector<Arc> arcs;
    arcs.reserve(a.num_arcs());
    for (ArcId e = 0; e < a.num_arcs(); ++e) {
        if (m.retains(e)) arcs.push_back(a.arc(e));
    }
    return Arena::build(a.vertices(), std::move(arcs), a.scale());
}

} // namespace mpg
