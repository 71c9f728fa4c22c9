#include "mpg/io.hpp"

#include <sstream>
#include <stdexcept>

namespace mpg {

namespace {

VertexId lookup(const Arena& a, const std::string& name)
{
    auto v = a.find_vertex(name);
    if (!v) throw std::invalid_argument("unknown vertex '" + name + "'");
    return *v;
}

} // namespace

Json rational_to_json(const Rational& r)
{
    return Json{{"num", r.num()}, {"den", r.den()}};
}

Rational rational_from_json(const Json& j)
{
    return Rational(j.at("num").get<std::int64_t>(), j.at("den").get<std::int64_t>());
}

Json energy_to_json(const Arena& a, const EnergyFunction& f)
{
    Json values = Json::object();
    for (VertexId v = 0; v < a.num_vertices(); ++v) {
        if (f[v].is_top())
            values[a.name(v)] = "top";
        else
            values[a.name(v)] = f[v].level();
    }
    return Json{{"cap", f.cap()}, {"scale", a.scale()}, {"values", std::move(values)}};
}

EnergyFunction energy_from_json(const Arena& a, const Json& j)
{
    EnergyFunction f(a.num_vertices(), j.at("cap").get<Level>());
    const Json& values = j.at("values");
    if (values.size() != a.num_vertices()) throw std::invalid_argument("energy function does not cover the arena");
    for (const auto& [name, x] : values.items()) {
        VertexId v = lookup(a, name);
        if (x.is_string()) {
            if (x.get<std::string>() != "top") throw std::invalid_argument("bad energy level for '" + name + "'");
            f[v] = EnergyValue::top();
        } else {
            f[v] = EnergyValue::finite(x.get<Level>());
        }
    }
    return f;
}

Json values_to_json(const Arena& a, const ValueAssignment& vals)
{
    Json values = Json::object();
    for (VertexId v = 0; v < a.num_vertices(); ++v) values[a.name(v)] = rational_to_json(vals[v]);
    return Json{{"values", std::move(values)}};
}

ValueAssignment values_from_json(const Arena& a, const Json& j)
{
    ValueAssignment vals(a.num_vertices());
    const Json& values = j.at("values");
    if (values.size() != a.num_vertices()) throw std::invalid_argument("value assignment does not cover the arena");
    for (const auto& [name, x] : values.items()) vals[lookup(a, name)] = rational_from_json(x);
    return vals;
}

Json strategy_to_json(const Arena& a, const PositionalStrategy& s)
{
    Json choice = Json::object();
    for (VertexId u = 0; u < a.num_vertices(); ++u) {
        if (a.owner(u) == Player::Zero) choice[a.name(u)] = a.name(s[u]);
    }
    return Json{{"choice", std::move(choice)}};
}

PositionalStrategy strategy_from_json(const Arena& a, const Json& j)
{
    PositionalStrategy s(a.num_vertices());
    for (const auto& [name, succ] : j.at("choice").items()) s.set(lookup(a, name), lookup(a, succ.get<std::string>()));
    if (!s.valid_for(a)) throw std::invalid_argument("not a positional strategy of this arena");
    return s;
}

Json enum_report_json(const Arena& a, const EnumerationResult& r, const std::vector<DeltaBlock>& blocks)
{
    Json sepms = Json::array();
    for (const EnergyFunction& f : r.energy.elements) sepms.push_back(energy_to_json(r.reweighted, f));

    Json subgames = Json::array();
    for (const BasicSubgame& b : r.subgames.nodes) {
        Json removed = Json::array();
        for (ArcId e : b.removed_arcs) {
            const Arc& arc = r.reweighted.arc(e);
            removed.push_back(Json::array({a.name(arc.src), a.name(arc.dst)}));
        }
        subgames.push_back(Json{{"id", b.id},
                                {"removed_arcs", std::move(removed)},
                                {"least_sepm_id", b.sepm_id},
                                {"parent_ids", b.parent_ids}});
    }

    Json decomposition = Json::array();
    for (const DeltaBlock& d : blocks) {
        Json strategies = Json::array();
        for (const PositionalStrategy& s : d.strategies) strategies.push_back(strategy_to_json(a, s));
        decomposition.push_back(Json{{"sepm_id", d.sepm_id}, {"count", d.count}, {"strategies", std::move(strategies)}});
    }

    return Json{{"nu", rational_to_json(r.nu)},
                {"extremal_sepms", std::move(sepms)},
                {"basic_subgames", std::move(subgames)},
                {"decomposition", std::move(decomposition)},
                {"degenerate", r.degenerate()}};
}

Json ttpg_table_json(const Arena& a, const TruncatedValueTable& t)
{
    Json vertices = Json::array();
    for (VertexId v = 0; v < a.num_vertices(); ++v) vertices.push_back(a.name(v));
    Json rows = Json::array();
    for (const auto& row : t.rows()) rows.push_back(row);
    return Json{{"kind", t.kind() == TtpgKind::Plain ? "plain" : "min"},
                {"k_max", t.k_max()},
                {"first_k", t.first_k()},
                {"vertices", std::move(vertices)},
                {"rows", std::move(rows)}};
}

std::string ttpg_table_tsv(const Arena& a, const TruncatedValueTable& t)
{
    std::ostringstream os;
    os << 'k';
    for (VertexId v = 0; v < a.num_vertices(); ++v) os << '\t' << a.name(v);
    os << '\n';
    for (std::size_t i = 0; i < t.rows().size(); ++i) {
        os << t.first_k() + i;
        for (Weight x : t.rows()[i]) os << '\t' << x;
        os << '\n';
    }
    return os.str();
}

std::string energy_to_text(const Arena& a, const EnergyFunction& f)
{
    std::string out;
    for (VertexId v = 0; v < a.num_vertices(); ++v) {
        if (v > 0) out += ' ';
        out += a.name(v) + '=' + f[v].str();
    }
    return out;
}

std::string strategy_to_text(const Arena& a, const PositionalStrategy& s)
{
    std::string out;
    for (VertexId u = 0; u < a.num_vertices(); ++u) {
        if (a.owner(u) != Player::Zero) continue;
        if (!out.empty()) out += ' ';
        out += a.name(u) + "->" + a.name(s[u]);
    }
    return out;
}

} // namespace mpg
