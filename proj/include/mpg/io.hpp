#pragma once

#include <json.hpp>

#include "mpg/arena.hpp"
#include "mpg/energy.hpp"
#include "mpg/lattice.hpp"
#include "mpg/potentials.hpp"
#include "mpg/rational.hpp"
#include "mpg/ttpg.hpp"
#include "mpg/values.hpp"

namespace mpg {

using Json = nlohmann::ordered_json;

Json rational_to_json(const Rational& r);
Rational rational_from_json(const Json& j);

/// {"cap": K, "scale": D, "values": {"<vertex>": int | "top"}}
Json energy_to_json(const Arena& a, const EnergyFunction& f);
EnergyFunction energy_from_json(const Arena& a, const Json& j);

/// {"values": {"<vertex>": {"num": int, "den": int}}}
Json values_to_json(const Arena& a, const ValueAssignment& vals);
ValueAssignment values_from_json(const Arena& a, const Json& j);

/// {"choice": {"<p0-vertex>": "<successor>"}}
Json strategy_to_json(const Arena& a, const PositionalStrategy& s);
PositionalStrategy strategy_from_json(const Arena& a, const Json& j);

/// Enumeration report of one value class. `a` is the class arena.
Json enum_report_json(const Arena& a, const EnumerationResult& r, const std::vector<DeltaBlock>& blocks);

/// {"kind": "plain"|"min", "k_max", "vertices": [...], "rows": [[...]]}
Json ttpg_table_json(const Arena& a, const TruncatedValueTable& t);
/// TSV: header "k" then vertex names, one line per row.
std::string ttpg_table_tsv(const Arena& a, const TruncatedValueTable& t);

/// Single-line text renderings used by the CLI.
std::string energy_to_text(const Arena& a, const EnergyFunction& f);
std::string strategy_to_text(const Arena& a, const PositionalStrategy& s);

} // namespace mpg
