#pragma once

#include <istream>
#include <string>

#include <json.hpp>

#include "copo/directoid.hpp"
#include "copo/dm_completion.hpp"
#include "copo/poset.hpp"
#include "copo/report.hpp"
#include "copo/residuation.hpp"

namespace copo {

/// Poset document:
///   {"elements": [...], "covers": [["x","y"], ...], "involution": {"x": "x'", ...}}
/// `covers` pairs mean x is covered by y; `involution` is optional.
/// Throws BadDocument on schema errors and the build_poset errors otherwise.
Poset poset_from_json(const nlohmann::json& doc);
Poset poset_from_string(const std::string& text);
Poset read_poset(std::istream& in);

/// Covers are emitted as the Hasse diagram; the involution in element order.
nlohmann::json poset_to_json(const Poset& p);

/// {"condition", "verdict", "witness": [names], "evidence": {label: [names]}, "note"}
nlohmann::json report_to_json(const CheckReport& r, const Poset& p);
/// Multi-line text with the witness and evidence sets.
std::string format_report(const CheckReport& r, const Poset& p);

std::string format_set(const Poset& p, const ElementSet& s);
nlohmann::json set_to_json(const Poset& p, const ElementSet& s);

/// Operation table as a JSON matrix of names, and as an aligned text
/// Cayley table.
nlohmann::json directoid_to_json(const Directoid& d);
std::string cayley_table(const Directoid& d);

/// {"variant", "odot": {"x,y": [...]}, "arrow": {...}}
nlohmann::json tables_to_json(const Poset& p, const ResiduationTables& t);

/// Completion as a poset document plus {"star": {name: name}}.
nlohmann::json completion_to_json(const Poset& p, const DMLattice& l);

/// Graphviz rendering: cover edges, the involution as dashed undirected
/// links.
std::string poset_to_dot(const Poset& p);

} // namespace copo
