#include "copo/json_io.hpp"

#include <algorithm>
#include <iterator>
#include <sstream>

namespace copo {

using nlohmann::json;

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::BadDocument, what); }

std::string as_name(const json& v, const char* where) {
  if (!v.is_string()) bad(std::string(where) + " entries must be strings");
  return v.get<std::string>();
}

} // namespace

Poset poset_from_json(const json& doc) {
  if (!doc.is_object()) bad("poset document must be a JSON object");
  if (!doc.contains("elements") || !doc["elements"].is_array()) bad("missing \"elements\" array");
  std::vector<std::string> elements;
  for (const auto& e : doc["elements"]) elements.push_back(as_name(e, "elements"));

  std::vector<NamePair> covers;
  if (doc.contains("covers")) {
    if (!doc["covers"].is_array()) bad("\"covers\" must be an array");
    for (const auto& c : doc["covers"]) {
      if (!c.is_array() || c.size() != 2) bad("each cover must be a pair [lower, upper]");
      covers.emplace_back(as_name(c[0], "covers"), as_name(c[1], "covers"));
    }
  }

  std::optional<NameMap> inv;
  if (doc.contains("involution") && !doc["involution"].is_null()) {
    if (!doc["involution"].is_object()) bad("\"involution\" must be an object");
    NameMap m;
    for (const auto& [k, v] : doc["involution"].items()) m.emplace(k, as_name(v, "involution"));
    inv = std::move(m);
  }
  return build_poset(elements, covers, inv);
}

Poset poset_from_string(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    bad(std::string("malformed JSON: ") + e.what());
  }
  return poset_from_json(doc);
}

Poset read_poset(std::istream& in) {
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return poset_from_string(text);
}

json poset_to_json(const Poset& p) {
  json doc;
  doc["elements"] = p.names();
  json covers = json::array();
  for (auto [x, y] : p.covers()) covers.push_back({p.name(x), p.name(y)});
  doc["covers"] = covers;
  if (p.has_involution()) {
    // ordered_json would keep element order; a plain object sorts keys, which
    // is stable and all we need
    json inv = json::object();
    for (Element x = 0; x < p.size(); ++x) inv[p.name(x)] = p.name(p.inv(x));
    doc["involution"] = inv;
  }
  return doc;
}

json set_to_json(const Poset& p, const ElementSet& s) {
  json out = json::array();
  s.for_each([&](Element x) { out.push_back(p.name(x)); });
  return out;
}

std::string format_set(const Poset& p, const ElementSet& s) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](Element x) {
    if (!first) out += ", ";
    out += p.name(x);
    first = false;
  });
  return out + "}";
}

json report_to_json(const CheckReport& r, const Poset& p) {
  json out;
  out["condition"] = r.condition;
  out["verdict"] = std::string(to_string(r.verdict));
  json w = json::array();
  for (Element x : r.witness) w.push_back(x < p.size() ? p.name(x) : std::to_string(x));
  out["witness"] = w;
  json ev = json::object();
  for (const auto& e : r.evidence) ev[e.label] = set_to_json(p, e.members);
  out["evidence"] = ev;
  if (!r.note.empty()) out["note"] = r.note;
  return out;
}

std::string format_report(const CheckReport& r, const Poset& p) {
  std::ostringstream os;
  os << r.condition << ": " << to_string(r.verdict);
  if (!r.witness.empty()) {
    os << "  witness (";
    for (std::size_t i = 0; i < r.witness.size(); ++i) {
      if (i) os << ", ";
      os << (r.witness[i] < p.size() ? p.name(r.witness[i]) : std::to_string(r.witness[i]));
    }
    os << ")";
  }
  if (!r.note.empty()) os << "  [" << r.note << "]";
  os << "\n";
  for (const auto& e : r.evidence) os << "    " << e.label << " = " << format_set(p, e.members) << "\n";
  return os.str();
}

json directoid_to_json(const Directoid& d) {
  json out;
  out["elements"] = d.names();
  json rows = json::array();
  for (Element x = 0; x < d.size(); ++x) {
    json row = json::array();
    for (Element y = 0; y < d.size(); ++y) row.push_back(d.name(d.meet(x, y)));
    rows.push_back(row);
  }
  out["meet"] = rows;
  return out;
}

std::string cayley_table(const Directoid& d) {
  std::size_t width = 1;
  for (const auto& n : d.names()) width = std::max(width, n.size());
  auto cell = [&](const std::string& s) { return s + std::string(width - s.size() + 1, ' '); };
  std::ostringstream os;
  os << cell("^") << "| ";
  for (const auto& n : d.names()) os << cell(n);
  os << "\n" << std::string(width + 1, '-') << "+" << std::string((width + 1) * d.size() + 1, '-') << "\n";
  for (Element x = 0; x < d.size(); ++x) {
    os << cell(d.name(x)) << "| ";
    for (Element y = 0; y < d.size(); ++y) os << cell(d.name(d.meet(x, y)));
    os << "\n";
  }
  return os.str();
}

json tables_to_json(const Poset& p, const ResiduationTables& t) {
  json out;
  out["variant"] = std::string(to_string(t.variant));
  json od = json::object();
  json ar = json::object();
  for (Element x = 0; x < t.n; ++x) {
    for (Element y = 0; y < t.n; ++y) {
      const std::string key = p.name(x) + "," + p.name(y);
      od[key] = set_to_json(p, t.conj(x, y));
      ar[key] = set_to_json(p, t.impl(x, y));
    }
  }
  out["odot"] = od;
  out["arrow"] = ar;
  return out;
}

json completion_to_json(const Poset& p, const DMLattice& l) {
  const Poset lp = lattice_as_poset(p, l);
  json out = poset_to_json(lp);
  json star = json::object();
  for (std::size_t i = 0; i < l.size(); ++i) star[lp.name(static_cast<Element>(i))] = lp.name(static_cast<Element>(l.star[i]));
  out["star"] = star;
  json emb = json::object();
  for (Element x = 0; x < p.size(); ++x) emb[p.name(x)] = lp.name(static_cast<Element>(l.embed_map[x]));
  out["embedding"] = emb;
  return out;
}

std::string poset_to_dot(const Poset& p) {
  auto quote = [](const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
      if (c == '"' || c == '\\') out += '\\';
      out += c;
    }
    return out + "\"";
  };
  std::ostringstream os;
  os << "digraph poset {\n  rankdir=BT;\n";
  for (const auto& n : p.names()) os << "  " << quote(n) << ";\n";
  for (auto [x, y] : p.covers()) os << "  " << quote(p.name(x)) << " -> " << quote(p.name(y)) << ";\n";
  if (p.has_involution()) {
    for (Element x = 0; x < p.size(); ++x) {
      const Element y = p.inv(x);
      if (x < y)
        os << "  " << quote(p.name(x)) << " -> " << quote(p.name(y))
           << " [style=dashed, dir=none, constraint=false];\n";
    }
  }
  os << "}\n";
  return os.str();
}

} // namespace copo
