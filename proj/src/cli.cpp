#include "copo/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "copo/corpus.hpp"
#include "copo/directoid.hpp"
#include "copo/dm_completion.hpp"
#include "copo/json_io.hpp"
#include "copo/properties.hpp"
#include "copo/residuation.hpp"

namespace copo {

using nlohmann::json;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Poset load(const std::string& path, std::istream& in) {
  if (path.empty() || path == "-") return read_poset(in);
  std::ifstream f(path);
  if (!f) throw Error(ErrorKind::BadDocument, "cannot open " + path);
  return read_poset(f);
}

PropertyId property_arg(const std::string& s) {
  if (auto id = parse_property(s)) return *id;
  throw UsageError("unknown property: " + s);
}

// Involution-dependent checks on a poset without a usable involution are
// reported as not applicable rather than aborting the run.
CheckReport guarded(const std::string& name, const std::function<CheckReport()>& f) {
  try {
    return f();
  } catch (const Error& e) {
    switch (e.kind()) {
    case ErrorKind::NoInvolution:
    case ErrorKind::NotAntitone:
    case ErrorKind::NotBounded:
    case ErrorKind::TooSmall:
    case ErrorKind::NotDistributive:
      return CheckReport::not_applicable(name, e.what());
    default:
      throw;
    }
  }
}

void print_reports(std::ostream& out, const Poset& p, const std::vector<CheckReport>& reports, bool as_json,
                   json extra = json::object()) {
  if (as_json) {
    json arr = json::array();
    for (const auto& r : reports) arr.push_back(report_to_json(r, p));
    extra["reports"] = arr;
    out << extra.dump(2) << "\n";
  } else {
    for (const auto& r : reports) out << format_report(r, p);
  }
}

int status_of(const std::vector<CheckReport>& reports) {
  return std::any_of(reports.begin(), reports.end(), [](const CheckReport& r) { return r.fails(); }) ? kExitFailed
                                                                                                      : kExitOk;
}

std::string set_grid(const Poset& p, const ResiduationTables& t, bool conj) {
  const std::size_t n = t.n;
  std::vector<std::vector<std::string>> cells(n + 1, std::vector<std::string>(n + 1));
  cells[0][0] = conj ? "(.)" : "->";
  for (Element x = 0; x < n; ++x) {
    cells[0][x + 1] = p.name(x);
    cells[x + 1][0] = p.name(x);
    for (Element y = 0; y < n; ++y) cells[x + 1][y + 1] = format_set(p, conj ? t.conj(x, y) : t.impl(x, y));
  }
  std::vector<std::size_t> width(n + 1, 0);
  for (const auto& row : cells)
    for (std::size_t j = 0; j <= n; ++j) width[j] = std::max(width[j], row[j].size());
  std::ostringstream os;
  for (const auto& row : cells) {
    for (std::size_t j = 0; j <= n; ++j) {
      os << row[j];
      if (j < n) os << std::string(width[j] - row[j].size() + 2, ' ');
    }
    os << "\n";
  }
  return os.str();
}

json family_to_json(const FamilyResult& f, bool poset_verdict) {
  json out;
  out["method"] = f.method == FamilyResult::Method::Symbolic ? "symbolic" : "enumerated";
  out["family_size"] = f.family_size;
  if (f.method == FamilyResult::Method::Enumerated) {
    out["holding"] = f.holding;
    out["failing"] = f.failing;
  }
  out["uniform"] = f.uniform ? json(*f.uniform) : json(nullptr);
  out["poset"] = poset_verdict;
  return out;
}

// --- commands -------------------------------------------------------------

int cmd_validate(const Poset& p, bool as_json, bool dot, std::ostream& out) {
  if (dot) {
    out << poset_to_dot(p);
    return kExitOk;
  }
  const std::string inv = !p.has_involution() ? "none" : p.antitone() ? "antitone" : "not-antitone";
  if (as_json) {
    json j;
    j["valid"] = true;
    j["elements"] = p.size();
    j["covers"] = p.covers().size();
    j["involution"] = inv;
    out << j.dump(2) << "\n";
  } else {
    out << "valid: " << p.size() << " elements, " << p.covers().size() << " covers, involution " << inv << "\n";
  }
  return kExitOk;
}

int cmd_check(const Poset& p, const std::vector<std::string>& props, bool all, bool as_json, std::ostream& out) {
  std::vector<PropertyId> ids;
  if (all) ids.assign(kAllProperties.begin(), kAllProperties.end());
  for (const auto& s : props) ids.push_back(property_arg(s));
  if (ids.empty()) throw UsageError("check needs --property or --all");
  std::vector<CheckReport> reports;
  for (PropertyId id : ids)
    reports.push_back(guarded(std::string(to_string(id)), [&] {
      CheckReport r = check_property(p, id);
      // sub-condition ids stay in the report; lead with the property name
      if (r.condition != to_string(id)) r.condition = std::string(to_string(id)) + ": " + r.condition;
      return r;
    }));
  print_reports(out, p, reports, as_json);
  return status_of(reports);
}

std::vector<CheckReport> directoid_reports(const Directoid& d) {
  std::vector<CheckReport> reports{check_directoid_axioms(d)};
  reports.push_back(guarded("involution-identities", [&] { return check_involution_identities(d); }));
  reports.push_back(guarded("consistency-implications", [&] { return check_consistency_implications(d); }));
  reports.push_back(guarded("distributivity-implication", [&] { return check_distributivity_implication(d); }));
  return reports;
}

int cmd_directoid(const Poset& p, const std::string& policy, bool all, std::uint64_t budget, bool as_json,
                  std::ostream& out) {
  if (all) {
    const FamilyResult cons = consistency_over_all_directoids(p, budget);
    const FamilyResult dist = distributivity_over_all_directoids(p, budget);
    const bool pc = guarded("consistent", [&] { return is_consistent(p); }).holds();
    const bool pd = is_distributive(p).holds();
    if (as_json) {
      json j;
      j["family_size"] = cons.family_size;
      j["consistency"] = family_to_json(cons, pc);
      j["distributivity"] = family_to_json(dist, pd);
      out << j.dump(2) << "\n";
    } else {
      auto line = [&](const char* what, const FamilyResult& f, bool pv) {
        out << what << ": " << (f.uniform ? (*f.uniform ? "holds" : "fails") : "mixed") << " in all "
            << f.family_size << " directoids ("
            << (f.method == FamilyResult::Method::Symbolic ? "symbolic" : "enumerated") << "), poset "
            << (pv ? "holds" : "fails") << "\n";
      };
      line("consistency", cons, pc);
      line("distributivity", dist, pd);
    }
    return cons.uniform == std::optional<bool>(true) && dist.uniform == std::optional<bool>(true) ? kExitOk
                                                                                                   : kExitFailed;
  }
  ChoicePolicy pol;
  if (policy == "canonical")
    pol = ChoicePolicy::canonical();
  else if (policy == "cone-min")
    pol = ChoicePolicy::lowest_of_cone();
  else
    throw UsageError("unknown policy: " + policy);
  const Directoid d = assign_directoid(p, pol);
  const auto reports = directoid_reports(d);
  if (as_json) {
    json extra;
    extra["directoid"] = directoid_to_json(d);
    print_reports(out, p, reports, true, extra);
  } else {
    out << cayley_table(d) << "\n";
    print_reports(out, p, reports, false);
  }
  return status_of(reports);
}

int cmd_residuate(const Poset& p, const std::string& variant_s, bool verify, bool as_json, std::ostream& out) {
  const auto variant = parse_variant(variant_s);
  if (!variant) throw UsageError("unknown variant: " + variant_s);
  const ResiduationTables t = build_tables(p, *variant);
  json j = as_json ? tables_to_json(p, t) : json::object();
  if (!as_json) out << set_grid(p, t, true) << "\n" << set_grid(p, t, false);

  if (!verify) {
    if (as_json) out << j.dump(2) << "\n";
    return kExitOk;
  }
  const ResiduationCertificate cert = certify_residuation(p, *variant);
  // conclusions are checked even when a hypothesis fails, so that a failing
  // instance shows its counterexample
  std::vector<CheckReport> conclusions{check_unit(p, t), check_commutativity(t), check_adjointness(p, t)};
  bool failed = cert.verdict.fails();
  for (const auto& r : conclusions) {
    const bool required = r.condition != "commutativity" || *variant == OperatorVariant::Meet;
    failed = failed || (required && r.fails());
  }
  if (as_json) {
    json c;
    c["verdict"] = report_to_json(cert.verdict, p);
    json hyp = json::array();
    for (const auto& h : cert.hypotheses) hyp.push_back(report_to_json(h, p));
    c["hypotheses"] = hyp;
    for (const auto& r : conclusions) c[r.condition] = report_to_json(r, p);
    c["triples_checked"] = p.size() * p.size() * p.size();
    j["certificate"] = c;
    out << j.dump(2) << "\n";
  } else {
    out << "\n";
    for (const auto& h : cert.hypotheses) out << "hypothesis " << format_report(h, p);
    for (const auto& r : conclusions) out << format_report(r, p);
    out << "certificate " << format_report(cert.verdict, p);
  }
  return failed ? kExitFailed : kExitOk;
}

int cmd_complete(const Poset& p, bool verify, bool dot, std::ostream& out) {
  const DMLattice l = dm_lattice(p);
  if (dot) {
    out << poset_to_dot(lattice_as_poset(p, l));
    return kExitOk;
  }
  json j = completion_to_json(p, l);
  int status = kExitOk;
  if (verify) {
    const CompletionConsistency c = check_completion_consistency(p);
    const Poset lp = lattice_as_poset(p, l);
    json v;
    v["poset"] = report_to_json(c.poset_report, p);
    v["completion"] = report_to_json(c.lattice_report, lp);
    v["verdict"] = std::string(to_string(c.verdict.verdict));
    j["consistency_preserved"] = v;
    if (c.verdict.fails()) status = kExitFailed;
  }
  out << j.dump(2) << "\n";
  return status;
}

struct EnumerateArgs {
  std::size_t max_size = kDefaultMaxSize;
  std::size_t min_size = 2;
  std::vector<std::string> require, forbid;
  bool labeled = false;
  bool allow_large = false;
  bool first = false;
  bool bare = false;
  bool count_only = false;
};

int cmd_enumerate(const EnumerateArgs& a, std::ostream& out, std::ostream& err) {
  EnumerationQuery q;
  q.max_size = a.max_size;
  q.min_size = a.min_size;
  q.up_to_iso = !a.labeled;
  q.allow_large = a.allow_large;
  for (const auto& s : a.require) q.require.push_back(property_arg(s));
  for (const auto& s : a.forbid) q.forbid.push_back(property_arg(s));
  validate_query(q);
  if (q.max_size > kDefaultMaxSize) err << "warning: sizes above " << kDefaultMaxSize << " may take a long time\n";

  if (a.first) {
    const SearchResult r = search_first(q, !a.bare);
    if (r.witness) {
      out << poset_to_json(*r.witness).dump() << "\n";
      err << "found at size " << r.witness->size() << " after " << r.examined << " structures\n";
    } else {
      err << "none up to size " << r.bound_reached << " (" << r.examined << " structures examined)\n";
    }
    return kExitOk;
  }
  auto emit = [&](const Poset& p) {
    if (!a.count_only) out << poset_to_json(p).dump() << "\n";
    return true;
  };
  const std::size_t n = a.bare ? enumerate_bounded_posets(q, emit) : enumerate(q, emit);
  if (a.count_only) out << n << "\n";
  return kExitOk;
}

int cmd_examples(const std::string& dump, bool as_json, bool dot, std::ostream& out) {
  if (!dump.empty()) {
    const auto id = parse_builtin(dump);
    if (!id) throw UsageError("unknown example: " + dump);
    if (dot)
      out << poset_to_dot(builtin(*id));
    else
      out << builtin_document(*id);
    return kExitOk;
  }
  json list = json::array();
  for (BuiltinId id : kAllBuiltins) {
    const Poset p = builtin(id);
    if (as_json)
      list.push_back({{"id", std::string(to_string(id))}, {"elements", p.size()}});
    else
      out << to_string(id) << "\t" << p.size() << " elements\n";
  }
  if (as_json) out << list.dump(2) << "\n";
  return kExitOk;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bounded posets with an antitone involution: property checks, directoids, residuation, "
               "completions and enumeration.\n"
               "Exit status: 0 all verdicts hold or are not applicable, 1 a checked property failed, "
               "2 usage or input error."};
  app.name("copo");
  app.require_subcommand(1, 1);

  std::string input;
  bool as_json = false, dot = false;
  auto add_input = [&](CLI::App* sub) {
    sub->add_option("input", input, "poset JSON document (default: standard input)");
  };

  auto* validate = app.add_subcommand("validate", "parse and validate a poset document");
  add_input(validate);
  validate->add_flag("--json", as_json, "JSON output");
  validate->add_flag("--dot", dot, "print the Hasse diagram in Graphviz format");

  std::vector<std::string> props;
  bool all = false;
  auto* check = app.add_subcommand("check", "check order and involution properties");
  add_input(check);
  check->add_option("--property,-p", props, "property id (repeatable)")->allow_extra_args(false);
  check->add_flag("--all", all, "check every property");
  check->add_flag("--json", as_json, "JSON output");

  std::string policy = "canonical";
  std::uint64_t budget = kDefaultDirectoidBudget;
  auto* directoid = app.add_subcommand("directoid", "assign a commutative meet-directoid and check it");
  add_input(directoid);
  directoid->add_option("--policy", policy, "canonical | cone-min")->check(CLI::IsMember({"canonical", "cone-min"}));
  directoid->add_flag("--all", all, "check the whole family of assignable directoids");
  directoid->add_option("--budget", budget, "largest family enumerated when the symbolic check is undetermined");
  directoid->add_flag("--json", as_json, "JSON output");

  std::string variant;
  bool verify = false;
  auto* residuate = app.add_subcommand("residuate", "set-valued conjunction and implication tables");
  add_input(residuate);
  residuate->add_option("--variant", variant, "meet | nested (also accepted as 13 | 14)")->required();
  residuate->add_flag("--verify", verify, "certify unit, commutativity and adjointness");
  residuate->add_flag("--json", as_json, "JSON output");

  auto* complete = app.add_subcommand("complete", "Dedekind-MacNeille completion as a poset document");
  add_input(complete);
  complete->add_flag("--verify-consistency", verify,
                     "check the completion is consistent exactly when the poset is");
  complete->add_flag("--dot", dot, "print the completion's Hasse diagram in Graphviz format");

  EnumerateArgs ea;
  auto* enumerate_cmd = app.add_subcommand("enumerate", "stream bounded involution posets as JSON lines");
  enumerate_cmd->add_option("--max-size", ea.max_size, "largest size (default 8)");
  enumerate_cmd->add_option("--min-size", ea.min_size, "smallest size (default 2)");
  enumerate_cmd->add_option("--require", ea.require, "property that must hold (repeatable)")->allow_extra_args(false);
  enumerate_cmd->add_option("--forbid", ea.forbid, "property that must fail (repeatable)")->allow_extra_args(false);
  enumerate_cmd->add_flag("--labeled", ea.labeled, "every labeling instead of one per isomorphism class");
  enumerate_cmd->add_flag("--allow-large", ea.allow_large, "permit sizes above the default budget");
  enumerate_cmd->add_flag("--first", ea.first, "stop at the smallest match; report the bound searched");
  enumerate_cmd->add_flag("--no-involution", ea.bare, "bare bounded posets, order properties only");
  enumerate_cmd->add_flag("--count", ea.count_only, "print only the number of matches");

  std::string dump;
  auto* examples = app.add_subcommand("examples", "list or dump the builtin posets");
  examples->add_option("--dump", dump, "builtin id to print");
  examples->add_flag("--json", as_json, "JSON listing");
  examples->add_flag("--dot", dot, "with --dump, print Graphviz instead");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (validate->parsed()) return cmd_validate(load(input, in), as_json, dot, out);
    if (check->parsed()) return cmd_check(load(input, in), props, all, as_json, out);
    if (directoid->parsed()) return cmd_directoid(load(input, in), policy, all, budget, as_json, out);
    if (residuate->parsed()) return cmd_residuate(load(input, in), variant, verify, as_json, out);
    if (complete->parsed()) return cmd_complete(load(input, in), verify, dot, out);
    if (enumerate_cmd->parsed()) return cmd_enumerate(ea, out, err);
    if (examples->parsed()) return cmd_examples(dump, as_json, dot, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

} // namespace copo
