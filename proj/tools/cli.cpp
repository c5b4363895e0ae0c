#include "cli.hpp"

#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "revposet/catalog.hpp"
#include "revposet/dsl.hpp"
#include "revposet/error.hpp"
#include "revposet/extraction.hpp"
#include "revposet/graph.hpp"
#include "revposet/maps.hpp"
#include "revposet/topology.hpp"
#include "revposet/window.hpp"

namespace revposet::cli {

namespace {

using json = nlohmann::ordered_json;

/// Thrown by command bodies for bad arguments that CLI11 cannot see.
class UsageError : public Error {
 public:
  using Error::Error;
};

ForbiddenKind parse_kind(const std::string& key) {
  if (auto k = ForbiddenKind::parse(key)) return *k;
  throw UsageError("unknown forbidden kind '" + key + "'");
}

json labels(const std::vector<ElementId>& xs) {
  json arr = json::array();
  for (const auto& x : xs) arr.push_back(x.label());
  return arr;
}

int report(const CheckReport& r, std::ostream& out) {
  out << r.to_json() << "\n";
  return r.ok ? kOk : kViolation;
}

int cmd_window(const std::string& expr, std::size_t size, const std::string& format,
               std::ostream& out) {
  const auto w = Window::of(elaborate(expr), size);
  out << (format == "dot" ? w.to_dot() : w.to_json() + "\n");
  return kOk;
}

int cmd_axioms(const std::string& expr, std::size_t size, bool force_poset, std::ostream& out) {
  const auto w = Window::of(elaborate(expr), size);
  const auto v = verify_axioms(w, force_poset);
  json j;
  j["ok"] = !v.has_value();
  if (v) {
    j["axiom"] = to_string(v->kind);
    std::vector<ElementId> elems;
    for (auto i : v->points) elems.push_back(w.elements()[i]);
    j["elements"] = labels(elems);
  }
  out << j.dump() << "\n";
  return v ? kViolation : kOk;
}

int cmd_check_witness(const std::string& key, std::size_t size, std::ostream& out) {
  const auto kind = parse_kind(key);
  const auto p = forbidden(kind);
  const auto w = witness(kind);
  const auto preserving = is_order_preserving(p, w.map, size);
  const auto bijection = check_bijection(p, w.map, size);
  const auto& [x, y] = w.pair;
  const bool pair_ok = !p.leq(x, y) && p.leq(w.map(x), w.map(y));
  const auto found = non_automorphism_pair(p, w.map, size);
  json j;
  j["kind"] = kind.key();
  j["map"] = w.map.name();
  j["order_preserving"] = json::parse(preserving.to_json());
  j["bijection"] = json::parse(bijection.to_json());
  j["pair"] = labels({x, y});
  j["pair_ok"] = pair_ok;
  j["window_pair"] = found ? labels({found->first, found->second}) : json();
  const bool ok = preserving.ok && bijection.ok && pair_ok && found.has_value();
  j["ok"] = ok;
  out << j.dump() << "\n";
  return ok ? kOk : kViolation;
}

int cmd_extract(const std::string& key, std::size_t horizon, std::size_t verify,
                const std::string& out_file, std::ostream& out) {
  const auto kind = parse_kind(key);
  const auto w = witness(kind);
  Budget budget;
  budget.horizon = horizon;
  budget.window = verify;
  const auto cert = extract_forbidden(forbidden(kind), w.map, w.pair.first, w.pair.second, budget);
  const auto text = certificate_to_json(cert, verify);
  if (!out_file.empty()) {
    std::ofstream f(out_file);
    if (!f) throw UsageError("cannot write " + out_file);
    f << text << "\n";
  }
  out << text << "\n";
  return kOk;
}

int cmd_reverify(const std::string& cert_file, const std::string& expr, std::size_t size,
                 std::ostream& out) {
  std::ifstream f(cert_file);
  if (!f) throw UsageError("cannot read " + cert_file);
  std::stringstream text;
  text << f.rdbuf();
  const auto cert = certificate_from_json(text.str());
  return report(verify_certificate(elaborate(expr), cert, size), out);
}

template <class Check>
json brute_sizes(std::size_t max, Check&& check, bool& all_ok, json& counterexample) {
  json counts = json::array();
  for (std::size_t n = 0; n <= max; ++n) counts.push_back(check(n, all_ok, counterexample));
  return counts;
}

json permutation_json(const Permutation& p) {
  json arr = json::array();
  for (auto i : p) arr.push_back(i);
  return arr;
}

json order_json(const FiniteOrder& f) {
  json rows = json::array();
  for (std::size_t i = 0; i < f.size(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < f.size(); ++j) row.push_back(f.leq(i, j));
    rows.push_back(row);
  }
  return rows;
}

int cmd_brute(const std::string& what, std::size_t max, std::ostream& out) {
  bool all_ok = true;
  json counterexample;
  json counts;
  if (what == "topologies") {
    if (max > 4) throw UsageError("--topologies supports --max up to 4");
    counts = brute_sizes(max, [](std::size_t n, bool& ok, json& cx) {
      std::size_t count = 0;
      for_each_topology(n, [&](const FiniteSpace& s) {
        ++count;
        const auto r = finite_space_reversible(s);
        if (!r.reversible && ok) {
          ok = false;
          cx = {{"space", json::parse(s.to_json())},
                {"permutation", permutation_json(*r.counterexample)}};
        }
      });
      return count;
    }, all_ok, counterexample);
  } else {
    if (max > 5) throw UsageError("--" + what + " supports --max up to 5");
    const bool preorder = what == "preorders";
    counts = brute_sizes(max, [preorder](std::size_t n, bool& ok, json& cx) {
      std::size_t count = 0;
      for_each_finite_order(n, preorder, [&](const FiniteOrder& f) {
        ++count;
        const auto r = brute_force_reversible(f);
        if (!r.reversible && ok) {
          ok = false;
          cx = {{"order", order_json(f)}, {"permutation", permutation_json(*r.counterexample)}};
        }
      });
      return count;
    }, all_ok, counterexample);
  }
  json j;
  j["kind"] = what;
  j["max"] = max;
  j["counts"] = counts;
  j["all_reversible"] = all_ok;
  if (!all_ok) j["counterexample"] = counterexample;
  out << j.dump() << "\n";
  return all_ok ? kOk : kViolation;
}

int cmd_graphs(const std::string& claim, std::size_t size, std::ostream& out) {
  const auto claims = graph_claims();
  if (std::find(claims.begin(), claims.end(), claim) == claims.end())
    throw UsageError("unknown graph claim '" + claim + "'");
  const auto r = check_graph_claim(claim, std::max<std::size_t>(1, size / 2));
  json j;
  j["claim"] = r.claim;
  j["vertices"] = r.vertices;
  j["shipped_bijection"] = r.shipped_ok;
  j["search"] = r.search_ok;
  out << j.dump() << "\n";
  return r.shipped_ok && r.search_ok ? kOk : kViolation;
}

int cmd_levels(const std::string& expr, std::size_t size, std::ostream& out) {
  const auto w = Window::of(elaborate(expr), size);
  std::vector<std::string> names;
  for (const auto& e : w.elements()) names.push_back(e.label());
  out << level_sets(w.order()).to_json(names) << "\n";
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Executable checks for reversible countable posets and preorders", "revposet"};
  app.require_subcommand(1);

  std::string expr, key, format = "json", out_file, cert_file, claim;
  std::size_t size = 20, horizon = Budget{}.horizon, verify = Budget{}.window, max = 4;
  bool force_poset = false, posets = false, preorders = false, topologies = false;

  auto* window = app.add_subcommand("window", "Export a window as DOT or JSON");
  window->add_option("expr", expr, "Presentation expression")->required();
  window->add_option("--size", size, "Window size")->check(CLI::PositiveNumber);
  window->add_option("--format", format, "Output format")->check(CLI::IsMember({"dot", "json"}));

  auto* axioms = app.add_subcommand("axioms", "Check order axioms on a window");
  axioms->add_option("expr", expr, "Presentation expression")->required();
  axioms->add_option("--size", size, "Window size")->check(CLI::PositiveNumber);
  axioms->add_flag("--force-poset", force_poset, "Require antisymmetry even for preorders");

  auto* check = app.add_subcommand("check-witness", "Check a catalog witness map");
  check->add_option("kind", key, "Forbidden kind key")->required();
  check->add_option("--size", size, "Window size")->check(CLI::PositiveNumber);

  auto* extract = app.add_subcommand("extract", "Extract a certificate from a witness map");
  extract->add_option("kind", key, "Forbidden kind key")->required();
  extract->add_option("--budget", horizon, "Search horizon")->check(CLI::PositiveNumber);
  extract->add_option("--verify", verify, "Verification window")->check(CLI::PositiveNumber);
  extract->add_option("--out", out_file, "Also write the certificate to this file");

  auto* reverify = app.add_subcommand("reverify", "Re-verify a certificate file");
  reverify->add_option("cert", cert_file, "Certificate JSON file")->required();
  reverify->add_option("expr", expr, "Target presentation expression")->required();
  reverify->add_option("--size", size, "Window size")->check(CLI::PositiveNumber);

  auto* brute = app.add_subcommand("brute", "Exhaustive finite reversibility checks");
  auto* group = brute->add_option_group("family")->require_option(1);
  group->add_flag("--posets", posets, "Labeled posets");
  group->add_flag("--preorders", preorders, "Labeled preorders");
  group->add_flag("--topologies", topologies, "Labeled topologies");
  brute->add_option("--max", max, "Largest size")->required();

  auto* graphs = app.add_subcommand("graphs", "Check a comparability-graph correspondence");
  graphs->add_option("claim", claim, "Claim name")->required();
  graphs->add_option("--size", size, "Window size")->check(CLI::PositiveNumber);

  auto* levels = app.add_subcommand("levels", "Level decomposition of a window");
  levels->add_option("expr", expr, "Presentation expression")->required();
  levels->add_option("--size", size, "Window size")->check(CLI::PositiveNumber);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*window) return cmd_window(expr, size, format, out);
    if (*axioms) return cmd_axioms(expr, size, force_poset, out);
    if (*check) return cmd_check_witness(key, size, out);
    if (*extract) return cmd_extract(key, horizon, verify, out_file, out);
    if (*reverify) return cmd_reverify(cert_file, expr, size, out);
    if (*brute)
      return cmd_brute(posets ? "posets" : preorders ? "preorders" : "topologies", max, out);
    if (*graphs) return cmd_graphs(claim, size, out);
    if (*levels) return cmd_levels(expr, size, out);
  } catch (const Exhausted& e) {
    out << json{{"exhausted", e.what()}, {"state", e.state()}}.dump() << "\n";
    return kExhausted;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace revposet::cli
