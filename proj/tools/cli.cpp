#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "colouring/automorphisms.hpp"
#include "colouring/graph3.hpp"
#include "colouring/group.hpp"
#include "colouring/lifting.hpp"
#include "colouring/perm.hpp"
#include "colouring/search.hpp"
#include "colouring/tables.hpp"

using json = nlohmann::json;
using namespace colouring;

namespace {

// 0 success / 1 negative-but-valid verdict / 2 usage error / 3 internal failure
constexpr int kOk = 0, kNegative = 1, kUsage = 2, kInternal = 3;

bool g_machine = false;

void emit(const json& j, const std::string& text) {
  if (g_machine)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

std::string resolve_path(const std::string& path) {
  if (std::ifstream probe(path); probe.good()) return path;
  if (const char* dir = std::getenv("COLOURING_DATA_DIR")) {
    std::string alt = std::string(dir) + "/" + path;
    if (std::ifstream probe(alt); probe.good()) return alt;
  }
  return path;  // let the reader produce the error
}

Perm load_perm(const std::string& arg, const FiniteGroup& g) {
  if (arg == "identity") return Perm::identity(g.order);
  PermFile pf = read_perm_file(resolve_path(arg), &g);
  if (pf.perm.size() != g.order)
    throw std::invalid_argument("permutation size does not match group order");
  return pf.perm;
}

std::vector<Elem> parse_generators(const FiniteGroup& g, const std::string& text) {
  // comma-separated labels, each of the form (a,b,...); split at ')' boundaries
  std::vector<Elem> gens;
  size_t pos = 0;
  while (pos < text.size()) {
    size_t open = text.find('(', pos);
    size_t close = text.find(')', open);
    if (open == std::string::npos || close == std::string::npos)
      throw std::invalid_argument("bad generator list: " + text);
    std::string label = text.substr(open, close - open + 1);
    auto e = g.element_by_label(label);
    if (!e) throw std::invalid_argument("no element with label " + label);
    gens.push_back(*e);
    pos = close + 1;
  }
  if (gens.empty()) throw std::invalid_argument("empty generator list");
  return gens;
}

std::string perm_summary(const FiniteGroup& g, const Perm& p) {
  std::string s = "[";
  for (int i = 0; i < p.size(); ++i) {
    if (i) s += ", ";
    s += std::to_string(p(i));
  }
  (void)g;
  return s + "]";
}

int cmd_group_show(const std::string& spec) {
  FiniteGroup g = build_from_spec(spec);
  Classification cls = classify(g);
  auto z = center(g);
  auto subs = enumerate_lifting_subgroups(g);
  json j{{"command", "group show"},
         {"group", spec},
         {"order", g.order},
         {"center_order", z.order()},
         {"class", cls.to_string()}};
  std::string text;
  text += "group: " + spec + "\n";
  text += "order: " + std::to_string(g.order) + "\n";
  text += "center order: " + std::to_string(z.order()) + "\n";
  text += "class: " + cls.to_string() + "\n";
  text += "lifting subgroups: " + std::to_string(subs.size()) + "\n";
  json jsubs = json::array();
  for (const auto& s : subs) {
    const char* kind = s.kind == LiftKind::C3C3Central ? "c3c3-central"
                       : s.kind == LiftKind::C3C3      ? "c3c3"
                                                        : "c9c3";
    std::string gens;
    for (Elem e : s.subgroup.generators) {
      if (!gens.empty()) gens += ",";
      gens += g.label(e);
    }
    text += std::string("  kind: ") + kind + "  generators: " + gens +
            "  quotient-noncyclic: " + (s.quotient_noncyclic ? "yes" : "no") + "\n";
    jsubs.push_back({{"kind", kind},
                     {"generators", gens},
                     {"quotient_noncyclic", s.quotient_noncyclic}});
  }
  j["lifting_subgroups"] = jsubs;
  emit(j, text);
  return kOk;
}

int cmd_verify(const std::string& spec, const std::string& perm_arg, bool cb,
               bool scm, bool cm) {
  FiniteGroup g = build_from_spec(spec);
  Perm p = load_perm(perm_arg, g);
  if (!cb && !scm && !cm) cb = true;
  bool all = true;
  json j{{"command", "verify"}, {"group", spec}};
  std::string text;
  if (cb) {
    bool v = is_colouring_bijection(g, p);
    all = all && v;
    j["colouring_bijection"] = v;
    text += std::string("colouring bijection: ") + (v ? "yes" : "no") + "\n";
  }
  if (scm) {
    bool v = is_strong_complete_mapping(g, p);
    all = all && v;
    j["strong_complete_mapping"] = v;
    text += std::string("strong complete mapping: ") + (v ? "yes" : "no") + "\n";
  }
  if (cm) {
    bool v = is_complete_mapping(g, p);
    all = all && v;
    j["complete_mapping"] = v;
    text += std::string("complete mapping: ") + (v ? "yes" : "no") + "\n";
  }
  emit(j, text);
  return all ? kOk : kNegative;
}

int cmd_search(const std::string& spec, const std::string& target, bool first,
               std::optional<uint64_t> count_mode, std::optional<uint64_t> enumerate_n,
               bool fix_identity, std::optional<uint64_t> budget, int jobs,
               const std::string& out) {
  FiniteGroup g = build_from_spec(spec);
  SearchConfig cfg;
  cfg.target = target == "cb"    ? Target::ColouringBijection
               : target == "scm" ? Target::StrongCompleteMapping
                                 : Target::CompleteMapping;
  if (enumerate_n) {
    cfg.mode = SearchMode::Enumerate;
    cfg.enumerate_limit = *enumerate_n;
  } else if (count_mode) {
    cfg.mode = SearchMode::Count;
  } else {
    cfg.mode = SearchMode::First;
    (void)first;
  }
  cfg.fix_identity = fix_identity;
  cfg.node_budget = budget;
  cfg.jobs = jobs;
  SearchResult res = search(g, cfg);
  for (const Perm& p : res.found)
    if ((cfg.target == Target::ColouringBijection && !is_colouring_bijection(g, p)) ||
        (cfg.target == Target::StrongCompleteMapping && !is_strong_complete_mapping(g, p)) ||
        (cfg.target == Target::CompleteMapping && !is_complete_mapping(g, p)))
      throw std::logic_error("search emitted a permutation failing its own predicate");
  json j{{"command", "search"},   {"group", spec},
         {"target", target},      {"count", res.count},
         {"found", res.found.size()}, {"nodes", res.nodes_explored},
         {"exhausted", res.exhausted}};
  std::string text;
  text += "count: " + std::to_string(res.count) + "\n";
  text += "found: " + std::to_string(res.found.size()) + "\n";
  text += "nodes: " + std::to_string(res.nodes_explored) + "\n";
  text += std::string("exhausted: ") + (res.exhausted ? "yes" : "no") + "\n";
  if (!res.found.empty()) {
    text += "first: " + perm_summary(g, res.found.front()) + "\n";
    j["first"] = res.found.front().images;
  }
  if (!out.empty() && !res.found.empty())
    write_perm_file(out, g, res.found.front());
  emit(j, text);
  return res.count > 0 ? kOk : kNegative;
}

int cmd_lift(const std::string& spec, const std::string& subgroup_arg,
             const std::string& quotient_perm, const std::string& out) {
  FiniteGroup g = build_from_spec(spec);
  PermFile pf = read_perm_file(resolve_path(quotient_perm));
  auto apply = [&](const SubgroupData& h, LiftKind kind) {
    return kind == LiftKind::C9C3 ? lift_c9c3(g, h, pf.perm)
                                  : lift_c3c3(g, h, pf.perm);
  };
  Perm sigma;
  std::string kind_used;
  if (subgroup_arg == "auto") {
    bool done = false;
    for (const auto& s : enumerate_lifting_subgroups(g)) {
      auto dec = quotient(g, s.subgroup);
      if (dec.quotient.order != pf.perm.size()) continue;
      if (!is_colouring_bijection(dec.quotient, pf.perm)) continue;
      sigma = apply(s.subgroup, s.kind);
      kind_used = s.kind == LiftKind::C3C3Central ? "c3c3-central"
                  : s.kind == LiftKind::C3C3      ? "c3c3"
                                                   : "c9c3";
      done = true;
      break;
    }
    if (!done) throw std::invalid_argument(
        "no lifting subgroup accepts the given quotient permutation");
  } else {
    SubgroupData h = subgroup_generated(g, parse_generators(g, subgroup_arg));
    if (h.order() == 27) {
      sigma = apply(h, LiftKind::C9C3);
      kind_used = "c9c3";
    } else {
      sigma = apply(h, LiftKind::C3C3);
      SubgroupData z = center(g);
      bool central = true;
      for (Elem e : h.elements) central = central && z.contains(e);
      kind_used = central ? "c3c3-central" : "c3c3";
    }
  }
  if (!is_colouring_bijection(g, sigma))
    throw std::logic_error("lift produced a non colouring bijection");
  if (!out.empty()) write_perm_file(out, g, sigma);
  json j{{"command", "lift"},
         {"group", spec},
         {"kind", kind_used},
         {"verified", true},
         {"images", sigma.images}};
  std::string text = "kind: " + kind_used + "\nverified: yes\nimages: " +
                     perm_summary(g, sigma) + "\n";
  emit(j, text);
  return kOk;
}

int cmd_colour(const std::string& spec, uint64_t budget, const std::string& out) {
  FiniteGroup g = build_from_spec(spec);
  ColourOutcome o = colour(g, budget);
  const char* status = o.status == ColourStatus::Success ? "success"
                       : o.status == ColourStatus::NoConstructionKnown
                           ? "no-construction-known"
                           : "search-exhausted";
  json j{{"command", "colour"}, {"group", spec}, {"status", status},
         {"trace", o.trace}};
  std::string text = std::string("status: ") + status + "\n";
  for (const auto& line : o.trace) text += "trace: " + line + "\n";
  if (o.status == ColourStatus::Success) {
    if (!is_colouring_bijection(g, o.sigma))
      throw std::logic_error("colour produced a non colouring bijection");
    text += "images: " + perm_summary(g, o.sigma) + "\n";
    j["images"] = o.sigma.images;
    if (!out.empty()) write_perm_file(out, g, o.sigma);
  }
  emit(j, text);
  return o.status == ColourStatus::Success ? kOk : kNegative;
}

int cmd_graph_check(const std::string& spec, const std::string& perm_arg, int jobs,
                    const std::string& dimacs_out) {
  FiniteGroup g = build_from_spec(spec);
  Perm p = load_perm(perm_arg, g);
  if (!dimacs_out.empty()) {
    std::ofstream os(dimacs_out);
    if (!os) throw std::invalid_argument("cannot open " + dimacs_out);
    export_dimacs(os, g);
  }
  ChromaticCertificate cert = verify_proper(g, p, jobs, spec);
  json j{{"command", "graph check"},
         {"group", spec},
         {"vertices", (long long)g.order * g.order * g.order},
         {"degree", 6 * (g.order - 1)},
         {"colours_used", cert.colours_used},
         {"clique_size", (int)cert.clique.size()},
         {"sigma_is_cb", cert.sigma_is_cb},
         {"proper", cert.proper},
         {"chi", cert.chi}};
  std::string text;
  text += "vertices: " + std::to_string((long long)g.order * g.order * g.order) + "\n";
  text += "degree: " + std::to_string(6 * (g.order - 1)) + "\n";
  text += "colours used: " + std::to_string(cert.colours_used) + "\n";
  text += "clique size: " + std::to_string(cert.clique.size()) + "\n";
  text += std::string("sigma is colouring bijection: ") + (cert.sigma_is_cb ? "yes" : "no") + "\n";
  text += std::string("proper: ") + (cert.proper ? "yes" : "no") + "\n";
  if (cert.proper) {
    text += "chromatic number: " + std::to_string(cert.chi) + "\n";
  } else if (cert.violation) {
    auto lbl = [&](Vertex v) {
      return "(" + g.label(v.x) + "," + g.label(v.y) + "," + g.label(v.z) + ")";
    };
    text += "violation: " + lbl(cert.violation->a) + " ~ " + lbl(cert.violation->b) + "\n";
    j["violation"] = {lbl(cert.violation->a), lbl(cert.violation->b)};
  }
  emit(j, text);
  return cert.proper ? kOk : kNegative;
}

int cmd_aut(const std::string& spec, const std::string& orbit_perm) {
  FiniteGroup g = build_from_spec(spec);
  std::vector<Perm> auts = automorphisms(g);
  json j{{"command", "aut"}, {"group", spec}, {"aut_order", auts.size()}};
  std::string text = "aut order: " + std::to_string(auts.size()) + "\n";
  if (!orbit_perm.empty()) {
    Perm sigma = load_perm(orbit_perm, g);
    std::set<std::vector<Elem>> orbit;
    size_t stab = 0;
    for (const Perm& phi : auts) {
      Perm t = conj_by_automorphism(g, sigma, phi);
      orbit.insert(t.images);
      if (t == sigma) ++stab;
    }
    text += "orbit size: " + std::to_string(orbit.size()) + "\n";
    text += "stabiliser order: " + std::to_string(stab) + "\n";
    j["orbit_size"] = orbit.size();
    j["stabiliser_order"] = stab;
  }
  emit(j, text);
  return kOk;
}

int cmd_tables_verify() {
  tables::VerifyReport rep = tables::verify_tables();
  json j{{"command", "tables verify"},
         {"ok", rep.ok},
         {"checks", rep.checks},
         {"failures", rep.failures}};
  std::string text;
  text += std::string("ok: ") + (rep.ok ? "yes" : "no") + "\n";
  text += "checks: " + std::to_string(rep.checks) + "\n";
  for (const auto& f : rep.failures) text += "failure: " + f + "\n";
  emit(j, text);
  return rep.ok ? kOk : kNegative;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"colouring bijections of finite 3-groups: construction, search, "
               "lifting, and chromatic certificates"};
  app.require_subcommand(1);
  app.add_flag("--machine", g_machine, "emit JSON instead of text");

  std::string spec, perm_arg, out, subgroup_arg = "auto", quotient_perm, target = "cb";
  std::string dimacs_out, orbit_perm;
  bool cb = false, scm = false, cm = false, first = false, fix_identity = false;
  bool count_flag = false;
  std::optional<uint64_t> enumerate_n, budget;
  uint64_t colour_budget = 200'000'000;
  int jobs = 1;

  auto* grp = app.add_subcommand("group", "group inspection");
  auto* show = grp->add_subcommand("show", "order, centre, class, lifting inventory");
  show->add_option("spec", spec, "group spec, e.g. H3, C9xC3, L4")->required();

  auto* verify = app.add_subcommand("verify", "test predicates on a permutation");
  verify->add_option("--group", spec)->required();
  verify->add_option("--perm", perm_arg, "perm file or 'identity'")->required();
  verify->add_flag("--cb", cb, "colouring bijection (default)");
  verify->add_flag("--scm", scm, "strong complete mapping");
  verify->add_flag("--cm", cm, "complete mapping");

  auto* search_cmd = app.add_subcommand("search", "backtracking search");
  search_cmd->add_option("--group", spec)->required();
  search_cmd->add_option("--target", target)->check(CLI::IsMember({"cb", "scm", "cm"}));
  search_cmd->add_flag("--first", first, "stop at first hit (default)");
  search_cmd->add_flag("--count", count_flag, "exhaustive count");
  search_cmd->add_option("--enumerate", enumerate_n, "collect up to N hits");
  search_cmd->add_flag("--fix-identity", fix_identity);
  search_cmd->add_option("--budget", budget, "node budget");
  search_cmd->add_option("--jobs", jobs, "parallel branches");
  search_cmd->add_option("--out", out, "write first hit as perm file");

  auto* lift = app.add_subcommand("lift", "lift a quotient colouring bijection");
  lift->add_option("--group", spec)->required();
  lift->add_option("--subgroup", subgroup_arg, "auto or generator labels");
  lift->add_option("--quotient-perm", quotient_perm)->required();
  lift->add_option("--out", out);

  auto* colour_cmd = app.add_subcommand("colour", "end-to-end colouring strategy");
  colour_cmd->add_option("--group", spec)->required();
  colour_cmd->add_option("--budget", colour_budget, "fallback search budget");
  colour_cmd->add_option("--out", out);

  auto* graph = app.add_subcommand("graph", "Cayley graph on G^3");
  auto* check = graph->add_subcommand("check", "exhaustive properness certificate");
  check->add_option("--group", spec)->required();
  check->add_option("--perm", perm_arg)->required();
  check->add_option("--jobs", jobs);
  check->add_option("--export-dimacs", dimacs_out, "edge list (|G| <= 9)");

  auto* aut = app.add_subcommand("aut", "automorphism group and orbits");
  aut->add_option("--group", spec)->required();
  aut->add_option("--orbit", orbit_perm, "perm file whose Aut-orbit to compute");

  auto* tables_cmd = app.add_subcommand("tables", "embedded table data");
  auto* tverify = tables_cmd->add_subcommand("verify", "recompute and check all tables");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (show->parsed()) return cmd_group_show(spec);
    if (verify->parsed()) return cmd_verify(spec, perm_arg, cb, scm, cm);
    if (search_cmd->parsed())
      return cmd_search(spec, target, first,
                        count_flag ? std::optional<uint64_t>{0} : std::nullopt,
                        enumerate_n, fix_identity, budget, jobs, out);
    if (lift->parsed()) return cmd_lift(spec, subgroup_arg, quotient_perm, out);
    if (colour_cmd->parsed()) return cmd_colour(spec, colour_budget, out);
    if (check->parsed()) return cmd_graph_check(spec, perm_arg, jobs, dimacs_out);
    if (aut->parsed()) return cmd_aut(spec, orbit_perm);
    if (tverify->parsed()) return cmd_tables_verify();
    std::cerr << "missing subcommand\n";
    return kUsage;
  } catch (const std::logic_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
}
