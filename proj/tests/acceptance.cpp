// Acceptance gate: one pass/fail line per criterion, exit 0 iff all pass.
//
//   acceptance [--data-dir DIR] [--only-census-full]
//
// --only-census-full runs just the exhaustive M16 census (the slow ctest
// entry); the default gate runs everything.

#include <algorithm>
#include <cstdio>
#include <cstring>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "colouring/automorphisms.hpp"
#include "colouring/graph3.hpp"
#include "colouring/lifting.hpp"
#include "colouring/search.hpp"
#include "colouring/tables.hpp"

using namespace colouring;

namespace {

std::string g_data_dir = "data";
int g_failures = 0;

void report(int n, const char* name, bool ok, const std::string& detail = {}) {
  std::printf("%s  criterion %2d: %s%s%s\n", ok ? "PASS" : "FAIL", n, name,
              detail.empty() ? "" : " -- ", detail.c_str());
  std::fflush(stdout);
  if (!ok) ++g_failures;
}

Perm quotient_cb(const FiniteGroup& q) {
  ColourOutcome o = colour(q);
  if (o.status != ColourStatus::Success)
    throw std::runtime_error("no colouring bijection for a quotient");
  return o.sigma;
}

// ---- criterion 1: every embedded table recomputes from its inputs ---------

void criterion_table_fidelity() {
  tables::VerifyReport rep = tables::verify_tables();
  std::string detail = std::to_string(rep.checks) + " checks";
  for (const auto& f : rep.failures) detail += "; " + f;
  report(1, "table fidelity", rep.ok && rep.checks >= 36, detail);
}

// ---- criterion 2: search finds bijections on both nonabelian bases --------

void criterion_base_existence() {
  bool ok = true;
  std::string detail;
  for (const char* spec : {"H3", "L3"}) {
    FiniteGroup g = build_from_spec(spec);
    SearchConfig cfg;
    cfg.mode = SearchMode::First;
    cfg.fix_identity = true;
    SearchResult res = search(g, cfg);
    bool hit = res.found.size() == 1 && res.found[0](0) == 0 &&
               is_colouring_bijection(g, res.found[0]);
    ok = ok && hit;
    detail += std::string(spec) + (hit ? " found" : " MISSING") + " ";
  }
  report(2, "base-case existence", ok, detail);
}

// ---- criterion 3: C3 admits nothing, confirmed against all 6 bijections ---

void criterion_negative_control() {
  FiniteGroup g = build_from_spec("C3");
  SearchConfig cfg;
  cfg.mode = SearchMode::Count;
  cfg.target = Target::ColouringBijection;
  uint64_t cb = search(g, cfg).count;
  cfg.target = Target::StrongCompleteMapping;
  uint64_t scm = search(g, cfg).count;

  uint64_t oracle_cb = 0, oracle_scm = 0;
  std::vector<Elem> im{0, 1, 2};
  do {
    Perm p{im};
    if (is_colouring_bijection(g, p)) ++oracle_cb;
    if (is_strong_complete_mapping(g, p)) ++oracle_scm;
  } while (std::next_permutation(im.begin(), im.end()));

  report(3, "negative control (C3)",
         cb == 0 && scm == 0 && oracle_cb == 0 && oracle_scm == 0,
         "cb=" + std::to_string(cb) + " scm=" + std::to_string(scm) +
             " oracle cb=" + std::to_string(oracle_cb) +
             " oracle scm=" + std::to_string(oracle_scm));
}

// ---- criterion 4: pruned count equals the 9!-candidate oracle on C3xC3 ----

void criterion_oracle_equivalence() {
  FiniteGroup g = build_from_spec("C3xC3");
  SearchConfig cfg;
  cfg.mode = SearchMode::Count;
  uint64_t pruned = search(g, cfg).count;

  uint64_t oracle = 0;
  std::vector<Elem> im(9);
  std::iota(im.begin(), im.end(), 0);
  do {
    if (is_colouring_bijection(g, Perm{im})) ++oracle;
  } while (std::next_permutation(im.begin(), im.end()));

  report(4, "oracle equivalence (C3xC3)", pruned == oracle && pruned == 648,
         "pruned=" + std::to_string(pruned) + " oracle=" + std::to_string(oracle));
}

// ---- criterion 5: automorphism orbits of the reference bijections ---------

void criterion_aut_orbit() {
  bool ok = true;
  std::string detail;
  struct Case {
    const char* spec;
    const char* file;
    size_t aut_order, orbit;
  } cases[] = {{"H3", "/h3_sigma.perm", 432, 432}, {"L3", "/l3_sigma.perm", 54, 54}};
  for (const Case& c : cases) {
    FiniteGroup g = build_from_spec(c.spec);
    Perm sigma = read_perm_file(g_data_dir + c.file, &g).perm;
    std::vector<Perm> auts = automorphisms(g);
    std::set<std::vector<Elem>> orbit;
    size_t stab = 0;
    bool all_cb = true;
    for (const Perm& phi : auts) {
      Perm t = conj_by_automorphism(g, sigma, phi);
      orbit.insert(t.images);
      if (t == sigma) ++stab;
      all_cb = all_cb && is_colouring_bijection(g, t);
    }
    bool hit = auts.size() == c.aut_order && orbit.size() == c.orbit &&
               stab == 1 && all_cb;
    ok = ok && hit;
    detail += std::string(c.spec) + " aut=" + std::to_string(auts.size()) +
              " orbit=" + std::to_string(orbit.size()) +
              " stab=" + std::to_string(stab) + " ";
  }
  report(5, "automorphism orbits", ok, detail);
}

// ---- criterion 6: all four lift shapes, with the coset-to-coset check -----

bool layers_map_cosets_to_cosets(const FiniteGroup& g,
                                 const CosetDecomposition& dec,
                                 const Perm& sigma) {
  DeltaTriple d = deltas(g, sigma);
  for (int q = 0; q < dec.quotient.order; ++q) {
    std::set<int> i1, i2, i3;
    for (Elem x = 0; x < g.order; ++x) {
      if (dec.pi[x] != q) continue;
      i1.insert(dec.pi[d.d1[x]]);
      i2.insert(dec.pi[d.d2[x]]);
      i3.insert(dec.pi[d.d3[x]]);
    }
    if (i1.size() != 1 || i2.size() != 1 || i3.size() != 1) return false;
  }
  return true;
}

FiniteGroup amalgam_81(Elem* c_bar, Elem* y_bar) {
  FiniteGroup base = build_from_spec("C9xH3");
  Elem c = *base.element_by_label("(1,0,0,0)");
  Elem z = *base.element_by_label("(0,0,0,1)");
  Elem y = *base.element_by_label("(0,0,1,0)");
  Elem rel = base.mul(base.pow(c, 3), base.inv[z]);
  CosetDecomposition dec = quotient(base, subgroup_generated(base, {rel}));
  *c_bar = dec.pi[c];
  *y_bar = dec.pi[y];
  return dec.quotient;
}

void criterion_lifting() {
  bool ok = true;
  std::string detail;
  auto run = [&](const char* name, const FiniteGroup& g, const SubgroupData& h,
                 bool c9c3) {
    CosetDecomposition dec = quotient(g, h);
    Perm Phi = quotient_cb(dec.quotient);
    Perm sigma = c9c3 ? lift_c9c3(g, h, Phi) : lift_c3c3(g, h, Phi);
    bool hit = is_colouring_bijection(g, sigma) &&
               layers_map_cosets_to_cosets(g, dec, sigma);
    ok = ok && hit;
    detail += std::string(name) + (hit ? " ok" : " FAIL") + " ";
  };

  {
    FiniteGroup g = build_from_spec("H3xC3");
    Elem z = *g.element_by_label("(0,0,1,0)");
    Elem x = *g.element_by_label("(1,0,0,0)");
    Elem w = *g.element_by_label("(0,0,0,1)");
    run("central", g, subgroup_generated(g, {z, w}), false);
    run("noncentral", g, subgroup_generated(g, {z, g.mul(x, w)}), false);
  }
  {
    FiniteGroup g = build_from_spec("L3xC3xC3");
    Elem a = *g.element_by_label("(1,0,0,0)");
    Elem w1 = *g.element_by_label("(0,0,1,0)");
    run("c9c3/order3-central", g, subgroup_generated(g, {a, w1}), true);
  }
  {
    Elem c_bar = 0, y_bar = 0;
    FiniteGroup amalgam = amalgam_81(&c_bar, &y_bar);
    FiniteGroup g = direct_product(amalgam, build_from_spec("C3"));
    SubgroupData h = subgroup_generated(g, {c_bar * 3, y_bar * 3});
    bool shape_ok = h.order() == 27 && g.element_order(c_bar * 3) == 9 &&
                    center(g).contains(c_bar * 3);
    ok = ok && shape_ok;
    run("c9c3/order9-central", g, h, true);
  }
  report(6, "lifting validity", ok, detail);
}

// ---- criterion 7: exhaustive properness over the cube graphs --------------

void criterion_chromatic() {
  bool ok = true;
  std::string detail;
  auto run = [&](const char* spec, const Perm& sigma, int chi) {
    FiniteGroup g = build_from_spec(spec);
    ChromaticCertificate cert = verify_proper(g, sigma, 2, spec);
    bool hit = cert.proper && cert.sigma_is_cb && cert.chi == chi &&
               cert.colours_used == chi && (int)cert.clique.size() == chi;
    ok = ok && hit;
    detail += std::string(spec) + " chi=" + std::to_string(cert.chi) + " ";
  };
  run("H3", tables::h3_sigma(), 27);
  run("C3xC3", reference_base_cb("C3xC3"), 9);
  report(7, "chromatic certificates", ok, detail);
}

// ---- criterion 8: randomised property suites -------------------------------

void criterion_properties() {
  std::mt19937 rng(20260823);
  int failures = 0;
  long long samples = 0;
  for (const char* spec : {"C3xC3", "C9", "H3", "M16"}) {
    FiniteGroup g = build_from_spec(spec);
    bool abelian = is_abelian(g);
    std::vector<Perm> pool;
    for (int it = 0; it < 1000; ++it) {
      Perm sigma = Perm::identity(g.order);
      std::shuffle(sigma.images.begin(), sigma.images.end(), rng);
      pool.push_back(std::move(sigma));
    }
    // seed known positives so both sides of each equivalence are exercised
    if (std::string(spec) == "C3xC3") pool.push_back(reference_base_cb("C3xC3"));
    if (std::string(spec) == "H3") pool.push_back(tables::h3_sigma());

    for (const Perm& sigma : pool) {
      ++samples;
      DeltaTriple d = deltas(g, sigma);
      for (Elem x = 0; x < g.order; ++x)
        if (d.d3[x] != g.mul(g.inv[x], d.d1[x])) ++failures;

      bool cb = is_colouring_bijection(g, sigma);
      if (abelian && cb != is_strong_complete_mapping(g, sigma)) ++failures;

      Perm tau = sigma.inverse();
      bool rhs = is_strong_complete_mapping(g, tau) &&
                 is_permutation(theta_conjugacy(g, tau));
      if (cb != rhs) ++failures;
      if (cb && !is_strong_complete_mapping(g, tau)) ++failures;
    }
  }
  report(8, "property suites", failures == 0,
         std::to_string(samples) + " samples, " + std::to_string(failures) +
             " failures");
}

// ---- criterion 9: exhaustive M16 census ------------------------------------

void criterion_census_full() {
  FiniteGroup g = build_from_spec("M16");
  CensusResult res = scm_census(g);
  bool ok = res.exhausted && res.scm_count == 188416 && res.cb_count == 4096 &&
            res.ratio >= 0.0212 && res.ratio <= 0.0222;
  char buf[128];
  std::snprintf(buf, sizeof buf, "scm=%llu cb=%llu ratio=%.6f",
                (unsigned long long)res.scm_count,
                (unsigned long long)res.cb_count, res.ratio);
  report(9, "M16 census", ok, buf);
}

// ---- criterion 10: end-to-end construction ---------------------------------

void criterion_end_to_end() {
  bool ok = true;
  std::string detail;
  for (const char* spec : {"C3xC3", "C3xC3xC3", "C9xC3", "C9xC9", "H3", "L3",
                           "H3xC3", "L3xC3"}) {
    FiniteGroup g = build_from_spec(spec);
    ColourOutcome o = colour(g);
    bool hit = o.status == ColourStatus::Success &&
               is_colouring_bijection(g, o.sigma);
    ok = ok && hit;
    if (!hit) detail += std::string(spec) + " FAIL ";
  }
  for (const char* spec : {"C27", "L4", "L5"}) {
    ColourOutcome o = colour(build_from_spec(spec));
    bool hit = o.status == ColourStatus::NoConstructionKnown;
    ok = ok && hit;
    if (!hit) detail += std::string(spec) + " unexpectedly coloured ";
  }
  if (detail.empty()) detail = "8 constructed, 3 reported open";
  report(10, "end-to-end colouring", ok, detail);
}

}  // namespace

int main(int argc, char** argv) {
  bool census_only = false;
  for (int i = 1; i < argc; ++i) {
    if (!std::strcmp(argv[i], "--data-dir") && i + 1 < argc)
      g_data_dir = argv[++i];
    else if (!std::strcmp(argv[i], "--only-census-full"))
      census_only = true;
    else {
      std::fprintf(stderr, "usage: acceptance [--data-dir DIR] [--only-census-full]\n");
      return 2;
    }
  }

  try {
    if (census_only) {
      criterion_census_full();
    } else {
      criterion_table_fidelity();
      criterion_base_existence();
      criterion_negative_control();
      criterion_oracle_equivalence();
      criterion_aut_orbit();
      criterion_lifting();
      criterion_chromatic();
      criterion_properties();
      criterion_census_full();
      criterion_end_to_end();
    }
  } catch (const std::exception& e) {
    std::fprintf(stderr, "aborted: %s\n", e.what());
    return 3;
  }
  return g_failures == 0 ? 0 : 1;
}
