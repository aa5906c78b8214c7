#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "colouring/automorphisms.hpp"
#include "colouring/lifting.hpp"

using namespace colouring;

namespace {

Perm quotient_cb(const FiniteGroup& q) {
  ColourOutcome o = colour(q);
  REQUIRE(o.status == ColourStatus::Success);
  return o.sigma;
}

// The direct factor C9 x H3 glued along c^3 = z: quotient by the central
// order-3 subgroup generated by c^3 z^-1.
FiniteGroup amalgam_81() {
  FiniteGroup g = build_from_spec("C9xH3");
  Elem c = *g.element_by_label("(1,0,0,0)");
  Elem z = *g.element_by_label("(0,0,0,1)");
  Elem rel = g.mul(g.pow(c, 3), g.inv[z]);
  REQUIRE(g.element_order(rel) == 3);
  CosetDecomposition dec = quotient(g, subgroup_generated(g, {rel}));
  REQUIRE(dec.quotient.order == 81);
  return dec.quotient;
}

bool trace_contains(const ColourOutcome& o, const std::string& needle) {
  return std::any_of(o.trace.begin(), o.trace.end(), [&](const std::string& s) {
    return s.find(needle) != std::string::npos;
  });
}

}  // namespace

TEST_CASE("reference base bijections verify on their own groups") {
  for (const char* spec : {"C3xC3", "C9xC3", "C3xC3xC3", "H3", "L3"}) {
    FiniteGroup g = build_from_spec(spec);
    CHECK(is_colouring_bijection(g, reference_base_cb(spec)));
  }
}

TEST_CASE("subgroup views re-index with identity first") {
  FiniteGroup g = build_from_spec("H3");
  SubgroupView v = subgroup_as_group(g, center(g));
  CHECK(v.group.order == 3);
  CHECK(v.to_parent[0] == 0);
  for (int i = 0; i < v.group.order; ++i)
    CHECK(v.from_parent[v.to_parent[i]] == i);
  CHECK_NOTHROW(v.group.check_invariants());
}

TEST_CASE("transversal scheme satisfies its defining equations") {
  FiniteGroup g = build_from_spec("H3xC3");
  Elem z = *g.element_by_label("(0,0,1,0)");
  Elem w = *g.element_by_label("(0,0,0,1)");
  CosetDecomposition dec = quotient(g, subgroup_generated(g, {z, w}));
  Perm Phi = quotient_cb(dec.quotient);
  TransversalScheme s = transversal_scheme(dec, Phi);
  const int q = dec.quotient.order;
  CHECK(is_permutation(s.t1));
  CHECK(is_permutation(s.t2));
  CHECK(is_permutation(s.t3));
  for (int i = 0; i < q; ++i) {
    Elem t = dec.tau[i];
    Elem pt = dec.tau[s.phi[i]];
    CHECK(g.mul(pt, t) == g.mul(s.xi[i], dec.tau[s.t1[i]]));
    CHECK(g.mul(g.inv[t], pt) == g.mul(s.zeta[i], dec.tau[s.t2[i]]));
    CHECK(g.mul(g.mul(g.inv[t], pt), t) == g.mul(s.omega[i], dec.tau[s.t3[i]]));
    CHECK(dec.subgroup.contains(s.xi[i]));
    CHECK(dec.subgroup.contains(s.zeta[i]));
    CHECK(dec.subgroup.contains(s.omega[i]));
  }
  CHECK_THROWS_AS(transversal_scheme(dec, Perm::identity(q)),
                  std::invalid_argument);
}

TEST_CASE("central lift through C3 x C3") {
  FiniteGroup g = build_from_spec("H3xC3");
  Elem z = *g.element_by_label("(0,0,1,0)");
  Elem w = *g.element_by_label("(0,0,0,1)");
  SubgroupData h = subgroup_generated(g, {z, w});
  CosetDecomposition dec = quotient(g, h);
  Perm sigma = lift_c3c3(g, h, quotient_cb(dec.quotient));
  CHECK(is_colouring_bijection(g, sigma));
}

TEST_CASE("noncentral lift through C3 x C3") {
  FiniteGroup g = build_from_spec("H3xC3");
  Elem z = *g.element_by_label("(0,0,1,0)");
  Elem x = *g.element_by_label("(1,0,0,0)");
  Elem w = *g.element_by_label("(0,0,0,1)");
  SubgroupData h = subgroup_generated(g, {z, g.mul(x, w)});
  REQUIRE(h.order() == 9);
  REQUIRE_FALSE(center(g).contains(g.mul(x, w)));
  CosetDecomposition dec = quotient(g, h);
  Perm sigma = lift_c3c3(g, h, quotient_cb(dec.quotient));
  CHECK(is_colouring_bijection(g, sigma));
}

TEST_CASE("lift through C9 x C3 with the order-3 generator central") {
  FiniteGroup g = build_from_spec("L3xC3xC3");
  Elem a = *g.element_by_label("(1,0,0,0)");
  Elem w1 = *g.element_by_label("(0,0,1,0)");
  SubgroupData h = subgroup_generated(g, {a, w1});
  REQUIRE(h.order() == 27);
  CosetDecomposition dec = quotient(g, h);
  Perm sigma = lift_c9c3(g, h, quotient_cb(dec.quotient));
  CHECK(is_colouring_bijection(g, sigma));
}

TEST_CASE("lift through C9 x C3 with the order-9 generator central") {
  FiniteGroup amalgam = amalgam_81();
  FiniteGroup g = direct_product(amalgam, build_from_spec("C3"));
  // images of c and y in the amalgam, embedded in the product
  FiniteGroup base = build_from_spec("C9xH3");
  CosetDecomposition adec = quotient(
      base,
      subgroup_generated(
          base, {base.mul(base.pow(*base.element_by_label("(1,0,0,0)"), 3),
                          base.inv[*base.element_by_label("(0,0,0,1)")])}));
  Elem c_bar = adec.pi[*base.element_by_label("(1,0,0,0)")] * 3;
  Elem y_bar = adec.pi[*base.element_by_label("(0,0,1,0)")] * 3;
  SubgroupData h = subgroup_generated(g, {c_bar, y_bar});
  REQUIRE(h.order() == 27);
  REQUIRE(g.element_order(c_bar) == 9);
  REQUIRE(center(g).contains(c_bar));
  CosetDecomposition dec = quotient(g, h);
  REQUIRE(dec.quotient.order == 9);
  Perm sigma = lift_c9c3(g, h, quotient_cb(dec.quotient));
  CHECK(is_colouring_bijection(g, sigma));
}

TEST_CASE("end-to-end strategy succeeds on the liftable families") {
  for (const char* spec : {"C3xC3", "C9xC3", "H3", "L3", "H3xC3", "L3xC3"}) {
    FiniteGroup g = build_from_spec(spec);
    ColourOutcome o = colour(g);
    REQUIRE(o.status == ColourStatus::Success);
    CHECK(is_colouring_bijection(g, o.sigma));
  }
}

TEST_CASE("end-to-end strategy colours the order-243 amalgam product") {
  FiniteGroup g = direct_product(amalgam_81(), build_from_spec("C3"));
  ColourOutcome o = colour(g);
  REQUIRE(o.status == ColourStatus::Success);
  CHECK(is_colouring_bijection(g, o.sigma));
  CHECK(trace_contains(o, "lift kind="));
}

TEST_CASE("end-to-end strategy reports open cases honestly") {
  ColourOutcome cyc = colour(build_from_spec("C27"));
  CHECK(cyc.status == ColourStatus::NoConstructionKnown);
  CHECK(trace_contains(cyc, "stop reason=cyclic"));

  ColourOutcome l4 = colour(build_from_spec("L4"));
  CHECK(l4.status == ColourStatus::NoConstructionKnown);
  CHECK(trace_contains(l4, "Lr-open"));
}
