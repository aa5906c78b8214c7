#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <sstream>

#include "colouring/graph3.hpp"
#include "colouring/lifting.hpp"
#include "colouring/tables.hpp"

using namespace colouring;

TEST_CASE("vertex indexing round trip") {
  FiniteGroup g = build_from_spec("C9");
  for (int i = 0; i < g.order * g.order * g.order; i += 37) {
    Vertex v = vertex_at(g, i);
    CHECK(vertex_index(g, v) == i);
  }
}

TEST_CASE("neighbourhoods are 6(n-1)-regular, distinct, and symmetric") {
  FiniteGroup g = build_from_spec("H3");
  Vertex v{*g.element_by_label("(1,2,0)"), *g.element_by_label("(0,0,1)"), 0};
  std::vector<Vertex> nb = neighbors(g, v);
  CHECK(nb.size() == 156);
  std::set<int> seen;
  for (const Vertex& u : nb) {
    seen.insert(vertex_index(g, u));
    std::vector<Vertex> back = neighbors(g, u);
    CHECK(std::find(back.begin(), back.end(), v) != back.end());
  }
  CHECK(seen.size() == nb.size());
  CHECK_FALSE(seen.count(vertex_index(g, v)));  // no loops
}

TEST_CASE("colour values follow x^-1 sigma(y) z") {
  FiniteGroup g = build_from_spec("H3");
  Perm sigma = tables::h3_sigma();
  Elem z = *g.element_by_label("(0,0,1)");
  CHECK(g.label(colour_value(g, sigma, {0, z, 0})) == "(2,0,1)");
  for (int i = 0; i < 500; ++i) {
    Vertex v = vertex_at(g, (i * 7919) % (27 * 27 * 27));
    CHECK(colour_value(g, sigma, v) ==
          g.mul(g.inv[v.x], g.mul(sigma(v.y), v.z)));
  }
}

TEST_CASE("a colouring bijection certifies the chromatic number") {
  FiniteGroup g = build_from_spec("C3xC3");
  Perm sigma = reference_base_cb("C3xC3");
  ChromaticCertificate cert = verify_proper_serial(g, sigma, "C3xC3");
  CHECK(cert.proper);
  CHECK(cert.sigma_is_cb);
  CHECK(cert.colours_used == 9);
  CHECK(cert.chi == 9);
  CHECK(cert.clique.size() == 9);
  CHECK_FALSE(cert.violation.has_value());
  for (size_t i = 0; i < cert.clique.size(); ++i)
    for (size_t j = i + 1; j < cert.clique.size(); ++j) {
      auto nb = neighbors(g, cert.clique[i]);
      CHECK(std::find(nb.begin(), nb.end(), cert.clique[j]) != nb.end());
    }
}

TEST_CASE("a non-bijection yields an explicit violating edge") {
  FiniteGroup g = build_from_spec("C3");
  Perm id = Perm::identity(3);
  ChromaticCertificate cert = verify_proper_serial(g, id);
  CHECK_FALSE(cert.proper);
  CHECK_FALSE(cert.sigma_is_cb);
  CHECK(cert.chi == 0);
  REQUIRE(cert.violation.has_value());
  Elem ca = colour_value(g, id, cert.violation->a);
  Elem cb = colour_value(g, id, cert.violation->b);
  CHECK(ca == cb);
  auto nb = neighbors(g, cert.violation->a);
  CHECK(std::find(nb.begin(), nb.end(), cert.violation->b) != nb.end());
}

TEST_CASE("parallel check matches the serial reference exactly") {
  FiniteGroup g = build_from_spec("C3xC3");
  for (const Perm& sigma : {reference_base_cb("C3xC3"), Perm::identity(9)}) {
    ChromaticCertificate s = verify_proper_serial(g, sigma);
    ChromaticCertificate p = verify_proper(g, sigma, 4);
    CHECK(s.proper == p.proper);
    CHECK(s.chi == p.chi);
    CHECK(s.colours_used == p.colours_used);
    CHECK(s.violation.has_value() == p.violation.has_value());
    if (s.violation) {
      CHECK(s.violation->a == p.violation->a);
      CHECK(s.violation->b == p.violation->b);
    }
  }
}

TEST_CASE("DIMACS export") {
  FiniteGroup g = build_from_spec("C3");
  std::stringstream ss;
  export_dimacs(ss, g);
  std::string line;
  REQUIRE(std::getline(ss, line));
  CHECK(line == "p edge 27 162");  // 27 vertices of degree 12
  int edges = 0;
  std::set<std::pair<int, int>> seen;
  while (std::getline(ss, line)) {
    int u, v;
    REQUIRE(sscanf(line.c_str(), "e %d %d", &u, &v) == 2);
    CHECK(u >= 1);
    CHECK(v >= 1);
    CHECK(u <= 27);
    CHECK(v <= 27);
    CHECK(u != v);
    CHECK(seen.insert({std::min(u, v), std::max(u, v)}).second);
    ++edges;
  }
  CHECK(edges == 162);
  CHECK_THROWS_AS(export_dimacs(ss, build_from_spec("H3")),
                  std::invalid_argument);
}
