#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>

#include "colouring/perm.hpp"
#include "colouring/tables.hpp"

using namespace colouring;

namespace {

Perm random_perm(int n, std::mt19937& rng) {
  Perm p = Perm::identity(n);
  std::shuffle(p.images.begin(), p.images.end(), rng);
  return p;
}

}  // namespace

TEST_CASE("delta maps on the H3 reference bijection") {
  FiniteGroup g = build_from_spec("H3");
  Perm sigma = tables::h3_sigma();
  Elem z = *g.element_by_label("(0,0,1)");
  CHECK(g.label(sigma(z)) == "(2,0,1)");
  DeltaTriple d = deltas(g, sigma);
  CHECK(g.label(d.d1[z]) == "(2,0,2)");
  CHECK(g.label(d.d2[z]) == "(2,0,0)");
  CHECK(g.label(d.d3[z]) == "(2,0,1)");
  CHECK(is_colouring_bijection(g, sigma));
}

TEST_CASE("delta maps on the L3 reference bijection") {
  FiniteGroup g = build_from_spec("L3");
  Perm sigma = tables::l3_sigma();
  Elem a = *g.element_by_label("(1,1)");
  CHECK(g.label(sigma(a)) == "(1,2)");
  DeltaTriple d = deltas(g, sigma);
  CHECK(g.label(d.d1[a]) == "(8,0)");
  CHECK(g.label(d.d2[a]) == "(0,1)");
  CHECK(g.label(d.d3[a]) == "(4,2)");
  CHECK(is_colouring_bijection(g, sigma));
}

TEST_CASE("identity is never a colouring bijection on 3-groups") {
  for (const char* spec : {"C3", "C9", "H3"}) {
    FiniteGroup g = build_from_spec(spec);
    CHECK_FALSE(is_colouring_bijection(g, Perm::identity(g.order)));
  }
}

TEST_CASE("d3 factors through d1 for arbitrary maps") {
  std::mt19937 rng(7);
  for (const char* spec : {"C9", "H3", "M16"}) {
    FiniteGroup g = build_from_spec(spec);
    for (int it = 0; it < 50; ++it) {
      Perm sigma = random_perm(g.order, rng);
      DeltaTriple d = deltas(g, sigma);
      for (Elem x = 0; x < g.order; ++x)
        CHECK(d.d3[x] == g.mul(g.inv[x], d.d1[x]));
    }
  }
}

TEST_CASE("abelian: colouring bijection iff strong complete mapping") {
  std::mt19937 rng(11);
  for (const char* spec : {"C9", "C3xC3"}) {
    FiniteGroup g = build_from_spec(spec);
    for (int it = 0; it < 200; ++it) {
      Perm sigma = random_perm(g.order, rng);
      CHECK(is_colouring_bijection(g, sigma) ==
            is_strong_complete_mapping(g, sigma));
    }
  }
}

TEST_CASE("colouring bijection iff inverse is a strong complete mapping with "
          "bijective conjugacy map") {
  std::mt19937 rng(13);
  FiniteGroup g = build_from_spec("H3");
  auto rhs = [&](const Perm& sigma) {
    Perm tau = sigma.inverse();
    return is_strong_complete_mapping(g, tau) &&
           is_permutation(theta_conjugacy(g, tau));
  };
  Perm ref = tables::h3_sigma();
  CHECK(is_colouring_bijection(g, ref));
  CHECK(rhs(ref));
  for (int it = 0; it < 300; ++it) {
    Perm sigma = random_perm(g.order, rng);
    CHECK(is_colouring_bijection(g, sigma) == rhs(sigma));
  }
}

TEST_CASE("squaring is a colouring bijection when the order is coprime to 6") {
  for (const char* spec : {"C5", "C7"}) {
    FiniteGroup g = build_from_spec(spec);
    CHECK(is_colouring_bijection(g, square_map(g)));
  }
}

TEST_CASE("componentwise products preserve colouring bijections") {
  FiniteGroup a = build_from_spec("C5");
  FiniteGroup b = build_from_spec("C7");
  Perm p = product_bijection(a, square_map(a), b, square_map(b));
  CHECK(is_colouring_bijection(direct_product(a, b), p));
}

TEST_CASE("conjugation by an automorphism preserves colouring bijections") {
  FiniteGroup g = build_from_spec("H3");
  Perm sigma = tables::h3_sigma();
  // inner automorphism by x = (1,0,0)
  Perm phi = Perm::identity(g.order);
  Elem x = *g.element_by_label("(1,0,0)");
  for (Elem e = 0; e < g.order; ++e) phi.images[e] = g.conj(x, e);
  REQUIRE(is_automorphism(g, phi));
  CHECK(is_colouring_bijection(g, conj_by_automorphism(g, sigma, phi)));
  CHECK_THROWS_AS(conj_by_automorphism(g, sigma, tables::h3_sigma()),
                  std::invalid_argument);
}

TEST_CASE("permutation file round trip") {
  FiniteGroup g = build_from_spec("L3");
  Perm sigma = tables::l3_sigma();
  std::stringstream ss;
  write_perm(ss, g, sigma);
  PermFile pf = read_perm(ss, &g);
  CHECK(pf.group_spec == "L3");
  CHECK(pf.perm == sigma);
}

TEST_CASE("label-form permutation files resolve against the group") {
  FiniteGroup g = build_from_spec("C3");
  std::stringstream ss;
  ss << "group: C3\n(0) -> (1)\n(1) -> (2)\n(2) -> (0)\n";
  PermFile pf = read_perm(ss, &g);
  CHECK(pf.perm.images == std::vector<Elem>{1, 2, 0});
}

TEST_CASE("bijection utilities") {
  CHECK(is_permutation({2, 0, 1}));
  CHECK_FALSE(is_permutation({0, 0, 1}));
  Perm p{{2, 0, 1}};
  CHECK(p.inverse().images == std::vector<Elem>{1, 2, 0});
  CHECK(Perm::identity(3).images == std::vector<Elem>{0, 1, 2});
}
