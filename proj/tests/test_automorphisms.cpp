#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "colouring/automorphisms.hpp"
#include "colouring/tables.hpp"

using namespace colouring;

TEST_CASE("automorphism group orders") {
  CHECK(automorphisms(build_from_spec("H3")).size() == 432);
  CHECK(automorphisms(build_from_spec("L3")).size() == 54);
  CHECK(automorphisms(build_from_spec("C3xC3")).size() == 48);  // |GL(2,3)|
  CHECK(automorphisms(build_from_spec("C9")).size() == 6);
}

TEST_CASE("every returned map is an automorphism and the set is closed") {
  FiniteGroup g = build_from_spec("L3");
  std::vector<Perm> auts = automorphisms(g);
  std::set<std::vector<Elem>> index;
  for (const Perm& phi : auts) {
    CHECK(is_automorphism(g, phi));
    index.insert(phi.images);
  }
  CHECK(index.size() == auts.size());  // no duplicates
  // closure under composition, spot-checked on a few pairs
  for (size_t i = 0; i < auts.size(); i += 17)
    for (size_t j = 0; j < auts.size(); j += 13) {
      Perm comp = Perm::identity(g.order);
      for (Elem x = 0; x < g.order; ++x) comp.images[x] = auts[i](auts[j](x));
      CHECK(index.count(comp.images) == 1);
    }
}

TEST_CASE("isomorphism search distinguishes the order-27 groups") {
  FiniteGroup h3 = build_from_spec("H3");
  FiniteGroup l3 = build_from_spec("L3");
  FiniteGroup c27 = build_from_spec("C27");
  FiniteGroup c9c3 = build_from_spec("C9xC3");
  CHECK_FALSE(find_isomorphism(h3, l3).has_value());
  CHECK_FALSE(find_isomorphism(h3, c27).has_value());
  CHECK_FALSE(find_isomorphism(c9c3, l3).has_value());
  CHECK(find_isomorphism(h3, h3).has_value());
}

TEST_CASE("isomorphisms transport structure") {
  FiniteGroup a = build_from_spec("C9xC3");
  FiniteGroup b = build_from_spec("C3xC9");
  auto iso = find_isomorphism(a, b);
  REQUIRE(iso.has_value());
  for (Elem x = 0; x < a.order; ++x)
    for (Elem y = 0; y < a.order; ++y)
      CHECK((*iso)(a.mul(x, y)) == b.mul((*iso)(x), (*iso)(y)));
}

TEST_CASE("transported colouring bijections stay colouring bijections") {
  FiniteGroup a = build_from_spec("H3");
  std::vector<Perm> isos = find_isomorphisms(a, a, 10);
  REQUIRE(isos.size() == 10);
  Perm sigma = tables::h3_sigma();
  for (const Perm& iso : isos)
    CHECK(is_colouring_bijection(a, transport(sigma, iso)));
}
