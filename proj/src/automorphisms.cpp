#include "colouring/automorphisms.hpp"

#include <algorithm>

namespace colouring {

namespace {

struct ClosureOrder {
  std::vector<Elem> bfs;                    // visit order, bfs[0] = identity
  std::vector<std::pair<Elem, int>> expr;   // elem -> (prev, gen index)
};

ClosureOrder closure_expressions(const FiniteGroup& g, const std::vector<Elem>& gens) {
  ClosureOrder co;
  co.expr.assign(g.order, {-1, -1});
  std::vector<bool> seen(g.order, false);
  seen[0] = true;
  co.bfs.push_back(0);
  for (size_t head = 0; head < co.bfs.size(); ++head) {
    Elem a = co.bfs[head];
    for (size_t gi = 0; gi < gens.size(); ++gi) {
      Elem b = g.mul(a, gens[gi]);
      if (!seen[b]) {
        seen[b] = true;
        co.expr[b] = {a, static_cast<int>(gi)};
        co.bfs.push_back(b);
      }
    }
  }
  return co;
}

}  // namespace

std::vector<Perm> find_isomorphisms(const FiniteGroup& a, const FiniteGroup& b,
                                    size_t limit) {
  std::vector<Perm> out;
  if (a.order != b.order) return out;
  if (a.order > 243)
    throw std::invalid_argument("find_isomorphisms: order cap is 243");

  const std::vector<Elem> gens = generating_tuple(a);
  if (gens.size() > 3)
    throw std::invalid_argument("find_isomorphisms: needs <= 3 generators");

  const ClosureOrder co = closure_expressions(a, gens);
  std::vector<int> ord_a(a.order), ord_b(b.order);
  for (Elem x = 0; x < a.order; ++x) ord_a[x] = a.element_order(x);
  for (Elem x = 0; x < b.order; ++x) ord_b[x] = b.element_order(x);

  std::vector<int> sub_size(gens.size());
  for (size_t k = 0; k < gens.size(); ++k)
    sub_size[k] = subgroup_generated(a, {gens.begin(), gens.begin() + k + 1}).order();

  std::vector<Elem> img(gens.size());
  std::vector<Elem> f(a.order);

  auto leaf_check = [&]() -> bool {
    f[0] = 0;
    for (size_t i = 1; i < co.bfs.size(); ++i) {
      Elem x = co.bfs[i];
      auto [prev, gi] = co.expr[x];
      f[x] = b.mul(f[prev], img[gi]);
    }
    Perm p;
    p.images = f;
    if (!p.is_bijection()) return false;
    // homomorphism on (element, generator) pairs extends to all words
    for (Elem x = 0; x < a.order; ++x)
      for (size_t gi = 0; gi < gens.size(); ++gi)
        if (f[a.mul(x, gens[gi])] != b.mul(f[x], img[gi])) return false;
    return true;
  };

  std::function<void(size_t)> dfs = [&](size_t k) {
    if (limit && out.size() >= limit) return;
    if (k == gens.size()) {
      if (leaf_check()) {
        Perm p;
        p.images = f;
        out.push_back(std::move(p));
      }
      return;
    }
    for (Elem cand = 0; cand < b.order; ++cand) {
      if (ord_b[cand] != ord_a[gens[k]]) continue;
      img[k] = cand;
      std::vector<Elem> prefix(img.begin(), img.begin() + k + 1);
      if (subgroup_generated(b, prefix).order() != sub_size[k]) continue;
      dfs(k + 1);
      if (limit && out.size() >= limit) return;
    }
  };
  dfs(0);
  return out;
}

std::optional<Perm> find_isomorphism(const FiniteGroup& a, const FiniteGroup& b) {
  auto v = find_isomorphisms(a, b, 1);
  if (v.empty()) return std::nullopt;
  return v[0];
}

std::vector<Perm> automorphisms(const FiniteGroup& g) { return find_isomorphisms(g, g); }

}  // namespace colouring
