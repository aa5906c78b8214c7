#include "colouring/lifting.hpp"

#include <algorithm>
#include <stdexcept>

#include "colouring/automorphisms.hpp"
#include "colouring/search.hpp"
#include "colouring/tables.hpp"

namespace colouring {

namespace {

bool subgroup_central(const FiniteGroup& g, const SubgroupData& h) {
  for (Elem x : h.elements)
    for (Elem y = 0; y < g.order; ++y)
      if (g.mul(x, y) != g.mul(y, x)) return false;
  return true;
}

Elem phi_of(const CosetDecomposition& dec, const Perm& Phi, Elem t) {
  return dec.tau[Phi(dec.pi[t])];
}

void require_quotient_cb(const CosetDecomposition& dec, const Perm& Phi,
                         const char* who) {
  if (Phi.size() != dec.quotient.order)
    throw std::invalid_argument(std::string(who) + ": Phi size does not match quotient");
  if (!is_colouring_bijection(dec.quotient, Phi))
    throw std::invalid_argument(std::string(who) + ": Phi is not a colouring bijection of the quotient");
}

Perm verified(const FiniteGroup& g, Perm sigma, const char* who) {
  if (!is_colouring_bijection(g, sigma))
    throw std::logic_error(std::string(who) + ": lifted map failed verification");
  return sigma;
}

// A direct-factor pair <c> x <b> covering H, with coordinate lookup
// elem(i, j) = c^i b^j.
struct SplitBasis {
  Elem c = -1, b = -1;
  int oc = 0, ob = 0;
  std::vector<Elem> elem_of;          // i * ob + j -> parent element
  std::vector<std::pair<int, int>> coord;  // parent element -> (i, j), or (-1,-1)

  bool valid() const { return c >= 0; }
};

SplitBasis make_split(const FiniteGroup& g, const SubgroupData& h, Elem c, Elem b) {
  SplitBasis s;
  s.c = c;
  s.b = b;
  s.oc = g.element_order(c);
  s.ob = g.element_order(b);
  s.elem_of.assign(s.oc * s.ob, -1);
  s.coord.assign(g.order, {-1, -1});
  for (int i = 0; i < s.oc; ++i)
    for (int j = 0; j < s.ob; ++j) {
      Elem e = g.mul(g.pow(c, i), g.pow(b, j));
      s.elem_of[i * s.ob + j] = e;
      s.coord[e] = {i, j};
    }
  for (Elem x : h.elements)
    if (s.coord[x].first < 0) return {};  // <c> x <b> does not cover H
  return s;
}

/// Find H = <c> x <b> with c in the centre of G and |c| = want_oc.
SplitBasis find_split(const FiniteGroup& g, const SubgroupData& h, int want_oc,
                      const SubgroupData& z) {
  for (Elem c : h.elements) {
    if (g.element_order(c) != want_oc || !z.contains(c)) continue;
    auto cc = subgroup_generated(g, {c});
    for (Elem b : h.elements) {
      if (g.element_order(b) * want_oc != 27) continue;
      bool trivial = true;
      auto bb = subgroup_generated(g, {b});
      for (Elem x : bb.elements)
        if (x != 0 && cc.contains(x)) trivial = false;
      if (!trivial) continue;
      SplitBasis s = make_split(g, h, c, b);
      if (s.valid()) return s;
    }
  }
  return {};
}

// The per-coset layer maps of the order-9-central lift are h -> q(h)+h+beta(h)
// for d1 and h -> q(h)+beta(h) for d3, with q(c^u b^j) = z^(lambda j). The
// second map is the analogue of the C map of the other case; the published
// alpha tables only make the first one bijective for lambda != 0, so for
// lambda = 1, 2 a corrected map is derived here by backtracking (the
// lexicographically first beta with beta, -h+beta, q+h+beta, q+beta all
// bijective). alpha_0 already satisfies all four conditions.
std::array<tables::Coord2, 27> derive_case1_map(int lambda) {
  using tables::Coord2;
  auto add = [](Coord2 p, Coord2 q) { return Coord2{(p.a + q.a) % 9, (p.b + q.b) % 3}; };
  std::array<Coord2, 27> beta{};
  bool used_b[27] = {}, used_d2[27] = {}, used_t[27] = {}, used_u[27] = {};
  auto at = [](Coord2 p) { return p.a * 3 + p.b; };
  auto dfs = [&](auto&& self, int i) -> bool {
    if (i == 27) return true;
    Coord2 h{i / 3, i % 3};
    Coord2 q{3 * lambda * h.b % 9, 0};
    Coord2 nh{(9 - h.a) % 9, (3 - h.b) % 3};
    for (int v = 0; v < 27; ++v) {
      if (used_b[v]) continue;
      Coord2 cand{v / 3, v % 3};
      int d2 = at(add(nh, cand)), t = at(add(add(q, h), cand)), u = at(add(q, cand));
      if (used_d2[d2] || used_t[t] || used_u[u]) continue;
      used_b[v] = used_d2[d2] = used_t[t] = used_u[u] = true;
      beta[i] = cand;
      if (self(self, i + 1)) return true;
      used_b[v] = used_d2[d2] = used_t[t] = used_u[u] = false;
    }
    return false;
  };
  if (!dfs(dfs, 0)) throw std::logic_error("derive_case1_map: no map found");
  return beta;
}

const std::array<tables::Coord2, 27>& case1_map(int lambda) {
  static const std::array<std::array<tables::Coord2, 27>, 3> maps = {
      tables::alpha_map(0), derive_case1_map(1), derive_case1_map(2)};
  return maps[lambda];
}

}  // namespace

SubgroupView subgroup_as_group(const FiniteGroup& g, const SubgroupData& h) {
  SubgroupView v;
  v.to_parent = h.elements;
  v.from_parent.assign(g.order, -1);
  for (size_t i = 0; i < h.elements.size(); ++i)
    v.from_parent[h.elements[i]] = static_cast<int>(i);

  FiniteGroup& s = v.group;
  s.order = h.order();
  s.mul_table.resize(static_cast<size_t>(s.order) * s.order);
  s.inv.resize(s.order);
  s.radices = g.radices;
  s.name = g.name + "-sub" + std::to_string(s.order);
  for (int a = 0; a < s.order; ++a) {
    s.labels.push_back(g.labels[h.elements[a]]);
    s.inv[a] = v.from_parent[g.inv[h.elements[a]]];
    if (s.inv[a] < 0) throw std::invalid_argument("subgroup_as_group: not closed under inverse");
    for (int b = 0; b < s.order; ++b) {
      int p = v.from_parent[g.mul(h.elements[a], h.elements[b])];
      if (p < 0) throw std::invalid_argument("subgroup_as_group: not closed under product");
      s.mul_table[a * s.order + b] = p;
    }
  }
  return v;
}

TransversalScheme transversal_scheme(const CosetDecomposition& dec, const Perm& Phi) {
  require_quotient_cb(dec, Phi, "transversal_scheme");
  const FiniteGroup& g = *dec.parent;
  const int n = dec.quotient.order;

  TransversalScheme s;
  s.phi.resize(n);
  s.xi.resize(n);
  s.zeta.resize(n);
  s.omega.resize(n);
  s.t1.resize(n);
  s.t2.resize(n);
  s.t3.resize(n);
  for (int q = 0; q < n; ++q) {
    Elem t = dec.tau[q], pt = phi_of(dec, Phi, t);
    s.phi[q] = Phi(q);
    auto [x1, u1] = dec.decompose(g.mul(pt, t));
    auto [x2, u2] = dec.decompose(g.mul(g.inv[t], pt));
    auto [x3, u3] = dec.decompose(g.mul(g.mul(g.inv[t], pt), t));
    s.xi[q] = x1;
    s.zeta[q] = x2;
    s.omega[q] = x3;
    s.t1[q] = dec.pi[u1];
    s.t2[q] = dec.pi[u2];
    s.t3[q] = dec.pi[u3];
  }
  if (!is_permutation(s.t1) || !is_permutation(s.t2) || !is_permutation(s.t3))
    throw std::logic_error("transversal_scheme: t_i maps are not bijections");
  return s;
}

Perm lift_central(const FiniteGroup& g, const CosetDecomposition& dec,
                  const Perm& Phi, const Perm& psi) {
  if (!subgroup_central(g, dec.subgroup))
    throw std::invalid_argument("lift_central: subgroup is not central");
  require_quotient_cb(dec, Phi, "lift_central");
  SubgroupView v = subgroup_as_group(g, dec.subgroup);
  if (psi.size() != v.group.order || !is_colouring_bijection(v.group, psi))
    throw std::invalid_argument("lift_central: psi is not a colouring bijection of the subgroup");

  Perm sigma;
  sigma.images.resize(g.order);
  for (Elem e = 0; e < g.order; ++e) {
    auto [h, t] = dec.decompose(e);
    Elem ph = v.to_parent[psi(v.from_parent[h])];
    sigma.images[e] = g.mul(ph, phi_of(dec, Phi, t));
  }
  return verified(g, std::move(sigma), "lift_central");
}

Perm lift_c3c3(const FiniteGroup& g, const SubgroupData& h, const Perm& Phi) {
  if (h.order() != 9) throw std::invalid_argument("lift_c3c3: subgroup order is not 9");
  for (Elem x : h.elements)
    if (x != 0 && g.element_order(x) != 3)
      throw std::invalid_argument("lift_c3c3: subgroup is not elementary abelian");
  if (!is_normal(g, h)) throw std::invalid_argument("lift_c3c3: subgroup is not normal");
  CosetDecomposition dec = quotient(g, h);
  require_quotient_cb(dec, Phi, "lift_c3c3");

  const SubgroupData zg = center(g);
  Elem z = -1;
  for (Elem x : h.elements)
    if (x != 0 && zg.contains(x)) {
      z = x;
      break;
    }
  if (z < 0) throw std::invalid_argument("lift_c3c3: H meets the centre trivially");

  if (subgroup_central(g, h)) {
    // psi = the fixed linear map M1 on H in a (z, b) basis
    auto zz = subgroup_generated(g, {z});
    Elem b = -1;
    for (Elem x : h.elements)
      if (!zz.contains(x)) {
        b = x;
        break;
      }
    SplitBasis s = make_split(g, h, z, b);
    SubgroupView v = subgroup_as_group(g, h);
    Perm psi;
    psi.images.resize(9);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        auto im = kM1.apply(i, j);
        psi.images[v.from_parent[s.elem_of[i * 3 + j]]] =
            v.from_parent[s.elem_of[im[0] * 3 + im[1]]];
      }
    return lift_central(g, dec, Phi, psi);
  }

  auto zz = subgroup_generated(g, {z});
  Elem b = -1;
  for (Elem x : h.elements)
    if (!zz.contains(x)) {
      b = x;
      break;
    }
  SplitBasis s = make_split(g, h, z, b);
  if (!s.valid()) throw std::logic_error("lift_c3c3: basis does not span H");

  // per-coset linear part: M(psi_t) = C(-alpha) M_t, alpha = k(phi(t)^-1)
  std::vector<Matrix2F3> mpsi(dec.quotient.order);
  for (int q = 0; q < dec.quotient.order; ++q) {
    Elem pt = phi_of(dec, Phi, dec.tau[q]);
    ConjugationParams cp = conjugation_params(g, z, b, g.inv[pt]);
    mpsi[q] = shear(-cp.l) * pair_choice(cp.l);
  }

  Perm sigma;
  sigma.images.resize(g.order);
  for (Elem e = 0; e < g.order; ++e) {
    auto [hh, t] = dec.decompose(e);
    int q = dec.pi[t];
    auto [ci, cj] = s.coord[hh];
    auto im = mpsi[q].apply(ci, cj);
    sigma.images[e] = g.mul(s.elem_of[im[0] * 3 + im[1]], phi_of(dec, Phi, t));
  }
  return verified(g, std::move(sigma), "lift_c3c3");
}

Perm lift_c9c3(const FiniteGroup& g, const SubgroupData& h, const Perm& Phi) {
  if (h.order() != 27) throw std::invalid_argument("lift_c9c3: subgroup order is not 27");
  int max_order = 1;
  for (Elem x : h.elements) {
    max_order = std::max(max_order, g.element_order(x));
    for (Elem y : h.elements)
      if (g.mul(x, y) != g.mul(y, x))
        throw std::invalid_argument("lift_c9c3: subgroup is not abelian");
  }
  if (max_order != 9) throw std::invalid_argument("lift_c9c3: subgroup is not C9xC3");
  if (!is_normal(g, h)) throw std::invalid_argument("lift_c9c3: subgroup is not normal");
  CosetDecomposition dec = quotient(g, h);
  require_quotient_cb(dec, Phi, "lift_c9c3");

  const SubgroupData zg = center(g);

  if (subgroup_central(g, h)) {
    // psi = alpha_0, a colouring bijection of abelian C9xC3
    SplitBasis s = find_split(g, h, 9, zg);
    if (!s.valid()) throw std::logic_error("lift_c9c3: no order-9 direct factor");
    SubgroupView v = subgroup_as_group(g, h);
    auto a0 = tables::alpha_map(0);
    Perm psi;
    psi.images.resize(27);
    for (int u = 0; u < 9; ++u)
      for (int j = 0; j < 3; ++j) {
        auto im = a0[u * 3 + j];
        psi.images[v.from_parent[s.elem_of[u * 3 + j]]] =
            v.from_parent[s.elem_of[im.a * 3 + im.b]];
      }
    return lift_central(g, dec, Phi, psi);
  }

  // Case 1: central c of order 9, |b| = 3; sigma(ht) = alpha_{u(t)}(h) phi(t)
  if (SplitBasis s = find_split(g, h, 9, zg); s.valid()) {
    std::vector<int> u(dec.quotient.order);
    for (int q = 0; q < dec.quotient.order; ++q) {
      Elem pt = phi_of(dec, Phi, dec.tau[q]);
      ConjugationParams cp = conjugation_params(g, s.c, s.b, pt);
      if (cp.m != 0 || cp.l % 3 != 0)
        throw std::logic_error("lift_c9c3: conjugation is not by a power of z");
      u[q] = cp.l / 3;  // t b t^-1 = b c^(3k) = z^k b
    }
    Perm sigma;
    sigma.images.resize(g.order);
    for (Elem e = 0; e < g.order; ++e) {
      auto [hh, t] = dec.decompose(e);
      int q = dec.pi[t];
      auto [cu, bj] = s.coord[hh];  // h = c^cu b^bj <-> (cu, bj)
      auto im = case1_map(u[q])[cu * 3 + bj];
      sigma.images[e] = g.mul(s.elem_of[im.a * 3 + im.b], phi_of(dec, Phi, t));
    }
    return verified(g, std::move(sigma), "lift_c9c3");
  }

  // Case 2: central c of order 3, |b| = 9; sigma(ht) = f_{lambda(t),ell(t)}(h) phi(t)
  if (SplitBasis s = find_split(g, h, 3, zg); s.valid()) {
    std::vector<std::array<tables::Coord2, 27>> f(dec.quotient.order);
    for (int q = 0; q < dec.quotient.order; ++q) {
      Elem pt = phi_of(dec, Phi, dec.tau[q]);
      ConjugationParams cp = conjugation_params(g, s.c, s.b, pt);
      f[q] = tables::f_map(cp.m, cp.l);
    }
    Perm sigma;
    sigma.images.resize(g.order);
    for (Elem e = 0; e < g.order; ++e) {
      auto [hh, t] = dec.decompose(e);
      int q = dec.pi[t];
      auto [cm, bj] = s.coord[hh];  // h = c^cm b^bj = b^bj c^cm <-> (bj, cm)
      auto im = f[q][bj * 3 + cm];  // im = (j', m') meaning b^j' c^m'
      sigma.images[e] = g.mul(s.elem_of[im.b * 9 + im.a], phi_of(dec, Phi, t));
    }
    return verified(g, std::move(sigma), "lift_c9c3");
  }

  throw std::invalid_argument("lift_c9c3: H admits no <c> x <b> split with c central");
}

Perm reference_base_cb(const std::string& spec) {
  Perm sigma;
  if (spec == "C3xC3") {
    sigma.images.resize(9);
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) {
        auto im = kM1.apply(a, b);
        sigma.images[a * 3 + b] = im[0] * 3 + im[1];
      }
  } else if (spec == "C9xC3") {
    auto a0 = tables::alpha_map(0);
    sigma.images.resize(27);
    for (int i = 0; i < 27; ++i) sigma.images[i] = a0[i].a * 3 + a0[i].b;
  } else if (spec == "C3xC3xC3") {
    // companion matrix of x^3 - x + 1 over F3: M, M+I, M-I all invertible
    static const int m[3][3] = {{0, 0, 2}, {1, 0, 1}, {0, 1, 0}};
    sigma.images.resize(27);
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b)
        for (int c = 0; c < 3; ++c) {
          int ia = (m[0][0] * a + m[0][1] * b + m[0][2] * c) % 3;
          int ib = (m[1][0] * a + m[1][1] * b + m[1][2] * c) % 3;
          int ic = (m[2][0] * a + m[2][1] * b + m[2][2] * c) % 3;
          sigma.images[a * 9 + b * 3 + c] = ia * 9 + ib * 3 + ic;
        }
  } else if (spec == "H3") {
    sigma = tables::h3_sigma();
  } else if (spec == "L3") {
    sigma = tables::l3_sigma();
  } else {
    throw std::invalid_argument("reference_base_cb: no stored base for " + spec);
  }
  FiniteGroup ref = build_from_spec(spec);
  if (!is_colouring_bijection(ref, sigma))
    throw std::logic_error("reference_base_cb: stored base failed verification");
  return sigma;
}

namespace {

std::string base_spec_for(const Classification& cls, int order) {
  if (cls.kind == GroupClass::Abelian) {
    if (cls.invariant_factors == std::vector<int>{3, 3}) return "C3xC3";
    if (cls.invariant_factors == std::vector<int>{9, 3}) return "C9xC3";
    if (cls.invariant_factors == std::vector<int>{3, 3, 3}) return "C3xC3xC3";
  }
  if (cls.kind == GroupClass::Lr && cls.r == 3) return "L3";
  if (cls.kind == GroupClass::OtherNonabelian && order == 27) return "H3";
  return {};
}

const char* kind_name(LiftKind k) {
  switch (k) {
    case LiftKind::C3C3Central: return "c3c3-central";
    case LiftKind::C3C3: return "c3c3";
    case LiftKind::C9C3: return "c9c3";
  }
  return "?";
}

}  // namespace

ColourOutcome colour(const FiniteGroup& g, uint64_t fallback_budget) {
  if (g.order > 243) throw std::invalid_argument("colour: guard |G| <= 243 violated");
  for (int n = g.order; n > 1; n /= 3)
    if (n % 3 != 0) throw std::invalid_argument("colour: not a 3-group");

  ColourOutcome out;
  Classification cls = classify(g);
  out.trace.push_back("enter group=" + g.name + " order=" + std::to_string(g.order) +
                      " class=" + cls.to_string());

  if (g.order == 1) {
    out.status = ColourStatus::Success;
    out.sigma = Perm::identity(1);
    out.trace.push_back("base spec=trivial");
    return out;
  }
  if (cls.kind == GroupClass::Cyclic) {
    out.trace.push_back("stop reason=cyclic");
    return out;
  }
  if (cls.kind == GroupClass::Lr && cls.r >= 4) {
    out.trace.push_back("stop reason=Lr-open r=" + std::to_string(cls.r));
    return out;
  }

  if (g.order <= 27) {
    std::string spec = base_spec_for(cls, g.order);
    if (spec.empty()) throw std::logic_error("colour: unclassified small group");
    FiniteGroup ref = build_from_spec(spec);
    auto iso = find_isomorphism(ref, g);
    if (!iso) throw std::logic_error("colour: classification mismatch for " + spec);
    out.sigma = transport(reference_base_cb(spec), *iso);
    if (!is_colouring_bijection(g, out.sigma))
      throw std::logic_error("colour: transported base failed verification");
    out.status = ColourStatus::Success;
    out.trace.push_back("base spec=" + spec + " transported=1 verified=1");
    return out;
  }

  for (const LiftingSubgroup& ls : enumerate_lifting_subgroups(g)) {
    if (!ls.quotient_noncyclic) continue;
    CosetDecomposition dec = quotient(g, ls.subgroup);
    ColourOutcome sub = colour(dec.quotient, fallback_budget);
    for (const std::string& line : sub.trace) out.trace.push_back("q:" + line);
    if (sub.status != ColourStatus::Success) continue;
    out.sigma = ls.kind == LiftKind::C9C3 ? lift_c9c3(g, ls.subgroup, sub.sigma)
                                          : lift_c3c3(g, ls.subgroup, sub.sigma);
    out.status = ColourStatus::Success;
    out.trace.push_back(std::string("lift kind=") + kind_name(ls.kind) +
                        " subgroup_order=" + std::to_string(ls.subgroup.order()) +
                        " quotient_order=" + std::to_string(dec.quotient.order) +
                        " verified=1");
    return out;
  }

  SearchConfig cfg;
  cfg.target = Target::ColouringBijection;
  cfg.mode = SearchMode::First;
  cfg.node_budget = fallback_budget;
  SearchResult res = search(g, cfg);
  out.trace.push_back("fallback nodes=" + std::to_string(res.nodes_explored) +
                      " exhausted=" + std::to_string(res.exhausted ? 1 : 0) +
                      " found=" + std::to_string(res.found.size()));
  if (res.found.empty()) {
    out.status = res.exhausted ? ColourStatus::NoConstructionKnown
                               : ColourStatus::SearchExhausted;
    return out;
  }
  out.sigma = res.found.front();
  if (!is_colouring_bijection(g, out.sigma))
    throw std::logic_error("colour: fallback result failed verification");
  out.status = ColourStatus::Success;
  return out;
}

}  // namespace colouring
