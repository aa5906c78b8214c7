#include "colouring/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace colouring {

Elem FiniteGroup::pow(Elem g, long long e) const {
  int n = element_order(g);
  e %= n;
  if (e < 0) e += n;
  Elem acc = 0;
  for (long long i = 0; i < e; ++i) acc = mul(acc, g);
  return acc;
}

int FiniteGroup::element_order(Elem g) const {
  int n = 1;
  Elem x = g;
  while (x != 0) {
    x = mul(x, g);
    ++n;
  }
  return n;
}

std::string FiniteGroup::label(Elem g) const {
  std::ostringstream os;
  os << '(';
  const auto& c = labels[g];
  for (size_t i = 0; i < c.size(); ++i) {
    if (i) os << ',';
    os << c[i];
  }
  os << ')';
  return os.str();
}

std::optional<Elem> FiniteGroup::element_by_label(const std::string& text) const {
  std::string t;
  for (char ch : text)
    if (!isspace(static_cast<unsigned char>(ch))) t.push_back(ch);
  for (Elem g = 0; g < order; ++g)
    if (label(g) == t) return g;
  return std::nullopt;
}

void FiniteGroup::check_invariants() const {
  const int n = order;
  if (n <= 0 || static_cast<int>(mul_table.size()) != n * n)
    throw std::logic_error("group: malformed table");
  for (Elem g = 0; g < n; ++g) {
    if (mul(0, g) != g || mul(g, 0) != g)
      throw std::logic_error("group: identity axiom fails");
    if (mul(g, inv[g]) != 0 || mul(inv[g], g) != 0)
      throw std::logic_error("group: inverse axiom fails");
  }
  for (Elem g = 0; g < n; ++g) {
    std::vector<bool> row(n, false), col(n, false);
    for (Elem h = 0; h < n; ++h) {
      row[mul(g, h)] = true;
      col[mul(h, g)] = true;
    }
    for (Elem x = 0; x < n; ++x)
      if (!row[x] || !col[x]) throw std::logic_error("group: not a Latin square");
  }
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c)
        if (mul(mul(a, b), c) != mul(a, mul(b, c)))
          throw std::logic_error("group: associativity fails");
}

bool SubgroupData::contains(Elem g) const {
  return std::binary_search(elements.begin(), elements.end(), g);
}

// --- builders -------------------------------------------------------------

namespace {

FiniteGroup from_coordinates(std::vector<int> radices,
                             const std::function<std::vector<int>(const std::vector<int>&,
                                                                  const std::vector<int>&)>& op,
                             std::string name) {
  int n = 1;
  for (int r : radices) n *= r;
  if (n > kMaxGroupOrder)
    throw std::invalid_argument("group order " + std::to_string(n) + " exceeds cap");
  FiniteGroup g;
  g.order = n;
  g.radices = radices;
  g.name = std::move(name);
  g.labels.resize(n);
  std::vector<int> coord(radices.size(), 0);
  for (int i = 0; i < n; ++i) {
    g.labels[i] = coord;
    for (int k = static_cast<int>(radices.size()) - 1; k >= 0; --k) {
      if (++coord[k] < radices[k]) break;
      coord[k] = 0;
    }
  }
  auto index_of = [&](const std::vector<int>& c) {
    int idx = 0;
    for (size_t k = 0; k < c.size(); ++k) idx = idx * radices[k] + c[k];
    return idx;
  };
  g.mul_table.resize(n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      g.mul_table[a * n + b] = index_of(op(g.labels[a], g.labels[b]));
  g.inv.resize(n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (g.mul(a, b) == 0) g.inv[a] = b;
  return g;
}

long long ipow(long long b, int e) {
  long long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

FiniteGroup build_atom(const std::string& tok) {
  if (tok == "H3") {
    return from_coordinates({3, 3, 3},
        [](const std::vector<int>& a, const std::vector<int>& b) {
          return std::vector<int>{(a[0] + b[0]) % 3, (a[1] + b[1]) % 3,
                                  (a[2] + b[2] + a[0] * b[1]) % 3};
        },
        "H3");
  }
  if (tok == "M16") {
    return from_coordinates({8, 2},
        [](const std::vector<int>& a, const std::vector<int>& b) {
          int scale = a[1] ? 5 : 1;
          return std::vector<int>{(a[0] + scale * b[0]) % 8, (a[1] + b[1]) % 2};
        },
        "M16");
  }
  if (tok.size() > 1 && tok[0] == 'C') {
    int n = std::stoi(tok.substr(1));
    if (n < 1) throw std::invalid_argument("bad cyclic order in " + tok);
    return from_coordinates({n},
        [n](const std::vector<int>& a, const std::vector<int>& b) {
          return std::vector<int>{(a[0] + b[0]) % n};
        },
        tok);
  }
  if (tok.size() > 1 && tok[0] == 'L') {
    int r = std::stoi(tok.substr(1));
    if (r < 3) throw std::invalid_argument("L{r} requires r >= 3");
    const int n1 = static_cast<int>(ipow(3, r - 1));
    const int s = 1 + static_cast<int>(ipow(3, r - 2));  // b a b^-1 = a^s
    return from_coordinates({n1, 3},
        [n1, s](const std::vector<int>& a, const std::vector<int>& b) {
          long long scale = 1;
          for (int k = 0; k < a[1]; ++k) scale = scale * s % n1;
          return std::vector<int>{static_cast<int>((a[0] + scale * b[0]) % n1),
                                  (a[1] + b[1]) % 3};
        },
        tok);
  }
  throw std::invalid_argument("unrecognized group spec token: " + tok);
}

}  // namespace

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  long long n = static_cast<long long>(a.order) * b.order;
  if (n > kMaxGroupOrder)
    throw std::invalid_argument("product order exceeds cap");
  FiniteGroup g;
  g.order = static_cast<int>(n);
  g.name = a.name + "x" + b.name;
  g.radices = a.radices;
  g.radices.insert(g.radices.end(), b.radices.begin(), b.radices.end());
  g.labels.resize(g.order);
  g.mul_table.resize(g.order * g.order);
  g.inv.resize(g.order);
  for (int ia = 0; ia < a.order; ++ia)
    for (int ib = 0; ib < b.order; ++ib) {
      int i = ia * b.order + ib;
      g.labels[i] = a.labels[ia];
      g.labels[i].insert(g.labels[i].end(), b.labels[ib].begin(), b.labels[ib].end());
      g.inv[i] = a.inv[ia] * b.order + b.inv[ib];
    }
  for (int ia = 0; ia < a.order; ++ia)
    for (int ib = 0; ib < b.order; ++ib)
      for (int ja = 0; ja < a.order; ++ja)
        for (int jb = 0; jb < b.order; ++jb)
          g.mul_table[(ia * b.order + ib) * g.order + (ja * b.order + jb)] =
              a.mul(ia, ja) * b.order + b.mul(ib, jb);
  return g;
}

FiniteGroup build_from_spec(const std::string& spec) {
  // split on 'x' between tokens; 'x' never occurs inside C{n}/H3/L{r}/M16
  std::vector<std::string> toks;
  std::string cur;
  for (char ch : spec) {
    if (ch == 'x') {
      if (cur.empty()) throw std::invalid_argument("malformed spec: " + spec);
      toks.push_back(cur);
      cur.clear();
    } else if (!isspace(static_cast<unsigned char>(ch))) {
      cur.push_back(ch);
    }
  }
  if (cur.empty()) throw std::invalid_argument("malformed spec: " + spec);
  toks.push_back(cur);

  FiniteGroup g = build_atom(toks[0]);
  for (size_t i = 1; i < toks.size(); ++i) g = direct_product(g, build_atom(toks[i]));
  g.name = spec;
  return g;
}

// --- structure ------------------------------------------------------------

SubgroupData center(const FiniteGroup& g) {
  SubgroupData z;
  for (Elem a = 0; a < g.order; ++a) {
    bool central = true;
    for (Elem b = 0; b < g.order && central; ++b)
      central = g.mul(a, b) == g.mul(b, a);
    if (central) z.elements.push_back(a);
  }
  z.generators = z.elements;
  return z;
}

SubgroupData subgroup_generated(const FiniteGroup& g, const std::vector<Elem>& gens) {
  std::set<Elem> seen{0};
  std::vector<Elem> frontier{0};
  while (!frontier.empty()) {
    std::vector<Elem> next;
    for (Elem a : frontier)
      for (Elem s : gens) {
        Elem b = g.mul(a, s);
        if (seen.insert(b).second) next.push_back(b);
      }
    frontier = std::move(next);
  }
  SubgroupData h;
  h.elements.assign(seen.begin(), seen.end());
  h.generators = gens;
  return h;
}

SubgroupData whole_group(const FiniteGroup& g) {
  SubgroupData h;
  h.elements.resize(g.order);
  std::iota(h.elements.begin(), h.elements.end(), 0);
  h.generators = generating_tuple(g);
  return h;
}

bool is_normal(const FiniteGroup& g, const SubgroupData& h) {
  for (Elem t = 0; t < g.order; ++t)
    for (Elem x : h.elements)
      if (!h.contains(g.conj(t, x))) return false;
  return true;
}

bool is_abelian(const FiniteGroup& g) {
  for (Elem a = 0; a < g.order; ++a)
    for (Elem b = a + 1; b < g.order; ++b)
      if (g.mul(a, b) != g.mul(b, a)) return false;
  return true;
}

CosetDecomposition quotient(const FiniteGroup& g, const SubgroupData& h) {
  if (!is_normal(g, h)) throw std::invalid_argument("quotient: subgroup is not normal");
  const int n = g.order;
  // representative of the coset H*g = least element of {x*g : x in H}
  std::vector<Elem> rep(n);
  for (Elem a = 0; a < n; ++a) {
    Elem best = a;
    for (Elem x : h.elements) best = std::min(best, g.mul(x, a));
    rep[a] = best;
  }
  std::vector<Elem> reps;
  for (Elem a = 0; a < n; ++a)
    if (rep[a] == a) reps.push_back(a);

  CosetDecomposition dec;
  dec.parent = &g;
  dec.subgroup = h;
  dec.transversal = reps;
  dec.tau = reps;
  dec.pi.resize(n);
  std::map<Elem, int> idx;
  for (size_t i = 0; i < reps.size(); ++i) idx[reps[i]] = static_cast<int>(i);
  for (Elem a = 0; a < n; ++a) dec.pi[a] = idx[rep[a]];

  const int q = static_cast<int>(reps.size());
  FiniteGroup& quo = dec.quotient;
  quo.order = q;
  quo.name = g.name + "/(" + std::to_string(h.order()) + ")";
  quo.radices = g.radices;
  quo.labels.resize(q);
  quo.mul_table.resize(q * q);
  quo.inv.resize(q);
  for (int i = 0; i < q; ++i) quo.labels[i] = g.labels[reps[i]];
  for (int i = 0; i < q; ++i) {
    for (int j = 0; j < q; ++j)
      quo.mul_table[i * q + j] = dec.pi[g.mul(reps[i], reps[j])];
    quo.inv[i] = dec.pi[g.inv[reps[i]]];
  }
  return dec;
}

std::pair<Elem, Elem> CosetDecomposition::decompose(Elem g) const {
  Elem t = tau[pi[g]];
  Elem h = parent->mul(g, parent->inv[t]);
  return {h, t};
}

ConjugationParams conjugation_params(const FiniteGroup& g, Elem c, Elem b, Elem t) {
  const Elem target = g.conj(t, b);
  const int ob = g.element_order(b);
  const int oc = g.element_order(c);
  const int m_range = std::max(1, ob / 3);
  for (int m = 0; m < m_range; ++m) {
    Elem bp = g.pow(b, 1 + 3 * m);
    for (int l = 0; l < oc; ++l)
      if (g.mul(bp, g.pow(c, l)) == target) return {m, l};
  }
  throw std::runtime_error("conjugation_params: t b t^-1 not of the form b^(1+3m) c^l");
}

Classification classify(const FiniteGroup& g) {
  Classification res;
  std::vector<int> orders(g.order);
  int max_order = 1;
  for (Elem a = 0; a < g.order; ++a) {
    orders[a] = g.element_order(a);
    max_order = std::max(max_order, orders[a]);
  }
  if (max_order == g.order) {
    res.kind = GroupClass::Cyclic;
    res.invariant_factors = {g.order};
    return res;
  }
  if (is_abelian(g)) {
    res.kind = GroupClass::Abelian;
    // primary decomposition per prime from order-divisor counts
    std::map<int, std::vector<int>> primary;  // prime -> exponent multiset (desc)
    int n = g.order;
    for (int p = 2; p <= n; ++p) {
      if (n % p) continue;
      while (n % p == 0) n /= p;
      std::vector<int> cnt;  // cnt[k] = #elements with x^(p^k) = e
      long long pk = 1;
      cnt.push_back(1);
      while (true) {
        pk *= p;
        int c = 0;
        for (Elem a = 0; a < g.order; ++a)
          if (pk % orders[a] == 0) ++c;
        cnt.push_back(c);
        if (c == cnt[cnt.size() - 2]) break;  // saturated
      }
      // cnt[k] = p^(sum min(e_i, k)); recover the e_i
      std::vector<int> exps;
      for (size_t k = 1; k < cnt.size(); ++k) {
        int log_step = 0;
        for (int v = cnt[k] / cnt[k - 1]; v > 1; v /= p) ++log_step;
        // log_step = #components with e_i >= k
        exps.push_back(log_step);
      }
      std::vector<int> comp;
      for (size_t k = 0; k < exps.size(); ++k) {
        int next = (k + 1 < exps.size()) ? exps[k + 1] : 0;
        for (int c = 0; c < exps[k] - next; ++c) comp.push_back(static_cast<int>(k) + 1);
      }
      std::sort(comp.rbegin(), comp.rend());
      primary[p] = comp;
    }
    // combine into invariant factors, largest first
    size_t rank = 0;
    for (auto& [p, comp] : primary) rank = std::max(rank, comp.size());
    for (size_t i = 0; i < rank; ++i) {
      long long f = 1;
      for (auto& [p, comp] : primary)
        if (i < comp.size()) f *= ipow(p, comp[i]);
      res.invariant_factors.push_back(static_cast<int>(f));
    }
    return res;
  }
  // nonabelian 3-group with a cyclic maximal subgroup is L_r
  int n = g.order, r = 0;
  while (n % 3 == 0) {
    n /= 3;
    ++r;
  }
  if (n == 1 && max_order * 3 == g.order) {
    res.kind = GroupClass::Lr;
    res.r = r;
    return res;
  }
  res.kind = GroupClass::OtherNonabelian;
  return res;
}

std::string Classification::to_string() const {
  switch (kind) {
    case GroupClass::Cyclic:
      return "cyclic";
    case GroupClass::Abelian: {
      std::string s = "abelian(";
      for (size_t i = 0; i < invariant_factors.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(invariant_factors[i]);
      }
      return s + ")";
    }
    case GroupClass::Lr:
      return "Lr(" + std::to_string(r) + ")";
    case GroupClass::OtherNonabelian:
      return "other-nonabelian";
  }
  return "?";
}

std::vector<LiftingSubgroup> enumerate_lifting_subgroups(const FiniteGroup& g) {
  std::vector<LiftingSubgroup> out;
  std::set<std::vector<Elem>> seen;
  const SubgroupData z = center(g);

  auto quotient_noncyclic = [&](const SubgroupData& h) {
    auto dec = quotient(g, h);
    return classify(dec.quotient).kind != GroupClass::Cyclic;
  };

  // normal C3xC3: generated by two commuting order-3 elements
  for (Elem a = 1; a < g.order; ++a) {
    if (g.element_order(a) != 3) continue;
    for (Elem b = a + 1; b < g.order; ++b) {
      if (g.element_order(b) != 3 || g.mul(a, b) != g.mul(b, a)) continue;
      if (b == g.mul(a, a)) continue;  // b in <a>
      auto h = subgroup_generated(g, {a, b});
      if (h.order() != 9) continue;
      if (!seen.insert(h.elements).second) continue;
      if (!is_normal(g, h)) continue;
      bool central = true;
      for (Elem x : h.elements) central = central && z.contains(x);
      out.push_back({h, central ? LiftKind::C3C3Central : LiftKind::C3C3,
                     quotient_noncyclic(h)});
    }
  }

  // abelian normal C9xC3 splitting as <c> x <b> with c central
  if (g.order % 27 == 0) {
    for (Elem c : z.elements) {
      int oc = g.element_order(c);
      if (oc != 3 && oc != 9) continue;
      for (Elem b = 1; b < g.order; ++b) {
        int ob = g.element_order(b);
        if (!((oc == 9 && ob == 3) || (oc == 3 && ob == 9))) continue;
        // direct product requires trivial intersection of <c> and <b>
        auto cc = subgroup_generated(g, {c});
        auto bb = subgroup_generated(g, {b});
        bool trivial = true;
        for (Elem x : bb.elements)
          if (x != 0 && cc.contains(x)) trivial = false;
        if (!trivial) continue;
        auto h = subgroup_generated(g, {c, b});
        if (h.order() != 27) continue;
        if (!seen.insert(h.elements).second) continue;
        if (!is_normal(g, h) || !std::all_of(h.elements.begin(), h.elements.end(),
                                             [&](Elem x) {
                                               for (Elem y : h.elements)
                                                 if (g.mul(x, y) != g.mul(y, x)) return false;
                                               return true;
                                             }))
          continue;
        out.push_back({h, LiftKind::C9C3, quotient_noncyclic(h)});
      }
    }
  }

  std::sort(out.begin(), out.end(), [](const LiftingSubgroup& a, const LiftingSubgroup& b) {
    if (a.kind != b.kind) return static_cast<int>(a.kind) < static_cast<int>(b.kind);
    return a.subgroup.elements < b.subgroup.elements;
  });
  return out;
}

std::vector<Elem> generating_tuple(const FiniteGroup& g) {
  // For p-groups, picking outside the growing closure of the Frattini
  // subgroup <p-th powers, commutators> yields a minimal generating tuple
  // (Burnside basis theorem).
  int n = g.order, p = 0;
  for (int q = 2; q <= n; ++q)
    if (n % q == 0) {
      p = q;
      break;
    }
  std::vector<Elem> base;
  bool prime_power = p > 0;
  if (prime_power) {
    int m = n;
    while (m % p == 0) m /= p;
    prime_power = m == 1;
  }
  if (prime_power && n > 1) {
    std::set<Elem> frat;
    for (Elem a = 0; a < n; ++a) frat.insert(g.pow(a, p));
    for (Elem a = 0; a < n; ++a)
      for (Elem b = a + 1; b < n; ++b)
        frat.insert(g.mul(g.mul(g.inv[a], g.inv[b]), g.mul(a, b)));
    base.assign(frat.begin(), frat.end());
  }

  std::vector<Elem> gens;
  auto closure = [&]() {
    std::vector<Elem> all = base;
    all.insert(all.end(), gens.begin(), gens.end());
    if (all.empty()) all.push_back(0);
    return subgroup_generated(g, all);
  };
  SubgroupData h = closure();
  while (h.order() < g.order) {
    for (Elem a = 1; a < g.order; ++a)
      if (!h.contains(a)) {
        gens.push_back(a);
        break;
      }
    h = closure();
  }
  if (gens.empty()) gens.push_back(0);
  // the picks alone must generate (guaranteed for p-groups; verified anyway)
  if (subgroup_generated(g, gens).order() != g.order) {
    gens.clear();
    h.elements = {0};
    while (h.order() < g.order) {
      for (Elem a = 1; a < g.order; ++a)
        if (!h.contains(a)) {
          gens.push_back(a);
          break;
        }
      h = subgroup_generated(g, gens);
    }
  }
  return gens;
}

}  // namespace colouring
