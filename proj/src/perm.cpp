#include "colouring/perm.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

namespace colouring {

bool is_permutation(const std::vector<Elem>& v) {
  // single-pass seen-bitmask; this is the innermost hot predicate
  const int n = static_cast<int>(v.size());
  static thread_local std::vector<uint32_t> seen;
  static thread_local uint32_t epoch = 0;
  if (static_cast<int>(seen.size()) < n) seen.assign(n, 0);
  ++epoch;
  if (epoch == 0) {
    std::fill(seen.begin(), seen.end(), 0);
    epoch = 1;
  }
  for (Elem x : v) {
    if (x < 0 || x >= n || seen[x] == epoch) return false;
    seen[x] = epoch;
  }
  return true;
}

bool Perm::is_bijection() const { return is_permutation(images); }

Perm Perm::inverse() const {
  Perm r;
  r.images.resize(images.size());
  for (size_t i = 0; i < images.size(); ++i) r.images[images[i]] = static_cast<Elem>(i);
  return r;
}

Perm Perm::identity(int n) {
  Perm p;
  p.images.resize(n);
  for (int i = 0; i < n; ++i) p.images[i] = i;
  return p;
}

DeltaTriple deltas(const FiniteGroup& g, const Perm& sigma) {
  const int n = g.order;
  DeltaTriple d;
  d.d1.resize(n);
  d.d2.resize(n);
  d.d3.resize(n);
  for (Elem x = 0; x < n; ++x) {
    Elem s = sigma(x);
    d.d1[x] = g.mul(s, x);
    d.d2[x] = g.mul(g.inv[x], s);
    d.d3[x] = g.mul(d.d2[x], x);
  }
  return d;
}

bool is_colouring_bijection(const FiniteGroup& g, const Perm& sigma) {
  const int n = g.order;
  if (sigma.size() != n || !sigma.is_bijection()) return false;
  // one fused loop per delta map, early exit on first duplicate
  std::vector<Elem> v(n);
  for (Elem x = 0; x < n; ++x) v[x] = g.mul(sigma(x), x);
  if (!is_permutation(v)) return false;
  for (Elem x = 0; x < n; ++x) v[x] = g.mul(g.inv[x], sigma(x));
  if (!is_permutation(v)) return false;
  for (Elem x = 0; x < n; ++x) v[x] = g.mul(g.mul(g.inv[x], sigma(x)), x);
  return is_permutation(v);
}

bool is_strong_complete_mapping(const FiniteGroup& g, const Perm& sigma) {
  const int n = g.order;
  if (sigma.size() != n || !sigma.is_bijection()) return false;
  std::vector<Elem> v(n);
  for (Elem x = 0; x < n; ++x) v[x] = g.mul(x, sigma(x));
  if (!is_permutation(v)) return false;
  for (Elem x = 0; x < n; ++x) v[x] = g.mul(g.inv[x], sigma(x));
  return is_permutation(v);
}

bool is_complete_mapping(const FiniteGroup& g, const Perm& sigma) {
  const int n = g.order;
  if (sigma.size() != n || !sigma.is_bijection()) return false;
  std::vector<Elem> v(n);
  for (Elem x = 0; x < n; ++x) v[x] = g.mul(x, sigma(x));
  return is_permutation(v);
}

std::vector<Elem> theta_conjugacy(const FiniteGroup& g, const Perm& tau) {
  std::vector<Elem> v(g.order);
  for (Elem x = 0; x < g.order; ++x) {
    Elem t = tau(x);
    v[x] = g.mul(g.mul(g.inv[t], x), t);
  }
  return v;
}

bool is_homomorphism(const FiniteGroup& g, const Perm& f) {
  for (Elem a = 0; a < g.order; ++a)
    for (Elem b = 0; b < g.order; ++b)
      if (f(g.mul(a, b)) != g.mul(f(a), f(b))) return false;
  return true;
}

bool is_automorphism(const FiniteGroup& g, const Perm& f) {
  return f.size() == g.order && f.is_bijection() && is_homomorphism(g, f);
}

Perm conj_by_automorphism(const FiniteGroup& g, const Perm& sigma, const Perm& phi) {
  if (!is_automorphism(g, phi))
    throw std::invalid_argument("conj_by_automorphism: phi is not an automorphism");
  Perm inv = phi.inverse();
  Perm r;
  r.images.resize(g.order);
  for (Elem x = 0; x < g.order; ++x) r.images[x] = inv(sigma(phi(x)));
  return r;
}

Perm product_bijection(const FiniteGroup& a, const Perm& sa,
                       const FiniteGroup& b, const Perm& sb) {
  if (sa.size() != a.order || sb.size() != b.order)
    throw std::invalid_argument("product_bijection: dimension mismatch");
  Perm r;
  r.images.resize(a.order * b.order);
  for (Elem x = 0; x < a.order; ++x)
    for (Elem y = 0; y < b.order; ++y)
      r.images[x * b.order + y] = sa(x) * b.order + sb(y);
  return r;
}

Perm square_map(const FiniteGroup& g) {
  Perm r;
  r.images.resize(g.order);
  for (Elem x = 0; x < g.order; ++x) r.images[x] = g.mul(x, x);
  return r;
}

Perm transport(const Perm& sigma, const Perm& iso) {
  Perm inv = iso.inverse();
  Perm r;
  r.images.resize(sigma.size());
  for (Elem x = 0; x < sigma.size(); ++x) r.images[x] = iso(sigma(inv(x)));
  return r;
}

void write_perm(std::ostream& os, const FiniteGroup& g, const Perm& sigma) {
  os << "group: " << g.name << "\n";
  os << "images: [";
  for (Elem x = 0; x < sigma.size(); ++x) {
    if (x) os << ", ";
    os << sigma(x);
  }
  os << "]\n";
  for (Elem x = 0; x < sigma.size(); ++x)
    os << g.label(x) << " -> " << g.label(sigma(x)) << "\n";
}

void write_perm_file(const std::string& path, const FiniteGroup& g, const Perm& sigma) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot write " + path);
  write_perm(os, g, sigma);
}

PermFile read_perm(std::istream& is, const FiniteGroup* expected) {
  PermFile pf;
  std::string line;
  bool have_images = false;
  std::vector<std::pair<std::string, std::string>> pairs;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    if (line.rfind("group:", 0) == 0) {
      size_t p = line.find_first_not_of(" \t", 6);
      pf.group_spec = p == std::string::npos ? "" : line.substr(p);
    } else if (line.rfind("images:", 0) == 0) {
      std::string nums;
      for (char c : line.substr(7))
        nums.push_back(c == '[' || c == ']' || c == ',' ? ' ' : c);
      std::istringstream ns(nums);
      Elem v;
      pf.perm.images.clear();
      while (ns >> v) pf.perm.images.push_back(v);
      have_images = true;
    } else {
      size_t p = line.find("->");
      if (p == std::string::npos)
        throw std::runtime_error("perm file: unrecognized line: " + line);
      pairs.emplace_back(line.substr(0, p), line.substr(p + 2));
    }
  }
  if (!have_images) {
    if (!expected)
      throw std::runtime_error("perm file: label form requires a group to resolve against");
    pf.perm.images.assign(expected->order, -1);
    if (static_cast<int>(pairs.size()) != expected->order)
      throw std::runtime_error("perm file: wrong number of mapping lines");
    for (auto& [from, to] : pairs) {
      auto a = expected->element_by_label(from);
      auto b = expected->element_by_label(to);
      if (!a || !b) throw std::runtime_error("perm file: unknown label in " + from + " -> " + to);
      pf.perm.images[*a] = *b;
    }
  } else if (expected) {
    if (static_cast<int>(pf.perm.images.size()) != expected->order)
      throw std::runtime_error("perm file: size does not match group order");
    for (auto& [from, to] : pairs) {
      auto a = expected->element_by_label(from);
      auto b = expected->element_by_label(to);
      if (!a || !b || pf.perm.images[*a] != *b)
        throw std::runtime_error("perm file: label lines disagree with images");
    }
  }
  if (!pf.perm.is_bijection())
    throw std::runtime_error("perm file: images are not a permutation");
  return pf;
}

PermFile read_perm_file(const std::string& path, const FiniteGroup* expected) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot read " + path);
  return read_perm(is, expected);
}

}  // namespace colouring
