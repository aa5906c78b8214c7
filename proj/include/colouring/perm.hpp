#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "colouring/group.hpp"

namespace colouring {

/// A candidate bijection sigma on the elements of a fixed group.
struct Perm {
  std::vector<Elem> images;

  int size() const { return static_cast<int>(images.size()); }
  Elem operator()(Elem x) const { return images[x]; }
  bool is_bijection() const;
  Perm inverse() const;

  static Perm identity(int n);

  friend bool operator==(const Perm&, const Perm&) = default;
};

/// The three derived maps whose simultaneous bijectivity defines a
/// colouring bijection: d1 = sigma(x)x, d2 = x^-1 sigma(x), d3 = x^-1 sigma(x)x.
struct DeltaTriple {
  std::vector<Elem> d1, d2, d3;
};

DeltaTriple deltas(const FiniteGroup& g, const Perm& sigma);

bool is_permutation(const std::vector<Elem>& v);

bool is_colouring_bijection(const FiniteGroup& g, const Perm& sigma);
bool is_strong_complete_mapping(const FiniteGroup& g, const Perm& sigma);
bool is_complete_mapping(const FiniteGroup& g, const Perm& sigma);

/// theta^c(x) = tau(x)^-1 x tau(x).
std::vector<Elem> theta_conjugacy(const FiniteGroup& g, const Perm& tau);

/// phi^-1 . sigma . phi for an automorphism phi. Throws if phi is not an
/// automorphism of g.
Perm conj_by_automorphism(const FiniteGroup& g, const Perm& sigma, const Perm& phi);

/// Componentwise product permutation on direct_product(a, b) indexing.
Perm product_bijection(const FiniteGroup& a, const Perm& sa,
                       const FiniteGroup& b, const Perm& sb);

/// sigma(x) = x^2; a colouring bijection whenever gcd(|G|, 6) = 1.
Perm square_map(const FiniteGroup& g);

bool is_homomorphism(const FiniteGroup& g, const Perm& f);
bool is_automorphism(const FiniteGroup& g, const Perm& f);

/// Transport sigma through an isomorphism iso: A -> B, giving iso . sigma . iso^-1.
Perm transport(const Perm& sigma, const Perm& iso);

// --- permutation file format ----------------------------------------------
//
//   group: <spec>
//   images: [i0, i1, ..., i(n-1)]
//   <label> -> <label>        (n lines)
//
// Writers emit both forms; readers accept either.

void write_perm(std::ostream& os, const FiniteGroup& g, const Perm& sigma);
void write_perm_file(const std::string& path, const FiniteGroup& g, const Perm& sigma);

struct PermFile {
  std::string group_spec;
  Perm perm;
};

/// Parse a permutation file. If `expected` is given, labels are resolved
/// against it (and must all match); otherwise only the compact form plus the
/// header is available.
PermFile read_perm(std::istream& is, const FiniteGroup* expected = nullptr);
PermFile read_perm_file(const std::string& path, const FiniteGroup* expected = nullptr);

}  // namespace colouring
