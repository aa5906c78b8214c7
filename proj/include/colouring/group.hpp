#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace colouring {

/// Element indices into a group's multiplication table. Identity is always 0.
using Elem = int;

/// A finite group as an explicit multiplication table.
///
/// Labels carry a mixed-radix coordinate per element so that permutations
/// can be read and written in the coordinate notation of the group's
/// construction (e.g. (i,j,k) for H3).
struct FiniteGroup {
  int order = 0;
  std::vector<Elem> mul_table;         // order x order, row-major
  std::vector<Elem> inv;               // inverses
  std::vector<std::vector<int>> labels;  // per-element coordinates
  std::vector<int> radices;            // radix of each coordinate position
  std::string name;

  Elem mul(Elem a, Elem b) const { return mul_table[a * order + b]; }
  Elem conj(Elem t, Elem h) const { return mul(mul(t, h), inv[t]); }
  Elem pow(Elem g, long long e) const;
  int element_order(Elem g) const;

  std::string label(Elem g) const;
  std::optional<Elem> element_by_label(const std::string& text) const;

  /// Exhaustive structural check: associativity, identity, inverses,
  /// Latin-square rows and columns. Throws on violation.
  void check_invariants() const;
};

struct SubgroupData {
  std::vector<Elem> elements;    // sorted
  std::vector<Elem> generators;

  bool contains(Elem g) const;
  int order() const { return static_cast<int>(elements.size()); }
};

/// Quotient structure for a normal subgroup: transversal, projection pi,
/// section tau, and the unique decomposition g = h * t with h in H, t in T.
struct CosetDecomposition {
  const FiniteGroup* parent = nullptr;
  SubgroupData subgroup;
  std::vector<Elem> transversal;   // one representative per coset; identity coset first
  FiniteGroup quotient;
  std::vector<int> pi;             // parent element -> quotient index
  std::vector<Elem> tau;           // quotient index -> transversal element

  std::pair<Elem, Elem> decompose(Elem g) const;  // (h, t)
};

struct ConjugationParams {
  int m = 0;  // t b t^-1 = b^(1+3m) c^l
  int l = 0;
};

enum class GroupClass { Cyclic, Abelian, Lr, OtherNonabelian };

struct Classification {
  GroupClass kind;
  std::vector<int> invariant_factors;  // abelian case, descending
  int r = 0;                           // Lr case
  std::string to_string() const;
};

enum class LiftKind { C3C3Central, C3C3, C9C3 };

struct LiftingSubgroup {
  SubgroupData subgroup;
  LiftKind kind;
  bool quotient_noncyclic;
};

// --- construction --------------------------------------------------------

/// Build a group from the spec mini-language: C{n}, H3, L{r} (r>=3), M16,
/// or products joined by 'x' (e.g. C9xC3, H3xC3). Throws std::invalid_argument
/// on malformed or unsupported specs.
FiniteGroup build_from_spec(const std::string& spec);

/// Direct product with lexicographic mixed-radix indexing (a,b) -> a*|B|+b.
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);

// --- structure queries ----------------------------------------------------

SubgroupData center(const FiniteGroup& g);
SubgroupData subgroup_generated(const FiniteGroup& g, const std::vector<Elem>& gens);
SubgroupData whole_group(const FiniteGroup& g);
bool is_normal(const FiniteGroup& g, const SubgroupData& h);
bool is_abelian(const FiniteGroup& g);

/// Quotient by a normal subgroup. Transversal representative is the least
/// element index in each coset; quotient indices are assigned in ascending
/// representative order, so the identity coset gets index 0.
CosetDecomposition quotient(const FiniteGroup& g, const SubgroupData& h);

/// Solve t b t^-1 = b^(1+3m) c^l with c central, |b| = 3^k; m in
/// [0, 3^(k-1)), l in [0, |c|). Throws if t b t^-1 lies outside <c> x <b>.
ConjugationParams conjugation_params(const FiniteGroup& g, Elem c, Elem b, Elem t);

Classification classify(const FiniteGroup& g);

/// All normal subgroups isomorphic to C3xC3 (order 9) and all abelian normal
/// subgroups isomorphic to C9xC3 (order 27) that split as <c> x <b> with c
/// central. Deterministic order (sorted by element set).
std::vector<LiftingSubgroup> enumerate_lifting_subgroups(const FiniteGroup& g);

/// Minimal-ish generating tuple: greedy closure over ascending indices.
std::vector<Elem> generating_tuple(const FiniteGroup& g);

inline constexpr int kMaxGroupOrder = 2187;

}  // namespace colouring
