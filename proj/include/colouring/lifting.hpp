#pragma once

#include <string>
#include <vector>

#include "colouring/group.hpp"
#include "colouring/matrix_f3.hpp"
#include "colouring/perm.hpp"

namespace colouring {

/// A subgroup re-indexed as a standalone group (identity at index 0, labels
/// inherited from the parent).
struct SubgroupView {
  FiniteGroup group;
  std::vector<Elem> to_parent;   // view index -> parent element
  std::vector<int> from_parent;  // parent element -> view index, -1 outside
};

SubgroupView subgroup_as_group(const FiniteGroup& g, const SubgroupData& h);

/// The data (phi, xi, zeta, omega, t1, t2, t3) extracted from a quotient
/// colouring bijection. All maps are indexed by quotient index; xi/zeta/omega
/// hold parent elements of H.
struct TransversalScheme {
  std::vector<int> phi;              // quotient index -> quotient index
  std::vector<Elem> xi, zeta, omega; // quotient index -> element of H
  std::vector<int> t1, t2, t3;       // quotient index -> quotient index
};

/// Solve phi(t)t = xi(t)t1, t^-1 phi(t) = zeta(t)t2, t^-1 phi(t)t = omega(t)t3
/// by unique H x T decomposition. Throws if Phi is not a colouring bijection
/// of the quotient.
TransversalScheme transversal_scheme(const CosetDecomposition& dec, const Perm& Phi);

/// sigma(ht) = psi(h) phi(t) for central H. psi is a colouring bijection of H
/// given in SubgroupView indexing. The result is re-verified before return.
Perm lift_central(const FiniteGroup& g, const CosetDecomposition& dec,
                  const Perm& Phi, const Perm& psi);

/// Lift through a normal H isomorphic to C3xC3 (central case delegates to
/// lift_central with the fixed linear map M1).
Perm lift_c3c3(const FiniteGroup& g, const SubgroupData& h, const Perm& Phi);

/// Lift through an abelian normal H isomorphic to C9xC3 that splits as
/// <c> x <b> with c central. Case 1: |c| = 9 (alpha tables); Case 2: |c| = 3
/// (f tables). Central case delegates to lift_central with psi = alpha_0.
Perm lift_c9c3(const FiniteGroup& g, const SubgroupData& h, const Perm& Phi);

enum class ColourStatus { Success, NoConstructionKnown, SearchExhausted };

struct ColourOutcome {
  ColourStatus status = ColourStatus::NoConstructionKnown;
  Perm sigma;                       // valid when status == Success
  std::vector<std::string> trace;   // machine-readable recursion trace
};

/// End-to-end colouring strategy: base cases up to order 27, then recursion
/// through lifting subgroups (central C3xC3 first, then C3xC3, then C9xC3),
/// then a budgeted search fallback. Every success is re-verified.
ColourOutcome colour(const FiniteGroup& g, uint64_t fallback_budget = 200'000'000);

/// Known base colouring bijections on spec-built reference groups, keyed by
/// classification. Used by colour(); exposed for tests.
Perm reference_base_cb(const std::string& spec);

}  // namespace colouring
