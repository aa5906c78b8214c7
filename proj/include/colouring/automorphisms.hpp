#pragma once

#include <optional>
#include <vector>

#include "colouring/group.hpp"
#include "colouring/perm.hpp"

namespace colouring {

/// All isomorphisms A -> B, found by fixing a minimal generating tuple of A
/// and enumerating order-compatible image tuples in B. Deterministic order.
/// `limit` = 0 means no limit. Guard: |A| <= 243 and <= 3 generators.
std::vector<Perm> find_isomorphisms(const FiniteGroup& a, const FiniteGroup& b,
                                    size_t limit = 0);

std::optional<Perm> find_isomorphism(const FiniteGroup& a, const FiniteGroup& b);

std::vector<Perm> automorphisms(const FiniteGroup& g);

}  // namespace colouring
