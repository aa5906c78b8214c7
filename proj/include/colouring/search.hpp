#pragma once

#include <cstdint>
#include <optional>

#include "colouring/perm.hpp"

namespace colouring {

enum class Target { ColouringBijection, StrongCompleteMapping, CompleteMapping };
enum class SearchMode { First, Count, Enumerate };

struct SearchConfig {
  Target target = Target::ColouringBijection;
  SearchMode mode = SearchMode::First;
  uint64_t enumerate_limit = 1;     // Enumerate mode
  bool fix_identity = false;
  std::optional<uint64_t> node_budget;  // forces serial execution when set
  int jobs = 1;                     // OpenMP split on the first free level
};

struct SearchResult {
  std::vector<Perm> found;
  uint64_t count = 0;
  uint64_t nodes_explored = 0;
  bool exhausted = true;  // false when the node budget was hit
};

/// Depth-first assignment of sigma(x) in ascending element order, one
/// used-value bitmask per constraint. Deterministic: identical configs give
/// identical results, regardless of jobs. Guard: exhaustive modes without a
/// budget require |G| <= 81.
SearchResult search(const FiniteGroup& g, const SearchConfig& config);

struct CensusResult {
  uint64_t scm_count = 0;
  uint64_t cb_count = 0;
  double ratio = 0.0;  // cb/scm; 0 when scm_count == 0
  uint64_t nodes_explored = 0;
  bool exhausted = true;
};

/// Counts SCMs by exhaustive search and, on each SCM leaf tau, counts the
/// colouring bijections tau^-1 by testing bijectivity of the conjugacy map
/// x -> tau(x)^-1 x tau(x). Guard: |G| <= 16 for the full census.
CensusResult scm_census(const FiniteGroup& g, std::optional<uint64_t> budget = {},
                        bool fix_identity = false, int jobs = 1);

}  // namespace colouring
