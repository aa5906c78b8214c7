#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "colouring/group.hpp"
#include "colouring/perm.hpp"

namespace colouring {

/// A vertex of the Cayley graph on G^3 whose connection set is the six
/// patterns (g,e,e), (e,g,e), (e,e,g), (g,g,e), (e,g,g), (g,g,g), g != e.
struct Vertex {
  Elem x = 0, y = 0, z = 0;
  friend bool operator==(const Vertex&, const Vertex&) = default;
};

int vertex_index(const FiniteGroup& g, Vertex v);
Vertex vertex_at(const FiniteGroup& g, int index);

/// The 6(n-1) neighbours of v, by componentwise left multiplication with each
/// pattern. Pattern-major, then g ascending. Distinctness is asserted.
std::vector<Vertex> neighbors(const FiniteGroup& g, Vertex v);

/// c(x,y,z) = x^-1 sigma(y) z.
Elem colour_value(const FiniteGroup& g, const Perm& sigma, Vertex v);

struct EdgeViolation {
  Vertex a, b;  // adjacent vertices with equal colour
};

struct ChromaticCertificate {
  std::string group_spec;
  int colours_used = 0;
  std::vector<Vertex> clique;     // {(x,e,e)}: pairwise adjacent, |G| vertices
  bool sigma_is_cb = false;
  bool proper = false;
  int chi = 0;                    // |G| when proper, 0 when undetermined
  std::optional<EdgeViolation> violation;  // lexicographically first bad pair
};

/// Exhaustive properness check of c over all n^3 vertices and all 6(n-1)
/// moves. Does not assume sigma is a colouring bijection; a non-CB sigma
/// yields proper=false with an explicit violating edge.
ChromaticCertificate verify_proper(const FiniteGroup& g, const Perm& sigma,
                                   int jobs = 1, std::string group_spec = {});

/// Serial reference implementation with identical output.
ChromaticCertificate verify_proper_serial(const FiniteGroup& g, const Perm& sigma,
                                          std::string group_spec = {});

/// Full edge list in DIMACS format, for external cross-checks. Guard: |G| <= 9.
void export_dimacs(std::ostream& os, const FiniteGroup& g);

}  // namespace colouring
