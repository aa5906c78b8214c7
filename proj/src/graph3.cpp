#include "colouring/graph3.hpp"

#include <algorithm>
#include <ostream>
#include <set>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace colouring {

namespace {

std::vector<int> colour_table(const FiniteGroup& g, const Perm& sigma) {
  const int n = g.order;
  std::vector<int> col(static_cast<size_t>(n) * n * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      Elem xy = g.mul(g.inv[x], sigma(y));
      int base = (x * n + y) * n;
      for (int z = 0; z < n; ++z) col[base + z] = g.mul(xy, z);
    }
  return col;
}

// Least neighbour index of (x,y,z) sharing its colour, or -1.
long long min_violation(const FiniteGroup& g, const std::vector<int>& col,
                        int x, int y, int z) {
  const int n = g.order;
  const long long vi = (static_cast<long long>(x) * n + y) * n + z;
  const int c0 = col[vi];
  long long best = -1;
  auto probe = [&](int ux, int uy, int uz) {
    long long ui = (static_cast<long long>(ux) * n + uy) * n + uz;
    if (col[ui] == c0 && (best < 0 || ui < best)) best = ui;
  };
  for (int e = 1; e < n; ++e) {
    int gx = g.mul(e, x), gy = g.mul(e, y), gz = g.mul(e, z);
    probe(gx, y, z);
    probe(x, gy, z);
    probe(x, y, gz);
    probe(gx, gy, z);
    probe(x, gy, gz);
    probe(gx, gy, gz);
  }
  return best;
}

ChromaticCertificate make_certificate(const FiniteGroup& g, const Perm& sigma,
                                      std::string group_spec,
                                      const std::vector<int>& col) {
  ChromaticCertificate cert;
  cert.group_spec = group_spec.empty() ? g.name : std::move(group_spec);
  cert.sigma_is_cb = is_colouring_bijection(g, sigma);
  std::vector<char> seen(g.order, 0);
  for (int c : col)
    if (!seen[c]) {
      seen[c] = 1;
      ++cert.colours_used;
    }
  cert.clique.reserve(g.order);
  for (Elem x = 0; x < g.order; ++x) cert.clique.push_back({x, 0, 0});
  return cert;
}

}  // namespace

int vertex_index(const FiniteGroup& g, Vertex v) {
  return (v.x * g.order + v.y) * g.order + v.z;
}

Vertex vertex_at(const FiniteGroup& g, int index) {
  const int n = g.order;
  return {index / (n * n), index / n % n, index % n};
}

std::vector<Vertex> neighbors(const FiniteGroup& g, Vertex v) {
  const int n = g.order;
  std::vector<Vertex> out;
  out.reserve(6 * (n - 1));
  for (int pat = 0; pat < 6; ++pat)
    for (Elem e = 1; e < n; ++e) {
      static const bool hit[6][3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1},
                                     {1, 1, 0}, {0, 1, 1}, {1, 1, 1}};
      out.push_back({hit[pat][0] ? g.mul(e, v.x) : v.x,
                     hit[pat][1] ? g.mul(e, v.y) : v.y,
                     hit[pat][2] ? g.mul(e, v.z) : v.z});
    }
  if (n >= 3) {
    std::set<int> dedup;
    for (const Vertex& u : out) dedup.insert(vertex_index(g, u));
    if (dedup.size() != out.size())
      throw std::logic_error("neighbors: duplicate neighbour generated");
  }
  return out;
}

Elem colour_value(const FiniteGroup& g, const Perm& sigma, Vertex v) {
  return g.mul(g.inv[v.x], g.mul(sigma(v.y), v.z));
}

ChromaticCertificate verify_proper_serial(const FiniteGroup& g, const Perm& sigma,
                                          std::string group_spec) {
  const int n = g.order;
  std::vector<int> col = colour_table(g, sigma);
  ChromaticCertificate cert = make_certificate(g, sigma, std::move(group_spec), col);
  cert.proper = true;
  for (int x = 0; x < n && cert.proper; ++x)
    for (int y = 0; y < n && cert.proper; ++y)
      for (int z = 0; z < n && cert.proper; ++z) {
        long long ui = min_violation(g, col, x, y, z);
        if (ui >= 0) {
          cert.proper = false;
          cert.violation = {{x, y, z}, vertex_at(g, static_cast<int>(ui))};
        }
      }
  cert.chi = cert.proper ? n : 0;
  return cert;
}

ChromaticCertificate verify_proper(const FiniteGroup& g, const Perm& sigma,
                                   int jobs, std::string group_spec) {
  if (jobs <= 1) return verify_proper_serial(g, sigma, std::move(group_spec));
  const int n = g.order;
  std::vector<int> col = colour_table(g, sigma);
  ChromaticCertificate cert = make_certificate(g, sigma, std::move(group_spec), col);

  // per-x first violation; the global first is the one with least x, then
  // least (vertex, neighbour) pair inside that slice
  std::vector<std::pair<long long, long long>> first(n, {-1, -1});
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(jobs)
#endif
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      for (int z = 0; z < n; ++z) {
        long long ui = min_violation(g, col, x, y, z);
        if (ui >= 0) {
          first[x] = {(static_cast<long long>(x) * n + y) * n + z, ui};
          y = n;  // first (v, u) within this slice found
          break;
        }
      }
    }
  }
  cert.proper = true;
  for (int x = 0; x < n; ++x)
    if (first[x].first >= 0) {
      cert.proper = false;
      cert.violation = {vertex_at(g, static_cast<int>(first[x].first)),
                        vertex_at(g, static_cast<int>(first[x].second))};
      break;
    }
  cert.chi = cert.proper ? n : 0;
  return cert;
}

void export_dimacs(std::ostream& os, const FiniteGroup& g) {
  const int n = g.order;
  if (n > 9) throw std::invalid_argument("export_dimacs: guard |G| <= 9 violated");
  const long long nv = static_cast<long long>(n) * n * n;
  os << "p edge " << nv << ' ' << nv * 6 * (n - 1) / 2 << '\n';
  for (int vi = 0; vi < nv; ++vi) {
    Vertex v = vertex_at(g, vi);
    for (const Vertex& u : neighbors(g, v)) {
      int ui = vertex_index(g, u);
      if (ui > vi) os << "e " << vi + 1 << ' ' << ui + 1 << '\n';
    }
  }
}

}  // namespace colouring
