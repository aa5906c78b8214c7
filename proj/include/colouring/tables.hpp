#pragma once

#include <array>
#include <string>
#include <vector>

#include "colouring/perm.hpp"

namespace colouring::tables {

struct Coord3 {
  int i, j, k;
  friend bool operator==(const Coord3&, const Coord3&) = default;
};
struct Coord2 {
  int a, b;
  friend bool operator==(const Coord2&, const Coord2&) = default;
};
using Pair93 = Coord2;

// Published tables, embedded verbatim (see src/tables_data.cpp).
// Table 1 row layout: x, sigma(x), d1(x), d2(x), d3(x).
struct Table1Row {
  Coord3 cells[5];
};
struct Table1RowL3 {
  Coord2 cells[5];
};
// Row layout: h, a0, d1(a0), d2(a0), a1, d2(a1), a2, d2(a2), T1, T2.
struct AlphaRow {
  Coord2 cells[10];
};

extern const Table1Row kTable1H3[27];
extern const Table1RowL3 kTable1L3[27];
extern const AlphaRow kAlphaTable[27];
extern const Pair93 kFTableDomain[27];           // h = (j, m) for b^j c^m
extern const Pair93 kFTable[3][3][27];           // [lambda][ell][row]
extern const Pair93 kATable[3][3][27];
extern const Pair93 kBTable[3][3][27];
extern const Pair93 kCTable[3][3][27];

/// Table-1 colouring bijections as permutations on the spec-built groups
/// (H3 indices i*9+j*3+k, L3 indices i*3+j).
Perm h3_sigma();
Perm l3_sigma();

/// alpha_lambda as a map on Z9 x Z3, indexed by u*3+j for h = c^u b^j.
std::array<Coord2, 27> alpha_map(int lambda);

/// f_{lambda,ell} as a map on Z9 x Z3, indexed by j*3+m for h = b^j c^m.
std::array<Coord2, 27> f_map(int lambda, int ell);

struct VerifyReport {
  bool ok = true;
  int checks = 0;
  std::vector<std::string> failures;  // "table/row: expected X, got Y"
  void fail(std::string msg) {
    ok = false;
    failures.push_back(std::move(msg));
  }
};

/// Recompute every derived column of Tables 1-6 from the sigma/alpha/f
/// columns and check cell-by-cell equality plus permutation-ness of all maps.
VerifyReport verify_tables();

}  // namespace colouring::tables
