// Appendix tables embedded verbatim. Generated by scripts/extract_tables.py;
// do not edit by hand.
#include "colouring/tables.hpp"

namespace colouring::tables {

const Table1Row kTable1H3[27] = {
    {{{0,0,0},{0,0,0},{0,0,0},{0,0,0},{0,0,0}}},
    {{{0,0,1},{2,0,1},{2,0,2},{2,0,0},{2,0,1}}},
    {{{0,0,2},{1,2,1},{1,2,0},{1,2,2},{1,2,1}}},
    {{{0,1,0},{1,2,2},{1,0,0},{1,1,2},{1,2,0}}},
    {{{0,1,1},{1,0,1},{1,1,0},{1,2,0},{1,0,2}}},
    {{{0,1,2},{0,0,1},{0,1,0},{0,2,2},{0,0,1}}},
    {{{0,2,0},{0,0,2},{0,2,2},{0,1,2},{0,0,2}}},
    {{{0,2,1},{2,0,2},{2,2,1},{2,1,1},{2,0,0}}},
    {{{0,2,2},{2,2,1},{2,1,1},{2,0,2},{2,2,2}}},
    {{{1,0,0},{1,1,2},{2,1,2},{0,1,1},{1,1,1}}},
    {{{1,0,1},{1,0,0},{2,0,1},{0,0,2},{1,0,0}}},
    {{{1,0,2},{0,1,0},{1,1,2},{2,1,0},{0,1,2}}},
    {{{1,1,0},{0,1,1},{1,2,1},{2,0,1},{0,1,0}}},
    {{{1,1,1},{2,1,0},{0,2,0},{1,0,2},{2,1,1}}},
    {{{1,1,2},{2,2,0},{0,0,1},{1,1,0},{2,2,0}}},
    {{{1,2,0},{0,1,2},{1,0,2},{2,2,0},{0,1,1}}},
    {{{1,2,1},{1,0,2},{2,2,2},{0,1,0},{1,0,1}}},
    {{{1,2,2},{2,2,2},{0,1,2},{1,0,0},{2,2,1}}},
    {{{2,0,0},{1,1,1},{0,1,1},{2,1,2},{1,1,2}}},
    {{{2,0,1},{1,2,0},{0,2,1},{2,2,1},{1,2,2}}},
    {{{2,0,2},{0,2,1},{2,2,0},{1,2,1},{0,2,0}}},
    {{{2,1,0},{0,2,0},{2,0,0},{1,1,1},{0,2,2}}},
    {{{2,1,1},{2,1,2},{1,2,2},{0,0,1},{2,1,2}}},
    {{{2,1,2},{2,0,0},{1,1,1},{0,2,0},{2,0,2}}},
    {{{2,2,0},{1,1,0},{0,0,2},{2,2,2},{1,1,0}}},
    {{{2,2,1},{0,2,2},{2,1,0},{1,0,1},{0,2,1}}},
    {{{2,2,2},{2,1,1},{1,0,1},{0,2,1},{2,1,0}}},
};

const Table1RowL3 kTable1L3[27] = {
    {{{0,0},{0,0},{0,0},{0,0},{0,0}}},
    {{{0,1},{2,0},{2,1},{5,2},{5,0}}},
    {{{0,2},{4,1},{4,0},{7,2},{7,1}}},
    {{{1,0},{3,1},{7,1},{2,1},{6,1}}},
    {{{1,1},{1,2},{8,0},{0,1},{4,2}}},
    {{{1,2},{7,1},{2,0},{6,2},{4,1}}},
    {{{2,0},{4,2},{0,2},{2,2},{7,2}}},
    {{{2,1},{6,0},{8,1},{1,2},{6,0}}},
    {{{2,2},{4,0},{6,2},{8,1},{7,0}}},
    {{{3,0},{1,1},{4,1},{7,1},{1,1}}},
    {{{3,1},{0,1},{3,2},{6,0},{0,1}}},
    {{{3,2},{7,2},{1,1},{7,0},{1,2}}},
    {{{4,0},{5,1},{3,1},{1,1},{8,1}}},
    {{{4,1},{2,2},{3,0},{4,1},{2,2}}},
    {{{4,2},{3,0},{7,2},{5,1},{3,0}}},
    {{{5,0},{1,0},{6,0},{5,0},{1,0}}},
    {{{5,1},{8,2},{7,0},{3,1},{5,2}}},
    {{{5,2},{8,1},{1,0},{3,2},{2,1}}},
    {{{6,0},{8,0},{5,0},{2,0},{8,0}}},
    {{{6,1},{2,1},{8,2},{8,0},{5,1}}},
    {{{6,2},{0,2},{6,1},{3,0},{0,2}}},
    {{{7,0},{6,2},{1,2},{8,2},{3,2}}},
    {{{7,1},{7,0},{5,1},{0,2},{4,0}}},
    {{{7,2},{5,2},{0,1},{1,0},{8,2}}},
    {{{8,0},{3,2},{5,2},{4,2},{6,2}}},
    {{{8,1},{6,1},{2,2},{4,0},{3,1}}},
    {{{8,2},{5,0},{4,2},{6,1},{2,0}}},
};

const AlphaRow kAlphaTable[27] = {
    {{{0,0},{0,0},{0,0},{0,0},{0,0},{0,0},{0,0},{0,0},{0,0},{0,0}}},
    {{{1,0},{2,0},{3,0},{1,0},{2,0},{1,0},{2,0},{1,0},{3,0},{3,0}}},
    {{{2,0},{7,1},{0,1},{5,1},{7,2},{5,2},{2,1},{0,1},{0,2},{4,1}}},
    {{{3,0},{2,1},{5,1},{8,1},{2,2},{8,2},{0,2},{6,2},{5,2},{3,2}}},
    {{{4,0},{6,1},{1,1},{2,1},{3,1},{8,1},{8,1},{4,1},{7,1},{3,1}}},
    {{{5,0},{1,0},{6,0},{5,0},{1,0},{5,0},{1,0},{5,0},{6,0},{6,0}}},
    {{{6,0},{8,2},{5,2},{2,2},{4,2},{7,2},{8,2},{2,2},{1,2},{5,2}}},
    {{{7,0},{2,2},{0,2},{4,2},{1,1},{3,1},{3,1},{5,1},{8,1},{1,1}}},
    {{{8,0},{7,2},{6,2},{8,2},{4,1},{5,1},{7,2},{8,2},{3,1},{6,2}}},
    {{{0,1},{3,0},{3,1},{3,2},{3,0},{3,2},{3,0},{3,2},{6,1},{0,1}}},
    {{{1,1},{3,1},{4,2},{2,0},{1,2},{0,1},{8,0},{7,2},{5,0},{6,1}}},
    {{{2,1},{8,1},{1,2},{6,0},{8,1},{6,0},{1,1},{8,0},{4,2},{0,2}}},
    {{{3,1},{8,0},{2,1},{5,2},{7,0},{4,2},{2,2},{8,1},{4,1},{2,0}}},
    {{{4,1},{4,0},{8,1},{0,2},{4,0},{0,2},{4,0},{0,2},{2,1},{5,1}}},
    {{{5,1},{5,2},{1,0},{0,1},{0,1},{4,0},{0,1},{4,0},{8,2},{2,2}}},
    {{{6,1},{1,2},{7,0},{4,1},{8,2},{2,1},{4,2},{7,1},{8,0},{7,0}}},
    {{{7,1},{5,1},{3,2},{7,0},{5,1},{7,0},{4,1},{6,0},{6,2},{8,2}}},
    {{{8,1},{6,2},{5,0},{7,1},{0,2},{1,1},{5,2},{6,1},{2,0},{1,0}}},
    {{{0,2},{4,2},{4,1},{4,0},{3,2},{3,0},{5,1},{5,2},{0,1},{8,0}}},
    {{{1,2},{7,0},{8,2},{6,1},{5,0},{4,1},{3,2},{2,0},{3,2},{7,1}}},
    {{{2,2},{5,0},{7,2},{3,1},{8,0},{6,1},{5,0},{3,1},{7,2},{1,2}}},
    {{{3,2},{1,1},{4,0},{7,2},{5,2},{2,0},{7,1},{4,2},{5,1},{4,0}}},
    {{{4,2},{3,2},{7,1},{8,0},{6,1},{2,2},{6,0},{2,1},{7,0},{4,2}}},
    {{{5,2},{6,0},{2,2},{1,1},{2,1},{6,2},{6,1},{1,2},{4,0},{5,0}}},
    {{{6,2},{0,2},{6,1},{3,0},{7,1},{1,2},{7,0},{1,1},{1,0},{7,2}}},
    {{{7,2},{4,1},{2,0},{6,2},{6,2},{8,0},{1,2},{3,0},{1,1},{2,1}}},
    {{{8,2},{0,1},{8,0},{1,2},{6,0},{7,1},{6,2},{7,0},{2,2},{8,1}}},
};

const Pair93 kFTableDomain[27] = {{0,0}, {0,1}, {0,2}, {1,0}, {1,1}, {1,2}, {2,0}, {2,1}, {2,2}, {3,0}, {3,1}, {3,2}, {4,0}, {4,1}, {4,2}, {5,0}, {5,1}, {5,2}, {6,0}, {6,1}, {6,2}, {7,0}, {7,1}, {7,2}, {8,0}, {8,1}, {8,2}};

const Pair93 kFTable[3][3][27] = {
  {
    {{0,0}, {1,0}, {2,0}, {5,2}, {8,0}, {6,0}, {6,1}, {0,2}, {3,2}, {4,1}, {1,1}, {2,1}, {4,2}, {8,1}, {7,2}, {7,0}, {2,2}, {5,0}, {8,2}, {3,1}, {0,1}, {3,0}, {1,2}, {6,2}, {7,1}, {4,0}, {5,1}},
    {{0,0}, {1,0}, {5,2}, {1,1}, {7,1}, {6,1}, {5,1}, {2,0}, {3,2}, {7,0}, {0,2}, {4,0}, {8,1}, {2,2}, {6,2}, {8,2}, {4,2}, {3,1}, {2,1}, {0,1}, {8,0}, {5,0}, {6,0}, {4,1}, {1,2}, {3,0}, {7,2}},
    {{0,0}, {1,2}, {5,0}, {1,1}, {7,1}, {3,0}, {5,1}, {2,0}, {6,0}, {7,2}, {0,2}, {4,2}, {8,0}, {2,1}, {3,2}, {8,2}, {4,0}, {6,1}, {2,2}, {0,1}, {8,1}, {5,2}, {3,1}, {4,1}, {1,0}, {6,2}, {7,0}},
  },
  {
    {{0,0}, {1,0}, {5,2}, {7,2}, {4,2}, {3,1}, {4,1}, {1,1}, {6,1}, {7,0}, {0,1}, {4,0}, {2,1}, {8,2}, {3,0}, {5,1}, {2,2}, {6,2}, {0,2}, {8,1}, {2,0}, {3,2}, {5,0}, {1,2}, {6,0}, {8,0}, {7,1}},
    {{0,0}, {1,1}, {2,0}, {8,1}, {4,0}, {3,2}, {6,1}, {7,2}, {1,0}, {7,0}, {4,2}, {0,1}, {7,1}, {1,2}, {3,1}, {5,2}, {6,0}, {2,2}, {5,0}, {8,0}, {0,2}, {3,0}, {5,1}, {2,1}, {6,2}, {8,2}, {4,1}},
    {{0,0}, {1,0}, {2,2}, {4,0}, {5,1}, {7,2}, {5,2}, {8,0}, {7,0}, {2,1}, {4,2}, {6,0}, {1,1}, {0,1}, {3,2}, {1,2}, {3,0}, {4,1}, {6,2}, {7,1}, {8,1}, {5,0}, {0,2}, {2,0}, {6,1}, {8,2}, {3,1}},
  },
  {
    {{0,0}, {7,2}, {4,0}, {0,1}, {4,2}, {5,2}, {7,0}, {3,2}, {0,2}, {5,1}, {4,1}, {8,0}, {1,1}, {5,0}, {3,1}, {1,2}, {7,1}, {2,2}, {8,2}, {3,0}, {6,0}, {1,0}, {6,1}, {2,1}, {6,2}, {2,0}, {8,1}},
    {{0,0}, {1,1}, {2,2}, {8,0}, {7,1}, {4,2}, {7,0}, {1,2}, {6,2}, {5,2}, {4,0}, {3,1}, {0,2}, {8,2}, {2,0}, {8,1}, {4,1}, {5,0}, {2,1}, {7,2}, {3,0}, {0,1}, {1,0}, {6,1}, {3,2}, {6,0}, {5,1}},
    {{0,0}, {6,2}, {4,0}, {0,1}, {2,1}, {6,0}, {0,2}, {5,0}, {7,1}, {4,1}, {7,0}, {5,1}, {4,2}, {1,0}, {3,2}, {3,0}, {7,2}, {8,2}, {5,2}, {3,1}, {2,2}, {2,0}, {1,2}, {8,1}, {6,1}, {1,1}, {8,0}},
  },
};

const Pair93 kATable[3][3][27] = {
  {
    {{0,0}, {1,1}, {2,2}, {6,2}, {0,1}, {7,2}, {8,1}, {2,0}, {5,1}, {7,1}, {4,2}, {5,0}, {8,2}, {3,2}, {2,1}, {3,0}, {7,0}, {1,2}, {5,2}, {0,2}, {6,0}, {1,0}, {8,0}, {4,1}, {6,1}, {3,1}, {4,0}},
    {{0,0}, {1,1}, {5,1}, {2,2}, {8,0}, {7,1}, {7,0}, {4,0}, {5,0}, {1,0}, {3,0}, {7,2}, {3,2}, {6,1}, {1,2}, {4,1}, {0,2}, {8,2}, {8,1}, {6,2}, {5,2}, {3,1}, {4,2}, {2,1}, {0,1}, {2,0}, {6,0}},
    {{0,0}, {1,0}, {5,2}, {2,0}, {8,1}, {4,1}, {7,2}, {4,2}, {8,0}, {1,2}, {3,0}, {7,1}, {3,2}, {6,1}, {7,0}, {4,0}, {0,2}, {2,1}, {8,2}, {6,2}, {5,0}, {3,1}, {1,1}, {2,2}, {0,1}, {5,1}, {6,0}},
  },
  {
    {{0,0}, {1,1}, {5,1}, {2,2}, {8,0}, {7,0}, {3,1}, {0,2}, {5,0}, {1,0}, {3,2}, {7,2}, {0,1}, {6,0}, {1,2}, {7,1}, {4,0}, {8,1}, {6,2}, {5,2}, {8,2}, {4,2}, {6,1}, {2,1}, {2,0}, {4,1}, {3,0}},
    {{0,0}, {1,2}, {2,2}, {3,2}, {8,2}, {7,2}, {5,0}, {6,2}, {0,1}, {1,0}, {7,0}, {3,0}, {5,2}, {8,1}, {1,1}, {7,1}, {8,0}, {4,0}, {2,0}, {5,1}, {6,1}, {4,1}, {6,0}, {3,1}, {2,1}, {4,2}, {0,2}},
    {{0,0}, {1,1}, {2,1}, {8,2}, {0,1}, {2,0}, {4,0}, {7,2}, {6,0}, {5,1}, {7,0}, {0,2}, {8,0}, {7,1}, {1,0}, {3,0}, {5,2}, {6,1}, {3,2}, {4,2}, {5,0}, {6,2}, {1,2}, {3,1}, {2,2}, {4,1}, {8,1}},
  },
  {
    {{0,0}, {7,0}, {4,2}, {7,1}, {2,0}, {3,1}, {3,0}, {8,0}, {5,1}, {8,1}, {7,2}, {2,2}, {2,1}, {6,1}, {4,0}, {0,2}, {6,2}, {1,1}, {5,2}, {0,1}, {3,2}, {5,0}, {1,2}, {6,0}, {8,2}, {4,1}, {1,0}},
    {{0,0}, {1,2}, {2,1}, {6,1}, {5,0}, {2,2}, {3,2}, {6,2}, {2,0}, {8,2}, {7,1}, {6,0}, {1,0}, {0,1}, {3,0}, {7,0}, {3,1}, {4,1}, {8,1}, {4,0}, {0,2}, {4,2}, {5,2}, {1,1}, {5,1}, {8,0}, {7,2}},
    {{0,0}, {6,0}, {4,2}, {7,0}, {0,1}, {4,1}, {5,0}, {1,2}, {3,1}, {7,1}, {1,1}, {8,0}, {5,1}, {2,0}, {4,0}, {2,1}, {6,1}, {7,2}, {2,2}, {0,2}, {8,1}, {6,2}, {5,2}, {3,2}, {8,2}, {3,0}, {1,0}},
  },
};

const Pair93 kBTable[3][3][27] = {
  {
    {{0,0}, {1,2}, {2,1}, {4,2}, {7,2}, {5,1}, {4,1}, {7,1}, {1,0}, {1,1}, {7,0}, {8,2}, {0,2}, {4,0}, {3,0}, {2,0}, {6,1}, {0,1}, {2,2}, {6,0}, {3,2}, {5,0}, {3,1}, {8,0}, {8,1}, {5,2}, {6,2}},
    {{0,0}, {1,2}, {5,0}, {0,1}, {6,0}, {5,2}, {3,1}, {0,2}, {1,0}, {4,0}, {6,1}, {1,1}, {4,1}, {7,1}, {2,0}, {3,2}, {8,1}, {7,2}, {5,1}, {3,0}, {2,1}, {7,0}, {8,2}, {6,2}, {2,2}, {4,2}, {8,0}},
    {{0,0}, {1,1}, {5,1}, {0,1}, {6,0}, {2,1}, {3,1}, {0,2}, {4,1}, {4,2}, {6,1}, {1,0}, {4,0}, {7,0}, {8,0}, {3,2}, {8,2}, {1,2}, {5,2}, {3,0}, {2,2}, {7,2}, {5,0}, {6,2}, {2,0}, {7,1}, {8,1}},
  },
  {
    {{0,0}, {1,2}, {5,0}, {6,2}, {3,1}, {2,2}, {2,1}, {8,0}, {4,2}, {4,0}, {6,0}, {1,1}, {7,1}, {4,1}, {8,1}, {0,1}, {6,1}, {1,0}, {3,2}, {2,0}, {5,1}, {5,2}, {7,2}, {3,0}, {7,0}, {0,2}, {8,2}},
    {{0,0}, {1,0}, {2,1}, {7,1}, {3,2}, {2,0}, {4,1}, {5,1}, {8,1}, {4,0}, {1,1}, {6,2}, {3,1}, {6,1}, {8,2}, {0,2}, {1,2}, {6,0}, {8,0}, {2,2}, {3,0}, {5,0}, {7,0}, {4,2}, {7,2}, {0,1}, {5,2}},
    {{0,0}, {1,2}, {2,0}, {3,0}, {4,0}, {6,0}, {3,2}, {6,2}, {5,1}, {8,1}, {1,1}, {3,1}, {6,1}, {5,0}, {8,0}, {5,2}, {7,2}, {8,2}, {0,2}, {1,0}, {2,2}, {7,0}, {2,1}, {4,1}, {7,1}, {0,1}, {4,2}},
  },
  {
    {{0,0}, {7,1}, {4,1}, {8,1}, {3,1}, {4,0}, {5,0}, {1,1}, {7,0}, {2,1}, {1,0}, {5,1}, {6,1}, {1,2}, {8,2}, {5,2}, {2,0}, {6,0}, {2,2}, {6,2}, {0,1}, {3,0}, {8,0}, {4,2}, {7,2}, {3,2}, {0,2}},
    {{0,0}, {1,0}, {2,0}, {7,0}, {6,0}, {3,0}, {5,0}, {8,1}, {4,0}, {2,2}, {1,2}, {0,2}, {5,2}, {4,1}, {7,1}, {3,1}, {8,0}, {0,1}, {5,1}, {1,1}, {6,1}, {2,1}, {3,2}, {8,2}, {4,2}, {7,2}, {6,2}},
    {{0,0}, {6,1}, {4,1}, {8,1}, {1,0}, {5,1}, {7,2}, {3,2}, {5,2}, {1,1}, {4,2}, {2,2}, {0,2}, {6,2}, {8,0}, {7,0}, {2,1}, {3,0}, {8,2}, {6,0}, {5,0}, {4,0}, {3,1}, {1,2}, {7,1}, {2,0}, {0,1}},
  },
};

const Pair93 kCTable[3][3][27] = {
  {
    {{0,0}, {1,0}, {2,0}, {5,2}, {8,0}, {6,0}, {6,1}, {0,2}, {3,2}, {4,1}, {1,1}, {2,1}, {4,2}, {8,1}, {7,2}, {7,0}, {2,2}, {5,0}, {8,2}, {3,1}, {0,1}, {3,0}, {1,2}, {6,2}, {7,1}, {4,0}, {5,1}},
    {{0,0}, {1,0}, {5,2}, {1,2}, {7,2}, {6,2}, {5,0}, {2,2}, {3,1}, {7,0}, {0,2}, {4,0}, {8,2}, {2,0}, {6,0}, {8,1}, {4,1}, {3,0}, {2,1}, {0,1}, {8,0}, {5,1}, {6,1}, {4,2}, {1,1}, {3,2}, {7,1}},
    {{0,0}, {1,2}, {5,0}, {1,0}, {7,0}, {3,2}, {5,2}, {2,1}, {6,1}, {7,2}, {0,2}, {4,2}, {8,2}, {2,0}, {3,1}, {8,0}, {4,1}, {6,2}, {2,2}, {0,1}, {8,1}, {5,1}, {3,0}, {4,0}, {1,1}, {6,0}, {7,1}},
  },
  {
    {{0,0}, {1,0}, {5,2}, {1,2}, {7,2}, {6,1}, {1,1}, {7,1}, {3,1}, {7,0}, {0,1}, {4,0}, {5,1}, {2,2}, {6,0}, {2,1}, {8,2}, {3,2}, {0,2}, {8,1}, {2,0}, {6,2}, {8,0}, {4,2}, {3,0}, {5,0}, {4,1}},
    {{0,0}, {1,1}, {2,0}, {2,2}, {7,1}, {6,0}, {3,0}, {4,1}, {7,2}, {7,0}, {4,2}, {0,1}, {1,2}, {4,0}, {6,2}, {2,1}, {3,2}, {8,1}, {5,0}, {8,0}, {0,2}, {6,1}, {8,2}, {5,2}, {3,1}, {5,1}, {1,0}},
    {{0,0}, {1,0}, {2,2}, {7,2}, {8,0}, {1,1}, {2,0}, {5,1}, {4,1}, {2,1}, {4,2}, {6,0}, {4,0}, {3,0}, {6,1}, {7,0}, {0,1}, {1,2}, {6,2}, {7,1}, {8,1}, {8,2}, {3,1}, {5,2}, {3,2}, {5,0}, {0,2}},
  },
  {
    {{0,0}, {7,2}, {4,0}, {6,1}, {1,2}, {2,2}, {1,0}, {6,2}, {3,2}, {5,1}, {4,1}, {8,0}, {7,1}, {2,0}, {0,1}, {4,2}, {1,1}, {5,2}, {8,2}, {3,0}, {6,0}, {7,0}, {3,1}, {8,1}, {0,2}, {5,0}, {2,1}},
    {{0,0}, {1,1}, {2,2}, {5,1}, {4,2}, {1,0}, {1,2}, {4,1}, {0,1}, {5,2}, {4,0}, {3,1}, {6,0}, {5,0}, {8,1}, {2,0}, {7,0}, {8,2}, {2,1}, {7,2}, {3,0}, {6,2}, {7,1}, {3,2}, {6,1}, {0,2}, {8,0}},
    {{0,0}, {6,2}, {4,0}, {6,0}, {8,0}, {3,2}, {3,0}, {8,1}, {1,2}, {4,1}, {7,0}, {5,1}, {1,1}, {7,2}, {0,1}, {6,1}, {1,0}, {2,0}, {5,2}, {3,1}, {2,2}, {8,2}, {7,1}, {5,0}, {0,2}, {4,2}, {2,1}},
  },
};

}  // namespace colouring::tables
