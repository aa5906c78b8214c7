#include "colouring/tables.hpp"

#include <sstream>

namespace colouring::tables {

namespace {

std::string show(const Coord3& c) {
  std::ostringstream os;
  os << '(' << c.i << ',' << c.j << ',' << c.k << ')';
  return os.str();
}
std::string show(const Coord2& c) {
  std::ostringstream os;
  os << '(' << c.a << ',' << c.b << ')';
  return os.str();
}

Coord2 add93(Coord2 p, Coord2 q) { return {(p.a + q.a) % 9, (p.b + q.b) % 3}; }
Coord2 neg93(Coord2 p) { return {(9 - p.a) % 9, (3 - p.b) % 3}; }

template <typename Cell, typename Show>
void check_column_perm(VerifyReport& rep, const std::string& name,
                       const std::vector<Cell>& col, Show&& show_fn) {
  ++rep.checks;
  for (size_t i = 0; i < col.size(); ++i)
    for (size_t j = i + 1; j < col.size(); ++j)
      if (col[i] == col[j]) {
        rep.fail(name + ": duplicate value " + show_fn(col[i]));
        return;
      }
}

}  // namespace

Perm h3_sigma() {
  Perm p;
  p.images.resize(27);
  for (const auto& row : kTable1H3) {
    const Coord3& x = row.cells[0];
    const Coord3& s = row.cells[1];
    p.images[x.i * 9 + x.j * 3 + x.k] = s.i * 9 + s.j * 3 + s.k;
  }
  return p;
}

Perm l3_sigma() {
  Perm p;
  p.images.resize(27);
  for (const auto& row : kTable1L3) {
    p.images[row.cells[0].a * 3 + row.cells[0].b] =
        row.cells[1].a * 3 + row.cells[1].b;
  }
  return p;
}

std::array<Coord2, 27> alpha_map(int lambda) {
  static const int col[3] = {1, 4, 6};  // a0, a1, a2 columns within AlphaRow
  std::array<Coord2, 27> m{};
  for (const auto& row : kAlphaTable) {
    const Coord2& h = row.cells[0];
    m[h.a * 3 + h.b] = row.cells[col[lambda]];
  }
  return m;
}

std::array<Coord2, 27> f_map(int lambda, int ell) {
  std::array<Coord2, 27> m{};
  for (int r = 0; r < 27; ++r) {
    const Coord2& h = kFTableDomain[r];
    m[h.a * 3 + h.b] = kFTable[lambda][ell][r];
  }
  return m;
}

VerifyReport verify_tables() {
  VerifyReport rep;

  // Table 1: recompute the delta columns via the actual group tables.
  {
    FiniteGroup h3 = build_from_spec("H3");
    auto idx3 = [](const Coord3& c) { return c.i * 9 + c.j * 3 + c.k; };
    for (const auto& row : kTable1H3) {
      Elem x = idx3(row.cells[0]), s = idx3(row.cells[1]);
      Elem d1 = h3.mul(s, x), d2 = h3.mul(h3.inv[x], s), d3 = h3.mul(d2, x);
      ++rep.checks;
      if (d1 != idx3(row.cells[2]) || d2 != idx3(row.cells[3]) || d3 != idx3(row.cells[4]))
        rep.fail("table1/H3/" + show(row.cells[0]) + ": delta columns do not match, got " +
                 h3.label(d1) + " " + h3.label(d2) + " " + h3.label(d3));
    }
    FiniteGroup l3 = build_from_spec("L3");
    auto idx2 = [](const Coord2& c) { return c.a * 3 + c.b; };
    for (const auto& row : kTable1L3) {
      Elem x = idx2(row.cells[0]), s = idx2(row.cells[1]);
      Elem d1 = l3.mul(s, x), d2 = l3.mul(l3.inv[x], s), d3 = l3.mul(d2, x);
      ++rep.checks;
      if (d1 != idx2(row.cells[2]) || d2 != idx2(row.cells[3]) || d3 != idx2(row.cells[4]))
        rep.fail("table1/L3/" + show(row.cells[0]) + ": delta columns do not match, got " +
                 l3.label(d1) + " " + l3.label(d2) + " " + l3.label(d3));
    }
    for (int col = 0; col < 5; ++col) {
      std::vector<Coord3> ch;
      std::vector<Coord2> cl;
      for (int r = 0; r < 27; ++r) {
        ch.push_back(kTable1H3[r].cells[col]);
        cl.push_back(kTable1L3[r].cells[col]);
      }
      check_column_perm(rep, "table1/H3/col" + std::to_string(col), ch,
                        [](const Coord3& c) { return show(c); });
      check_column_perm(rep, "table1/L3/col" + std::to_string(col), cl,
                        [](const Coord2& c) { return show(c); });
    }
  }

  // Table 2: additive recomputation over Z9 x Z3 with z = (3,0), h = (u,j).
  for (const auto& row : kAlphaTable) {
    const Coord2 h = row.cells[0];
    const Coord2 a0 = row.cells[1], a1 = row.cells[4], a2 = row.cells[6];
    struct Want {
      int col;
      Coord2 val;
      const char* name;
    } wants[] = {
        {2, add93(h, a0), "d1(a0)"},
        {3, add93(neg93(h), a0), "d2(a0)"},
        {5, add93(neg93(h), a1), "d2(a1)"},
        {7, add93(neg93(h), a2), "d2(a2)"},
        {8, add93({3 * 1 * h.b % 9, 0}, add93(h, a1)), "T1"},
        {9, add93({3 * 2 * h.b % 9, 0}, add93(h, a2)), "T2"},
    };
    for (const auto& w : wants) {
      ++rep.checks;
      if (row.cells[w.col] != w.val)
        rep.fail("table2/" + show(h) + "/" + w.name + ": expected " + show(w.val) +
                 ", got " + show(row.cells[w.col]));
    }
  }
  for (int col = 0; col < 10; ++col) {
    std::vector<Coord2> c;
    for (int r = 0; r < 27; ++r) c.push_back(kAlphaTable[r].cells[col]);
    check_column_perm(rep, "table2/col" + std::to_string(col), c,
                      [](const Coord2& v) { return show(v); });
  }

  // Tables 3-6: A = q+h+f, B = -h+f, C = q+f with q(j,m) = (3*lambda*j, ell*j).
  for (int lam = 0; lam < 3; ++lam)
    for (int ell = 0; ell < 3; ++ell) {
      std::string tag = "f(" + std::to_string(lam) + "," + std::to_string(ell) + ")";
      for (int r = 0; r < 27; ++r) {
        const Coord2 h = kFTableDomain[r];
        const Coord2 q{3 * lam * h.a % 9, ell * h.a % 3};
        const Coord2 f = kFTable[lam][ell][r];
        const Coord2 wa = add93(add93(q, h), f);
        const Coord2 wb = add93(neg93(h), f);
        const Coord2 wc = add93(q, f);
        ++rep.checks;
        if (kATable[lam][ell][r] != wa)
          rep.fail(tag + "/A/" + show(h) + ": expected " + show(wa) + ", got " +
                   show(kATable[lam][ell][r]));
        ++rep.checks;
        if (kBTable[lam][ell][r] != wb)
          rep.fail(tag + "/B/" + show(h) + ": expected " + show(wb) + ", got " +
                   show(kBTable[lam][ell][r]));
        ++rep.checks;
        if (kCTable[lam][ell][r] != wc)
          rep.fail(tag + "/C/" + show(h) + ": expected " + show(wc) + ", got " +
                   show(kCTable[lam][ell][r]));
      }
      for (const auto* tbl : {&kFTable, &kATable, &kBTable, &kCTable}) {
        std::vector<Coord2> col((*tbl)[lam][ell], (*tbl)[lam][ell] + 27);
        check_column_perm(rep, tag + "/perm", col,
                          [](const Coord2& v) { return show(v); });
      }
    }

  return rep;
}

}  // namespace colouring::tables
