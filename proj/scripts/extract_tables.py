#!/usr/bin/env python3
"""Extract the appendix tables from paper.md, verify their stated properties,
and emit the embedded C++ data file plus data/*.perm files.

Run from the repo root:  python3 scripts/extract_tables.py
"""
import re
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
TEXT = (ROOT / "paper.md").read_text()

TUPLE_RE = re.compile(r"\$\((\d+(?:,\d+)+)\)\$")


def tuples_in(block: str):
    return [tuple(int(x) for x in m.group(1).split(",")) for m in TUPLE_RE.finditer(block)]


def table_block(label: str) -> str:
    i = TEXT.index(label)
    j = TEXT.index(r"\end{longtable}", i)
    # skip past the header rows (everything up to the last \endhead or \midrule ... )
    block = TEXT[i:j]
    k = block.rfind(r"\endhead")
    if k != -1:
        block = block[k:]
    return block


# ---------------------------------------------------------------- Table 1
t1 = tuples_in(table_block(r"\label{tab:H3-L3-add-fixing-id}"))
# rows of 5 triples (H3) followed by 5 pairs (L3)
h3_rows, l3_rows = [], []
i = 0
while i < len(t1):
    row_h = t1[i:i + 5]
    assert all(len(t) == 3 for t in row_h), row_h
    row_l = t1[i + 5:i + 10]
    assert all(len(t) == 2 for t in row_l), row_l
    h3_rows.append(row_h)
    l3_rows.append(row_l)
    i += 10
assert len(h3_rows) == 27 and len(l3_rows) == 27

# ---------------------------------------------------------------- Table 2
t2 = tuples_in(table_block(r"\label{Tab:3-add}"))
assert len(t2) == 270
alpha_rows = [t2[i:i + 10] for i in range(0, 270, 10)]

# ---------------------------------------------------------------- f/A/B/C
def grid(label):
    t = tuples_in(table_block(label))
    assert len(t) == 270, (label, len(t))
    return [t[i:i + 10] for i in range(0, 270, 10)]

f_rows = grid(r"\label{tab:f-C9C3}")
a_rows = grid(r"\label{tab:A-C9C3}")
b_rows = grid(r"\label{tab:B-C9C3}")
c_rows = grid(r"\label{tab:C-C9C3}")

# ================================================================ verification
def h3_mul(p, q):
    (i, j, k), (r, s, t) = p, q
    return ((i + r) % 3, (j + s) % 3, (k + t + i * s) % 3)

def h3_inv(p):
    i, j, k = p
    # solve p * q = e
    for r in range(3):
        for s in range(3):
            for t in range(3):
                if h3_mul(p, (r, s, t)) == (0, 0, 0):
                    return (r, s, t)

def l3_mul(p, q):
    (i, j), (r, s) = p, q
    return ((i + pow(4, j, 9) * r) % 9, (j + s) % 3)

def l3_inv(p):
    for r in range(9):
        for s in range(3):
            if l3_mul(p, (r, s)) == (0, 0):
                return (r, s)

def is_perm(col):
    return len(set(col)) == len(col)

fails = []

def check(name, cond):
    if not cond:
        fails.append(name)

for name, rows, mul, inv in (("H3", h3_rows, h3_mul, h3_inv),
                             ("L3", l3_rows, l3_mul, l3_inv)):
    for x, s, d1, d2, d3 in rows:
        check(f"T1/{name}/d1/{x}", mul(s, x) == d1)
        check(f"T1/{name}/d2/{x}", mul(inv(x), s) == d2)
        check(f"T1/{name}/d3/{x}", mul(mul(inv(x), s), x) == d3)
    for col in range(5):
        check(f"T1/{name}/perm{col}", is_perm([r[col] for r in rows]))

def add93(p, q):
    return ((p[0] + q[0]) % 9, (p[1] + q[1]) % 3)

def neg93(p):
    return ((-p[0]) % 9, (-p[1]) % 3)

for h, a0, d1a0, d2a0, a1, d2a1, a2, d2a2, T1, T2 in alpha_rows:
    u, j = h
    check(f"T2/d1a0/{h}", add93(h, a0) == d1a0)
    check(f"T2/d2a0/{h}", add93(neg93(h), a0) == d2a0)
    check(f"T2/d2a1/{h}", add93(neg93(h), a1) == d2a1)
    check(f"T2/d2a2/{h}", add93(neg93(h), a2) == d2a2)
    check(f"T2/T1/{h}", add93(((3 * 1 * j) % 9, 0), add93(h, a1)) == T1)
    check(f"T2/T2/{h}", add93(((3 * 2 * j) % 9, 0), add93(h, a2)) == T2)
for col in range(10):
    check(f"T2/perm{col}", is_perm([r[col] for r in alpha_rows]))

# f tables: h=(j,m) ~ b^j c^m, q_{lam,ell}(j,m) = (3*lam*j mod 9, ell*j mod 3)
for lam in range(3):
    for ell in range(3):
        col = 1 + lam * 3 + ell
        for rf, ra, rb, rc in zip(f_rows, a_rows, b_rows, c_rows):
            h = rf[0]
            j, m = h
            q = ((3 * lam * j) % 9, (ell * j) % 3)
            f = rf[col]
            check(f"A/{lam}{ell}/{h}", add93(add93(q, h), f) == ra[col])
            check(f"B/{lam}{ell}/{h}", add93(neg93(h), f) == rb[col])
            check(f"C/{lam}{ell}/{h}", add93(q, f) == rc[col])
        for rows in (f_rows, a_rows, b_rows, c_rows):
            check(f"perm/{lam}{ell}", is_perm([r[col] for r in rows]))

if fails:
    print("FAILED checks:", fails[:20], f"... ({len(fails)} total)")
    sys.exit(1)
print("all table properties verified")

# ================================================================ C++ emission
def cxx_rows(rows, width):
    out = []
    for r in rows:
        cells = ", ".join("{" + ",".join(map(str, t)) + "}" for t in r)
        out.append(f"    {{{cells}}},")
    return "\n".join(out)

hdr = """// Appendix tables embedded verbatim. Generated by scripts/extract_tables.py;
// do not edit by hand.
#include "colouring/tables.hpp"

namespace colouring::tables {

"""

body = []
body.append("const Table1Row kTable1H3[27] = {\n" +
            "\n".join("    {{{" + "},{".join(",".join(map(str, t)) for t in r) + "}}}," for r in h3_rows) +
            "\n};\n")
body.append("const Table1RowL3 kTable1L3[27] = {\n" +
            "\n".join("    {{{" + "},{".join(",".join(map(str, t)) for t in r) + "}}}," for r in l3_rows) +
            "\n};\n")
body.append("const AlphaRow kAlphaTable[27] = {\n" +
            "\n".join("    {{{" + "},{".join(",".join(map(str, t)) for t in r) + "}}}," for r in alpha_rows) +
            "\n};\n")

def emit_grid(name, rows):
    # rows[27][10]; reorganize as [3][3][27][2] keyed by (lam, ell), plus domain col
    lines = [f"const Pair93 {name}[3][3][27] = {{"]
    for lam in range(3):
        lines.append("  {")
        for ell in range(3):
            col = 1 + lam * 3 + ell
            cells = ", ".join("{" + f"{r[col][0]},{r[col][1]}" + "}" for r in rows)
            lines.append(f"    {{{cells}}},")
        lines.append("  },")
    lines.append("};\n")
    return "\n".join(lines)

body.append("const Pair93 kFTableDomain[27] = {" +
            ", ".join("{" + f"{r[0][0]},{r[0][1]}" + "}" for r in f_rows) + "};\n")
body.append(emit_grid("kFTable", f_rows))
body.append(emit_grid("kATable", a_rows))
body.append(emit_grid("kBTable", b_rows))
body.append(emit_grid("kCTable", c_rows))
body.append("}  // namespace colouring::tables\n")

(ROOT / "src" / "tables_data.cpp").write_text(hdr + "\n".join(body))
print("wrote src/tables_data.cpp")

# ================================================================ data files
DATA = ROOT / "data"
DATA.mkdir(exist_ok=True)

def write_perm(fname, group, n, labels, images, idx):
    """labels: list of tuples in index order; images: map row->(in,out) pairs"""
    lines = [f"group: {group}"]
    img = [None] * n
    for src, dst in images:
        img[idx(src)] = idx(dst)
    assert None not in img
    lines.append("images: [" + ", ".join(map(str, img)) + "]")
    for i in range(n):
        lines.append(f"({','.join(map(str, labels[i]))}) -> ({','.join(map(str, labels[img[i]]))})")
    (DATA / fname).write_text("\n".join(lines) + "\n")

h3_labels = [(i, j, k) for i in range(3) for j in range(3) for k in range(3)]
h3_idx = lambda t: t[0] * 9 + t[1] * 3 + t[2]
write_perm("h3_sigma.perm", "H3", 27, h3_labels,
           [(r[0], r[1]) for r in h3_rows], h3_idx)

l3_labels = [(i, j) for i in range(9) for j in range(3)]
ij_idx = lambda t: t[0] * 3 + t[1]
write_perm("l3_sigma.perm", "L3", 27, l3_labels,
           [(r[0], r[1]) for r in l3_rows], ij_idx)

c93_labels = l3_labels  # same (Z9 x Z3) coordinate grid
for lam, col in ((0, 1), (1, 4), (2, 6)):
    write_perm(f"alpha_{lam}.perm", "C9xC3", 27, c93_labels,
               [(r[0], r[col]) for r in alpha_rows], ij_idx)

for name, rows in (("f", f_rows), ("A", a_rows), ("B", b_rows), ("C", c_rows)):
    for lam in range(3):
        for ell in range(3):
            col = 1 + lam * 3 + ell
            write_perm(f"{name}_{lam}_{ell}.perm", "C9xC3", 27, c93_labels,
                       [(r[0], r[col]) for r in rows], ij_idx)

print("wrote data/*.perm")
