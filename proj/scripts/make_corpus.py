#!/usr/bin/env python3
"""Regenerates the bundled Matrix Market corpus in data/matrices/.

All values are small integers so every product and sum is exact in binary64;
the accelerator and the reference product must then agree bit for bit.
Row lengths are deliberately varied so that nonzeros per row are rarely a
multiple of k, which is what spreads achieved throughput below peak.
"""
import os
import random

OUT = os.path.join(os.path.dirname(__file__), "..", "data", "matrices")


def write(name, n_rows, n_cols, entries, field="integer", symmetry="general", comment=None):
    path = os.path.join(OUT, name + ".mtx")
    with open(path, "w") as f:
        f.write(f"%%MatrixMarket matrix coordinate {field} {symmetry}\n")
        if comment:
            f.write(f"% {comment}\n")
        f.write(f"{n_rows} {n_cols} {len(entries)}\n")
        for e in entries:
            f.write(" ".join(str(x) for x in e) + "\n")


def nz(rng):
    v = 0
    while v == 0:
        v = rng.randint(-9, 9)
    return v


def main():
    os.makedirs(OUT, exist_ok=True)
    rng = random.Random(20140101)

    write("identity_64", 64, 64, [(i, i, 1) for i in range(1, 65)], comment="identity")

    n = 128
    tri = []
    for i in range(1, n + 1):
        for j in (i - 1, i, i + 1):
            if 1 <= j <= n:
                tri.append((i, j, 2 if i == j else -1))
    write("tridiag_128", n, n, tri, comment="1D Laplacian stencil")

    g = 16
    lap = []
    for r in range(g):
        for c in range(g):
            i = r * g + c + 1
            lap.append((i, i, 4))
            for dr, dc in ((-1, 0), (1, 0), (0, -1), (0, 1)):
                rr, cc = r + dr, c + dc
                if 0 <= rr < g and 0 <= cc < g:
                    lap.append((i, rr * g + cc + 1, -1))
    write("laplace2d_16x16", g * g, g * g, lap, comment="2D 5-point Laplacian on a 16x16 grid")

    n = 96
    arrow = []
    for i in range(1, n + 1):
        arrow.append((i, i, nz(rng)))
        if i > 1:
            arrow.append((i, 1, nz(rng)))
            arrow.append((1, i, nz(rng)))
    write("arrow_96", n, n, arrow, comment="arrowhead: one dense row and column")

    n, bw = 200, 7
    band = [(i, j, nz(rng)) for i in range(1, n + 1) for j in range(max(1, i - bw), min(n, i + bw) + 1)]
    write("banded_200_bw7", n, n, band, comment="band of half-width 7")

    for n, density in ((150, 0.04), (300, 0.02), (512, 0.05)):
        ent = [(i, j, nz(rng)) for i in range(1, n + 1) for j in range(1, n + 1) if rng.random() < density]
        write(f"random_{n}_d{int(density * 100):02d}", n, n, ent, comment=f"uniform random, density {density}")

    n = 120
    lower = []
    for i in range(1, n + 1):
        for j in range(1, i + 1):
            if i == j or rng.random() < 0.05:
                lower.append((i, j, nz(rng)))
    write("symmetric_120", n, n, lower, symmetry="symmetric", comment="lower triangle stored")

    n = 100
    pat = [(i, j) for i in range(1, n + 1) for j in range(1, n + 1) if rng.random() < 0.06]
    write("pattern_100", n, n, pat, field="pattern", comment="pattern entries read as 1.0")

    # Power-law row lengths: a few long rows, many short ones.
    n = 400
    pl = []
    for i in range(1, n + 1):
        length = min(n, max(1, int(rng.paretovariate(1.2))))
        for j in sorted(rng.sample(range(1, n + 1), length)):
            pl.append((i, j, nz(rng)))
    write("powerlaw_400", n, n, pl, comment="Pareto-distributed row lengths")

    write("empty_32", 32, 32, [], comment="no nonzeros")


if __name__ == "__main__":
    main()
