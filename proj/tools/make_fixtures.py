#!/usr/bin/env python3
"""Regenerates data/groups/*.grp. Orders are checked with sympy."""

import itertools
import random
import sys
from pathlib import Path

from sympy.combinatorics import Permutation, PermutationGroup
from sympy.core.random import seed as sympy_seed

OUT = Path(__file__).resolve().parent.parent / "data" / "groups"


def cycles_to_images(n, cycles):
    img = list(range(n))
    for c in cycles:
        for a, b in zip(c, c[1:] + c[:1]):
            img[a - 1] = b - 1
    return img


def cycle_string(img):
    seen = [False] * len(img)
    out = []
    for s in range(len(img)):
        if seen[s] or img[s] == s:
            seen[s] = True
            continue
        cyc = []
        x = s
        while not seen[x]:
            seen[x] = True
            cyc.append(x + 1)
            x = img[x]
        out.append("(" + ",".join(map(str, cyc)) + ")")
    return "".join(out) or "()"


def order_of(n, gens):
    return PermutationGroup([Permutation(g, size=n) for g in gens]).order()


def two_generators(n, gens, order, rng, transitive=True):
    """Replaces a long generating list with two random elements."""
    G = PermutationGroup([Permutation(g, size=n) for g in gens])
    for _ in range(2000):
        a = G.random_pr()
        b = G.random_pr()
        H = PermutationGroup([a, b])
        if H.order() == order and (not transitive or H.is_transitive()):
            return [list(a.array_form), list(b.array_form)]
    raise RuntimeError("no generating pair found")


# --- finite fields ---------------------------------------------------------

def gf(q):
    if q in (2, 3, 5, 7, 11):
        add = lambda a, b: (a + b) % q
        mul = lambda a, b: (a * b) % q
        return list(range(q)), add, mul
    if q == 4:
        # elements 0,1,w,w^2 encoded as bit pairs; w^2 = w + 1
        def mul(a, b):
            r = 0
            for i in range(2):
                if (b >> i) & 1:
                    r ^= a << i
            if r & 4:
                r ^= 0b111
            return r
        return [0, 1, 2, 3], lambda a, b: a ^ b, mul
    raise ValueError(q)


def projective_points(dim, q):
    elems, add, mul = gf(q)
    pts = []
    for v in itertools.product(elems, repeat=dim):
        if all(x == 0 for x in v):
            continue
        lead = next(x for x in v if x != 0)
        if lead == 1:
            pts.append(v)
    return pts


def normalize(v, q):
    elems, add, mul = gf(q)
    lead = next(x for x in v if x != 0)
    inv = next(e for e in elems if mul(e, lead) == 1)
    return tuple(mul(inv, x) for x in v)


def linear_group(dim, q):
    elems, add, mul = gf(q)
    pts = projective_points(dim, q)
    pos = {p: i for i, p in enumerate(pts)}
    scalars = [1] if q != 4 else [1, 2]
    gens = []
    for i in range(dim):
        for j in range(dim):
            if i == j:
                continue
            for a in scalars:
                img = []
                for p in pts:
                    v = list(p)
                    v[j] = add(v[j], mul(a, p[i]))
                    img.append(pos[normalize(tuple(v), q)])
                gens.append(img)
    return len(pts), gens


def semilinear_extras(dim, q):
    """Diagonal and Frobenius maps on the points of PG(dim-1, 4)."""
    elems, add, mul = gf(q)
    pts = projective_points(dim, q)
    pos = {p: i for i, p in enumerate(pts)}
    diag = [pos[normalize((mul(2, p[0]),) + p[1:], q)] for p in pts]
    frob = [pos[normalize(tuple(mul(x, x) for x in p), q)] for p in pts]
    return [diag, frob]


# --- symplectic group on quadratic forms -----------------------------------

def sp62_on_minus_forms():
    vecs = list(itertools.product([0, 1], repeat=6))

    def B(x, y):
        return (x[0] * y[1] + x[1] * y[0] + x[2] * y[3] + x[3] * y[2] +
                x[4] * y[5] + x[5] * y[4]) % 2

    def Q0(x):
        return (x[0] * x[1] + x[2] * x[3] + x[4] * x[5]) % 2

    forms = []
    for a in vecs:
        table = tuple((Q0(x) + B(a, x)) % 2 for x in vecs)
        if sum(1 for v in table if v == 0) == 28:
            forms.append(table)
    index = {f: i for i, f in enumerate(forms)}
    vindex = {v: i for i, v in enumerate(vecs)}
    gens = []
    for v in vecs:
        if not any(v):
            continue
        # transvection x -> x + B(x,v) v is an involution; Q -> Q o t
        t = [vindex[tuple((x[k] + B(x, v) * v[k]) % 2 for k in range(6))] for x in vecs]
        img = []
        for f in forms:
            g = tuple(f[t[i]] for i in range(64))
            img.append(index[g])
        gens.append(img)
    return len(forms), gens


def write(name, n, gens, expected, comment):
    order = order_of(n, gens)
    if order != expected:
        sys.exit(f"{name}: order {order}, expected {expected}")
    lines = [f"# {comment}", f"# order {order}", f"degree {n}"]
    lines += [cycle_string(g) for g in gens]
    (OUT / f"{name}.grp").write_text("\n".join(lines) + "\n")
    print(f"{name}: degree {n}, order {order}")


def main():
    rng = random.Random(20240607)
    random.seed(20240607)
    sympy_seed(20240607)
    OUT.mkdir(parents=True, exist_ok=True)

    def c(n, *cs):
        return cycles_to_images(n, [list(x) for x in cs])

    write("S3", 3, [c(3, (1, 2)), c(3, (1, 2, 3))], 6, "symmetric group S3")
    write("S4", 4, [c(4, (1, 2)), c(4, (1, 2, 3, 4))], 24, "symmetric group S4")
    write("A4", 4, [c(4, (1, 2, 3)), c(4, (2, 3, 4))], 12, "alternating group A4")
    write("D5", 5, [c(5, (1, 2, 3, 4, 5)), c(5, (2, 5), (3, 4))], 10,
          "dihedral group of order 10")

    n, gens = linear_group(3, 2)
    write("L3_2", n, two_generators(n, gens, 168, rng), 168,
          "L3(2) on the points of the projective plane over GF(2)")
    write("L2_11", 11, [c(11, (2, 10), (3, 4), (5, 9), (6, 7)),
                        c(11, (1, 2, 11), (3, 5, 10), (6, 8, 9))], 660,
          "L2(11) on 11 points")
    n, gens = linear_group(3, 3)
    write("L3_3", n, two_generators(n, gens, 5616, rng), 5616,
          "L3(3) on the points of the projective plane over GF(3)")
    n, gens = linear_group(3, 4)
    l34 = two_generators(n, gens, 20160, rng)
    write("L3_4", n, l34, 20160, "L3(4) on the points of the projective plane over GF(4)")
    write("L3_4_normalizer", n, l34 + semilinear_extras(3, 4), 120960,
          "normalizer of L3(4) in S21: the collineation group of the plane")
    n, gens = linear_group(5, 2)
    write("L5_2", n, two_generators(n, gens, 9999360, rng), 9999360,
          "L5(2) on the points of PG(4,2)")

    m11 = [c(11, tuple(range(1, 12))), c(11, (3, 7, 11, 8), (4, 10, 5, 6))]
    write("M11", 11, m11, 7920, "M11 on 11 points")
    m12 = [c(12, tuple(range(1, 12))), c(12, (3, 7, 11, 8), (4, 10, 5, 6)),
           c(12, (1, 12), (2, 11), (3, 6), (4, 8), (5, 9), (7, 10))]
    write("M12", 12, m12, 95040, "M12 on 12 points")

    # transitive M11 inside M12
    G = PermutationGroup([Permutation(g, size=12) for g in m12])
    found = None
    for _ in range(20000):
        a, b = G.random_pr(), G.random_pr()
        H = PermutationGroup([a, b])
        if H.is_transitive() and H.order() == 7920:
            found = [list(a.array_form), list(b.array_form)]
            break
    if found is None:
        sys.exit("no transitive M11 found")
    write("M11_12", 12, found, 7920, "M11 on 12 points")

    m23 = [c(23, tuple(range(1, 24))),
           c(23, (3, 17, 10, 7, 9), (4, 13, 14, 19, 5), (8, 18, 11, 12, 23),
             (15, 20, 22, 21, 16))]
    write("M23", 23, m23, 10200960, "M23 on 23 points")
    m24 = [c(24, tuple(range(1, 24))),
           c(24, (3, 17, 10, 7, 9), (4, 13, 14, 19, 5), (8, 18, 11, 12, 23),
             (15, 20, 22, 21, 16)),
           c(24, (1, 24), (2, 23), (3, 12), (4, 16), (5, 18), (6, 10), (7, 20),
             (8, 14), (9, 21), (11, 17), (13, 22), (15, 19))]
    write("M24", 24, m24, 244823040, "M24 on 24 points")

    n, gens = sp62_on_minus_forms()
    write("S6_2", n, two_generators(n, gens, 1451520, rng), 1451520,
          "S6(2) on the 28 quadratic forms of minus type")


if __name__ == "__main__":
    main()
