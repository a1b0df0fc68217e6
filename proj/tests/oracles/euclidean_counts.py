#!/usr/bin/env python3
"""Independent Euclidean-coordinate oracle for truncation cardinalities.

Root systems are realized by explicit vectors (not Cartan tables); the Weyl
group is generated as reflection matrices; weights of the root lattice are
enumerated as integer combinations of simple roots in a generous box.
Prints |Lambda_m|, |Lambda_m ∩ pY|, |Gamma_m| per fixture.
"""
import itertools
import sys
from fractions import Fraction as F

import numpy as np


def simple_roots(t, n):
    e = lambda i, d: np.eye(d, dtype=object)[i]
    if t == "A":
        return [e(i, n + 1) - e(i + 1, n + 1) for i in range(n)]
    if t == "B":
        return [e(i, n) - e(i + 1, n) for i in range(n - 1)] + [e(n - 1, n)]
    if t == "C":
        return [e(i, n) - e(i + 1, n) for i in range(n - 1)] + [2 * e(n - 1, n)]
    if t == "G":
        # G2 inside the plane x+y+z=0: short a1, long a2
        return [np.array([1, -1, 0], dtype=object), np.array([-2, 1, 1], dtype=object)]
    raise ValueError(t)


def dot(u, v):
    return sum(F(a) * F(b) for a, b in zip(u, v))


def coroot_pair(y, a):
    return 2 * dot(y, a) / dot(a, a)


def reflect(y, a):
    return y - coroot_pair(y, a) * a


def all_roots(simple):
    roots = {tuple(F(x) for x in a) for a in simple}
    frontier = list(roots)
    while frontier:
        nxt = []
        for r in frontier:
            for a in simple:
                s = tuple(reflect(np.array(r, dtype=object), a))
                if s not in roots:
                    roots.add(s)
                    nxt.append(s)
        frontier = nxt
    return [np.array(r, dtype=object) for r in roots]


def run(t, n, p, m):
    simple = [np.array([F(x) for x in a], dtype=object) for a in simple_roots(t, n)]
    roots = all_roots(simple)
    # positive roots: nonnegative coefficients; determine via a generic functional
    gen = [F(1, 10 ** k) for k in range(len(simple[0]))]
    # choose positive = coefficient sum positive in simple basis; compute by least squares
    S = np.array([[float(x) for x in a] for a in simple]).T
    pos = []
    for r in roots:
        c = np.linalg.lstsq(S, np.array([float(x) for x in r]), rcond=None)[0]
        if c.sum() > 0:
            pos.append(r)
    rho = sum(pos, np.zeros(len(simple[0]), dtype=object)) / 2
    # weyl orbit of rho (faithful)
    orbit = {tuple(rho)}
    frontier = [rho]
    while frontier:
        nxt = []
        for v in frontier:
            for a in simple:
                s = reflect(v, a)
                if tuple(s) not in orbit:
                    orbit.add(tuple(s))
                    nxt.append(s)
        frontier = nxt
    worbit = [np.array(v, dtype=object) for v in orbit]
    bound = m * p
    # box in simple-root coefficients large enough to contain Lambda_m
    cbox = int(sys.argv[1]) * bound + 2 if len(sys.argv) > 1 else 2 * bound + 2
    lam = []
    for c in itertools.product(range(-cbox, cbox + 1), repeat=n):
        y = sum((ci * a for ci, a in zip(c, simple)), np.zeros(len(simple[0]), dtype=object))
        if all(abs(coroot_pair(y, a)) <= bound for a in pos):
            lam.append((c, y))
    lam_py = [c for c, _ in lam if all(ci % p == 0 for ci in c)]

    def in_orbit(c, y):
        # y + rho - w rho must be p * (root lattice element)
        for v in worbit:
            d = y + rho - v
            coeff = np.linalg.lstsq(S, np.array([float(x) for x in d]), rcond=None)[0]
            r = np.rint(coeff)
            if np.allclose(coeff, r, atol=1e-9) and all(int(x) % p == 0 for x in r):
                return True
        return False

    gam = [c for c, y in lam if all(coroot_pair(y, a) >= 0 for a in simple) and in_orbit(c, y)]
    return len(lam), len(lam_py), len(gam)


FIXTURES = [("A", 1, 5), ("A", 2, 5), ("A", 2, 7), ("B", 2, 5), ("B", 2, 7), ("G", 2, 11), ("C", 2, 7)]

if __name__ == "__main__":
    for t, n, p in FIXTURES:
        for m in (1, 2):
            print(t, n, p, m, *run(t, n, p, m), flush=True)
