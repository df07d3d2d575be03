"""Brute-force reference implementations.

None of these share code with the package: membership is a sieve,
factorizations are a plain recursion over generators in ascending order,
and RF matrices are built by taking the Cartesian product of rows.
"""
from __future__ import annotations

import itertools
import math


def sieve(gens, upto):
    ok = [False] * (upto + 1)
    ok[0] = True
    for x in range(1, upto + 1):
        ok[x] = any(x >= g and ok[x - g] for g in gens)
    return ok


def frobenius(gens):
    # Schur bound: F < (min-1)(max-1)
    bound = (min(gens) - 1) * (max(gens) - 1) + 1
    ok = sieve(gens, bound)
    gaps = [x for x in range(bound + 1) if not ok[x]]
    return max(gaps) if gaps else -1


def member(gens, x):
    if x < 0:
        return False
    return sieve(gens, x)[x]


def pseudo_frobenius(gens):
    F = frobenius(gens)
    ok = sieve(gens, F + max(gens))
    return sorted(f for f in range(F + 1) if not ok[f] and all(ok[f + g] for g in gens))


def apery(gens, m):
    top = frobenius(gens) + m
    ok = sieve(gens, top)
    return sorted(h for h in range(top + 1) if ok[h] and (h < m or not ok[h - m]))


def factorizations(gens, x):
    """All coefficient vectors (in the given generator order) summing to ``x``."""
    order = sorted(range(len(gens)), key=lambda i: gens[i])
    out = []

    def rec(k, rem, acc):
        if k == len(order):
            if rem == 0:
                vec = [0] * len(gens)
                for i, c in zip(order, acc):
                    vec[i] = c
                out.append(tuple(vec))
            return
        g = gens[order[k]]
        for c in range(rem // g + 1):
            rec(k + 1, rem - c * g, acc + [c])

    rec(0, x, [])
    return sorted(out)


def rf_rows(gens, f, i):
    return [a[:i] + (-1,) + a[i + 1:] for a in factorizations(gens, f + gens[i]) if a[i] == 0]


def rf_matrices(gens, f):
    return itertools.product(*(rf_rows(gens, f, i) for i in range(len(gens))))


def rf_count(gens, f):
    return math.prod(len(rf_rows(gens, f, i)) for i in range(len(gens)))


def relation_pairs(rows):
    """Normalized (plus, minus) pairs from pairwise row differences."""
    out = set()
    for a, b in itertools.combinations(rows, 2):
        d = [y - x for x, y in zip(a, b)]
        pos = tuple(max(t, 0) for t in d)
        neg = tuple(max(-t, 0) for t in d)
        if pos != neg:
            out.add((max(pos, neg), min(pos, neg)))
    return out


def fiber_components(gens, s):
    verts = factorizations(gens, s)
    comp = list(range(len(verts)))

    def find(x):
        while comp[x] != x:
            x = comp[x]
        return x

    for a, b in itertools.combinations(range(len(verts)), 2):
        if any(x and y for x, y in zip(verts[a], verts[b])):
            ra, rb = find(a), find(b)
            if ra != rb:
                comp[max(ra, rb)] = min(ra, rb)
    return len({find(i) for i in range(len(verts))})
