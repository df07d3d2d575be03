"""Minimal binomial presentations of I(H) via fiber graphs.

Two routes to the number of components of the fiber over ``s``:

* the fiber graph itself: all factorizations of ``s``, joined when their
  supports meet (used at Betti degrees, where the vertices are needed);
* the generator graph: vertices ``i`` with ``s - g_i`` in H, joined when
  ``s - g_i - g_j`` is in H.  Its components are in bijection with the
  fiber components and it only needs membership queries, so it is what
  scans all degrees.

Degrees above ``F(H) + 2*max(gens)`` are never Betti degrees: there every
``s - g_i - g_j`` lies in H, so any two factorizations are linked through a
third one using both supports.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Optional

from .almost_arith import AAPresentation, SymmetricCase, classify_symmetric, structure_constants
from .errors import InputError
from .rf import Binomial, all_rf_relations, normalize
from .semigroup import NumericalSemigroup, Vector, iter_factorizations, pseudo_frobenius


class _DSU:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        self.parent[max(ra, rb)] = min(ra, rb)
        return True


@dataclass(frozen=True)
class FiberGraph:
    degree: int
    vertices: tuple[Vector, ...]
    components: tuple[tuple[Vector, ...], ...]

    @property
    def edges(self) -> list[tuple[Vector, Vector]]:
        return [(a, b) for a, b in itertools.combinations(self.vertices, 2)
                if any(x and y for x, y in zip(a, b))]

    @property
    def connected(self) -> bool:
        return len(self.components) <= 1

    def component_of(self) -> dict[Vector, int]:
        return {v: c for c, comp in enumerate(self.components) for v in comp}


def fiber_graph(H: NumericalSemigroup, s: int) -> FiberGraph:
    """The factorizations of ``s`` with their support-overlap components.

    Components are listed by their lexicographically least vertex; vertices
    inside a component are sorted.
    """
    verts = sorted(iter_factorizations(H, s))
    e = len(H.generators)
    # one node per vertex plus one per generator; a vertex joins each generator in its support
    dsu = _DSU(len(verts) + e)
    for idx, a in enumerate(verts):
        for i, c in enumerate(a):
            if c:
                dsu.union(idx, len(verts) + i)
    groups: dict[int, list[Vector]] = {}
    for idx, a in enumerate(verts):
        groups.setdefault(dsu.find(idx), []).append(a)
    comps = sorted(tuple(g) for g in groups.values())
    return FiberGraph(s, tuple(verts), tuple(comps))


def generator_graph_components(H: NumericalSemigroup, s: int) -> int:
    """Number of fiber components of ``s`` counted on the generator graph."""
    gens = H.generators
    live = [i for i, g in enumerate(gens) if H.contains(s - g)]
    if not live:
        return 1 if s == 0 else 0
    dsu = _DSU(len(gens))
    for i, j in itertools.combinations(live, 2):
        if H.contains(s - gens[i] - gens[j]):
            dsu.union(i, j)
    return len({dsu.find(i) for i in live})


def betti_bound(H: NumericalSemigroup) -> int:
    """Every Betti degree is at most this value."""
    return H.conductor - 1 + 2 * max(H.generators)


def betti_degrees(H: NumericalSemigroup) -> list[int]:
    """Degrees ``s`` whose fiber graph is disconnected, ascending."""
    lo = 2 * min(H.generators)
    return [s for s in range(lo, betti_bound(H) + 1)
            if H.contains(s) and generator_graph_components(H, s) > 1]


@dataclass(frozen=True)
class MinimalPresentation:
    generators: tuple[Binomial, ...]
    betti_degrees: tuple[int, ...]  # one entry per generator

    @property
    def count(self) -> int:
        return len(self.generators)


def minimal_generating_set(H: NumericalSemigroup, reverse: bool = False) -> MinimalPresentation:
    """A minimal binomial generating set of I(H).

    At each Betti degree the least vertex of the first component is joined
    to the least vertex of every other component.  ``reverse=True`` uses the
    greatest vertices and the last component instead (same count, different
    generators; handy for tie-break independence checks).
    """
    gens: list[Binomial] = []
    degs: list[int] = []
    for s in betti_degrees(H):
        comps = fiber_graph(H, s).components
        if reverse:
            reps = [c[-1] for c in reversed(comps)]
        else:
            reps = [c[0] for c in comps]
        for other in reps[1:]:
            gens.append(normalize(other, reps[0], H.generators))
            degs.append(s)
    return MinimalPresentation(tuple(gens), tuple(degs))


def spans_components(fg: FiberGraph, binomials: Iterable[Binomial]) -> Optional[list[Binomial]]:
    """Pick a spanning tree of the fiber components of ``fg`` from ``binomials``.

    Candidates are tried in sorted order (Kruskal with lexicographic
    weights). Returns the chosen ``len(components) - 1`` binomials, or
    ``None`` if the candidates do not connect every component.
    """
    where = fg.component_of()
    dsu = _DSU(len(fg.components))
    chosen = []
    for b in sorted(binomials):
        ca, cb = where.get(b.plus), where.get(b.minus)
        if ca is None or cb is None:
            continue
        if dsu.union(ca, cb):
            chosen.append(b)
    if len(chosen) == len(fg.components) - 1:
        return chosen
    return None


def is_minimal_generating_set(H: NumericalSemigroup, binomials: Iterable[Binomial]) -> bool:
    """True iff ``binomials`` is a minimal generating set of I(H).

    That is: exactly ``t - 1`` binomials at each Betti degree with ``t``
    fiber components, connecting all of them, and nothing elsewhere.
    """
    by_deg: dict[int, list[Binomial]] = {}
    for b in binomials:
        by_deg.setdefault(b.degree, []).append(b)
    betti = set(betti_degrees(H))
    if set(by_deg) - betti:
        return False
    for s in betti:
        fg = fiber_graph(H, s)
        bs = by_deg.get(s, [])
        if len(bs) != len(fg.components) - 1 or spans_components(fg, bs) is None:
            return False
    return True


@dataclass(frozen=True)
class TheoremVerdict:
    holds: bool
    witness: dict = field(default_factory=dict)  # Betti degree -> chosen RF-relations
    deficiency: tuple[int, ...] = ()
    mu: int = 0  # minimal number of generators of I(H)

    def as_dict(self) -> dict:
        return {
            "holds": self.holds,
            "mu": self.mu,
            "deficiency": list(self.deficiency),
            "witness": {str(s): [b.as_dict() for b in bs] for s, bs in sorted(self.witness.items())},
        }


def rf_relation_pool(H: NumericalSemigroup) -> set[Binomial]:
    pool: set[Binomial] = set()
    for f in pseudo_frobenius(H):
        pool |= all_rf_relations(H, f).relations
    return pool


def is_minimally_generated_by_rf_relations(H: NumericalSemigroup) -> TheoremVerdict:
    """Check whether some minimal generating set of I(H) consists of RF-relations."""
    pool = rf_relation_pool(H)
    witness: dict[int, list[Binomial]] = {}
    deficiency = []
    mu = 0
    for s in betti_degrees(H):
        fg = fiber_graph(H, s)
        mu += len(fg.components) - 1
        chosen = spans_components(fg, (b for b in pool if b.degree == s))
        if chosen is None:
            deficiency.append(s)
        else:
            witness[s] = chosen
    return TheoremVerdict(not deficiency, witness, tuple(deficiency), mu)


# -- sweeps ----------------------------------------------------------------------------

@dataclass(frozen=True)
class SweepBox:
    m0: range
    d: range
    p: range
    n: Optional[range] = None  # default: [m0 + 1, 3*m0] per m0

    def presentations(self) -> Iterable[tuple[int, int, int, int]]:
        for p in self.p:
            for m0 in self.m0:
                for d in self.d:
                    ns = self.n if self.n is not None else range(m0 + 1, 3 * m0 + 1)
                    for n in ns:
                        yield m0, d, p, n


def check_presentation(params: tuple[int, int, int, int]) -> Optional[dict]:
    """Sweep worker: ``None`` unless the presentation is valid and symmetric."""
    m0, d, p, n = params
    try:
        pres = AAPresentation(m0, d, p, n)
    except InputError:
        return None
    sc = structure_constants(pres)
    case = classify_symmetric(pres, sc)
    if case is SymmetricCase.NotSymmetric:
        return None
    verdict = is_minimally_generated_by_rf_relations(pres.semigroup)
    return {
        "m0": m0, "d": d, "p": p, "n": n,
        "gens": list(pres.gens),
        "case": case.value,
        "frobenius": pseudo_frobenius(pres.semigroup)[0],
        "holds": verdict.holds,
        "mu": verdict.mu,
        "deficiency": list(verdict.deficiency),
        "theorem_claim": p in (2, 3),
    }


def verify_symmetric_sweep(box: SweepBox, jobs: int = 1, progress=None) -> list[dict]:
    """Run :func:`check_presentation` over the box; rows come back in parameter order."""
    params = list(box.presentations())
    if jobs > 1:
        from concurrent.futures import ProcessPoolExecutor
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            results = ex.map(check_presentation, params, chunksize=64)
            rows = []
            for r in results:
                if r is not None:
                    rows.append(r)
                    if progress:
                        progress(r)
            return rows
    rows = []
    for prm in params:
        r = check_presentation(prm)
        if r is not None:
            rows.append(r)
            if progress:
                progress(r)
    return rows


def counterexamples(report: list[dict]) -> list[dict]:
    """Rows where the theorem is claimed (p in {2, 3}) but the check fails."""
    return [r for r in report if r["theorem_claim"] and not r["holds"]]
