"""Row-factorization (RF) matrices and RF-relations.

Column order is the generator order of the semigroup; for an almost
arithmetic presentation that is ``m_0, ..., m_p, n`` (``n`` last).

Closed-form constructors build each row ``i`` as a factorization of
``f + gens[i]`` read off from the index arithmetic of the presentation; every
matrix is validated before it is returned.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Iterator, Optional, Sequence, Union

from .almost_arith import (
    AAPresentation,
    StructureConstants,
    SymmetricCase,
    alpha,
    alpha_indices,
    beta,
    beta_indices,
    gamma,
    gamma_indices,
    structure_constants,
    symmetric_case_predicate,
)
from .errors import ConstructionInvalid, NoApplicableCase, NotPseudoFrobenius
from .semigroup import NumericalSemigroup, Vector, dot, factorizations, pseudo_frobenius

Rows = tuple[Vector, ...]


@dataclass(frozen=True)
class RFMatrix:
    f: int
    gens: Vector
    rows: Rows
    source: str = "external"

    def __iter__(self):
        return iter(self.rows)

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self.rows]


@dataclass(frozen=True, order=True)
class Binomial:
    """``x^plus - x^minus`` with disjoint supports; ``plus`` is the lexicographically larger side."""

    plus: Vector
    minus: Vector
    degree: int = field(compare=False)

    def as_dict(self) -> dict:
        return {"plus": list(self.plus), "minus": list(self.minus), "degree": self.degree}

    def __str__(self) -> str:
        return f"{_monomial(self.plus)} - {_monomial(self.minus)}"


def _monomial(exps: Sequence[int]) -> str:
    parts = []
    for i, e in enumerate(exps):
        if e == 1:
            parts.append(f"x{i}")
        elif e > 1:
            parts.append(f"x{i}^{e}")
    return "*".join(parts) or "1"


def binomial_from_difference(delta: Sequence[int], gens: Sequence[int]) -> Optional[Binomial]:
    """Normalized binomial for an exponent difference; ``None`` for the zero vector."""
    pos = tuple(max(x, 0) for x in delta)
    neg = tuple(max(-x, 0) for x in delta)
    if pos == neg:
        return None
    if dot(pos, gens) != dot(neg, gens):
        raise ValueError(f"difference {tuple(delta)} is not homogeneous")
    a, b = (pos, neg) if pos > neg else (neg, pos)
    return Binomial(a, b, dot(a, gens))


def normalize(plus: Sequence[int], minus: Sequence[int], gens: Sequence[int]) -> Binomial:
    out = binomial_from_difference([a - b for a, b in zip(plus, minus)], gens)
    if out is None:
        raise ValueError("zero binomial")
    return out


# -- validation / enumeration -----------------------------------------------------

def validate_rf(H: Union[NumericalSemigroup, Sequence[int]], f: int, M) -> bool:
    """True iff ``M`` has diagonal -1, nonnegative off-diagonal and every row dots to ``f``."""
    gens = H.generators if isinstance(H, NumericalSemigroup) else tuple(H)
    rows = M.rows if isinstance(M, RFMatrix) else M
    rows = [list(r) for r in rows]
    e = len(gens)
    if len(rows) != e or any(len(r) != e for r in rows):
        return False
    for i, row in enumerate(rows):
        if row[i] != -1:
            return False
        if any(x < 0 for j, x in enumerate(row) if j != i):
            return False
        if dot(row, gens) != f:
            return False
    return True


def _require_pf(H: NumericalSemigroup, f: int) -> None:
    if f not in pseudo_frobenius(H):
        raise NotPseudoFrobenius(f"{f} is not a pseudo-Frobenius number of {H.generators}")


def rf_row_sets(H: NumericalSemigroup, f: int) -> list[list[Vector]]:
    """Every admissible row ``i`` of an RF matrix for ``f``, in lexicographic order."""
    _require_pf(H, f)
    out = []
    for i, g in enumerate(H.generators):
        rows = []
        for a in factorizations(H, f + g):
            if a[i] == 0:
                rows.append(a[:i] + (-1,) + a[i + 1:])
        out.append(rows)
    return out


def rf_enumerate(H: NumericalSemigroup, f: int, limit: Optional[int] = None) -> Iterator[RFMatrix]:
    """Every RF matrix for ``f``, once each, in lexicographic row-choice order."""
    sets = rf_row_sets(H, f)
    gens = H.generators
    stream = (RFMatrix(f, gens, rows, "enumerated") for rows in itertools.product(*sets))
    return itertools.islice(stream, limit)


def rf_count(H: NumericalSemigroup, f: int) -> int:
    return math.prod(len(s) for s in rf_row_sets(H, f))


# -- relations -----------------------------------------------------------------------

def rf_relations(M: RFMatrix) -> set[Binomial]:
    """Binomials from the pairwise row differences of ``M`` (zero differences dropped)."""
    out = set()
    for a, b in itertools.combinations(M.rows, 2):
        bino = binomial_from_difference([y - x for x, y in zip(a, b)], M.gens)
        if bino is not None:
            out.add(bino)
    return out


@dataclass(frozen=True)
class RFRelationSet:
    f: int
    relations: frozenset
    provenance: dict = field(compare=False, repr=False)

    def sorted(self) -> list[Binomial]:
        return sorted(self.relations)


def all_rf_relations(H: NumericalSemigroup, f: int) -> RFRelationSet:
    """Union of :func:`rf_relations` over every RF matrix of ``f``.

    Rows are chosen independently per index, so this is the set of
    normalized differences between admissible rows ``i`` and ``j`` for
    ``i < j``; no matrix is materialized.
    """
    sets = rf_row_sets(H, f)
    gens = H.generators
    prov: dict[Binomial, tuple[int, int]] = {}
    for i, j in itertools.combinations(range(len(sets)), 2):
        for a in sets[i]:
            for b in sets[j]:
                bino = binomial_from_difference([y - x for x, y in zip(a, b)], gens)
                if bino is not None and bino not in prov:
                    prov[bino] = (i, j)
    return RFRelationSet(f, frozenset(prov), prov)


# -- closed forms ---------------------------------------------------------------------

class _Builder:
    """Row assembly helpers for a presentation; column ``p + 1`` is ``n``."""

    def __init__(self, pres: AAPresentation, sc: StructureConstants):
        self.pres = pres
        self.sc = sc
        self.p = pres.p
        self.N = pres.p + 1

    def row(self, diag: Optional[int], entries: dict[int, int] = (), units: Sequence[int] = ()) -> list[int]:
        """A row with ``-1`` at ``diag``, the given column values and ``+1`` at each of ``units``."""
        r = [0] * (self.p + 2)
        for col, val in dict(entries).items():
            r[col] += val
        for col in units:
            r[col] += 1
        if diag is not None:
            r[diag] -= 1
        return r

    def qr(self, t: int) -> tuple[int, int]:
        return self.pres.qr(t)


def _gamma_matrix(b: _Builder, k: int) -> tuple[list[list[int]], str]:
    """RF matrix for ``gamma_k`` (W empty)."""
    sc, p, N = b.sc, b.p, b.N
    q, r, v, w, lam, mu = sc.q, sc.r, sc.v, sc.w, sc.lam, sc.mu
    qz, rz = b.qr(sc.z)
    rows = []
    if r == 1:
        rows.append(b.row(0, {p: q - 1, N: v - 1}, [k]))
        for j in range(1, p - k + 1):
            rows.append(b.row(j, {p: q - 1, N: v - 1}, [k + j]))
        for j in range(p - k + 1, p + 1):
            if lam > 1:
                rows.append(b.row(j, {0: lam - 2, N: w + v - 1}, [k + j - p - 1]))
            else:
                rows.append(b.row(j, {0: mu - 1, N: w - 1}, [k + j - p - 1]))
        if lam > 1 and mu >= 1:
            rows.append(b.row(N, {0: mu - 1, p: q + qz - 1}, [k, rz]))
            label = "gamma:r=1,lam>1,mu>0"
        elif lam > 1:
            rows.append(b.row(N, {0: lam - 2, p: qz - 1}, [k - 1, rz]))
            label = "gamma:r=1,lam>1,mu=0"
        else:
            rows.append(b.row(N, {0: mu - 1, p: q - 1}, [k]))
            label = "gamma:r=1,lam=1"
    else:
        e = 2 * p + 1 - r - k
        rows.append(b.row(0, {p: q, N: v - 1}, [p - e]))
        for j in range(1, e + 1):
            rows.append(b.row(j, {p: q, N: v - 1}, [p - e + j]))
        for j in range(e + 1, p + 1):
            rows.append(b.row(j, {0: lam - 1, N: w + v - 1}, [k + j - p - 1]))
        if mu >= 1:
            rows.append(b.row(N, {0: mu - 1, p: q + qz}, [p - e, rz]))
            label = "gamma:r>=2,mu>0"
        else:
            rows.append(b.row(N, {0: lam - 1, p: qz - 1}, [k - 1, rz]))
            label = "gamma:r>=2,mu=0"
    if p == 1:
        label += ",p=1"
    return rows, label


def _alpha_matrix(b: _Builder, i: int) -> tuple[list[list[int]], str]:
    """RF matrix for ``alpha_i`` (W nonempty)."""
    sc, p, N = b.sc, b.p, b.N
    q, r, v, w, mu, nu = sc.q, sc.r, sc.v, sc.w, sc.mu, sc.nu
    qp, rp = sc.q_prime, sc.r_prime
    qz, rz = b.qr(sc.z)
    rows = []
    if rp == 1 and qp == 0:
        if mu == 0:
            raise NoApplicableCase("r'=1, q'=0, mu=0: no alpha is pseudo-Frobenius")
        rows.append(b.row(0, {N: v - 1}))
        for j in range(1, p + 1):
            rows.append(b.row(j, {0: nu - 2, N: w - 1}, [j - 1]))
        rows.append(b.row(N, {0: mu - 1, p: qz}, [rz]))
        return rows, "alpha:r'=1,q'=0,mu>0"
    if rp == 1:
        if mu == 0 and r == 1:
            raise NoApplicableCase("r'=1, q'>0, mu=0, r=1: no alpha is pseudo-Frobenius")
        if mu == 0 and i > p - r + 1:
            raise NoApplicableCase(f"alpha_{i} outside [1, p-r+1] for r'=1, mu=0")
        rows.append(b.row(0, {p: qp - 1, N: v - 1}, [i]))
        for j in range(1, p - i + 1):
            rows.append(b.row(j, {p: qp - 1, N: v - 1}, [i + j]))
        for j in range(p - i + 1, p + 1):
            rows.append(b.row(j, {0: nu - 2, N: w - 1}, [i + j - p - 1]))
        if mu > 0:
            rows.append(b.row(N, {0: mu - 1, p: qp + qz - 1}, [i, rz]))
            return rows, "alpha:r'=1,q'>0,mu>0"
        rows.append(b.row(N, {p: q - 1}, [r + i - 1]))
        return rows, "alpha:r'=1,q'>0,mu=0,r>=2"
    theta = i - p
    rows.append(b.row(0, {p: qp, N: v - 1}, [theta]))
    for j in range(1, p - theta + 1):
        rows.append(b.row(j, {p: qp, N: v - 1}, [theta + j]))
    for j in range(p - theta + 1, p + 1):
        rows.append(b.row(j, {0: nu - 1, N: w - 1}, [theta + j - rp]))
    if mu > 0:
        rows.append(b.row(N, {0: mu - 1, p: qp + qz}, [theta, rz]))
        return rows, "alpha:r'>=2,mu>0"
    rows.append(b.row(N, {p: qp + qz}, [theta + rz]))
    return rows, "alpha:r'>=2,mu=0"


def _beta_matrix(b: _Builder, j: int) -> tuple[list[list[int]], str]:
    """RF matrix for ``beta_j`` (W nonempty)."""
    pres, sc, p, N = b.pres, b.sc, b.p, b.N
    q, r, v, w, lam, nu = sc.q, sc.r, sc.v, sc.w, sc.lam, sc.nu
    t = sc.z + j - p - 1
    if t < 0:
        raise ConstructionInvalid(f"beta_{j}: z-p+j-1 = {t} < 0 for {pres}")
    qt, rt = b.qr(t)
    eps = 2 if sc.r_prime + rt <= p else 1
    rows = []
    if r == 1:
        rows.append(b.row(0, {p: q - 1, N: v - w - 1}, [j]))
        for k in range(1, p - j + 1):
            rows.append(b.row(k, {p: q - 1, N: v - w - 1}, [j + k]))
        if lam > 1:
            for k in range(p - j + 1, p + 1):
                rows.append(b.row(k, {0: lam - 2, N: v - 1}, [k + j - p - 1]))
            label = "beta:r=1,lam>1"
        else:
            rows.append(b.row(p - j + 1, {0: lam - 1, N: v - 1}))
            for k in range(p - j + 2, p + 1):
                rows.append(b.row(k, {0: nu - 2, N: w - 1}, [k + j - p - 2]))
            label = "beta:r=1,lam=1"
    else:
        e = 2 * p + 1 - r - j
        rows.append(b.row(0, {p: q, N: v - w - 1}, [p - e]))
        for k in range(1, e + 1):
            rows.append(b.row(k, {p: q, N: v - w - 1}, [p - e + k]))
        for k in range(e + 1, p + 1):
            rows.append(b.row(k, {0: lam - 1, N: v - 1}, [j + k - p - 1]))
        label = "beta:r>=2"
    rows.append(b.row(N, {0: nu - eps, p: qt}, [rt]))
    if p == 1:
        label += ",p=1"
    return rows, label


def _variants(pres: AAPresentation, sc: StructureConstants, family: str,
              base: list[list[int]]) -> list[tuple[list[list[int]], str]]:
    """Alternative RF matrices used to witness the remaining minimal generators for ``p`` in {2, 3}.

    Each is the base matrix with some rows swapped for another factorization
    of the same element.
    """
    p, N = pres.p, pres.p + 1
    q, v, w, lam, mu, nu, qp = sc.q, sc.v, sc.w, sc.lam, sc.mu, sc.nu, sc.q_prime
    case = symmetric_case_predicate(pres, sc)
    out = []

    def swap(label, **repl):
        m = [list(r) for r in base]
        for idx, row in repl.items():
            m[int(idx[1:])] = list(row)
        out.append((m, label))

    if p == 2:
        if family == "alpha" and case is SymmetricCase.C2_SUB_I:
            # (mu-1)m0 + 2m1 + q'm2 = (nu-1)m0 + q m2
            swap("alpha:sym-i:row3", r3=(nu - 1, 0, q, -1))
        if family == "beta" and case is SymmetricCase.C2_SUB_II:
            # (q+1)m2 + (v-w-1)n = lam*m0 + (v-1)n
            swap("beta:sym-ii:row1", r1=(lam, -1, 0, v - 1))
    elif p == 3:
        # m1 + q*m3 = 2m2 + (q-1)m3
        row0 = (-1, 0, 2, q - 1, base[0][N])
        if family == "gamma" and case is SymmetricCase.C1_R2:
            swap("gamma:r=2:row0", r0=row0)
        if family == "alpha" and case is SymmetricCase.C2_SUB_I:
            swap("alpha:sym-i:row3", r3=(mu - 1, 2, 0, -1, w - 1))
            if qp >= 1:
                swap("alpha:sym-i:rows0,3,4", r0=(-1, 0, 2, qp - 1, v - 1),
                     r3=(mu, 0, 1, -1, w - 1), r4=(mu, 0, 0, qp + 1, -1))
        if family == "beta" and case is SymmetricCase.C2_SUB_II:
            swap("beta:sym-ii:rows0,4", r0=row0, r4=(lam - 1, 1, 1, q - 1, -1))
        if family == "beta" and case is SymmetricCase.C2_SUB_III:
            swap("beta:sym-iii:row0", r0=row0)
    return out


def rf_closed_form(pres: AAPresentation, sc: Optional[StructureConstants], f: int) -> list[RFMatrix]:
    """RF matrices for ``f`` from the closed-form constructions.

    ``f`` must be a pseudo-Frobenius number of the presentation. All
    constructions whose formula value equals ``f`` are returned (they can
    coincide when ``p = 1``), followed by the row-swapped variants available
    for ``p`` in {2, 3}.
    """
    sc = sc or structure_constants(pres)
    H = pres.semigroup
    if f not in pseudo_frobenius(H):
        raise NoApplicableCase(f"{f} is not a pseudo-Frobenius number of {pres.gens}")
    b = _Builder(pres, sc)
    built: list[tuple[list[list[int]], str, str]] = []
    if sc.W_empty:
        for k in gamma_indices(pres, sc):
            if gamma(pres, sc, k) == f:
                rows, label = _gamma_matrix(b, k)
                built.append((rows, f"{label}:k={k}", "gamma"))
    else:
        for i in alpha_indices(pres, sc):
            if alpha(pres, sc, i) == f:
                try:
                    rows, label = _alpha_matrix(b, i)
                except NoApplicableCase:
                    continue
                built.append((rows, f"{label}:i={i}", "alpha"))
        for j in beta_indices(pres, sc):
            if beta(pres, sc, j) == f:
                rows, label = _beta_matrix(b, j)
                built.append((rows, f"{label}:j={j}", "beta"))
    if not built:
        raise NoApplicableCase(f"no closed form produces f={f} for {pres.gens}")

    for rows, label, family in list(built):
        for vrows, vlabel in _variants(pres, sc, family, rows):
            built.append((vrows, vlabel, family))

    out: list[RFMatrix] = []
    seen = set()
    for rows, label, _ in built:
        M = RFMatrix(f, pres.gens, tuple(tuple(r) for r in rows), f"closed:{label}")
        if not validate_rf(pres.gens, f, M):
            raise ConstructionInvalid(f"{label} for f={f} on {pres.gens} gave invalid rows {M.tolist()}")
        if M.rows not in seen:
            seen.add(M.rows)
            out.append(M)
    return out
