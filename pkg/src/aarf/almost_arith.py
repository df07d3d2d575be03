"""Almost arithmetic presentations ``<m0, m0+d, ..., m0+pd, n>``.

Index arithmetic: for ``t >= 1`` write ``t = q_t*p + r_t`` with ``r_t`` in
``[1, p]`` and ``g_t = q_t*m_p + m_{r_t}``; ``g_0 = 0``.  The structure
constants are found by direct bounded search and every defining identity is
re-checked on construction.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from functools import cached_property
from typing import Optional

from .errors import (
    ClassificationMismatch,
    ConstantsNotUnique,
    IndexOutOfRange,
    InvalidPresentation,
    NotMinimal,
    WrongRegime,
)
from .semigroup import NumericalSemigroup, is_symmetric, new_semigroup, pseudo_frobenius


@dataclass(frozen=True)
class AAPresentation:
    m0: int
    d: int
    p: int
    n: int

    def __post_init__(self):
        if self.m0 < 2:
            raise InvalidPresentation(f"m0 must be >= 2, got {self.m0}")
        if self.d < 1:
            raise InvalidPresentation(f"d must be positive, got {self.d}")
        if self.p < 1:
            raise InvalidPresentation(f"p must be positive, got {self.p}")
        if self.n < 1:
            raise InvalidPresentation(f"n must be positive, got {self.n}")
        if math.gcd(self.m0, self.d, self.n) != 1:
            raise InvalidPresentation(f"gcd(m0, d, n) = {math.gcd(self.m0, self.d, self.n)} != 1")
        try:
            self.semigroup
        except NotMinimal as exc:
            raise NotMinimal(f"{self.gens} is not a minimal generating set: {exc}") from None

    @property
    def m(self) -> tuple[int, ...]:
        """The arithmetic part ``m_0, ..., m_p``."""
        return tuple(self.m0 + i * self.d for i in range(self.p + 1))

    @property
    def gens(self) -> tuple[int, ...]:
        """Generators in column order ``m_0, ..., m_p, n``."""
        return self.m + (self.n,)

    @cached_property
    def semigroup(self) -> NumericalSemigroup:
        return new_semigroup(self.gens, keep_order=True)

    def in_arithmetic_part(self, x: int) -> bool:
        """Membership in ``H' = <m_0, ..., m_p>``.

        A sum of ``k`` arithmetic generators is ``k*m0 + j*d`` with
        ``0 <= j <= k*p``.
        """
        if x < 0:
            return False
        for k in range(x // self.m0 + 1):
            rest = x - k * self.m0
            if rest % self.d == 0 and rest // self.d <= k * self.p:
                return True
        return False

    def qr(self, t: int) -> tuple[int, int]:
        """``(q_t, r_t)``; ``t = 0`` is sent to ``(-1, p)`` so that ``g_0 = 0``."""
        if t < 0:
            raise IndexOutOfRange(f"negative index {t}")
        q, r = divmod(t - 1, self.p)
        return q, r + 1

    def g(self, t: int) -> int:
        q, r = self.qr(t)
        return q * self.m[self.p] + self.m[r]


def g_of(pres: AAPresentation, t: int) -> tuple[int, Optional[int], Optional[int]]:
    """``(g_t, q_t, r_t)``; for ``t = 0`` returns ``(0, None, None)``."""
    if t < 0:
        raise IndexOutOfRange(f"negative index {t}")
    if t == 0:
        return 0, None, None
    q, r = pres.qr(t)
    return pres.g(t), q, r


@dataclass(frozen=True)
class StructureConstants:
    u: int
    v: int
    z: int
    w: int
    lam: int
    mu: int
    nu: int
    q: int
    r: int
    q_prime: int
    r_prime: int
    epsilon: int

    @property
    def W_empty(self) -> bool:
        return self.w == 0 or self.z == 0

    @property
    def W(self) -> Optional[tuple[tuple[int, int], tuple[int, int]]]:
        """The rectangle ``[u-z, u-1] x [v-w, v-1]``, or ``None`` when empty."""
        if self.W_empty:
            return None
        return (self.u - self.z, self.u - 1), (self.v - self.w, self.v - 1)

    def as_dict(self) -> dict:
        return {
            "u": self.u, "v": self.v, "z": self.z, "w": self.w,
            "lambda": self.lam, "mu": self.mu, "nu": self.nu,
            "q": self.q, "r": self.r, "q_prime": self.q_prime, "r_prime": self.r_prime,
            "epsilon": self.epsilon, "W_empty": self.W_empty,
        }


def structure_constants(pres: AAPresentation) -> StructureConstants:
    H = pres.semigroup
    m0, n = pres.m0, pres.n

    u = 1
    while not H.contains(pres.g(u) - m0):
        u += 1
    v = 1
    while not pres.in_arithmetic_part(v * n):
        v += 1

    gu = pres.g(u)
    lw = [((gu - w * n) // m0, w) for w in range(v)
          if gu - w * n >= m0 and (gu - w * n) % m0 == 0]
    mz = [((v * n - pres.g(z)) // m0, z) for z in range(u)
          if v * n - pres.g(z) >= 0 and (v * n - pres.g(z)) % m0 == 0]
    if len(lw) != 1 or len(mz) != 1:
        raise ConstantsNotUnique(f"{pres}: (lambda, w) candidates {lw}, (mu, z) candidates {mz}")
    (lam, w), = lw
    (mu, z), = mz

    q, r = pres.qr(u)
    qp, rp = pres.qr(u - z)
    top = pres.g(u - z) + (v - w) * n
    if top % m0:
        raise ConstantsNotUnique(f"{pres}: g_(u-z) + (v-w)n = {top} is not a multiple of m0")
    nu = top // m0
    eps = 1 if rp < r else 0
    if nu != lam + mu + eps:
        raise ConstantsNotUnique(f"{pres}: nu={nu} != lambda+mu+eps={lam + mu + eps}")
    return StructureConstants(u=u, v=v, z=z, w=w, lam=lam, mu=mu, nu=nu,
                              q=q, r=r, q_prime=qp, r_prime=rp, epsilon=eps)


def constant_violations(pres: AAPresentation, sc: StructureConstants) -> list[str]:
    """Identities and structural facts the constants must satisfy; returns the failing ones."""
    p, m0, n = pres.p, pres.m0, pres.n
    g = pres.g
    bad = []

    def check(name, ok):
        if not ok:
            bad.append(name)

    check("g_u = lam*m0 + w*n", g(sc.u) == sc.lam * m0 + sc.w * n)
    check("v*n = mu*m0 + g_z", sc.v * n == sc.mu * m0 + g(sc.z))
    check("g_(u-z) + (v-w)n = nu*m0", g(sc.u - sc.z) + (sc.v - sc.w) * n == sc.nu * m0)
    check("nu = lam + mu + eps", sc.nu == sc.lam + sc.mu + sc.epsilon)
    check("z in [0,u-1]", 0 <= sc.z <= sc.u - 1)
    check("w in [0,v-1]", 0 <= sc.w <= sc.v - 1)
    check("lam >= 1", sc.lam >= 1)
    check("mu >= 0", sc.mu >= 0)
    check("u >= p+1", sc.u >= p + 1)
    check("q >= 1", sc.q >= 1)
    check("q' in [0,q]", 0 <= sc.q_prime <= sc.q)
    if sc.z > 0:
        rz = pres.qr(sc.z)[1]
        expected = sc.r - sc.r_prime if sc.r > sc.r_prime else p + sc.r - sc.r_prime
        check("r_z from r, r'", rz == expected)
    if sc.q_prime == sc.q and sc.z != 0:
        check("q'=q, z!=0 => r'<r, r>=2", sc.r_prime < sc.r and sc.r >= 2)
    if sc.mu == 0:
        check("mu=0 => z>p, q'<q", sc.z > p and sc.q_prime < sc.q)
    if sc.lam == 1:
        check("lam=1 => w!=0", sc.w != 0)
    if sc.lam == 1 and sc.mu == 0:
        check("lam=1, mu=0 => r'<r, r>=2", sc.r_prime < sc.r and sc.r >= 2)
    return bad


def additivity_epsilon(pres: AAPresentation, s: int, t: int) -> Optional[int]:
    """``eps`` with ``g_s + g_t = eps*m0 + g_(s+t)``, or ``None`` if no 0/1 value works."""
    diff = pres.g(s) + pres.g(t) - pres.g(s + t)
    if diff in (0, pres.m0):
        return diff // pres.m0
    return None


# -- pseudo-Frobenius candidates -------------------------------------------------

def gamma_indices(pres: AAPresentation, sc: StructureConstants) -> range:
    p = pres.p
    return range(1, p + 1) if sc.r == 1 else range(p - sc.r + 2, p + 1)


def alpha_indices(pres: AAPresentation, sc: StructureConstants) -> range:
    p = pres.p
    if sc.r_prime == 1:
        return range(p, p + 1) if sc.q_prime == 0 else range(1, p + 1)
    return range(p + 1, p + sc.r_prime)


def beta_indices(pres: AAPresentation, sc: StructureConstants) -> range:
    return gamma_indices(pres, sc)


def gamma(pres: AAPresentation, sc: StructureConstants, k: int) -> int:
    if not sc.W_empty:
        raise WrongRegime("gamma_k is only defined when W is empty")
    if not 1 <= k <= pres.p:
        raise IndexOutOfRange(f"k={k} not in [1, {pres.p}]")
    p = pres.p
    return pres.g((sc.q - 1) * p + sc.r + k - 1) + (sc.v - 1) * pres.n - pres.m0


def alpha(pres: AAPresentation, sc: StructureConstants, i: int) -> int:
    if sc.W_empty:
        raise WrongRegime("alpha_i is only defined when W is nonempty")
    if i not in alpha_indices(pres, sc):
        raise IndexOutOfRange(f"i={i} not in the alpha index set {list(alpha_indices(pres, sc))}")
    return pres.g((sc.q_prime - 1) * pres.p + i) + (sc.v - 1) * pres.n - pres.m0


def beta(pres: AAPresentation, sc: StructureConstants, j: int) -> int:
    if sc.W_empty:
        raise WrongRegime("beta_j is only defined when W is nonempty")
    if not 1 <= j <= pres.p:
        raise IndexOutOfRange(f"j={j} not in [1, {pres.p}]")
    p = pres.p
    return pres.g((sc.q - 1) * p + sc.r + j - 1) + (sc.v - sc.w - 1) * pres.n - pres.m0


@dataclass(frozen=True)
class Candidate:
    family: str  # "gamma" | "alpha" | "beta"
    index: int
    value: int
    confirmed: bool  # value is a pseudo-Frobenius number of H


def pf_candidates(pres: AAPresentation, sc: Optional[StructureConstants] = None) -> list[Candidate]:
    """The closed-form pseudo-Frobenius candidates, each checked against brute force."""
    sc = sc or structure_constants(pres)
    pf = set(pseudo_frobenius(pres.semigroup))
    out = []
    if sc.W_empty:
        for k in gamma_indices(pres, sc):
            val = gamma(pres, sc, k)
            out.append(Candidate("gamma", k, val, val in pf))
    else:
        for i in alpha_indices(pres, sc):
            val = alpha(pres, sc, i)
            out.append(Candidate("alpha", i, val, val in pf))
        for j in beta_indices(pres, sc):
            val = beta(pres, sc, j)
            out.append(Candidate("beta", j, val, val in pf))
    return out


# -- symmetric classification -----------------------------------------------------

class SymmetricCase(enum.Enum):
    NotSymmetric = "NotSymmetric"
    C1_P1R1 = "C1_P1R1"        # W empty, p = 1, r = 1
    C1_R2 = "C1_R2"            # W empty, r = 2
    C2_P1MU0 = "C2_P1MU0"      # W nonempty, p = 1, mu = 0
    C2_SUB_I = "C2_SUB_I"      # r = 1, r' = 2, lam = 1, z < p
    C2_SUB_II = "C2_SUB_II"    # r = 2, r' = 1, mu = 0, q' = 0
    C2_SUB_III = "C2_SUB_III"  # r = 2, r' = 2, mu = 0


def symmetric_case_predicate(pres: AAPresentation, sc: StructureConstants) -> SymmetricCase:
    """The case list alone, without any brute-force check."""
    p = pres.p
    if sc.W_empty:
        if sc.r == 1 and p == 1:
            return SymmetricCase.C1_P1R1
        if sc.r == 2:
            return SymmetricCase.C1_R2
        return SymmetricCase.NotSymmetric
    if p == 1:
        return SymmetricCase.C2_P1MU0 if sc.mu == 0 else SymmetricCase.NotSymmetric
    if sc.r == 1 and sc.r_prime == 2 and sc.lam == 1 and sc.z < p:
        return SymmetricCase.C2_SUB_I
    if sc.r == 2 and sc.r_prime == 1 and sc.mu == 0 and sc.q_prime == 0:
        return SymmetricCase.C2_SUB_II
    if sc.r == 2 and sc.r_prime == 2 and sc.mu == 0:
        return SymmetricCase.C2_SUB_III
    return SymmetricCase.NotSymmetric


def classify_symmetric(pres: AAPresentation, sc: Optional[StructureConstants] = None) -> SymmetricCase:
    sc = sc or structure_constants(pres)
    case = symmetric_case_predicate(pres, sc)
    sym = is_symmetric(pres.semigroup)
    if (case is not SymmetricCase.NotSymmetric) != sym:
        raise ClassificationMismatch(
            f"{pres}: case predicate gives {case.value} but brute-force symmetric={sym}")
    return case
