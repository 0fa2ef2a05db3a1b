"""Finite ADE root systems, Weyl reflections, dominance, and the maps relating
a finite system to its extended (affine) counterpart.

Roots are integer tuples in simple-root coordinates.  Complex parameters are
tuples of :class:`GaussianRational` and pair with roots through the standard
dot product.  The extended root system is never enumerated; only ``delta``
and the finite set ``Sigma`` of real roots strictly between 0 and ``delta``
are materialised.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .diagrams import ADEType, Diagram, ExtendedDiagram, build_diagram, cartan_matrix, extend_diagram
from .gauss import GaussianRational, pair

Vector = tuple[int, ...]
Parameter = tuple[GaussianRational, ...]

_ZERO = GaussianRational(0)


@dataclass(frozen=True)
class RootSystem:
    adtype: ADEType
    diagram: Diagram
    cartan: tuple[tuple[int, ...], ...]
    roots: tuple[Vector, ...]
    positives: tuple[Vector, ...]
    maximal: Vector

    @property
    def rank(self) -> int:
        return self.adtype.rank

    @property
    def simples(self) -> tuple[Vector, ...]:
        n = self.rank
        return tuple(unit(n, i) for i in range(n))

    @property
    def extended(self) -> ExtendedDiagram:
        return _extended(self.adtype)

    def extended_cartan(self) -> tuple[tuple[int, ...], ...]:
        return cartan_matrix(self.extended)


def unit(n: int, i: int) -> Vector:
    return tuple(1 if k == i else 0 for k in range(n))


def _form(c: Sequence[Sequence[int]], v: Sequence[int], w: Sequence[int]) -> int:
    total = 0
    for i, vi in enumerate(v):
        if vi:
            row = c[i]
            total += vi * sum(row[j] * wj for j, wj in enumerate(w) if wj)
    return total


def _reflect(c: Sequence[Sequence[int]], i: int, v: Sequence[int]) -> Vector:
    # (v, eps_i) = sum_j v_j c_ji
    k = sum(v[j] * c[j][i] for j in range(len(v)))
    if not k:
        return tuple(v)
    out = list(v)
    out[i] -= k
    return tuple(out)


@lru_cache(maxsize=None)
def generate_roots(t: ADEType) -> RootSystem:
    """Closure of the simple roots under the simple reflections."""
    diagram = build_diagram(t)
    c = cartan_matrix(diagram)
    n = t.rank
    seen = {unit(n, i) for i in range(n)}
    frontier = list(seen)
    while frontier:
        nxt = []
        for v in frontier:
            for i in range(n):
                w = _reflect(c, i, v)
                if w not in seen:
                    seen.add(w)
                    nxt.append(w)
        frontier = nxt
    roots = tuple(sorted(seen))
    positives = tuple(r for r in roots if all(x >= 0 for x in r))
    maximal = [p for p in positives if all(all(a >= b for a, b in zip(p, q)) for q in positives)]
    if len(maximal) != 1:
        raise AssertionError(f"no unique maximal root for {t}")
    return RootSystem(t, diagram, c, roots, positives, maximal[0])


@lru_cache(maxsize=None)
def _extended(t: ADEType) -> ExtendedDiagram:
    rs = generate_roots(t)
    return extend_diagram(rs.diagram, rs)


def quadric_roots(c: Sequence[Sequence[int]]) -> set[Vector]:
    """All integer vectors ``v`` with ``v^T C v = 2`` for positive definite ``C``.

    Fincke-Pohst style enumeration over the exact LDL^T factorisation; this is
    independent of the reflection closure and serves as its oracle.
    """
    n = len(c)
    # exact LDL^T: C = L D L^T with L unit lower triangular
    L = [[Fraction(0)] * n for _ in range(n)]
    D = [Fraction(0)] * n
    for j in range(n):
        D[j] = Fraction(c[j][j]) - sum(L[j][k] ** 2 * D[k] for k in range(j))
        if D[j] <= 0:
            raise ValueError("matrix is not positive definite")
        L[j][j] = Fraction(1)
        for i in range(j + 1, n):
            L[i][j] = (c[i][j] - sum(L[i][k] * L[j][k] * D[k] for k in range(j))) / D[j]
    # v^T C v = sum_j D_j (v_j + sum_{i>j} L_ij v_i)^2 ; assign v from the last index down
    target = Fraction(2)
    found: set[Vector] = set()
    v = [0] * n

    def rec(j: int, remaining: Fraction) -> None:
        if j < 0:
            if remaining == 0:
                found.add(tuple(v))
            return
        shift = sum(L[i][j] * v[i] for i in range(j + 1, n))
        radius = math.sqrt(remaining / D[j])
        lo = math.floor(-shift - radius) - 1
        hi = math.ceil(-shift + radius) + 1
        for x in range(lo, hi + 1):
            q = D[j] * (x + shift) ** 2
            if q <= remaining:
                v[j] = x
                rec(j - 1, remaining - q)
        v[j] = 0

    rec(n - 1, target)
    return found


def bilinear(rs: RootSystem, v: Sequence[int], w: Sequence[int]) -> int:
    """Cartan pairing ``v^T C w``; accepts extended coordinates too."""
    if len(v) != len(w):
        raise ValueError("length mismatch")
    if len(v) == rs.rank:
        return _form(rs.cartan, v, w)
    if len(v) == rs.rank + 1:
        return _form(rs.extended_cartan(), v, w)
    raise ValueError(f"vector length {len(v)} does not fit rank {rs.rank}")


def p_defect(rs: RootSystem, v: Sequence[int]) -> int:
    q = bilinear(rs, v, v)
    assert q % 2 == 0, "Cartan form of a simply-laced diagram is even"
    return 1 - q // 2


def simple_reflection(rs: RootSystem, i: int, v: Sequence[int]) -> Vector:
    """``s_i(v) = v - (v, eps_i) eps_i``; ``i`` is a 0-based coordinate index."""
    c = rs.cartan if len(v) == rs.rank else rs.extended_cartan()
    return _reflect(c, i, v)


def dual_reflection(rs: RootSystem, i: int, tau: Sequence[GaussianRational]) -> Parameter:
    """The dual action: ``tau - tau_i * C eps_i``.

    Satisfies ``s_i(alpha) . tau == alpha . dual_reflection(i, tau)``.
    """
    ti = tau[i]
    if not ti:
        return tuple(tau)
    c = rs.cartan
    return tuple(tau[k] - ti * c[k][i] if c[k][i] else tau[k] for k in range(len(tau)))


def apply_word(rs: RootSystem, word: Iterable[int], tau: Sequence[GaussianRational]) -> Parameter:
    out = tuple(tau)
    for i in word:
        out = dual_reflection(rs, i, out)
    return out


def is_dominant(tau: Sequence[GaussianRational]) -> bool:
    return all(z >= _ZERO for z in tau)


def make_dominant(rs: RootSystem, tau: Sequence[GaussianRational]) -> tuple[Parameter, tuple[int, ...]]:
    """Move ``tau`` into the dominant chamber by dual simple reflections.

    Always reflects in the lowest index with a lex-negative coordinate.  Each
    step raises ``rho . tau`` (``rho`` the half sum of positive roots) by
    ``-tau_i > 0``, so the loop ends after finitely many steps.  The word is
    returned in application order.
    """
    cur = tuple(tau)
    word: list[int] = []
    limit = len(rs.positives) + 1
    while True:
        neg = next((i for i, z in enumerate(cur) if z < _ZERO), None)
        if neg is None:
            return cur, tuple(word)
        cur = dual_reflection(rs, neg, cur)
        word.append(neg)
        if len(word) > limit:
            # each step lowers by one the number of positive roots pairing
            # lex-negatively with tau, so |positives| steps always suffice
            raise AssertionError("dominance reduction failed to terminate")


def rho(rs: RootSystem) -> tuple[Fraction, ...]:
    """Half the sum of the positive roots."""
    n = rs.rank
    return tuple(Fraction(sum(p[i] for p in rs.positives), 2) for i in range(n))


def psi(rs: RootSystem, theta: Sequence[int]) -> Vector:
    """``Z^{n+1} -> Z^n`` with ``eps_0 -> -d`` and ``eps_i -> eps_i``."""
    if len(theta) != rs.rank + 1:
        raise ValueError("psi expects extended coordinates")
    t0 = theta[0]
    return tuple(theta[i + 1] - t0 * rs.maximal[i] for i in range(rs.rank))


def psi_inverse(rs: RootSystem, alpha: Sequence[int]) -> Vector:
    """Inverse of ``psi`` restricted to ``Sigma``: ``(0, a)`` or ``(1, d + a)``."""
    if all(x >= 0 for x in alpha):
        return (0,) + tuple(alpha)
    return (1,) + tuple(d + a for d, a in zip(rs.maximal, alpha))


def psi_star(rs: RootSystem, tau: Sequence[GaussianRational]) -> Parameter:
    """Adjoint of ``psi``: ``tau -> (-d . tau, tau)``."""
    if len(tau) != rs.rank:
        raise ValueError("psi_star expects a parameter of length n")
    return (-pair(rs.maximal, tau),) + tuple(tau)


@lru_cache(maxsize=None)
def _sigma(t: ADEType) -> tuple[Vector, ...]:
    rs = generate_roots(t)
    return tuple(sorted(psi_inverse(rs, a) for a in rs.roots))


def sigma_set(rs: RootSystem) -> tuple[Vector, ...]:
    """Real roots of the extended system strictly between 0 and ``delta``."""
    return _sigma(rs.adtype)


def root_system(t: ADEType | str) -> RootSystem:
    if isinstance(t, str):
        t = ADEType.parse(t)
    return generate_roots(t)
