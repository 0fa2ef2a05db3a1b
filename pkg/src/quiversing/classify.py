"""Singular points of the quiver variety of dimension ``delta`` over an
extended Dynkin quiver, for a complex parameter ``lam`` with ``lam . delta = 0``.

Each singular point corresponds to one irreducible component of the roots of
the finite system orthogonal to ``tau`` (the last ``n`` coordinates of
``lam``).  A component with base ``alpha_1..alpha_k`` and maximal root
``beta = sum n_t alpha_t`` gives the semisimple module with simple summands of
dimension ``gamma_0 = (1, d - beta)`` (once) and ``gamma_t = (0, alpha_t)``
(``n_t`` times).  The local model is the extended Dynkin quiver of the
component type with dimension vector ``(1, n_1, .., n_k)``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterable, Sequence

import numpy as np

from .decompose import ComponentBase, decompose
from .diagrams import (
    ADEType,
    Diagram,
    ExtendedDiagram,
    GroupDescriptor,
    Quiver,
    cartan_matrix,
    identify_type,
    mckay_group,
    orient,
)
from .gauss import GaussianRational, pair
from .roots import Parameter, RootSystem, Vector, generate_roots, psi_star, sigma_set


class ParameterError(ValueError):
    """The parameter does not pair to zero with ``delta``."""


Form = Callable[[Sequence[int], Sequence[int]], int]


@dataclass(frozen=True)
class SliceQuiver:
    quiver: Quiver
    delta_prime: tuple[int, ...]

    @property
    def diagram(self) -> Diagram:
        return self.quiver.underlying()

    def to_json(self) -> dict:
        return {
            "vertices": list(self.quiver.vertices),
            "arrows": [[e.source, e.target] for e in self.quiver.arrows()],
            "delta": list(self.delta_prime),
        }


@dataclass(frozen=True)
class SingularPoint:
    component: ComponentBase
    adtype: ADEType
    mckay: GroupDescriptor
    gamma0: Vector
    gammas: tuple[Vector, ...]
    multiplicities: tuple[int, ...]
    stabilizer: tuple[int, ...]
    slice: SliceQuiver

    def to_json(self) -> dict:
        return {
            "type": str(self.adtype),
            "mckay": self.mckay.to_json(),
            "beta": list(self.component.beta),
            "gamma0": list(self.gamma0),
            "gammas": [list(g) for g in self.gammas],
            "multiplicities": list(self.multiplicities),
            "stabilizer": list(self.stabilizer),
            "slice_delta": list(self.slice.delta_prime),
            "slice_arrows": [[e.source, e.target] for e in self.slice.quiver.arrows()],
        }


@dataclass(frozen=True)
class Classification:
    lam: Parameter
    regular_nonempty: bool
    singular_points: tuple[SingularPoint, ...]

    @property
    def types(self) -> tuple[ADEType, ...]:
        return tuple(sorted(sp.adtype for sp in self.singular_points))

    def to_json(self) -> dict:
        return {
            "lambda": [str(z) for z in self.lam],
            "singular": [sp.to_json() for sp in self.singular_points],
            "regular_nonempty": self.regular_nonempty,
        }


def _system(target: ExtendedDiagram | RootSystem | ADEType | Quiver) -> tuple[RootSystem, Form]:
    """Root system of the finite diagram plus the pairing on extended coordinates."""
    if isinstance(target, Quiver):
        rs = system_of_quiver(target)
        return rs, target.form
    if isinstance(target, RootSystem):
        rs = target
    elif isinstance(target, ADEType):
        rs = generate_roots(target)
    else:
        if target.adtype is None:
            raise ValueError("extended diagram carries no ADE type")
        rs = generate_roots(target.adtype)
    c = rs.extended_cartan()
    return rs, lambda v, w: sum(v[i] * c[i][j] * w[j] for i in range(len(v)) for j in range(len(w)) if v[i] and w[j])


def system_of_quiver(q: Quiver) -> RootSystem:
    """Recover the finite root system from an oriented extended Dynkin quiver.

    The quiver must use the vertex labels of :func:`extend_diagram`.
    """
    und = q.underlying()
    base_vertices = tuple(v for v in und.vertices if v != 0)
    base = Diagram(base_vertices, tuple(b for b in und.bonds if 0 not in b))
    t, _ = identify_type(base.graph())
    rs = generate_roots(t)
    if tuple(sorted(und.bonds)) != rs.extended.bonds:
        raise ValueError("quiver is not an extended Dynkin quiver in canonical labeling")
    return rs


def normalize_parameter(rs: RootSystem, lam: Sequence[GaussianRational]) -> Parameter:
    """Full-length ``lam`` from either ``lam`` (length n+1) or ``tau`` (length n)."""
    lam = tuple(GaussianRational.coerce(z) for z in lam)
    delta = rs.extended.delta
    if len(lam) == rs.rank:
        return psi_star(rs, lam)
    if len(lam) != rs.rank + 1:
        raise ParameterError(f"parameter must have length {rs.rank} or {rs.rank + 1}, got {len(lam)}")
    if pair(delta, lam):
        raise ParameterError("lambda . delta != 0: parameter is off the hyperplane orthogonal to delta")
    return lam


def sigma_lambda(ed: ExtendedDiagram | RootSystem, lam: Sequence[GaussianRational]) -> tuple[Vector, ...]:
    """Elements of Sigma orthogonal to ``lam``."""
    rs = ed if isinstance(ed, RootSystem) else generate_roots(ed.adtype)
    lam = tuple(GaussianRational.coerce(z) for z in lam)
    return tuple(a for a in sigma_set(rs) if not pair(a, lam))


def _leq(a: Sequence[int], b: Sequence[int]) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _sub(a: Sequence[int], b: Sequence[int]) -> Vector:
    return tuple(x - y for x, y in zip(a, b))


class _SumTable:
    """Memoised ``x is a sum of >= 1 elements`` over the box below ``delta``."""

    def __init__(self, elements: Iterable[Vector]) -> None:
        self.elements = tuple(sorted(set(elements), key=sum))
        self.eset = set(self.elements)
        self.memo: dict[Vector, bool] = {}

    def reachable(self, x: Vector) -> bool:
        # recursion depth is bounded by the height of delta (at most 30)
        hit = self.memo.get(x)
        if hit is not None:
            return hit
        ok = x in self.eset
        if not ok:
            hx = sum(x)
            for e in self.elements:
                if sum(e) >= hx:
                    break
                if _leq(e, x) and self.reachable(_sub(x, e)):
                    ok = True
                    break
        self.memo[x] = ok
        return ok

    def splits(self, x: Vector) -> bool:
        """``x`` is a sum of at least two elements."""
        hx = sum(x)
        for e in self.elements:
            if sum(e) >= hx:
                break
            if _leq(e, x) and self.reachable(_sub(x, e)):
                return True
        return False


def sigma_lambda_min(sig: Iterable[Vector]) -> tuple[Vector, ...]:
    """Elements of ``sig`` that are not a sum of two or more elements of ``sig``."""
    table = _SumTable(sig)
    return tuple(sorted(a for a in table.elements if not table.splits(a)))


def simple_exists(ed: ExtendedDiagram | RootSystem, alpha: Sequence[int], lam: Sequence[GaussianRational]) -> bool:
    """Whether a simple module of dimension ``alpha`` exists, for ``0 < alpha <= delta``."""
    rs = ed if isinstance(ed, RootSystem) else generate_roots(ed.adtype)
    alpha = tuple(alpha)
    delta = rs.extended.delta
    lam = tuple(GaussianRational.coerce(z) for z in lam)
    if not (_leq(alpha, delta) and any(alpha) and all(x >= 0 for x in alpha)):
        raise ValueError("alpha must satisfy 0 < alpha <= delta")
    if alpha == delta:
        return not pair(delta, lam)
    return alpha in _minimal_set(rs.adtype, lam)


@lru_cache(maxsize=64)
def _minimal_set(t: ADEType, lam: Parameter) -> frozenset[Vector]:
    return frozenset(sigma_lambda_min(sigma_lambda(generate_roots(t), lam)))


def _pairing_matrix_form(c: Sequence[Sequence[int]]) -> Form:
    return lambda v, w: sum(v[i] * c[i][j] * w[j] for i in range(len(v)) for j in range(len(w)) if v[i] and w[j])


def r_plus(ed: ExtendedDiagram | Quiver, v: Sequence[int]) -> set[Vector]:
    """``{theta : 0 < theta < v, (theta, theta) <= 2}`` by exhaustive box enumeration."""
    v = tuple(v)
    if any(x < 0 for x in v):
        raise ValueError("dimension vector must be non-negative")
    if isinstance(ed, Quiver):
        n = len(ed.vertices)
        c = np.array([[ed.form(_e(n, i), _e(n, j)) for j in range(n)] for i in range(n)], dtype=np.int64)
    else:
        c = np.array(cartan_matrix(ed), dtype=np.int64)
    if len(v) != c.shape[0]:
        raise ValueError("dimension vector length does not match the diagram")
    return {tuple(int(x) for x in row) for row in _box_quadric(v, c, 2)}


def _e(n: int, i: int) -> tuple[int, ...]:
    return tuple(1 if k == i else 0 for k in range(n))


def _box_quadric(v: tuple[int, ...], c: np.ndarray, bound: int) -> np.ndarray:
    grids = np.indices(tuple(x + 1 for x in v), dtype=np.int64).reshape(len(v), -1).T
    q = np.einsum("ij,jk,ik->i", grids, c, grids)
    nonzero = grids.any(axis=1)
    not_v = (grids != np.array(v, dtype=np.int64)).any(axis=1)
    return grids[(q <= bound) & nonzero & not_v]


def is_generic(
    ed: ExtendedDiagram | Quiver,
    xi: Sequence[Sequence[int | Fraction]],
    v: Sequence[int],
) -> bool:
    """Whether the real triple ``xi`` avoids every wall cut out by ``r_plus(v)``."""
    if len(xi) != 3:
        raise ValueError("xi must be a triple of real vectors")
    xi = [tuple(Fraction(x) for x in comp) for comp in xi]
    if any(sum(a * b for a, b in zip(comp, v)) for comp in xi):
        return False
    for theta in r_plus(ed, v):
        if all(sum(a * b for a, b in zip(comp, theta)) == 0 for comp in xi):
            return False
    return True


@lru_cache(maxsize=None)
def _box_roots(t: ADEType) -> tuple[Vector, ...]:
    """Positive roots of the extended system up to ``delta``, found by box enumeration."""
    rs = generate_roots(t)
    delta = rs.extended.delta
    c = np.array(rs.extended_cartan(), dtype=np.int64)
    # the form is even and semidefinite with radical Z delta, so inside the box
    # "norm <= 2" leaves exactly the real roots; delta is the only imaginary one
    real = [tuple(int(x) for x in row) for row in _box_quadric(delta, c, 2)]
    return tuple(sorted(real, key=sum)) + (delta,)


_NONE = -(10**9)


@lru_cache(maxsize=None)
def _box_levels(t: ADEType):
    """Flat indexing of the box ``[0, delta]`` grouped by height."""
    delta = generate_roots(t).extended.delta
    shape = tuple(x + 1 for x in delta)
    coords = np.indices(shape, dtype=np.int64).reshape(len(delta), -1).T
    height = coords.sum(axis=1)
    levels = [np.flatnonzero(height == h) for h in range(int(height.max()) + 1)]
    return shape, coords, levels


class _SplitBound:
    """Largest sum of ``p`` over splittings into roots orthogonal to ``lam``.

    Dynamic programme over the box below ``delta``, one height level at a
    time; entries equal to ``_NONE`` mean no splitting exists.
    """

    def __init__(self, t: ADEType, lam: Parameter) -> None:
        rs = generate_roots(t)
        form = _pairing_matrix_form(rs.extended_cartan())
        shape, coords, levels = _box_levels(t)
        self.shape = shape
        self.all_roots = set(_box_roots(t))
        roots = [r for r in _box_roots(t) if not pair(r, lam)]
        self.p_of = {r: 1 - form(r, r) // 2 for r in self.all_roots}
        size = coords.shape[0]
        best = np.full(size, _NONE, dtype=np.int64)        # >= 1 parts
        proper = np.full(size, _NONE, dtype=np.int64)      # >= 2 parts
        own = np.full(size, _NONE, dtype=np.int64)
        offsets = []
        for r in roots:
            k = int(np.ravel_multi_index(r, shape))
            own[k] = self.p_of[r]
            offsets.append((np.array(r, dtype=np.int64), k, self.p_of[r], sum(r)))
        for h, idx in enumerate(levels):
            if h == 0:
                continue
            pts = coords[idx]
            acc = proper[idx]
            for rvec, k, pr, hr in offsets:
                if hr >= h:
                    continue
                ok = (pts >= rvec).all(axis=1)
                if not ok.any():
                    continue
                src = best[idx[ok] - k]
                cand = np.where(src > _NONE, src + pr, _NONE)
                acc[ok] = np.maximum(acc[ok], cand)
            proper[idx] = acc
            best[idx] = np.maximum(acc, own[idx])
        self.proper = proper

    def best_proper(self, x: Vector) -> int | None:
        v = int(self.proper[np.ravel_multi_index(x, self.shape)])
        return None if v == _NONE else v


@lru_cache(maxsize=16)
def _split_bound(t: ADEType, lam: Parameter) -> _SplitBound:
    return _SplitBound(t, lam)


def crawley_boevey_oracle(
    ed: ExtendedDiagram | RootSystem, alpha: Sequence[int], lam: Sequence[GaussianRational]
) -> bool:
    """Simple-module existence straight from the root and ``p``-inequality criterion.

    ``alpha`` must be a root with ``lam . alpha = 0`` and, for every splitting
    into two or more positive roots orthogonal to ``lam``, ``p(alpha)`` must
    exceed the sum of ``p`` over the parts.  Roots below ``delta`` are found by
    box enumeration, independently of Sigma.
    """
    rs = ed if isinstance(ed, RootSystem) else generate_roots(ed.adtype)
    lam = tuple(GaussianRational.coerce(z) for z in lam)
    alpha = tuple(alpha)
    table = _split_bound(rs.adtype, lam)
    if alpha not in table.all_roots or pair(alpha, lam):
        return False
    worst = table.best_proper(alpha)
    return worst is None or table.p_of[alpha] > worst


def slice_quiver(sp_or_component, rs: RootSystem | None = None, form: Form | None = None) -> SliceQuiver:
    """Local quiver at a singular point.

    Vertices ``0..k`` stand for ``-beta, alpha_1, .., alpha_k``; vertices are
    joined by ``-(a_s, a_t)`` bonds when that pairing is negative, and every
    bond is oriented from the lower to the higher index.
    """
    if isinstance(sp_or_component, SingularPoint):
        comp = sp_or_component.component
        gammas = (sp_or_component.gamma0,) + sp_or_component.gammas
        mult = sp_or_component.multiplicities
        if form is None:
            rs = rs or generate_roots(_ambient_type(sp_or_component))
            form = _pairing_matrix_form(rs.extended_cartan())
    else:
        comp = sp_or_component
        if rs is None:
            raise ValueError("a root system is needed to build a slice from a component")
        gammas = _gammas(rs, comp)
        mult = comp.mult
        form = form or _pairing_matrix_form(rs.extended_cartan())
    k = len(comp.base)
    bonds = []
    for s in range(k + 1):
        for t in range(s + 1, k + 1):
            m = form(gammas[s], gammas[t])
            if m > 0:
                raise AssertionError("distinct simple dimension vectors pair positively")
            bonds.extend([(s, t)] * (-m))
    d = Diagram(tuple(range(k + 1)), tuple(bonds))
    return SliceQuiver(orient(d), (1,) + tuple(mult))


def _ambient_type(sp: SingularPoint) -> ADEType:
    n = len(sp.gamma0) - 1
    for t in _types_of_rank(n):
        rs = generate_roots(t)
        if tuple(a + b for a, b in zip(sp.gamma0[1:], sp.component.beta)) == rs.maximal:
            return t
    raise ValueError("cannot recover the ambient type of a singular point")


def _types_of_rank(n: int) -> list[ADEType]:
    out = [ADEType("A", n)]
    if n >= 4:
        out.append(ADEType("D", n))
    if n in (6, 7, 8):
        out.append(ADEType("E", n))
    return out


def _gammas(rs: RootSystem, comp: ComponentBase) -> tuple[Vector, ...]:
    gamma0 = (1,) + tuple(d - b for d, b in zip(rs.maximal, comp.beta))
    return (gamma0,) + tuple((0,) + tuple(a) for a in comp.base)


def classify_singularities(
    target: ExtendedDiagram | RootSystem | ADEType | Quiver, lam: Sequence[GaussianRational]
) -> Classification:
    """All singular points for the parameter ``lam`` (or ``tau``, promoted via psi*)."""
    rs, form = _system(target)
    lam = normalize_parameter(rs, lam)
    tau = lam[1:]
    points = []
    for comp in decompose(rs, tau):
        gammas = _gammas(rs, comp)
        points.append(
            SingularPoint(
                component=comp,
                adtype=comp.adtype,
                mckay=mckay_group(comp.adtype),
                gamma0=gammas[0],
                gammas=gammas[1:],
                multiplicities=comp.mult,
                stabilizer=(1,) + comp.mult,
                slice=slice_quiver(comp, rs, form),
            )
        )
    return Classification(lam, True, tuple(points))
