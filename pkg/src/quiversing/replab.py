"""Explicit representations of doubled quivers over the Gaussian rationals.

A point of the representation space assigns to every doubled-quiver edge
``h: s -> t`` a ``dims[t] x dims[s]`` matrix.  This module evaluates the
real and complex moment maps, the complex symplectic form, and the
three-term complex

    Hom(v, w) --sigma--> Rep(Q; v, w) --nu--> Hom(v, w)

whose cohomology dimensions are computed by exact rank.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from . import linalg as la
from .diagrams import Diagram, Quiver, orient
from .gauss import GaussianRational
from .linalg import Matrix

BlockVector = tuple[Matrix, ...]

_HALF_I = GaussianRational(0, GaussianRational(1).re / 2)


class ComplexError(ValueError):
    """The moment map values of the two points do not agree centrally."""


@dataclass(frozen=True)
class RepPoint:
    quiver: Quiver
    dims: tuple[int, ...]
    mats: Mapping[str, Matrix]

    def __post_init__(self) -> None:
        if len(self.dims) != len(self.quiver.vertices):
            raise ValueError("one dimension per vertex required")
        full = {}
        for e in self.quiver.edges:
            rows, cols = self.dim(e.target), self.dim(e.source)
            m = self.mats.get(e.name)
            if m is None:
                m = la.zeros(rows, cols)
            m = tuple(tuple(GaussianRational.coerce(z) for z in row) for row in m)
            if len(m) != rows or any(len(row) != cols for row in m):
                raise ValueError(f"edge {e.name} needs a {rows}x{cols} matrix")
            full[e.name] = m
        unknown = set(self.mats) - set(full)
        if unknown:
            raise ValueError(f"unknown edges {sorted(unknown)}")
        object.__setattr__(self, "mats", full)

    def dim(self, vertex: int) -> int:
        return self.dims[self.quiver.vertices.index(vertex)]

    def __getitem__(self, name: str) -> Matrix:
        return self.mats[name]

    def to_json(self) -> dict:
        return {
            "dims": list(self.dims),
            "mats": {k: [[str(z) for z in row] for row in m] for k, m in self.mats.items()},
        }

    @classmethod
    def from_json(cls, quiver: Quiver, data: Mapping) -> "RepPoint":
        mats = {
            k: tuple(tuple(GaussianRational.parse(z) for z in row) for row in m)
            for k, m in data.get("mats", {}).items()
        }
        return cls(quiver, tuple(data["dims"]), mats)


def mu_complex(x: RepPoint) -> BlockVector:
    """Per vertex ``i``: sum over edges ``h`` into ``i`` of ``sign(h) x_h x_hbar``."""
    q = x.quiver
    out = []
    for i in q.vertices:
        n = x.dim(i)
        acc = la.zeros(n, n)
        for e in q.incoming(i):
            prod = la.matmul(x[e.name], x[e.partner], x.dim(e.source), n)
            acc = la.add(acc, prod) if e.sign == 1 else la.sub(acc, prod)
        out.append(acc)
    return tuple(out)


def mu_real(x: RepPoint) -> BlockVector:
    """Per vertex: ``(i/2) * sum over edges h into i of (x_h x_h^* - x_hbar^* x_hbar)``."""
    q = x.quiver
    out = []
    for i in q.vertices:
        n = x.dim(i)
        acc = la.zeros(n, n)
        for e in q.incoming(i):
            s = x.dim(e.source)
            xh = x[e.name]
            xb = x[e.partner]
            acc = la.add(acc, la.matmul(xh, la.conj_transpose(xh, s), s, n))
            acc = la.sub(acc, la.matmul(la.conj_transpose(xb, n), xb, s, n))
        out.append(la.scale(_HALF_I, acc))
    return tuple(out)


def symplectic_pairing(x: RepPoint, y: RepPoint) -> GaussianRational:
    if x.quiver != y.quiver or x.dims != y.dims:
        raise ValueError("points live in different representation spaces")
    acc = GaussianRational(0)
    for e in x.quiver.edges:
        # x_h is t x s and y_hbar is s x t
        t = la.trace(la.matmul(x[e.name], y[e.partner], x.dim(e.source), x.dim(e.target)))
        acc = acc + t if e.sign == 1 else acc - t
    return acc


def act(g: Mapping[int, Matrix], g_inv: Mapping[int, Matrix], x: RepPoint) -> RepPoint:
    """``(g . x)_h = g_t x_h g_s^{-1}``."""
    mats = {}
    for e in x.quiver.edges:
        s, t = x.dim(e.source), x.dim(e.target)
        m = la.matmul(g[e.target], x[e.name], t, s)
        mats[e.name] = la.matmul(m, g_inv[e.source], s, s)
    return RepPoint(x.quiver, x.dims, mats)


def central_parameter(x: RepPoint) -> dict[int, GaussianRational]:
    """``lam_i`` with ``mu_C(x)_i = lam_i Id`` on every vertex where ``x`` is nonzero.

    Raises :class:`ComplexError` when some block is not scalar.
    """
    out = {}
    for i, block in zip(x.quiver.vertices, mu_complex(x)):
        n = len(block)
        if n == 0:
            continue
        c = block[0][0]
        if any(block[r][s] != (c if r == s else 0) for r in range(n) for s in range(n)):
            raise ComplexError(f"moment map block at vertex {i} is not scalar")
        out[i] = c
    return out


def _check_complex(x: RepPoint, y: RepPoint) -> None:
    if x.quiver != y.quiver:
        raise ValueError("points on different quivers")
    lx, ly = central_parameter(x), central_parameter(y)
    for i in set(lx) & set(ly):
        if lx[i] != ly[i]:
            raise ComplexError(f"moment maps disagree at vertex {i}: not a complex")


def _hom_basis(x: RepPoint, y: RepPoint) -> list[tuple[int, int, int]]:
    return [(i, r, c) for i in x.quiver.vertices for r in range(y.dim(i)) for c in range(x.dim(i))]


def _rep_basis(x: RepPoint, y: RepPoint) -> list[tuple[str, int, int]]:
    return [
        (e.name, r, c)
        for e in x.quiver.edges
        for r in range(y.dim(e.target))
        for c in range(x.dim(e.source))
    ]


def _unit(rows: int, cols: int, r: int, c: int) -> Matrix:
    return tuple(tuple(la.ONE if (a, b) == (r, c) else la.ZERO for b in range(cols)) for a in range(rows))


def sigma_map(x: RepPoint, y: RepPoint) -> Matrix:
    """Matrix of ``u -> (u_t x_h - y_h u_s)_h`` in the standard bases.

    Columns follow ``Hom(v, w)`` ordered by (vertex, row, column); rows follow
    ``Rep(Q; v, w)`` ordered by (edge, row, column).
    """
    q = x.quiver
    rows = _rep_basis(x, y)
    pos = {k: n for n, k in enumerate(rows)}
    cols = _hom_basis(x, y)
    out = [[la.ZERO] * len(cols) for _ in rows]
    for j, (i, r, c) in enumerate(cols):
        u = _unit(y.dim(i), x.dim(i), r, c)
        for e in q.edges:
            s, t = e.source, e.target
            if t == i:
                # u_t x_h
                m = la.matmul(u, x[e.name], x.dim(t), x.dim(s))
                for a, row in enumerate(m):
                    for b, z in enumerate(row):
                        if z:
                            out[pos[(e.name, a, b)]][j] += z
            if s == i:
                # - y_h u_s
                m = la.matmul(y[e.name], u, y.dim(s), x.dim(s))
                for a, row in enumerate(m):
                    for b, z in enumerate(row):
                        if z:
                            out[pos[(e.name, a, b)]][j] -= z
    return tuple(tuple(row) for row in out)


def nu_map(x: RepPoint, y: RepPoint) -> Matrix:
    """Matrix of ``(u_h) -> (sum over h into i of sign(h) (u_h x_hbar + y_h u_hbar))_i``."""
    q = x.quiver
    rows = _hom_basis(x, y)
    pos = {k: n for n, k in enumerate(rows)}
    cols = _rep_basis(x, y)
    out = [[la.ZERO] * len(cols) for _ in rows]
    for j, (name, r, c) in enumerate(cols):
        e = q.edge(name)
        u = _unit(y.dim(e.target), x.dim(e.source), r, c)
        # the term u_h x_hbar lands at vertex t(h)
        i = e.target
        m = la.matmul(u, x[e.partner], x.dim(e.source), x.dim(i))
        _accumulate(out, pos, i, m, e.sign, j)
        # the term y_g u_h with g = hbar lands at vertex t(g) = s(h)
        g = q.opposite(e)
        i = g.target
        m = la.matmul(y[g.name], u, y.dim(e.target), x.dim(e.source))
        _accumulate(out, pos, i, m, g.sign, j)
    return tuple(tuple(row) for row in out)


def _accumulate(out, pos, vertex, m, sign, col) -> None:
    for a, row in enumerate(m):
        for b, z in enumerate(row):
            if z:
                k = pos[(vertex, a, b)]
                out[k][col] = out[k][col] + z if sign == 1 else out[k][col] - z


def cohomology_dims(x: RepPoint, y: RepPoint) -> tuple[int, int, int]:
    """Dimensions of the three cohomology groups of the complex for ``(x, y)``."""
    _check_complex(x, y)
    hom = len(_hom_basis(x, y))
    rep = len(_rep_basis(x, y))
    rs = la.rank(sigma_map(x, y))
    rn = la.rank(nu_map(x, y))
    return hom - rs, rep - rs - rn, hom - rn


def euler_form(x: RepPoint, y: RepPoint) -> int:
    return x.quiver.form(x.dims, y.dims)


def vertex_simple(q: Quiver, i: int) -> RepPoint:
    """One-dimensional at ``i``, zero elsewhere, all maps zero."""
    dims = tuple(1 if v == i else 0 for v in q.vertices)
    return RepPoint(q, dims, {})


def tilde_a1_quiver() -> Quiver:
    """Two arrows ``h1, h2: 0 -> 1`` and their reverses."""
    return orient(Diagram((0, 1), ((0, 1), (0, 1))))


def tilde_a1_simple(lam1: GaussianRational | int) -> RepPoint:
    """Point with ``a_1 = 1``, ``b_1 = lam1`` and the other two maps zero.

    Its complex moment map is ``(-lam1, lam1)``; it is simple iff ``lam1 != 0``.
    """
    lam1 = GaussianRational.coerce(lam1)
    q = tilde_a1_quiver()
    return RepPoint(q, (1, 1), {"h1": ((la.ONE,),), "h1bar": ((lam1,),)})


def block_vector_json(b: BlockVector) -> list:
    return [[[str(z) for z in row] for row in m] for m in b]


def is_anti_hermitian(b: BlockVector) -> bool:
    for m in b:
        n = len(m)
        for r in range(n):
            for s in range(n):
                if m[r][s] != -m[s][r].conjugate():
                    return False
    return True


def rep_point(q: Quiver, dims: Sequence[int], mats: Mapping[str, Sequence[Sequence[object]]]) -> RepPoint:
    return RepPoint(q, tuple(dims), {k: la.matrix(v) for k, v in mats.items()})
