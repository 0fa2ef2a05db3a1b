"""Root subsystems orthogonal to a complex parameter.

For a parameter ``tau`` the roots orthogonal to both its real and imaginary
parts form a root system.  Its positive roots have a unique base inside the
ambient positive roots; splitting that base into mutually orthogonal
connected pieces gives the irreducible components, each of ADE type.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import networkx as nx

from .diagrams import ADEType, identify_type
from .gauss import GaussianRational, integer_components
from .roots import RootSystem, Vector, bilinear, generate_roots


@dataclass(frozen=True)
class OrthogonalSlice:
    system: RootSystem
    roots: tuple[Vector, ...]

    @property
    def positives(self) -> tuple[Vector, ...]:
        return tuple(r for r in self.roots if all(x >= 0 for x in r))


@dataclass(frozen=True)
class ComponentBase:
    """One irreducible component of an orthogonal slice.

    ``base`` lists the simple roots (ambient coordinates) in the canonical
    labeling order of ``adtype``; ``beta`` is the component's maximal root and
    ``mult`` its coefficients on ``base``.
    """

    adtype: ADEType
    base: tuple[Vector, ...]
    beta: Vector
    mult: tuple[int, ...]
    positives: tuple[Vector, ...]

    def to_json(self) -> dict:
        return {
            "type": str(self.adtype),
            "base": [list(b) for b in self.base],
            "beta": list(self.beta),
            "mult": list(self.mult),
        }


def _add(a: Sequence[int], b: Sequence[int]) -> Vector:
    return tuple(x + y for x, y in zip(a, b))


def _sub(a: Sequence[int], b: Sequence[int]) -> Vector:
    return tuple(x - y for x, y in zip(a, b))


def orthogonal_roots(rs: RootSystem, tau: Sequence[GaussianRational]) -> OrthogonalSlice:
    if len(tau) != rs.rank:
        raise ValueError("tau must have one entry per vertex of the finite diagram")
    re, im = integer_components(tau)
    keep = []
    for r in rs.roots:
        if sum(a * b for a, b in zip(r, re)) == 0 and sum(a * b for a, b in zip(r, im)) == 0:
            keep.append(r)
    return OrthogonalSlice(rs, tuple(keep))


def _decompositions(positives: Sequence[Vector]) -> dict[Vector, tuple[Vector, Vector] | None]:
    """Map each positive root to one split into two positive slice roots, if any."""
    pset = set(positives)
    out: dict[Vector, tuple[Vector, Vector] | None] = {}
    for a in positives:
        out[a] = None
        for b in positives:
            if b == a:
                continue
            c = _sub(a, b)
            if c in pset:
                out[a] = (b, c)
                break
    return out


def minimal_base(sl: OrthogonalSlice) -> list[Vector]:
    """Positive slice roots that are not a sum of two positive slice roots."""
    splits = _decompositions(sl.positives)
    return sorted(a for a, s in splits.items() if s is None)


def _base_coordinates(positives: Sequence[Vector], base: Sequence[Vector]) -> dict[Vector, tuple[int, ...]]:
    """Coefficients of every positive slice root on ``base``, via the 2-term splits."""
    splits = _decompositions(positives)
    index = {b: k for k, b in enumerate(base)}
    coords: dict[Vector, tuple[int, ...]] = {}
    for a in sorted(positives, key=sum):
        if a in index:
            coords[a] = tuple(1 if k == index[a] else 0 for k in range(len(base)))
        else:
            b, c = splits[a]
            coords[a] = _add(coords[b], coords[c])
    return coords


def base_graph(rs: RootSystem, base: Sequence[Vector]) -> nx.MultiGraph:
    """Nodes are base roots; one edge per unit of negative pairing."""
    g = nx.MultiGraph()
    g.add_nodes_from(base)
    for i, s in enumerate(base):
        for t in base[i + 1:]:
            p = bilinear(rs, s, t)
            if p > 0:
                raise AssertionError("base roots must pair non-positively")
            g.add_edges_from([(s, t)] * (-p))
    return g


def split_components(rs: RootSystem, base: Sequence[Vector]) -> list[tuple[ADEType, list[Vector]]]:
    """Connected pieces of the base, each typed and canonically ordered."""
    g = base_graph(rs, base)
    comps = [identify_type(g.subgraph(c)) for c in nx.connected_components(g)]
    return sorted(comps, key=lambda tc: (tc[0], tc[1]))


def identify_shape(g: nx.Graph) -> ADEType:
    return identify_type(g)[0]


def component_data(
    rs: RootSystem, adtype: ADEType, base: Sequence[Vector], coords: dict[Vector, tuple[int, ...]],
    full_base: Sequence[Vector],
) -> ComponentBase:
    """Maximal root and its base coefficients for one component."""
    pos = [full_base.index(b) for b in base]
    others = set(range(len(full_base))) - set(pos)
    members = [a for a, c in coords.items() if not any(c[k] for k in others)]
    top = [a for a in members if all(coords[a][k] >= coords[b][k] for b in members for k in pos)]
    if len(top) != 1:
        raise AssertionError("component has no unique maximal root")
    beta = top[0]
    mult = tuple(coords[beta][k] for k in pos)
    return ComponentBase(adtype, tuple(base), beta, mult, tuple(sorted(members)))


def decompose(rs: RootSystem, tau: Sequence[GaussianRational]) -> list[ComponentBase]:
    """Irreducible components of the roots orthogonal to ``tau``."""
    sl = orthogonal_roots(rs, tau)
    return decompose_slice(sl)


def decompose_slice(sl: OrthogonalSlice) -> list[ComponentBase]:
    rs = sl.system
    positives = sl.positives
    if not positives:
        return []
    base = minimal_base(sl)
    coords = _base_coordinates(positives, base)
    comps = []
    for adtype, ordered in split_components(rs, base):
        comps.append(component_data(rs, adtype, ordered, coords, base))
    if sum(len(c.positives) for c in comps) != len(positives):
        raise AssertionError("components do not partition the positive slice roots")
    return comps


def highest_root_coefficients(t: ADEType) -> tuple[int, ...]:
    """Coefficients of the highest root of ``t`` in canonical labeling."""
    return generate_roots(t).maximal


def types_of(components: Sequence[ComponentBase]) -> tuple[ADEType, ...]:
    return tuple(sorted(c.adtype for c in components))


def decomposition_json(components: Sequence[ComponentBase]) -> dict:
    return {"components": [c.to_json() for c in components]}

