"""Dynkin and extended Dynkin diagrams, Cartan matrices, McKay data and quivers.

Vertex labels follow one fixed convention per family:

* ``A_n``: the path 1 - 2 - ... - n.
* ``D_n``: the path 1 - ... - (n-2), with leaves n-1 and n attached to n-2.
* ``E_n``: the path 1 - ... - (n-1), with leaf n attached to vertex 3.

Extended diagrams add vertex 0.  Bonds are stored as sorted vertex pairs and
repeated for multiplicity; the only multiple bond in scope is the double bond
of the extended ``A_1`` diagram.
"""
from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Mapping, Sequence

import networkx as nx

Bond = tuple[int, int]


@dataclass(frozen=True, order=True)
class ADEType:
    family: str
    rank: int

    def __post_init__(self) -> None:
        if self.family not in ("A", "D", "E"):
            raise ValueError(f"unknown family {self.family!r}")
        if not isinstance(self.rank, int) or self.rank < 1:
            raise ValueError(f"invalid rank {self.rank!r}")
        if self.family == "D" and self.rank < 4:
            raise ValueError(f"D_n needs n >= 4, got {self.rank}")
        if self.family == "E" and self.rank not in (6, 7, 8):
            raise ValueError(f"E_n needs n in 6..8, got {self.rank}")

    @classmethod
    def parse(cls, label: str) -> "ADEType":
        m = re.fullmatch(r"\s*([ADEade])_?(\d+)\s*", label)
        if not m:
            raise ValueError(f"unknown type label {label!r}")
        return cls(m.group(1).upper(), int(m.group(2)))

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"


def all_types(max_rank: int = 8) -> list[ADEType]:
    """Every ADE type of rank at most ``max_rank`` in (family, rank) order."""
    out = [ADEType("A", n) for n in range(1, max_rank + 1)]
    out += [ADEType("D", n) for n in range(4, max_rank + 1)]
    out += [ADEType("E", n) for n in (6, 7, 8) if n <= max_rank]
    return out


@dataclass(frozen=True)
class Diagram:
    vertices: tuple[int, ...]
    bonds: tuple[Bond, ...]
    adtype: ADEType | None = None

    def __post_init__(self) -> None:
        vs = set(self.vertices)
        for i, j in self.bonds:
            if i == j or i not in vs or j not in vs:
                raise ValueError(f"invalid bond {(i, j)}")

    @property
    def rank(self) -> int:
        return len(self.vertices)

    def multiplicity(self, i: int, j: int) -> int:
        key = (min(i, j), max(i, j))
        return sum(1 for b in self.bonds if b == key)

    def graph(self) -> nx.MultiGraph:
        g = nx.MultiGraph()
        g.add_nodes_from(self.vertices)
        g.add_edges_from(self.bonds)
        return g

    def to_json(self) -> dict:
        out: dict = {}
        if self.adtype is not None:
            out["family"] = self.adtype.family
            out["rank"] = self.adtype.rank
        out["bonds"] = [list(b) for b in self.bonds]
        return out


@dataclass(frozen=True)
class ExtendedDiagram:
    base: Diagram
    bonds: tuple[Bond, ...]
    delta: tuple[int, ...]

    @property
    def vertices(self) -> tuple[int, ...]:
        return (0,) + self.base.vertices

    @property
    def adtype(self) -> ADEType | None:
        return self.base.adtype

    @property
    def rank(self) -> int:
        return self.base.rank

    def as_diagram(self) -> Diagram:
        return Diagram(self.vertices, self.bonds)

    def to_json(self) -> dict:
        out = self.base.to_json()
        out["bonds"] = [list(b) for b in self.bonds]
        out["delta"] = list(self.delta)
        return out


@dataclass(frozen=True)
class GroupDescriptor:
    name: str
    order: int

    def to_json(self) -> dict:
        return {"name": self.name, "order": self.order}


def _norm(i: int, j: int) -> Bond:
    return (i, j) if i < j else (j, i)


def build_diagram(t: ADEType) -> Diagram:
    """The Dynkin diagram of ``t`` in the module's labeling convention."""
    n = t.rank
    if t.family == "A":
        bonds = [(i, i + 1) for i in range(1, n)]
    elif t.family == "D":
        bonds = [(i, i + 1) for i in range(1, n - 2)]
        bonds += [(n - 2, n - 1), (n - 2, n)]
    else:
        bonds = [(i, i + 1) for i in range(1, n - 1)]
        bonds.append((3, n))
    return Diagram(tuple(range(1, n + 1)), tuple(sorted(bonds)), t)


def cartan_matrix(d: Diagram | ExtendedDiagram) -> tuple[tuple[int, ...], ...]:
    """``2 Id - A`` indexed by the diagram's vertex order."""
    verts = d.vertices
    pos = {v: k for k, v in enumerate(verts)}
    m = [[2 if i == j else 0 for j in range(len(verts))] for i in range(len(verts))]
    for a, b in d.bonds:
        m[pos[a]][pos[b]] -= 1
        m[pos[b]][pos[a]] -= 1
    return tuple(tuple(row) for row in m)


def extend_diagram(d: Diagram, roots) -> ExtendedDiagram:
    """Adjoin vertex 0, bonded to i with multiplicity ``(d, eps_i)``.

    ``roots`` is the :class:`~quiversing.roots.RootSystem` of ``d``; its
    maximal root fixes both the new bonds and ``delta = (1, d)``.
    """
    dmax = roots.maximal
    cart = roots.cartan
    bonds = list(d.bonds)
    for k, v in enumerate(d.vertices):
        pairing = sum(dmax[j] * cart[j][k] for j in range(len(dmax)))
        if pairing < 0:
            raise ValueError("maximal root pairs negatively with a simple root")
        bonds.extend([(0, v)] * pairing)
    delta = (1,) + tuple(dmax)
    ed = ExtendedDiagram(d, tuple(sorted(bonds)), delta)
    c = cartan_matrix(ed)
    if any(sum(row[j] * delta[j] for j in range(len(delta))) for row in c):
        raise AssertionError("delta is not in the radical of the extended Cartan matrix")
    return ed


def extended(t: ADEType) -> ExtendedDiagram:
    from .roots import generate_roots

    return generate_roots(t).extended


_MCKAY_E = {6: ("binary tetrahedral", 24), 7: ("binary octahedral", 48), 8: ("binary icosahedral", 120)}


def mckay_group(t: ADEType) -> GroupDescriptor:
    if t.family == "A":
        return GroupDescriptor("cyclic", t.rank + 1)
    if t.family == "D":
        return GroupDescriptor("binary dihedral", 4 * (t.rank - 2))
    name, order = _MCKAY_E[t.rank]
    return GroupDescriptor(name, order)


def check_mckay_table(max_rank: int = 8) -> None:
    """Raise if a tabulated group order differs from the sum of squares of delta."""
    for t in all_types(max_rank):
        delta = extended(t).delta
        if mckay_group(t).order != sum(x * x for x in delta):
            raise AssertionError(f"McKay order mismatch for {t}")


@dataclass(frozen=True)
class Edge:
    name: str
    source: int
    target: int
    sign: int
    partner: str


@dataclass(frozen=True)
class Quiver:
    """A doubled quiver: each chosen arrow ``h`` with its reverse ``hbar``."""

    vertices: tuple[int, ...]
    edges: tuple[Edge, ...]
    _index: Mapping[str, Edge] = field(default=None, compare=False, repr=False)  # type: ignore[assignment]

    def __post_init__(self) -> None:
        object.__setattr__(self, "_index", {e.name: e for e in self.edges})

    def edge(self, name: str) -> Edge:
        return self._index[name]

    def opposite(self, e: Edge) -> Edge:
        return self._index[e.partner]

    def arrows(self) -> tuple[Edge, ...]:
        """The chosen orientation, i.e. the edges with sign +1."""
        return tuple(e for e in self.edges if e.sign == 1)

    def incoming(self, i: int) -> tuple[Edge, ...]:
        return tuple(e for e in self.edges if e.target == i)

    def underlying(self) -> Diagram:
        return Diagram(self.vertices, tuple(sorted(_norm(e.source, e.target) for e in self.arrows())))

    def form(self, v: Sequence[int], w: Sequence[int]) -> int:
        """``2 sum v_i w_i - sum over doubled edges of v_s(h) w_t(h)``."""
        pos = {x: k for k, x in enumerate(self.vertices)}
        total = 2 * sum(a * b for a, b in zip(v, w))
        for e in self.edges:
            total -= v[pos[e.source]] * w[pos[e.target]]
        return total


def orient(d: Diagram | ExtendedDiagram, flips: Iterable[bool] | None = None) -> Quiver:
    """Orient every bond and double the result.

    ``flips`` gives one flag per bond (in the diagram's bond order); a true flag
    reverses the default low-to-high direction.  Arrows are named ``h1``,
    ``h2``, ... and their reverses ``h1bar``, ``h2bar``, ...
    """
    bonds = d.bonds
    flags = list(flips) if flips is not None else [False] * len(bonds)
    if len(flags) != len(bonds):
        raise ValueError("need one orientation flag per bond")
    edges = []
    for k, ((a, b), flip) in enumerate(zip(bonds, flags), start=1):
        s, t = (b, a) if flip else (a, b)
        name = f"h{k}"
        edges.append(Edge(name, s, t, 1, name + "bar"))
        edges.append(Edge(name + "bar", t, s, -1, name))
    return Quiver(tuple(d.vertices), tuple(edges))


def identify_type(g: nx.Graph | nx.MultiGraph) -> tuple[ADEType, list]:
    """Recognise a connected simply-laced tree as an ADE diagram.

    Returns the type and the nodes of ``g`` listed in the order of the
    canonical labeling, so ``order[k]`` receives label ``k + 1``.
    """
    k = g.number_of_nodes()
    if k == 0:
        raise ValueError("empty graph has no ADE type")
    if isinstance(g, nx.MultiGraph) and any(
        g.number_of_edges(a, b) > 1 for a, b in g.edges()
    ):
        raise ValueError("multiple bond: not a simply-laced diagram")
    simple = nx.Graph(g)
    if not nx.is_tree(simple):
        raise ValueError("graph is not a tree: not an ADE diagram")
    nodes = sorted(simple.nodes, key=_node_key)
    if k == 1:
        return ADEType("A", 1), nodes
    deg = dict(simple.degree())
    branch = [v for v in nodes if deg[v] >= 3]
    if not branch:
        ends = [v for v in nodes if deg[v] == 1]
        start = min(ends, key=_node_key)
        return ADEType("A", k), _walk(simple, start, None)
    if len(branch) > 1 or deg[branch[0]] > 3:
        raise ValueError("not an ADE diagram: too many branches")
    center = branch[0]
    arms = []
    for nb in sorted(simple.neighbors(center), key=_node_key):
        arm = _walk(simple, nb, center)
        arms.append(arm)
    lengths = sorted(len(a) for a in arms)
    # stable sort keeps tie-breaking deterministic by neighbour key
    arms.sort(key=len)
    if lengths[:2] == [1, 1]:
        long = arms[2]
        order = list(reversed(long)) + [center, arms[0][0], arms[1][0]]
        return ADEType("D", k), order
    if lengths in ([1, 2, 2], [1, 2, 3], [1, 2, 4]):
        leaf, short, long = arms
        order = list(reversed(short)) + [center] + long + leaf
        return ADEType("E", k), order
    raise ValueError(f"not an ADE diagram: arm lengths {lengths}")


def _node_key(v):
    return (0, v) if isinstance(v, int) else (1, repr(v))


def _walk(g: nx.Graph, start, came_from) -> list:
    path = [start]
    prev, cur = came_from, start
    while True:
        nxt = [u for u in g.neighbors(cur) if u != prev]
        if len(nxt) != 1:
            return path
        prev, cur = cur, nxt[0]
        path.append(cur)


def full_subgraph(d: Diagram, J: Iterable[int]) -> list[Diagram]:
    """Connected components of the subgraph induced on ``J``, canonically relabeled."""
    J = set(J)
    if not J <= set(d.vertices):
        raise ValueError("J must be a subset of the diagram's vertices")
    g = d.graph().subgraph(J)
    out = []
    for comp in nx.connected_components(g):
        t, order = identify_type(g.subgraph(comp))
        out.append(build_diagram(t))
    return sorted(out, key=lambda c: c.adtype)


def component_vertex_sets(d: Diagram, J: Iterable[int]) -> list[tuple[ADEType, list[int]]]:
    """Like :func:`full_subgraph` but keeps the original vertex labels in canonical order."""
    g = d.graph().subgraph(set(J))
    comps = [identify_type(g.subgraph(c)) for c in nx.connected_components(g)]
    return sorted(comps, key=lambda tc: (tc[0], tc[1]))


def type_multiset(types: Iterable[ADEType]) -> tuple[ADEType, ...]:
    """Canonical (sorted) form of a multiset of ADE types."""
    return tuple(sorted(types))


def format_multiset(types: Iterable[ADEType]) -> str:
    c = Counter(str(t) for t in types)
    return "+".join(f"{k}" if v == 1 else f"{v}{k}" for k, v in sorted(c.items()))


def vertex_subsets(n: int):
    """All subsets of ``{1..n}`` as sorted tuples, by size then lexicographically."""
    for k in range(n + 1):
        yield from combinations(range(1, n + 1), k)
