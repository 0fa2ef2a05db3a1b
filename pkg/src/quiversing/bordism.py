"""Which collections of singularity types can sit inside one quiver variety.

A configuration ``K_1 + ... + K_r`` is realisable over base ``K_0`` exactly
when it occurs as the component decomposition of some full (induced)
subgraph of the ``K_0`` diagram.  The witness parameter is the 0/1 vector
that vanishes on the chosen vertices.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .diagrams import ADEType, build_diagram, full_subgraph, type_multiset, vertex_subsets
from .gauss import GaussianRational
from .roots import Parameter, generate_roots, psi_star


@dataclass(frozen=True)
class Configuration:
    base: ADEType
    parts: tuple[ADEType, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "parts", type_multiset(self.parts))

    @property
    def fits(self) -> bool:
        """The rank bound every realisable configuration satisfies."""
        return sum(t.rank for t in self.parts) <= self.base.rank


def subgraph_types(base: ADEType, J: Iterable[int]) -> tuple[ADEType, ...]:
    return type_multiset(c.adtype for c in full_subgraph(build_diagram(base), J))


def realizable(cfg: Configuration) -> tuple[int, ...] | None:
    """Lexicographically least vertex set inducing ``cfg.parts``, or ``None``."""
    if not cfg.fits:
        return None
    target = cfg.parts
    size = sum(t.rank for t in target)
    # subsets come out by size, then lexicographically
    for J in vertex_subsets(cfg.base.rank):
        if len(J) == size and subgraph_types(cfg.base, J) == target:
            return J
    return None


def witness_parameter(base: ADEType, J: Iterable[int]) -> Parameter:
    """``psi*(tau)`` for ``tau`` equal to 0 on ``J`` and 1 elsewhere."""
    J = set(J)
    n = base.rank
    if not J <= set(range(1, n + 1)):
        raise ValueError("J must be a subset of the base vertices")
    tau = tuple(GaussianRational(0 if i in J else 1) for i in range(1, n + 1))
    return psi_star(generate_roots(base), tau)


def enumerate_configurations(base: ADEType) -> set[tuple[ADEType, ...]]:
    """Every type multiset induced by some vertex subset of the base diagram."""
    if base.rank > 8:
        raise ValueError("enumeration is limited to rank 8")
    return {subgraph_types(base, J) for J in vertex_subsets(base.rank)}
