"""Self-checks run by ``quiversing verify``.

Every check returns a :class:`CheckResult` counting individual cases; the
suite as a whole passes when no case fails.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Callable, Iterable, Sequence

import networkx as nx

from . import linalg as la
from .bordism import Configuration, enumerate_configurations, realizable, witness_parameter
from .classify import (
    classify_singularities,
    crawley_boevey_oracle,
    r_plus,
    simple_exists,
)
from .decompose import decompose
from .diagrams import (
    ADEType,
    Quiver,
    all_types,
    build_diagram,
    extended,
    full_subgraph,
    mckay_group,
    orient,
    type_multiset,
)
from .gauss import GaussianRational
from .replab import (
    RepPoint,
    central_parameter,
    cohomology_dims,
    nu_map,
    sigma_map,
    tilde_a1_simple,
    vertex_simple,
)
from .roots import (
    Parameter,
    RootSystem,
    apply_word,
    generate_roots,
    is_dominant,
    make_dominant,
    psi,
    psi_inverse,
    psi_star,
    quadric_roots,
    sigma_set,
)

POOL = (
    GaussianRational(0),
    GaussianRational(1),
    GaussianRational(-1),
    GaussianRational(2),
    GaussianRational(Fraction(1, 2)),
    GaussianRational(0, 1),
    GaussianRational(1, 1),
)


@dataclass
class CheckResult:
    name: str
    passed: int = 0
    failed: int = 0
    failures: list[str] = field(default_factory=list)

    def record(self, ok: bool, what: str = "") -> None:
        if ok:
            self.passed += 1
        else:
            self.failed += 1
            if len(self.failures) < 5:
                self.failures.append(what)

    def to_json(self) -> dict:
        return {"name": self.name, "passed": self.passed, "failed": self.failed, "failures": self.failures}


def random_tau(rs: RootSystem, rng: random.Random) -> Parameter:
    """Pool entries, or a Weyl image of a 0/1 vector so that slices are often nonzero."""
    n = rs.rank
    if rng.random() < 0.5:
        return tuple(rng.choice(POOL) for _ in range(n))
    tau = tuple(GaussianRational(rng.randint(0, 1)) for _ in range(n))
    word = [rng.randrange(n) for _ in range(rng.randint(0, 6))]
    return apply_word(rs, word, tau)


def multiset(rs: RootSystem, tau: Sequence[GaussianRational]) -> tuple[ADEType, ...]:
    return type_multiset(c.adtype for c in decompose(rs, tau))


def check_root_counts(types: Iterable[ADEType]) -> CheckResult:
    res = CheckResult("root counts")
    for t in types:
        rs = generate_roots(t)
        res.record(set(rs.roots) == quadric_roots(rs.cartan), f"{t}: closure differs from quadric enumeration")
    return res


def check_psi(types: Iterable[ADEType]) -> CheckResult:
    res = CheckResult("psi bijection")
    for t in types:
        rs = generate_roots(t)
        sig = sigma_set(rs)
        res.record({psi(rs, s) for s in sig} == set(rs.roots), f"{t}: psi(Sigma) != Phi")
        res.record(all(psi(rs, psi_inverse(rs, a)) == a for a in rs.roots), f"{t}: inverse fails")
    return res


def _isomorphic(a: Quiver, ext_type: ADEType) -> bool:
    # multigraph matching compares bond multiplicities too
    return nx.is_isomorphic(a.underlying().graph(), extended(ext_type).as_diagram().graph())


def check_trivial_parameter(types: Iterable[ADEType]) -> CheckResult:
    res = CheckResult("tau = 0 classification")
    for t in types:
        rs = generate_roots(t)
        cl = classify_singularities(t, (GaussianRational(0),) * (t.rank + 1))
        ok = len(cl.singular_points) == 1
        if ok:
            sp = cl.singular_points[0]
            ext = extended(t)
            ok = (
                sp.adtype == t
                and sp.slice.delta_prime == ext.delta
                and _isomorphic(sp.slice.quiver, t)
                and sp.mckay.order == sum(x * x for x in ext.delta) == mckay_group(t).order
                and sp.multiplicities == rs.maximal
            )
        res.record(ok, f"{t}")
    return res


def check_mckay(types: Iterable[ADEType]) -> CheckResult:
    res = CheckResult("McKay orders = sum of squares of delta")
    for t in types:
        res.record(mckay_group(t).order == sum(x * x for x in extended(t).delta), f"{t}")
    return res


def check_zero_one(types: Iterable[ADEType]) -> CheckResult:
    res = CheckResult("0/1 parameters vs full subgraphs")
    for t in types:
        rs = generate_roots(t)
        d = build_diagram(t)
        for bits in product((0, 1), repeat=t.rank):
            tau = tuple(GaussianRational(b) for b in bits)
            J = [i + 1 for i, b in enumerate(bits) if b == 0]
            expect = type_multiset(c.adtype for c in full_subgraph(d, J))
            res.record(multiset(rs, tau) == expect, f"{t} {bits}")
    return res


def check_weyl(types: Iterable[ADEType], rng: random.Random, samples: int, words: int) -> CheckResult:
    res = CheckResult("Weyl invariance and sum rule")
    for t in types:
        rs = generate_roots(t)
        n = t.rank
        delta = rs.extended.delta
        for _ in range(samples):
            tau = random_tau(rs, rng)
            ref = multiset(rs, tau)
            for _ in range(words):
                word = [rng.randrange(n) for _ in range(rng.randint(1, 8))]
                res.record(multiset(rs, apply_word(rs, word, tau)) == ref, f"{t} word {word}")
            dom, _ = make_dominant(rs, tau)
            res.record(is_dominant(dom) and multiset(rs, dom) == ref, f"{t} dominant")
            for sp in classify_singularities(t, tau).singular_points:
                total = list(sp.gamma0)
                for m, g in zip(sp.multiplicities, sp.gammas):
                    total = [a + m * b for a, b in zip(total, g)]
                ok = tuple(total) == delta and sp.stabilizer == (1,) + sp.multiplicities
                res.record(ok, f"{t} sum rule")
    return res


def check_simples(types: Iterable[ADEType], rng: random.Random, samples: int) -> CheckResult:
    res = CheckResult("simple modules vs inequality oracle")
    for t in types:
        rs = generate_roots(t)
        ed = extended(t)
        for _ in range(samples):
            lam = psi_star(rs, random_tau(rs, rng))
            for alpha in sigma_set(rs):
                ok = simple_exists(ed, alpha, lam) == crawley_boevey_oracle(ed, alpha, lam)
                res.record(ok, f"{t} {alpha}")
            res.record(simple_exists(ed, ed.delta, lam), f"{t} delta")
    return res


def check_r_plus(types: Iterable[ADEType]) -> CheckResult:
    res = CheckResult("R+(delta) = Sigma")
    for t in types:
        ed = extended(t)
        res.record(r_plus(ed, ed.delta) == set(sigma_set(generate_roots(t))), f"{t}")
    return res


def replab_fixtures() -> list[RepPoint]:
    pts = [tilde_a1_simple(GaussianRational(k, k % 3)) for k in range(1, 6)]
    pts += [tilde_a1_simple(GaussianRational(Fraction(1, k))) for k in range(2, 7)]
    q = tilde_a1_simple(0).quiver
    pts += [vertex_simple(q, 0), vertex_simple(q, 1)]
    a3 = orient(build_diagram(ADEType("A", 3)))
    pts += [vertex_simple(a3, i) for i in a3.vertices]
    return pts


def _matching(x: RepPoint, y: RepPoint) -> bool:
    if x.quiver != y.quiver:
        return False
    lx, ly = central_parameter(x), central_parameter(y)
    return all(lx[i] == ly[i] for i in set(lx) & set(ly))


def check_homology() -> CheckResult:
    res = CheckResult("complex identities")
    pts = replab_fixtures()
    for x in pts:
        for y in pts:
            if not _matching(x, y):
                continue
            s, n = sigma_map(x, y), nu_map(x, y)
            inner = len(s)
            cols = len(s[0]) if s else 0
            res.record(la.is_zero(la.matmul(n, s, inner, cols)), "nu o sigma != 0")
            h0, h1, h2 = cohomology_dims(x, y)
            res.record(h0 - h1 + h2 == x.quiver.form(x.dims, y.dims), "Euler characteristic")
            res.record(h2 == cohomology_dims(y, x)[0], "duality")
    for k in range(1, 4):
        x = tilde_a1_simple(k)
        res.record(cohomology_dims(x, x) == (1, 2, 1), f"tilde A1 simple lam1={k}")
    return res


def check_bordism(types: Iterable[ADEType]) -> CheckResult:
    res = CheckResult("bordism witnesses")
    for t in types:
        for parts in sorted(enumerate_configurations(t)):
            J = realizable(Configuration(t, parts))
            ok = J is not None and classify_singularities(t, witness_parameter(t, J)).types == parts
            res.record(ok, f"{t} {parts}")
    return res


def check_orientation(types: Iterable[ADEType], rng: random.Random, samples: int) -> CheckResult:
    res = CheckResult("orientation independence")
    for t in types:
        rs = generate_roots(t)
        ed = extended(t)
        tau = random_tau(rs, rng)
        ref = _strip(classify_singularities(ed, tau).to_json())
        for _ in range(samples):
            q = orient(ed, [rng.random() < 0.5 for _ in ed.bonds])
            res.record(_strip(classify_singularities(q, tau).to_json()) == ref, f"{t}")
    return res


def _strip(js: dict) -> dict:
    return {**js, "singular": [{k: v for k, v in sp.items() if k != "slice_arrows"} for sp in js["singular"]]}


def run_suite(
    types: Sequence[ADEType] | None = None, seed: int = 0, quick: bool = True
) -> list[CheckResult]:
    types = list(types) if types is not None else all_types(8)
    rng = random.Random(seed)
    samples = 5 if quick else 50
    checks: list[Callable[[], CheckResult]] = [
        lambda: check_root_counts(types),
        lambda: check_psi(types),
        lambda: check_mckay(types),
        lambda: check_trivial_parameter(types),
        lambda: check_zero_one(types),
        lambda: check_weyl(types, rng, samples, 3 if quick else 10),
        lambda: check_simples(types, rng, 2 if quick else samples),
        lambda: check_r_plus(types),
        check_homology,
        lambda: check_bordism([t for t in types if quick is False or t.rank <= 6]),
        lambda: check_orientation(types, rng, 5),
    ]
    return [c() for c in checks]
