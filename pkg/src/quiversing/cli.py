"""Command line entry point.  Prints JSON on stdout and nothing else.

Exit codes: 0 success, 1 usage error, 2 domain error (``{"error": ...}``).
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .bordism import Configuration, enumerate_configurations, realizable, witness_parameter
from .classify import ParameterError, classify_singularities, normalize_parameter
from .decompose import decompose
from .diagrams import ADEType, all_types, format_multiset
from .gauss import parse_vector
from .roots import root_system
from .verify import run_suite


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        raise UsageError(f"{self.prog}: {message}")


def _add_parameter(p: argparse.ArgumentParser) -> None:
    p.add_argument("--type", required=True, help="finite ADE type, e.g. E8")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--tau", help="n comma-separated Gaussian rationals")
    g.add_argument("--lambda", dest="lam", help="n+1 comma-separated Gaussian rationals")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="quiversing", description=__doc__.splitlines()[0])
    parser.add_argument("--verbose", action="store_true", help="summaries on stderr")
    parser.add_argument("--output", "-o", help="write JSON here instead of stdout")
    # accepted after the verb as well; SUPPRESS keeps the top-level value otherwise
    common = _Parser(add_help=False)
    common.add_argument("--verbose", action="store_true", default=argparse.SUPPRESS)
    common.add_argument("--output", "-o", default=argparse.SUPPRESS)
    sub = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    def verb(name: str, text: str) -> argparse.ArgumentParser:
        return sub.add_parser(name, help=text, parents=[common])

    p = verb("roots", "root system of a finite ADE type")
    p.add_argument("--type", required=True)
    p.add_argument("--count", action="store_true", help="only the number of roots")
    p.add_argument("--positive", action="store_true", help="positive roots only")

    _add_parameter(verb("decompose", "components of the roots orthogonal to tau"))
    _add_parameter(verb("classify", "singular points for a parameter"))
    _add_parameter(verb("slice", "local slice quivers at the singular points"))

    p = verb("bordism", "realisability of singularity configurations")
    p.add_argument("--base", required=True)
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--parts", help="comma-separated ADE types")
    g.add_argument("--enumerate", action="store_true", help="list every realisable configuration")

    p = verb("verify", "run the invariant suite")
    p.add_argument("--types", help="comma-separated types (default: all up to rank 8)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--full", action="store_true", help="larger random samples")
    return parser


def _types(text: str) -> list[ADEType]:
    return [ADEType.parse(s.strip()) for s in text.split(",") if s.strip()]


def _parameter(args):
    rs = root_system(args.type)
    raw = parse_vector(args.tau if args.tau is not None else args.lam)
    if args.tau is not None and len(raw) != rs.rank:
        raise ParameterError(f"--tau needs {rs.rank} entries, got {len(raw)}")
    if args.lam is not None and len(raw) != rs.rank + 1:
        raise ParameterError(f"--lambda needs {rs.rank + 1} entries, got {len(raw)}")
    return rs, normalize_parameter(rs, raw)


def _run(args) -> tuple[dict, int, str]:
    if args.verb == "roots":
        rs = root_system(args.type)
        roots = rs.positives if args.positive else rs.roots
        if args.count:
            return {"count": len(roots)}, 0, f"{rs.adtype}: {len(roots)} roots"
        out = {"type": str(rs.adtype), "count": len(roots), "roots": [list(r) for r in roots]}
        return out, 0, f"{rs.adtype}: {len(roots)} roots"

    if args.verb == "decompose":
        rs, lam = _parameter(args)
        comps = decompose(rs, lam[1:])
        out = {"type": str(rs.adtype), "tau": [str(z) for z in lam[1:]], "components": [c.to_json() for c in comps]}
        return out, 0, format_multiset(c.adtype for c in comps) or "empty"

    if args.verb == "classify":
        rs, lam = _parameter(args)
        cl = classify_singularities(rs, lam)
        return cl.to_json(), 0, f"{len(cl.singular_points)} singular point(s): {format_multiset(cl.types) or 'none'}"

    if args.verb == "slice":
        rs, lam = _parameter(args)
        cl = classify_singularities(rs, lam)
        slices = [{"type": str(sp.adtype), **sp.slice.to_json()} for sp in cl.singular_points]
        return {"lambda": [str(z) for z in lam], "slices": slices}, 0, f"{len(slices)} slice quiver(s)"

    if args.verb == "bordism":
        base = ADEType.parse(args.base)
        if args.enumerate:
            configs = sorted(enumerate_configurations(base))
            out = {"base": str(base), "configurations": [[str(t) for t in c] for c in configs]}
            return out, 0, f"{len(configs)} configurations"
        cfg = Configuration(base, tuple(_types(args.parts)))
        J = realizable(cfg)
        out: dict = {"realizable": J is not None}
        if J is not None:
            out["witness_J"] = list(J)
            out["lambda"] = [str(z) for z in witness_parameter(base, J)]
        return out, 0, f"{format_multiset(cfg.parts)} in {base}: {'yes' if J is not None else 'no'}"

    if args.verb == "verify":
        types = _types(args.types) if args.types else all_types(8)
        results = run_suite(types, seed=args.seed, quick=not args.full)
        passed = sum(r.passed for r in results)
        failed = sum(r.failed for r in results)
        out = {"passed": passed, "failed": failed, "checks": [r.to_json() for r in results]}
        summary = "\n".join(f"{'ok  ' if not r.failed else 'FAIL'} {r.name}: {r.passed}/{r.passed + r.failed}" for r in results)
        return out, 0 if failed == 0 else 3, summary

    raise UsageError(f"unknown verb {args.verb}")


def _emit(payload: dict, path: str | None) -> None:
    text = json.dumps(payload, sort_keys=True)
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _attach_values(argv: Sequence[str]) -> list[str]:
    """Glue ``--tau -1,0`` into ``--tau=-1,0``; argparse would read the value as a flag."""
    out: list[str] = []
    it = iter(argv)
    for a in it:
        if a in ("--tau", "--lambda", "--parts", "--types"):
            nxt = next(it, None)
            out.append(a if nxt is None else f"{a}={nxt}")
        else:
            out.append(a)
    return out


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    argv = _attach_values(sys.argv[1:] if argv is None else argv)
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(str(exc), file=sys.stderr)
        return 1
    try:
        payload, code, summary = _run(args)
    except (ValueError, TypeError) as exc:
        _emit({"error": str(exc)}, args.output)
        return 2
    _emit(payload, args.output)
    if args.verbose:
        print(summary, file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
