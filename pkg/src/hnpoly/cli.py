"""Command-line front end: ``hnpoly <subcommand> ...``.

Exit status is 0 on success, 1 on a parse or domain error and 2 when a
verification sweep finds a violation.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence

from hnpoly.bundles import Bundle, hom_bundle, is_semistable, tensor
from hnpoly.errors import DomainError
from hnpoly.extensions import (
    build_filtration_witness,
    enumerate_extensions,
    exists_extension,
    exists_filtration,
)
from hnpoly import moduli, oracles
from hnpoly.polygons import Polygon, hn_vectors, instability, polygon_of
from hnpoly.render import render_svg, render_tikz
from hnpoly.strata import StrataPoset, hasse_diagram, in_closure, to_dot
from hnpoly.textio import (
    bundle_from_json,
    bundle_to_json,
    format_slope,
    parse_bundle,
    polygon_from_json,
    polygon_to_json,
)

DEFAULT_RANK_CAP = 12
FORMATS = ("json", "text", "dot", "svg", "tikz")


class _Exit(Exception):
    def __init__(self, status: int, document: str):
        self.status = status
        self.document = document


def rank_cap() -> int:
    raw = os.environ.get("HNPOLY_MAX_RANK")
    if raw is None:
        return DEFAULT_RANK_CAP
    try:
        return int(raw)
    except ValueError:
        raise DomainError(f"HNPOLY_MAX_RANK must be an integer, got {raw!r}") from None


def _enforce_cap(rank: int, what: str):
    cap = rank_cap()
    if rank > cap:
        raise DomainError(f"{what} has rank {rank} above HNPOLY_MAX_RANK={cap}")


# -- input helpers ---------------------------------------------------------


def _bundle(args, text: str | None, name: str) -> Bundle:
    if text is None:
        raise DomainError(f"missing required bundle --{name}")
    return bundle_from_json(text) if args.json else parse_bundle(text)


def _polygon(args, text: str) -> Polygon:
    """A polygon JSON list, or a bundle whose HN polygon is meant."""
    if text.lstrip().startswith("[["):
        return polygon_from_json(text)
    return polygon_of(_bundle(args, text, "polygon"))


def _emit(args, payload, text: str | None = None) -> str:
    if args.format == "json":
        return json.dumps(payload, sort_keys=True)
    if args.format == "text":
        return text if text is not None else json.dumps(payload, sort_keys=True)
    raise DomainError(f"format {args.format!r} is not available for {args.command}")


def _bool(v: bool) -> str:
    return "true" if v else "false"


# -- subcommands -----------------------------------------------------------


def cmd_info(args) -> str:
    b = _bundle(args, args.bundle, "bundle")
    payload = {
        "bundle": bundle_to_json(b),
        "rank": b.rank,
        "degree": b.degree,
        "polygon": polygon_to_json(polygon_of(b)),
        "hn_vectors": [list(v) for v in hn_vectors(b)],
        "h0": moduli.dim_h0(b),
    }
    lines = [f"bundle: {b}", f"rank: {b.rank}", f"degree: {b.degree}"]
    if not b.is_zero:
        payload.update(
            slope=format_slope(b.mu),
            semistable=is_semistable(b),
            instability=instability(b),
        )
        lines += [
            f"slope: {format_slope(b.mu)}",
            f"semistable: {_bool(is_semistable(b))}",
            f"instability: {instability(b)}",
        ]
    lines += [f"polygon: {polygon_of(b)}", f"h0: {payload['h0']}"]
    return _emit(args, payload, "\n".join(lines))


def cmd_tensor(args) -> str:
    b = tensor(_bundle(args, args.a, "a"), _bundle(args, args.b, "b"))
    return _emit(args, bundle_to_json(b), str(b))


def cmd_hom(args) -> str:
    b = hom_bundle(_bundle(args, args.a, "a"), _bundle(args, args.b, "b"))
    return _emit(args, bundle_to_json(b), str(b))


def cmd_ext_check(args) -> str:
    f1, f2 = _bundle(args, args.f1, "f1"), _bundle(args, args.f2, "f2")
    e = _bundle(args, args.e, "e")
    exists = exists_extension(f1, f2, e)
    return _emit(args, {"exists": exists}, _bool(exists))


def cmd_ext_enum(args) -> str:
    f1, f2 = _bundle(args, args.f1, "f1"), _bundle(args, args.f2, "f2")
    _enforce_cap(f1.rank + f2.rank, "f1 + f2")
    exts = enumerate_extensions(f1, f2)
    payload = {
        "exists": bool(exts),
        "witness": [polygon_to_json(polygon_of(e)) for e in exts],
        "count": len(exts),
    }
    return _emit(args, payload, "\n".join(str(e) for e in exts))


def cmd_filtration(args) -> str:
    e = _bundle(args, args.e, "e")
    graded = [_bundle(args, g, "graded") for g in args.graded]
    if not exists_filtration(e, graded):
        return _emit(args, {"exists": False, "witness": [], "count": 0}, "false")
    w = build_filtration_witness(e, graded)
    payload = {
        "exists": True,
        "witness": [polygon_to_json(p) for p in w.polygons],
        "count": len(w.chain),
    }
    text = "\n".join(f"E_{i} = {b}" for i, b in enumerate(w.chain))
    return _emit(args, payload, text)


def cmd_dim(args) -> str:
    get = lambda name: _bundle(args, getattr(args, name), name)  # noqa: E731
    if args.kind == "h0":
        result = moduli.StratumDim(moduli.dim_h0(get("e")), moduli.YES, "deg(E)>=0")
    elif args.kind == "hom":
        result = moduli.StratumDim(
            moduli.dim_hom(get("e"), get("f")), moduli.YES, "deg(E^v(x)F)>=0"
        )
    elif args.kind == "aut":
        result = moduli.StratumDim(moduli.dim_aut(get("e")), moduli.YES, "deg(E^v(x)E)>=0")
    elif args.kind == "hom_stratum":
        result = moduli.dim_hom_stratum(get("e"), get("f"), get("q"))
    elif args.kind == "surj_kernel":
        result = moduli.dim_surj_with_kernel(get("e"), get("f"), get("k"))
    else:
        result = moduli.dim_ext_stratum(get("f1"), get("f2"), get("e"))
    return _emit(args, result.to_json(), str(result.value))


def cmd_closure(args) -> str:
    res = in_closure(_polygon(args, args.target), _polygon(args, args.stratum))
    return _emit(args, {"in_closure": res}, _bool(res))


def cmd_poset(args) -> str:
    ceiling = _polygon(args, args.ceiling)
    _enforce_cap(ceiling.width, "ceiling")
    poset = StrataPoset.below(ceiling)
    if args.format == "dot":
        return to_dot(poset).rstrip("\n")
    edges = hasse_diagram(poset)
    payload = {
        "nodes": [polygon_to_json(p) for p in poset.nodes],
        "edges": [list(e) for e in edges],
    }
    text = "\n".join(
        [f"P{i}: {p}" for i, p in enumerate(poset.nodes)]
        + [f"P{i} < P{j}" for i, j in edges]
    )
    return _emit(args, payload, text)


def cmd_verify(args) -> str:
    single = any(getattr(args, n) is not None for n in ("e", "f", "d"))
    if args.check == "step1":
        if single:
            report = oracles.verify_step1(_bundle(args, args.e, "e"), _bundle(args, args.f, "f"))
        else:
            _enforce_cap(args.max_rank_e, "sweep")
            report = oracles.sweep_step1(args.max_rank_e, args.max_rank_f, args.max_den, args.max_num)
    elif args.check == "step2":
        if single:
            report = oracles.verify_step2(
                _bundle(args, args.d, "d"), _bundle(args, args.f, "f"), _bundle(args, args.e, "e")
            )
        else:
            bound = args.max_rank or oracles.DEFAULT_MAX_RANK
            _enforce_cap(bound, "sweep")
            report = oracles.sweep_step2(bound, args.max_den, args.max_num)
    else:
        if args.f1 is not None:
            report = oracles.cross_check_dimensions(
                _bundle(args, args.f1, "f1"), _bundle(args, args.f2, "f2")
            )
        else:
            bound = args.max_rank or 4
            _enforce_cap(bound, "sweep")
            report = oracles.sweep_dimensions(bound, args.max_den, args.max_num)
    text = (
        f"{'passed' if report.passed else 'FAILED'}: "
        f"{report.instances_checked} instances, {len(report.violations)} violations"
    )
    doc = report.dumps() if args.format == "json" else _emit(args, None, text)
    if not report.passed:
        raise _Exit(2, doc)
    return doc


def cmd_render(args) -> str:
    lower, upper = _polygon(args, args.lower), _polygon(args, args.upper)
    if args.format == "tikz":
        return render_tikz(lower, upper).rstrip("\n")
    if args.format in ("svg", "text"):
        return render_svg(lower, upper).rstrip("\n")
    raise DomainError(f"format {args.format!r} is not available for render")


# -- argument parsing ------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default="text")
    common.add_argument(
        "--json", action="store_true", help="read bundles as JSON [[num, den, mult], ...]"
    )
    parser = argparse.ArgumentParser(
        prog="hnpoly", description="Slope polygon calculus for vector bundles."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.set_defaults(func=func)
        return p

    p = add("info", cmd_info, "rank, degree, polygon and invariants of a bundle")
    p.add_argument("bundle")
    for name, func, what in (("tensor", cmd_tensor, "tensor product"), ("hom", cmd_hom, "a^dual (x) b")):
        p = add(name, func, what)
        p.add_argument("a")
        p.add_argument("b")

    p = add("ext-check", cmd_ext_check, "is e an extension of f2 by f1")
    for flag in ("--f1", "--f2", "--e"):
        p.add_argument(flag, required=True)
    p = add("ext-enum", cmd_ext_enum, "all extensions of f2 by f1")
    p.add_argument("--f1", required=True)
    p.add_argument("--f2", required=True)
    p = add("filtration", cmd_filtration, "filtration of e with given semistable gradeds")
    p.add_argument("--e", required=True)
    p.add_argument("--graded", nargs="+", required=True)

    p = add("dim", cmd_dim, "dimension formulas")
    kinds = p.add_mutually_exclusive_group(required=True)
    for flag in ("h0", "hom", "aut", "hom-stratum", "surj-kernel", "ext"):
        kinds.add_argument(
            f"--{flag}", dest="kind", action="store_const", const=flag.replace("-", "_")
        )
    for flag in ("e", "f", "q", "k", "f1", "f2"):
        p.add_argument(f"--{flag}")

    p = add("closure", cmd_closure, "is the target stratum in the closure of the stratum")
    p.add_argument("--target", required=True)
    p.add_argument("--stratum", required=True)
    p = add("poset", cmd_poset, "strata below a ceiling polygon and their Hasse diagram")
    p.add_argument("--ceiling", required=True)

    p = add("verify", cmd_verify, "inequality and dimension checks")
    p.add_argument("check", choices=("step1", "step2", "dims"))
    for flag in ("e", "f", "d", "f1", "f2"):
        p.add_argument(f"--{flag}")
    p.add_argument(
        "--max-rank", type=int, help="total rank for step2 (default 5), f1 + f2 rank for dims (default 4)"
    )
    p.add_argument("--max-rank-e", type=int, default=6)
    p.add_argument("--max-rank-f", type=int, default=3)
    p.add_argument("--max-den", type=int, default=oracles.DEFAULT_MAX_DEN)
    p.add_argument("--max-num", type=int, default=oracles.DEFAULT_MAX_NUM)

    p = add("render", cmd_render, "draw a polygon comparison as SVG or TikZ")
    p.add_argument("--lower", required=True)
    p.add_argument("--upper", required=True)
    return parser


def run(argv: Sequence[str]) -> tuple[int, str]:
    """Execute one invocation; returns the exit status and emitted document."""
    args = build_parser().parse_args(list(argv))
    try:
        return 0, args.func(args)
    except _Exit as stop:
        return stop.status, stop.document
    except DomainError as exc:
        return 1, f"error: {exc}"


def main(argv: Sequence[str] | None = None) -> int:
    status, doc = run(sys.argv[1:] if argv is None else argv)
    print(doc, file=sys.stderr if status == 1 else sys.stdout)
    return status


if __name__ == "__main__":
    sys.exit(main())
