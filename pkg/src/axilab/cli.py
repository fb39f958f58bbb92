"""Command line front end.

Exit codes: 0 all asserted claims hold, 1 an assertion failed (or a
dimension-4 contradiction), 2 usage or parse error, 3 a hypothesis was not
met so nothing was asserted.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from urllib.parse import parse_qsl

from . import catalog
from .algebra import check_pa_degree4, subalgebra_closure
from .axes import (
    albert_decompose,
    analyze_idempotent,
    decompose,
    decompose_via_formulas,
    infer_types,
)
from .battery import run_battery
from .errors import (
    AxilabError,
    BadParams,
    HypothesisFailure,
    NotAnAxis,
    NotIdempotent,
    ParseError,
    RationalsUnsupported,
    SearchSpaceTooLarge,
    TypeShapeError,
    UnsupportedCharacteristic,
)
from .fields import Field, Q
from .io import format_scalar, jsonable, parse_algebra, parse_element, serialize_algebra
from .miyamoto import check_automorphism, check_spanning, group_closure, miyamoto_involutions
from .search import SearchConfig, census_from_profiles, enumerate_axes, enumerate_idempotents
from .twogen import CONTRADICTION, full_report

OK, FAILED, USAGE, HYPOTHESIS = 0, 1, 2, 3


class Source:
    def __init__(self, algebra, name=None, params=None, text=""):
        self.algebra = algebra
        self.name = name
        self.params = params or {}
        self.text = text


def load_source(spec: str) -> Source:
    """A file path, or ``catalog:name?key=value&...`` (``p`` picks GF(p))."""
    if spec.startswith("catalog:"):
        body = spec[len("catalog:"):]
        name, _, query = body.partition("?")
        params = dict(parse_qsl(query, keep_blank_values=True))
        field = Q
        if "p" in params:
            p = params.pop("p")
            try:
                field = Field.gf(int(p))
            except ValueError:
                raise BadParams(f"p must be a prime, got {p!r}") from None
        A, resolved = catalog.entry(name).build(params, field)
        return Source(A, name, resolved, spec)
    path = Path(spec)
    if not path.exists():
        raise BadParams(f"no such file: {spec}")
    return Source(parse_algebra(path.read_text(encoding="utf-8")), None, None, spec)


def _types(text, n):
    if text is None:
        return None
    parts = [t.strip() for t in text.split(",")]
    if len(parts) != n:
        raise TypeShapeError(f"--types expects {n} comma-separated scalars, got {text!r}")
    return parts


class Output:
    def __init__(self, as_json: bool, stream):
        self.as_json = as_json
        self.stream = stream
        self.data = {}

    def line(self, text=""):
        if not self.as_json:
            print(text, file=self.stream)

    def put(self, key, value):
        self.data[key] = jsonable(value)

    def finish(self, code):
        if self.as_json:
            self.data["exit_code"] = code
            print(json.dumps(self.data, indent=2), file=self.stream)
        return code


def _fmt(x):
    return format_scalar(x)


# -- commands ------------------------------------------------------------------

def cmd_analyze(args, out: Output) -> int:
    src = load_source(args.src)
    A = src.algebra
    x = parse_element(args.element, A)
    prof = analyze_idempotent(A, x)
    out.put("element", str(x))
    out.put("summary", prof.summary())
    out.line(f"{x}: {prof.summary()}")
    out.put("idempotent", prof.idempotent)
    if not prof.idempotent:
        return out.finish(OK)
    info = {
        "axis": prof.axis,
        "primitive": prof.primitive,
        "left_type": list(prof.left_type),
        "right_type": list(prof.right_type),
        "left_minpoly": str(prof.left.minpoly),
        "right_minpoly": str(prof.right.minpoly),
        "lr_commute": prof.lr_commute,
        "jordan_type": prof.jordan_type,
    }
    for k, v in info.items():
        out.put(k, v)
        out.line(f"  {k}: {', '.join(map(_fmt, v)) if isinstance(v, list) else v}")
    comps = {}
    for (mu, nu), S in prof.components.items():
        if S.dim:
            key = f"{_fmt(mu)},{_fmt(nu)}"
            comps[key] = [str(A.element(v)) for v in S.basis]
            out.line(f"  A_({key}) = span{{{', '.join(comps[key])}}}")
    out.put("components", comps)
    if prof.fusion is not None:
        out.put("fusion", {"basic": prof.fusion.basic, "involutory": prof.fusion.involutory,
                           "z2_grading": prof.fusion.z2_grading, "z2xz2_grading": prof.fusion.z2xz2_grading})
    return out.finish(OK)


def _axis_profile(A, expr):
    a = parse_element(expr, A)
    prof = analyze_idempotent(A, a)
    if not prof.idempotent:
        raise NotIdempotent(f"{a} is not idempotent")
    if not (prof.axis and prof.primitive):
        raise NotAnAxis(f"{a}: {prof.summary()}")
    return prof


def cmd_decompose(args, out: Output) -> int:
    A = load_source(args.src).algebra
    prof = _axis_profile(A, args.axis)
    y = parse_element(args.element, A)
    types = _types(args.types, 2) or infer_types(prof)
    results = {}
    if args.method in ("projector", "both"):
        results["projector"] = decompose(A, prof, y, types)
    if args.method in ("formulas", "both"):
        results["formulas"] = decompose_via_formulas(A, prof.element, types, y)
    for method, d in results.items():
        out.line(f"{method}: alpha = {_fmt(d.alpha)}")
        parts = {f"{_fmt(mu)},{_fmt(nu)}": str(v) for (mu, nu), v in d.parts.items()}
        for k, v in parts.items():
            out.line(f"  y_({k}) = {v}")
        out.put(method, {"alpha": d.alpha, "parts": parts})
    code = OK
    if len(results) == 2:
        p, f = results["projector"], results["formulas"]
        agree = p.alpha == f.alpha and all(p.part(*k) == f.part(*k) for k in f.parts)
        out.put("agree", agree)
        out.line(f"methods agree: {agree}")
        code = OK if agree else FAILED
    return out.finish(code)


def cmd_fusion(args, out: Output) -> int:
    A = load_source(args.src).algebra
    prof = _axis_profile(A, args.axis)
    fr = prof.fusion
    for side_name, side in (("left", fr.left), ("right", fr.right)):
        out.line(f"{side_name}: B subalgebra {side.B_subalgebra}, B absorbs {side.B_absorbs_eigenspaces}, "
                 f"involutory {side.involutory}, Z2 grading {side.z2_grading}")
        out.put(side_name, {"B_subalgebra": side.B_subalgebra, "B_absorbs_eigenspaces": side.B_absorbs_eigenspaces,
                            "pairing": {_fmt(k): (_fmt(v) if v is not None else None) for k, v in side.pairing.items()},
                            "involutory": side.involutory, "z2_grading": side.z2_grading})
    out.line(f"Z2xZ2 grading: {fr.z2xz2_grading}")
    out.put("z2xz2_grading", fr.z2xz2_grading)
    out.put("counterexamples", [str(c) for c in fr.counterexamples])
    for c in fr.counterexamples:
        out.line(f"  violated: {c}")
    return out.finish(OK if fr.involutory else FAILED)


def cmd_albert(args, out: Output) -> int:
    A = load_source(args.src).algebra
    a = parse_element(args.idempotent, A)
    if not check_pa_degree4(A).holds:
        raise HypothesisFailure("power-associative", "degree-4 power-associativity probe fails")
    rep = albert_decompose(A, a)
    for name, S in (("A11", rep.A11), ("A00", rep.A00), ("half", rep.half)):
        vecs = [str(A.element(v)) for v in S.basis]
        out.line(f"{name} (dim {S.dim}): {', '.join(vecs) or '0'}")
        out.put(name, vecs)
    out.line(f"direct sum equal to A: {rep.direct_sum}")
    out.put("direct_sum", rep.direct_sum)
    out.put("projector_checks", rep.projector_checks)
    for k, v in rep.projector_checks.items():
        out.line(f"  {k}: {v}")
    return out.finish(OK if rep.direct_sum and rep.images_agree else FAILED)


def cmd_miyamoto(args, out: Output) -> int:
    A = load_source(args.src).algebra
    profiles = [_axis_profile(A, e) for e in args.axes.split(",")]
    ok = True
    invs = []
    for prof in profiles:
        for t in miyamoto_involutions(A, prof):
            auto = check_automorphism(A, t.matrix).holds
            ok &= auto
            invs.append({"axis": str(prof.element), "kind": t.kind, "automorphism": auto})
            out.line(f"{t.kind} of {prof.element}: automorphism {auto}")
    out.put("involutions", invs)
    closure = group_closure(A, profiles, args.max_group, args.max_words, args.saturate)
    out.line(f"group order {closure.order}{' (truncated)' if closure.truncated else ''}; orbit size {len(closure.orbit)}")
    out.put("group_order", closure.order)
    out.put("truncated", closure.truncated)
    out.put("orbit", [str(x) for x in closure.orbit])
    X = [p.element for p in profiles]
    if subalgebra_closure(A, X).dim == A.dim:
        rep = check_spanning(A, X, closure)
        out.line(f"orbit rank {rep.orbit_rank}/{rep.dim}; stable hull dim {rep.stable_hull_dim}")
        out.put("spanning", {"orbit_rank": rep.orbit_rank, "spans": rep.spans, "stable_hull_is_all": rep.stable_hull_is_all})
        ok &= rep.holds
    else:
        out.line("axes do not generate the algebra; spanning not asserted")
    return out.finish(OK if ok else FAILED)


def cmd_two_gen(args, out: Output) -> int:
    A = load_source(args.src).algebra
    a, b = parse_element(args.a, A), parse_element(args.b, A)
    rep = full_report(A, a, b, _types(args.types, 4))
    out.line(f"generated_dim {rep.generated_dim}, span5_rank {rep.span5_rank}, generates A {rep.generates_all}")
    out.put("generated_dim", rep.generated_dim)
    out.put("span5_rank", rep.span5_rank)
    out.put("generates_all", rep.generates_all)
    out.put("verdicts", [{"claim": v.claim, "status": v.status, "detail": v.detail} for v in rep.verdicts])
    for v in rep.verdicts:
        out.line(f"  {v.status:5} {v.claim}  {v.detail}")
    if rep.contradiction:
        out.line(CONTRADICTION)
    return out.finish(OK if rep.ok else FAILED)


def cmd_enumerate(args, out: Output) -> int:
    A = load_source(args.src).algebra
    cfg = SearchConfig(max_elements=args.max, require_primitive=not args.all_axes)
    if args.axes or args.census:
        profiles = enumerate_axes(A, cfg)
        if args.axes:
            out.put("axes", [{"element": str(p.element), "summary": p.summary()} for p in profiles])
            for p in profiles:
                out.line(f"{p.element}: {p.summary()}")
            return out.finish(OK)
        rows = census_from_profiles(A, profiles)
        bad = [r for r in rows if r.contradiction]
        out.put("census", [
            {"a": str(r.axis_pair[0]), "b": str(r.axis_pair[1]),
             "types": [list(ty) for ty in r.types],
             "generated_dim": r.generated_dim, "jordan_flags": list(r.jordan_flags)}
            for r in rows
        ])
        for r in rows:
            out.line(f"({r.axis_pair[0]}, {r.axis_pair[1]}): dim {r.generated_dim}, Jordan {r.jordan_flags}")
        out.line(f"{len(rows)} pairs")
        if bad:
            out.line(f"{CONTRADICTION}: {len(bad)} pair(s) generate dimension 4 or more than 5")
            out.put("contradiction", True)
        return out.finish(FAILED if bad else OK)
    xs = enumerate_idempotents(A, cfg)
    out.put("idempotents", [str(x) for x in xs])
    for x in xs:
        out.line(str(x))
    return out.finish(OK)


def cmd_verify(args, out: Output) -> int:
    src = load_source(args.src)
    rep = run_battery(src.algebra, src.name, src.params, src.text)
    out.put("source", rep.source)
    out.put("field", rep.field)
    out.put("rows", [{"claim": r.claim, "subject": r.subject, "status": r.status, "detail": r.detail, "kind": r.kind}
                     for r in rep.rows])
    width = max((len(r.claim) for r in rep.rows), default=10)
    for r in rep.rows:
        out.line(f"{r.status:5} {r.claim:{width}}  {r.subject}  {r.detail}")
    fails = rep.failures
    out.line(f"{len(rep.rows)} rows, {len(fails)} failing")
    if rep.contradiction:
        out.line(CONTRADICTION)
    return out.finish(rep.exit_code)


def cmd_catalog(args, out: Output) -> int:
    if args.action == "list":
        for n in catalog.names():
            e = catalog.entry(n)
            out.line(f"{n:14} {e.provenance}")
        out.put("entries", {n: catalog.entry(n).provenance for n in catalog.names()})
        return out.finish(OK)
    if not args.name:
        raise BadParams("catalog show needs a NAME")
    src = load_source(args.name if args.name.startswith("catalog:") else "catalog:" + args.name)
    e = catalog.entry(src.name)
    A = src.algebra
    out.line(f"# {e.provenance}")
    if src.params:
        out.line("# params: " + ", ".join(f"{k}={_fmt(v)}" for k, v in src.params.items()))
    marks = catalog.landmarks(src.name, A)
    if marks:
        out.line("# landmarks: " + "; ".join(f"{k} = {v}" for k, v in marks.items()))
    text = serialize_algebra(A)
    out.line(text.rstrip("\n"))
    out.put("name", src.name)
    out.put("provenance", e.provenance)
    out.put("params", src.params)
    out.put("landmarks", {k: str(v) for k, v in marks.items()})
    out.put("algebra", text)
    return out.finish(OK)


# -- parser --------------------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise ParseError(f"usage: {message}")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="axilab", description="Exact computations with axes of non-associative algebras.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def cmd(name, func, help_, src=True):
        sp = sub.add_parser(name, help=help_)
        if src:
            sp.add_argument("src", help="algebra file or catalog:name?key=value")
        sp.add_argument("--json", action="store_true", help="machine-readable report")
        sp.set_defaults(func=func)
        return sp

    sp = cmd("analyze", cmd_analyze, "idempotent/axis profile of an element")
    sp.add_argument("--element", required=True)
    sp = cmd("decompose", cmd_decompose, "two-sided decomposition of an element")
    sp.add_argument("--axis", required=True)
    sp.add_argument("--element", required=True)
    sp.add_argument("--method", choices=["projector", "formulas", "both"], default="projector")
    sp.add_argument("--types", help="lambda,delta")
    sp = cmd("fusion", cmd_fusion, "fusion rules of an axis")
    sp.add_argument("--axis", required=True)
    sp = cmd("albert", cmd_albert, "Albert decomposition for an idempotent")
    sp.add_argument("--idempotent", required=True)
    sp = cmd("miyamoto", cmd_miyamoto, "Miyamoto involutions, group closure and orbit")
    sp.add_argument("--axes", required=True, help="comma-separated axis expressions")
    sp.add_argument("--max-group", type=int, default=10000)
    sp.add_argument("--max-words", type=int, default=20)
    sp.add_argument("--saturate", action="store_true", help="also use involutions of orbit axes")
    sp = cmd("two-gen", cmd_two_gen, "verdicts for the subalgebra generated by two axes")
    sp.add_argument("--a", required=True)
    sp.add_argument("--b", required=True)
    sp.add_argument("--types", help="lambda,delta,lambda',delta'")
    sp = cmd("enumerate", cmd_enumerate, "exhaustive search over a prime field")
    g = sp.add_mutually_exclusive_group()
    g.add_argument("--idempotents", action="store_true")
    g.add_argument("--axes", action="store_true")
    g.add_argument("--census", action="store_true")
    sp.add_argument("--all-axes", action="store_true", help="keep non-primitive axes")
    sp.add_argument("--max", type=int, default=10**7)
    cmd("verify-paper", cmd_verify, "run the full claim battery")
    sp = cmd("catalog", cmd_catalog, "list or show built-in algebras", src=False)
    sp.add_argument("action", choices=["list", "show"])
    sp.add_argument("name", nargs="?")
    return p


def run_command(argv, stream=None) -> int:
    stream = stream or sys.stdout
    as_json = "--json" in argv
    try:
        args = build_parser().parse_args(argv)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    out = Output(as_json, stream)
    try:
        return args.func(args, out)
    except (HypothesisFailure, NotAnAxis, NotIdempotent, UnsupportedCharacteristic) as exc:
        out.put("error", str(exc))
        out.line(f"hypothesis not met: {exc}")
        return out.finish(HYPOTHESIS)
    except (ParseError, BadParams, TypeShapeError, SearchSpaceTooLarge, RationalsUnsupported) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE
    except AxilabError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE


def main(argv=None) -> int:
    sys.exit(run_command(sys.argv[1:] if argv is None else argv))


if __name__ == "__main__":
    main()
