"""Command line: verify category files, build lattice categories, run the suites.

Exit codes: 0 every check passed, 1 some check failed, 2 bad input.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import catext, dhr, fusion, lattice, models
from .fusion import FusionData, StructureError
from .report import Report
from .scalar import Cyc, _field, as_cyc

__all__ = ["SCHEMA", "SCHEMA_VERSION", "SchemaError", "dump_category", "load_category", "main"]

SCHEMA = "artifact.category"
SCHEMA_VERSION = 1


class SchemaError(ValueError):
    """The category file does not follow the schema."""


# ---------------------------------------------------------------------------
# category files

def _coeffs(x, N: int) -> list[str]:
    x = as_cyc(x)
    if N % x.order:
        raise SchemaError(f"value {x} does not lie in Q(zeta_{N})")
    return [str(c) for c in x.lift(N).coeffs]


def _value(raw, N: int, where: str) -> Cyc:
    if not isinstance(raw, list):
        raise SchemaError(f"{where}: value must be a list of coefficients")
    deg = _field(N)[0]
    if len(raw) > deg:
        raise SchemaError(f"{where}: {len(raw)} coefficients, at most {deg} allowed for N = {N}")
    try:
        cs = [Fraction(str(c)) for c in raw]
    except (ValueError, ZeroDivisionError) as exc:
        raise SchemaError(f"{where}: bad coefficient ({exc})") from None
    return Cyc(N, cs)


def category_to_dict(d: FusionData) -> dict:
    N = d.cyclotomic_order
    pos = {x: i for i, x in enumerate(d.labels)}

    def key(t):
        return tuple(pos[x] for x in t)

    return {
        "schema": SCHEMA,
        "version": SCHEMA_VERSION,
        "cyclotomic_order": N,
        "labels": list(d.labels),
        "unit": d.unit,
        "dual": {x: d.dual[x] for x in d.labels},
        "fusion": [list(t) for t in sorted(d.fusion, key=key)],
        "F": [{"tuple": list(k), "value": _coeffs(d.F[k], N)} for k in sorted(d.F, key=key)],
        "R": [{"tuple": list(k), "value": _coeffs(d.R[k], N)} for k in sorted(d.R, key=key)],
        "twist": [{"label": x, "value": _coeffs(d.twist[x], N)} for x in d.labels if x in d.twist],
    }


def dump_category(d: FusionData) -> str:
    return json.dumps(category_to_dict(d), indent=1, ensure_ascii=True) + "\n"


def _need(obj: dict, name: str, kind):
    if name not in obj:
        raise SchemaError(f"missing field {name!r}")
    if not isinstance(obj[name], kind):
        raise SchemaError(f"field {name!r} has the wrong type")
    return obj[name]


def category_from_dict(obj) -> FusionData:
    if not isinstance(obj, dict):
        raise SchemaError("top level must be an object")
    if obj.get("schema") != SCHEMA:
        raise SchemaError(f"schema must be {SCHEMA!r}")
    if obj.get("version") != SCHEMA_VERSION:
        raise SchemaError(f"unsupported schema version {obj.get('version')!r}")
    N = _need(obj, "cyclotomic_order", int)
    if N < 1:
        raise SchemaError("cyclotomic_order must be positive")
    labels = _need(obj, "labels", list)
    if not all(isinstance(x, str) for x in labels):
        raise SchemaError("labels must be strings")
    known = set(labels)

    def label(x, where):
        if x not in known:
            raise SchemaError(f"{where}: unknown label {x!r}")
        return x

    unit = label(_need(obj, "unit", str), "unit")
    dual = {label(k, "dual"): label(v, "dual") for k, v in _need(obj, "dual", dict).items()}
    fus = []
    for t in _need(obj, "fusion", list):
        if not isinstance(t, list) or len(t) != 3:
            raise SchemaError(f"fusion entry {t!r} is not a triple")
        fus.append(tuple(label(x, "fusion") for x in t))

    def table(name, size):
        out = {}
        for ent in _need(obj, name, list):
            if not isinstance(ent, dict) or not isinstance(ent.get("tuple"), list) or len(ent["tuple"]) != size:
                raise SchemaError(f"{name} entry {ent!r} needs a {size}-label tuple")
            k = tuple(label(x, name) for x in ent["tuple"])
            if k in out:
                raise SchemaError(f"{name} entry {k!r} given twice")
            out[k] = _value(ent.get("value"), N, f"{name}{k}")
        return out

    F = table("F", 6)
    R = table("R", 3)
    twist = {}
    for ent in _need(obj, "twist", list):
        if not isinstance(ent, dict):
            raise SchemaError("twist entries must be objects")
        x = label(ent.get("label"), "twist")
        twist[x] = _value(ent.get("value"), N, f"twist[{x}]")
    try:
        return FusionData(
            labels=tuple(labels), unit=unit, dual=dual, fusion=frozenset(fus),
            F=F, R=R, twist=twist, cyclotomic_order=N,
        )
    except StructureError as exc:
        raise SchemaError(str(exc)) from None


def load_category(path) -> FusionData:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise SchemaError(f"cannot read {path}: {exc}") from None
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"not JSON: {exc}") from None
    return category_from_dict(obj)


# ---------------------------------------------------------------------------
# rendering

def _num(x) -> str:
    z = as_cyc(x).approx_complex()
    re = 0.0 if abs(z.real) < 5e-13 else z.real
    im = 0.0 if abs(z.imag) < 5e-13 else z.imag
    return f"{re:+.6f}{im:+.6f}i"


def _cyc_json(x) -> dict:
    x = as_cyc(x)
    z = x.approx_complex()
    return {"exact": str(x), "order": x.order, "coeffs": [str(c) for c in x.coeffs],
            "approx": [round(z.real, 12) + 0.0, round(z.imag, 12) + 0.0]}


def _emit(reports: list[Report], fmt: str, extra_text: str = "", extra_json: dict | None = None):
    ok = all(r.passed for r in reports)
    if fmt == "json":
        out = {"status": "pass" if ok else "fail", "reports": [r.as_dict() for r in reports]}
        if extra_json:
            out.update(extra_json)
        print(json.dumps(out, indent=1, sort_keys=True, default=str))
    else:
        if extra_text:
            print(extra_text.rstrip("\n"))
        for r in reports:
            print(r.render_text())
        print("overall: " + ("PASS" if ok else "FAIL"))
    return 0 if ok else 1


def _fail_input(msg: str) -> int:
    print(f"error: {msg}", file=sys.stderr)
    return 2


# ---------------------------------------------------------------------------
# commands

def _validation_reports(d: FusionData, modular: bool) -> list[Report]:
    reps = [fusion.verify_all(d)]
    if modular and reps[0].passed and fusion.is_pointed(d) and fusion.pointed_tables(d) is not None:
        reps.append(fusion.verlinde_check(d))
        reps.append(fusion.modular_relation_check(d))
    return reps


def cmd_verify(args) -> int:
    try:
        d = load_category(args.path)
        reps = _validation_reports(d, not args.no_modular)
    except (SchemaError, StructureError) as exc:
        return _fail_input(str(exc))
    return _emit(reps, args.format)


def _read_gram(args):
    src = args.gram
    if args.gram_file:
        try:
            src = Path(args.gram_file).read_text()
        except OSError as exc:
            raise lattice.LatticeError(f"cannot read {args.gram_file}: {exc}") from None
        src = src.strip().replace("\n", ";")
    if src is None:
        raise lattice.LatticeError("give --gram or --gram-file")
    return lattice.check_gram(lattice.parse_gram(src))


def _lattice_summary(g, d: FusionData) -> tuple[str, dict]:
    A = lattice.discriminant_group(g)
    S, T, gauss = fusion.pointed_modular_data(d)
    lines = [f"Gram: {'; '.join(' '.join(map(str, r)) for r in g)}"]
    facs = " x ".join(f"Z/{k}" for k in A.invariant_factors) or "trivial"
    lines.append(f"discriminant group: {facs} (order {A.order})")
    lines.append(f"cyclotomic order: {d.cyclotomic_order}")
    lines.append("label  q (mod 2)  twist")
    rows = []
    for x in A.elements:
        lab = A.label(x)
        tw = d.twist[lab]
        lines.append(f"{lab:>6}  {str(A.q(x)):>9}  {tw}  ({_num(tw)})")
        rows.append({"label": lab, "q": str(A.q(x)), "twist": _cyc_json(tw)})
    lines.append("S (unnormalized):")
    for i, row in enumerate(S):
        lines.append("  " + "  ".join(f"{str(v):>7}" for v in row))
    lines.append("T: " + "  ".join(str(T[i][i]) for i in range(len(T))))
    lines.append(f"Gauss sum: {gauss}  ({_num(gauss)})")
    info = {
        "gram": [list(r) for r in g],
        "invariant_factors": list(A.invariant_factors),
        "elements": rows,
        "S": [[str(v) for v in row] for row in S],
        "T": [str(T[i][i]) for i in range(len(T))],
        "gauss_sum": _cyc_json(gauss),
    }
    return "\n".join(lines), info


def cmd_lattice(args) -> int:
    try:
        g = _read_gram(args)
    except lattice.LatticeError as exc:
        return _fail_input(str(exc))
    d = lattice.build_pointed_mtc(g, check=False)
    reps = _validation_reports(d, True)
    text, info = _lattice_summary(g, d)
    if args.emit:
        Path(args.emit).write_text(dump_category(d))
    return _emit(reps, args.format, text, {"lattice": info})


def cmd_minimal_model(args) -> int:
    if args.m < 2:
        return _fail_input("--m must be at least 2")
    t = models.minimal_model(args.m)
    lines = [f"minimal model m = {t.m}: c = {t.central_charge}", "(r,s)   h"]
    for rs in t.labels:
        lines.append(f"{str(rs):8} {t.weights[rs]}")
    info = {"m": t.m, "central_charge": str(t.central_charge),
            "weights": [{"r": r, "s": s, "h": str(t.weights[(r, s)])} for r, s in t.labels]}
    return _emit([], args.format, "\n".join(lines), {"minimal_model": info})


def _model(args) -> catext.PointedModel:
    g = _read_gram(args)
    return catext.PointedModel(lattice.build_pointed_mtc(g))


def cmd_catext(args) -> int:
    if args.max_len < 0 or args.trials < 0:
        return _fail_input("--max-len and --trials must be nonnegative")
    try:
        M = _model(args)
    except lattice.LatticeError as exc:
        return _fail_input(str(exc))
    reps = [
        catext.axiom_suite(M, seed=args.seed),
        catext.hexagon_suite(M),
        catext.confluence_suite(M, args.trials, args.max_len, args.seed),
        catext.closure_from_generators(M, list(M.labels[1:]))[1],
    ]
    return _emit(reps, args.format)


def cmd_dhr(args) -> int:
    if args.choices < 1:
        return _fail_input("--choices must be positive")
    try:
        M = _model(args)
    except lattice.LatticeError as exc:
        return _fail_input(str(exc))
    rep = dhr.check_G_functor(M, args.choices, args.seed)
    return _emit([rep], args.format)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="artifact", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def fmt(sp):
        sp.add_argument("--format", choices=("text", "json"), default="text")

    def gram(sp):
        grp = sp.add_mutually_exclusive_group(required=True)
        grp.add_argument("--gram", help='rows separated by ";", e.g. "2 -1; -1 2"')
        grp.add_argument("--gram-file", help="file with one matrix row per line")

    sp = sub.add_parser("verify", help="validate a category file")
    sp.add_argument("path")
    sp.add_argument("--no-modular", action="store_true", help="skip the pointed modular checks")
    fmt(sp)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("lattice", help="build and validate the category of an even lattice")
    gram(sp)
    sp.add_argument("--emit", help="write the category file here")
    fmt(sp)
    sp.set_defaults(func=cmd_lattice)

    sp = sub.add_parser("minimal-model", help="Virasoro minimal-model weights")
    sp.add_argument("--m", type=int, required=True)
    fmt(sp)
    sp.set_defaults(func=cmd_minimal_model)

    sp = sub.add_parser("catext", help="categorical-extension suites over a lattice")
    gram(sp)
    sp.add_argument("--max-len", type=int, default=6)
    sp.add_argument("--trials", type=int, default=1000)
    sp.add_argument("--seed", type=int, default=0)
    fmt(sp)
    sp.set_defaults(func=cmd_catext)

    sp = sub.add_parser("dhr", help="braiding vs statistics operator over a lattice")
    gram(sp)
    sp.add_argument("--choices", type=int, default=10)
    sp.add_argument("--seed", type=int, default=0)
    fmt(sp)
    sp.set_defaults(func=cmd_dhr)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
