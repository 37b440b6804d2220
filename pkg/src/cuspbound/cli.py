"""Command-line front end.

Usage:
    cuspbound bound --n 1 --volume 0
    cuspbound table --n-max 10 --volume 2.0299 --format csv
    cuspbound witness perp --l 7 --n 1
    cuspbound witness lemma31 --a 3,0 --c 1,0 --l 7 --n 1
    cuspbound constants
    cuspbound audit --file spectrum.json
    cuspbound horoballs --l 7 --a 3,0 --c 1,0 --depth 2

Exit status: 0 success, 1 audit found violations, 2 usage or domain error.
Human output uses 6 decimals; csv and json use shortest round-trip floats.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from pathlib import Path

from . import bounds, cusp, spectrum, witnesses
from .errors import CuspboundError
from .moebius import IsometryClass, MoebiusMap, classify, translation_length

SCHEMA_VERSION = 1
FORMATS = ("human", "csv", "json")


def parse_complex(text: str) -> complex:
    """Parse ``re,im`` (or a bare real) into a complex number."""
    parts = text.split(",")
    try:
        if len(parts) == 1:
            return complex(float(parts[0]), 0.0)
        if len(parts) == 2:
            return complex(float(parts[0]), float(parts[1]))
    except ValueError:
        pass
    raise argparse.ArgumentTypeError(f"expected 're,im', got {text!r}")


def _positive_int(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if n < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {n}")
    return n


def _nonneg_float(text: str) -> float:
    try:
        x = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a number, got {text!r}") from None
    if not (x >= 0 and math.isfinite(x)):
        raise argparse.ArgumentTypeError(f"must be finite and >= 0, got {text}")
    return x


def _f6(x) -> str:
    return "n/a" if x is None else f"{x:.6f}"


def _csv(header: list[str], rows: list[list]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow([repr(v) if isinstance(v, float) else v for v in row])
    return buf.getvalue()


def _json(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _cpair(z: complex) -> list[float]:
    return [z.real + 0.0, z.imag + 0.0]


def _cstr(z: complex) -> str:
    return f"{z.real:.6f}{z.imag:+.6f}i"


# --- subcommands -----------------------------------------------------------


def table_rows(n_max: int, V: float) -> list[dict]:
    x = bounds.crossing_volume(V)
    return [
        {
            "n": n,
            "crossing_x": x,
            "trace_bound": bounds.F_n(x, n),
            "length_bound": bounds.geodesic_length_bound(n, V),
        }
        for n in range(1, n_max + 1)
    ]


def cmd_bound(args) -> tuple[str, int]:
    value = bounds.geodesic_length_bound(args.n, args.volume)
    if args.format == "human":
        return f"{value:.6f}\n", 0
    if args.format == "csv":
        return _csv(["n", "volume", "length_bound"], [[args.n, args.volume, value]]), 0
    return _json({"schema_version": SCHEMA_VERSION, "n": args.n, "volume": args.volume, "length_bound": value}), 0


def cmd_table(args) -> tuple[str, int]:
    rows = table_rows(args.n_max, args.volume)
    keys = ["n", "crossing_x", "trace_bound", "length_bound"]
    if args.format == "csv":
        return _csv(keys, [[r[k] for k in keys] for r in rows]), 0
    if args.format == "json":
        return _json(rows), 0
    lines = [f"{'n':>5} {'crossing_x':>14} {'trace_bound':>14} {'length_bound':>14}"]
    for r in rows:
        lines.append(f"{r['n']:>5} {r['crossing_x']:>14.6f} {r['trace_bound']:>14.6f} {r['length_bound']:>14.6f}")
    return "\n".join(lines) + "\n", 0


def _describe(M: MoebiusMap) -> dict:
    kind = classify(M)
    length = translation_length(M) if kind is IsometryClass.LOXODROMIC else None
    return {
        "matrix": [_cpair(v) for v in M.entries],
        "trace": _cpair(M.a + M.d),
        "trace_abs": abs(M.a + M.d),
        "class": str(kind),
        "translation_length": length,
    }


def witness_report(args) -> dict:
    if args.kind == "perp":
        M, tr_abs = witnesses.perp_witness(args.l, args.n)
        out = _describe(M)
        tb = bounds.AR_n(args.l, args.n)
        out.update(trace_bound=tb, length_bound=bounds.translation_length_upper(tb))
    elif args.kind == "general":
        M, tr = witnesses.general_witness(args.l, args.omega, args.n)
        out = _describe(M)
        out.update(trace_bound=abs(tr), length_bound=bounds.translation_length_upper(abs(tr)))
    else:
        P = witnesses.WitnessParams(l=args.l, a=args.a, c=args.c, n=args.n)
        pair = witnesses.lemma31_pair(P)
        out = _describe(pair.chosen)
        out.update(
            plus_trace=_cpair(pair.plus_trace),
            plus_class=str(pair.plus_class),
            minus_trace=_cpair(pair.minus_trace),
            minus_class=str(pair.minus_class),
        )
        if abs(P.a) <= 2:
            tb = witnesses.lemma31_case2_bound(P.n, P.l)
            # the case-2 estimate is stated for beta^n gamma
            out["trace_abs"] = abs(pair.plus_trace)
        elif args.vc is not None:
            tb = witnesses.lemma31_case1_bound(P.n, P.l, args.vc)
        else:
            tb = None
        out.update(trace_bound=tb, length_bound=None if tb is None else bounds.translation_length_upper(tb))
    tb, lb, length = out["trace_bound"], out["length_bound"], out["translation_length"]
    if tb is None or length is None:
        out["satisfied"] = None
    else:
        out["satisfied"] = bool(out["trace_abs"] <= tb * (1 + 1e-12) and length <= lb)
    return {"schema_version": SCHEMA_VERSION, "kind": args.kind, **out}


def cmd_witness(args) -> tuple[str, int]:
    rep = witness_report(args)
    if args.format == "json":
        return _json(rep), 0
    if args.format == "csv":
        keys = ["kind", "trace_abs", "class", "translation_length", "trace_bound", "length_bound", "satisfied"]
        return _csv(keys, [[rep[k] for k in keys]]), 0
    a, b, c, d = (complex(*p) for p in rep["matrix"])
    lines = [f"witness: {rep['kind']}", f"matrix:  [[{_cstr(a)}, {_cstr(b)}],", f"          [{_cstr(c)}, {_cstr(d)}]]"]
    if rep["kind"] == "lemma31":
        lines.append(f"beta^+n gamma: trace {_cstr(complex(*rep['plus_trace']))} ({rep['plus_class']})")
        lines.append(f"beta^-n gamma: trace {_cstr(complex(*rep['minus_trace']))} ({rep['minus_class']})")
        lines.append(f"chosen trace:  {_cstr(complex(*rep['trace']))}")
    lines += [
        f"|trace|: {_f6(rep['trace_abs'])}",
        f"class: {rep['class']}",
        f"translation length: {_f6(rep['translation_length'])}",
        f"trace bound: {_f6(rep['trace_bound'])}",
        f"length bound: {_f6(rep['length_bound'])}",
        f"satisfied: {'n/a' if rep['satisfied'] is None else rep['satisfied']}",
    ]
    return "\n".join(lines) + "\n", 0


def cmd_constants(args) -> tuple[str, int]:
    c = bounds.constants()
    vals = {"v0": c.v0, "C0": c.C0, "Vc_min": c.Vc_min}
    if args.format == "json":
        return _json({"schema_version": SCHEMA_VERSION, **vals}), 0
    if args.format == "csv":
        return _csv(["name", "value"], [[k, v] for k, v in vals.items()]), 0
    return f"v0 = {c.v0:.6f}\nC0 = {c.C0:.6f}\npi^2 sqrt(3) = {c.Vc_min:.6f}\n", 0


def cmd_audit(args) -> tuple[str, int]:
    path = Path(args.file)
    fmt = args.input_format or ("json" if path.suffix.lower() == ".json" else "csv")
    try:
        data = path.read_bytes()
    except OSError as exc:
        raise CuspboundError(f"cannot read {path}: {exc.strerror}") from None
    rec = spectrum.load_spectrum(data, fmt, volume=args.volume, name=path.stem)
    rep = spectrum.audit(rec)
    status = 1 if rep.n_violations else 0
    if args.format == "json":
        return _json(
            {
                "schema_version": SCHEMA_VERSION,
                "name": rep.name,
                "filled_volume": rep.filled_volume,
                "entries": [vars(e) for e in rep.entries],
                "checked": rep.n_checked,
                "violations": rep.n_violations,
                "disclaimer": rep.disclaimer,
            }
        ), status
    if args.format == "csv":
        rows = [[e.n, e.length, e.bound, e.margin, e.passed] for e in rep.entries]
        return _csv(["n", "length", "bound", "margin", "pass"], rows), status
    lines = [f"{rep.name}: filled volume {rep.filled_volume:.6f}, {rep.n_checked} lengths"]
    for e in rep.violations:
        lines.append(f"  VIOLATION n={e.n}: length {e.length:.6f} > bound {e.bound:.6f}")
    lines.append(f"{rep.n_violations} violations")
    lines.append(rep.disclaimer)
    return "\n".join(lines) + "\n", status


def cmd_horoballs(args) -> tuple[str, int]:
    beta = witnesses.parabolic_beta(args.l)
    gamma = witnesses.gamma_full_size(args.a, args.c)
    balls = cusp.horoball_orbit([beta, gamma], depth=args.depth)
    if args.format == "json":
        rows = [
            {"center_re": "inf", "center_im": "inf", "diameter": H.size}
            if H.at_infinity
            else {"center_re": H.center.real + 0.0, "center_im": H.center.imag + 0.0, "diameter": H.size}
            for H in balls
        ]
        return _json(rows), 0
    return cusp.horoballs_to_csv(balls), 0


# --- parser ----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=FORMATS, default=argparse.SUPPRESS, help="output format")

    p = argparse.ArgumentParser(prog="cuspbound", description="Closed geodesic length bounds for hyperbolic link complements.")
    p.add_argument("--format", choices=FORMATS, default="human", help="output format (default: human)")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("bound", parents=[fmt], help="upper bound on the n-th shortest geodesic length")
    s.add_argument("--n", type=_positive_int, required=True)
    s.add_argument("--volume", type=_nonneg_float, required=True, help="volume of the filled manifold (0 if not hyperbolic)")
    s.set_defaults(func=cmd_bound)

    s = sub.add_parser("table", parents=[fmt], help="bounds for n = 1..n-max")
    s.add_argument("--n-max", type=_positive_int, required=True)
    s.add_argument("--volume", type=_nonneg_float, default=0.0)
    s.set_defaults(func=cmd_table)

    s = sub.add_parser("witness", parents=[fmt], help="construct an explicit loxodromic element")
    s.add_argument("kind", choices=["lemma31", "perp", "general"])
    s.add_argument("--l", type=float, required=True, help="shortest parabolic translation (> 2 pi)")
    s.add_argument("--n", type=_positive_int, default=1)
    s.add_argument("--a", type=parse_complex, default=complex(3, 0))
    s.add_argument("--c", type=parse_complex, default=complex(1, 0))
    s.add_argument("--omega", type=parse_complex, default=None, help="lower-left entry of gamma (general)")
    s.add_argument("--vc", type=float, default=None, help="cusp co-area budget, for the |a| > 2 bound")
    s.set_defaults(func=cmd_witness)

    s = sub.add_parser("constants", parents=[fmt], help="print v0, C0 and pi^2 sqrt(3)")
    s.set_defaults(func=cmd_constants)

    s = sub.add_parser("audit", parents=[fmt], help="check a length spectrum against the bound")
    s.add_argument("--file", required=True)
    s.add_argument("--volume", type=_nonneg_float, default=None, help="filled volume (required for CSV)")
    s.add_argument("--input-format", choices=["csv", "json"], default=None)
    s.set_defaults(func=cmd_audit)

    s = sub.add_parser("horoballs", parents=[fmt], help="horoball diagram as CSV")
    s.add_argument("--l", type=float, required=True)
    s.add_argument("--a", type=parse_complex, required=True)
    s.add_argument("--c", type=parse_complex, default=complex(1, 0))
    s.add_argument("--depth", type=int, default=3)
    s.set_defaults(func=cmd_horoballs)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "witness" and args.kind == "general" and args.omega is None:
        parser.error("witness general needs --omega")
    if args.command == "horoballs" and args.depth < 0:
        parser.error("--depth must be >= 0")
    try:
        text, status = args.func(args)
    except CuspboundError as exc:
        print(f"cuspbound {args.command}: {exc}", file=sys.stderr)
        return 2
    sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
