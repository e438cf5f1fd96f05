"""Command line: ``bounds``, ``verify``, ``curve`` and ``eval``.

Exit codes: 0 success or contained, 1 violated, 2 usage or domain error,
3 I/O failure, 4 numerical failure.
"""

from __future__ import annotations

import argparse
import io
import math
import re
import sys

import numpy as np

from . import bounds as bd
from .dominants import CLOSED_FORM_FAMILIES, POTENTIAL_CASES, Case, DominantSpec, Family, eval_dominant
from .errors import DomainError, NephsubError, ParameterError
from .nephroid import boundary_uv
from .numerics.hypergeometric import Hyp2F1Params, hyp2f1
from .targets import BRANCH_ANGLES, Target, TargetFunction, boundary_point, eval_target
from .verifier import Verdict, _angles, verify_containment

EXIT_OK, EXIT_VIOLATED, EXIT_USAGE, EXIT_IO, EXIT_NUMERIC = 0, 1, 2, 3, 4

FAMILIES = [f.value for f in Family]
TARGETS = [t.value for t in Target]
CASES = [c.value for c in Case]
_NUM = re.compile(r"^-[\d.]")


class UsageError(Exception):
    pass


def fmt(x: float) -> str:
    x = float(x) + 0.0  # folds -0.0 into 0.0
    return "%.15g" % x


def parse_complex(text: str) -> complex:
    parts = text.split(",")
    if len(parts) == 1:
        parts.append("0")
    if len(parts) != 2:
        raise UsageError(f"cannot parse {text!r} as re,im")
    try:
        re_, im = (float(p) for p in parts)
    except ValueError as exc:
        raise UsageError(f"cannot parse {text!r} as re,im") from exc
    return complex(re_, im)


def _join_negative_values(argv: list[str]) -> list[str]:
    # argparse reads "-1,0" as a flag; glue such values onto their option
    out: list[str] = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if (tok.startswith("--") and "=" not in tok and i + 1 < len(argv)
                and _NUM.match(argv[i + 1])):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
            continue
        out.append(tok)
        i += 1
    return out


def _family(name: str) -> Family:
    try:
        return Family(name)
    except ValueError:
        raise UsageError(f"unknown family {name!r}; choose from {', '.join(FAMILIES)}") from None


def _case(family: Family, name: str | None) -> Case:
    if family.is_linear:
        if name not in (None, Case.LINEAR.value):
            raise UsageError(f"{family.value} takes no --case (or --case linear)")
        return Case.LINEAR
    if name is None:
        raise UsageError(f"{family.value} needs --case j0|j1|j2")
    return Case(name)


def _spec(args) -> DominantSpec:
    family = _family(args.family)
    if args.beta is None:
        raise UsageError("--beta is required")
    return DominantSpec(family, _case(family, args.case), args.beta, args.A, args.B)


# bounds -------------------------------------------------------------------

def _bound_rows(args) -> list[bd.BetaBound]:
    fams = [_family(args.family)] if args.family else list(CLOSED_FORM_FAMILIES)
    cases = [Case(args.case)] if args.case else list(POTENTIAL_CASES)
    rows: list[bd.BetaBound] = []
    for fam in fams:
        if fam is Family.HG_LEMNISCATE:
            rows.append(bd.hg_lemniscate_bound())
        elif fam is Family.HG_LINEAR:
            rows.append(bd.hg_linear_bound())
        elif fam is Family.JANOWSKI:
            if args.A is None or args.B is None:
                raise UsageError("janowski needs --A and --B")
            rows += [bd.janowski_beta(args.A, args.B, c) for c in cases]
        else:
            rows += [bd.sharp_beta(fam, c) for c in cases]
    if not args.family:
        if args.A is not None and args.B is not None:
            rows += [bd.janowski_beta(args.A, args.B, c) for c in cases]
        rows += [bd.hg_lemniscate_bound(), bd.hg_linear_bound()]
    return rows


def cmd_bounds(args, out) -> int:
    out.write("family\tcase\tbeta1\tbeta2\tbeta\tbeta6\tendpoint\tformula\n")
    for b in _bound_rows(args):
        b1 = "-" if b.beta1 is None else fmt(b.beta1)
        b2 = "-" if b.beta2 is None else fmt(b.beta2)
        out.write(f"{b.family.value}\t{b.case.value}\t{b1}\t{b2}\t{fmt(b.value)}\t{b.value:.6g}\t"
                  f"{b.sharp_endpoint.name.lower()}\t{b.formula}\n")
    return EXIT_OK


# verify -------------------------------------------------------------------

def cmd_verify(args, out) -> int:
    report = verify_containment(_spec(args), n=args.n, tol=args.tol)
    out.write(report.render() + "\n")
    return EXIT_VIOLATED if report.verdict is Verdict.VIOLATED else EXIT_OK


# curve --------------------------------------------------------------------

def _curve_data(args) -> tuple[list[str], np.ndarray]:
    n = args.n
    if n is None or n < 2:
        raise UsageError("--n must be at least 2")
    if args.what == "tau-delta":
        lo, hi = args.beta_min, args.beta_max
        if not 0 < lo < hi <= 50:
            raise UsageError("need 0 < --beta-min < --beta-max <= 50")
        betas = np.geomspace(lo, hi, n)
        rows = [(r.beta, r.tau, r.delta) for r in bd.tau_delta_table(betas)]
        return ["beta", "tau", "delta"], np.array(rows)
    t = _angles(n)
    if args.what == "target":
        if args.family is None:
            raise UsageError("--family is required")
        try:
            kind = Target(args.family)
        except ValueError:
            raise UsageError(f"unknown target {args.family!r}; choose from {', '.join(TARGETS)}") from None
        if kind is Target.NEPHROID:
            u, v = boundary_uv(t)
        else:
            t = _off_branch(t, BRANCH_ANGLES.get(kind, ()))
            w = boundary_point(TargetFunction(kind, args.A, args.B), t)
            u, v = w.real, w.imag
    else:
        spec = _spec(args)
        w = eval_dominant(spec, np.exp(1j * t))
        u, v = w.real, w.imag
    data = np.column_stack([t, u, v])
    if not np.all(np.isfinite(data)):
        raise DomainError("curve has non-finite points")
    return ["t", "u", "v"], data


def _off_branch(t: np.ndarray, angles) -> np.ndarray:
    # nudge samples sitting on a branch angle to its upper side
    t = t.copy()
    for s in angles:
        d = np.abs(np.remainder(t - s + math.pi, 2 * math.pi) - math.pi)
        t[d < 1e-12] += 1e-9
    return t


def to_csv(header: list[str], data: np.ndarray) -> str:
    buf = io.StringIO()
    buf.write(",".join(header) + "\n")
    for row in data:
        buf.write(",".join(fmt(x) for x in row) + "\n")
    return buf.getvalue()


def to_svg(x: np.ndarray, y: np.ndarray, width: int = 800, height: int = 600, margin: int = 20) -> str:
    """Single polyline, equal axis scaling, y axis pointing up."""
    xmin, xmax, ymin, ymax = x.min(), x.max(), y.min(), y.max()
    span = max(xmax - xmin, 1e-300), max(ymax - ymin, 1e-300)
    s = min((width - 2 * margin) / span[0], (height - 2 * margin) / span[1])
    ox = margin + ((width - 2 * margin) - s * span[0]) / 2
    oy = margin + ((height - 2 * margin) - s * span[1]) / 2
    px = ox + s * (x - xmin)
    py = height - (oy + s * (y - ymin))
    pts = " ".join(f"{a:.3f},{b:.3f}" for a, b in zip(px, py))
    return (f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {width} {height}" '
            f'width="{width}" height="{height}">\n'
            f'<polyline fill="none" stroke="black" stroke-width="1" points="{pts}"/>\n'
            "</svg>\n")


def cmd_curve(args, out) -> int:
    header, data = _curve_data(args)
    if args.format == "csv":
        text = to_csv(header, data)
    elif header[0] == "beta":
        col = 1 if args.series == "tau" else 2
        text = to_svg(data[:, 0], data[:, col])
    else:
        text = to_svg(data[:, 1], data[:, 2])
    if args.out in (None, "-"):
        out.write(text)
        return EXIT_OK
    try:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    except OSError as exc:
        sys.stderr.write(f"error: cannot write {args.out}: {exc}\n")
        return EXIT_IO
    return EXIT_OK


# eval ---------------------------------------------------------------------

def cmd_eval(args, out) -> int:
    if args.z is None:
        raise UsageError("--z re,im is required")
    z = parse_complex(args.z)
    if abs(z) > 1.0 + 1e-12:
        raise DomainError(f"|z| = {abs(z):.6g} exceeds 1")
    if args.target:
        try:
            kind = Target(args.target)
        except ValueError:
            raise UsageError(f"unknown target {args.target!r}") from None
        w = eval_target(TargetFunction(kind, args.A, args.B), z)
    elif args.dominant:
        args.family = args.dominant
        w = eval_dominant(_spec(args), z)
    else:
        if None in (args.a, args.b, args.c):
            raise UsageError("--hyp2f1 needs --a, --b and --c")
        w = hyp2f1(Hyp2F1Params(args.a, args.b, args.c), z)
    out.write(f"{fmt(w.real)} {fmt(w.imag)}\n")
    return EXIT_OK


# parser -------------------------------------------------------------------

def _add_family_args(p, family_required: bool = False):
    p.add_argument("--family", required=family_required)
    p.add_argument("--case", choices=CASES)
    p.add_argument("--beta", type=float)
    p.add_argument("--A", type=float)
    p.add_argument("--B", type=float)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="nephsub", description="Nephroid subordination thresholds and checks")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bounds", help="table of sharp beta thresholds")
    p.add_argument("--family", choices=FAMILIES)
    p.add_argument("--case", choices=[c.value for c in POTENTIAL_CASES])
    p.add_argument("--A", type=float)
    p.add_argument("--B", type=float)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("verify", help="boundary containment check")
    _add_family_args(p, family_required=True)
    p.add_argument("--n", type=int, default=8192)
    p.add_argument("--tol", type=float, default=1e-6)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("curve", help="export boundary or tau/delta data")
    p.add_argument("--what", choices=["target", "dominant", "tau-delta"], required=True)
    _add_family_args(p)
    p.add_argument("--n", type=int, default=1024)
    p.add_argument("--format", choices=["csv", "svg"], default="csv")
    p.add_argument("--out")
    p.add_argument("--series", choices=["tau", "delta"], default="tau")
    p.add_argument("--beta-min", type=float, default=0.05)
    p.add_argument("--beta-max", type=float, default=50.0)
    p.set_defaults(func=cmd_curve)

    p = sub.add_parser("eval", help="evaluate one function at one point")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--target")
    g.add_argument("--dominant")
    g.add_argument("--hyp2f1", action="store_true")
    p.add_argument("--case", choices=CASES)
    p.add_argument("--beta", type=float)
    p.add_argument("--A", type=float)
    p.add_argument("--B", type=float)
    p.add_argument("--a", type=float)
    p.add_argument("--b", type=float)
    p.add_argument("--c", type=float)
    p.add_argument("--z")
    p.set_defaults(func=cmd_eval)
    return parser


def main(argv: list[str] | None = None, out=None) -> int:
    out = sys.stdout if out is None else out
    argv = sys.argv[1:] if argv is None else list(argv)
    parser = build_parser()
    try:
        args = parser.parse_args(_join_negative_values(argv))
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except (UsageError, ParameterError, DomainError, ValueError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE
    except NephsubError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_NUMERIC
    except OSError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_IO


def main_entry() -> None:
    sys.exit(main())
