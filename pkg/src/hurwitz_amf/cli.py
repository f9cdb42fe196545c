"""Command-line front end: ``hurwitz-amf <subcommand> ...``.

Exit codes: 0 success, 1 verification failure, 2 usage error. The worker
count for degree ranges is read from ``HAMF_WORKERS`` (default 1); output is
always assembled in order of degree, then variant.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import islice
from typing import Any, Callable, Iterable, Sequence

from . import __version__
from .arith_apps import NotFound, cm_points, congruence_certificate, divides_f3, divides_f6minus, parity_at_cm
from .ecoord import ecoord_basis
from .fixtures import FixtureError, appendix_a_polys, verify_fixture
from .harmonic_basis import BasisResult, Variant, basis
from .hecke_spectral import dim_formula, dim_via_trace_formula, dims_via_series, hecke_matrix, trace_T2_formula
from .polyring import Frame, HomogeneousPoly, parse_poly, primitive_normalize, render, to_frame
from .serialize import fraction_to_str, poly_from_json, poly_to_json

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
VARIANT_CHOICES = ("gamma", "plus", "minus", "both-signs")


class UsageError(ValueError):
    pass


# ---------------------------------------------------------------------------
# argument helpers
# ---------------------------------------------------------------------------


def parse_range(text: str) -> list[int]:
    """``"7"`` or ``"3..12"`` (inclusive)."""
    try:
        if ".." in text:
            a, b = text.split("..", 1)
            lo, hi = int(a), int(b)
        else:
            lo = hi = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected N or A..B, got {text!r}") from None
    if lo < 0 or hi < lo:
        raise argparse.ArgumentTypeError(f"bad degree range {text!r}")
    return list(range(lo, hi + 1))


def _is_prime(n: int) -> bool:
    return n >= 2 and all(n % d for d in range(2, int(n**0.5) + 1))


def parse_primes(text: str) -> list[int]:
    try:
        ps = [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a comma-separated list of primes, got {text!r}") from None
    bad = [p for p in ps if not _is_prime(p)]
    if bad or not ps:
        raise argparse.ArgumentTypeError(f"not prime: {bad or text}")
    return ps


def expand_variants(v: str) -> list[Variant]:
    return [Variant.PLUS, Variant.MINUS] if v == "both-signs" else [Variant(v)]


def workers() -> int:
    try:
        return max(1, int(os.environ.get("HAMF_WORKERS", "1")))
    except ValueError:
        return 1


def ordered_map(fn: Callable, items: Sequence) -> list:
    """``map`` over ``items``, fanned out over ``HAMF_WORKERS`` processes, results in input order."""
    n = workers()
    if n == 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=n) as ex:
        return list(ex.map(fn, items))


# ---------------------------------------------------------------------------
# database records
# ---------------------------------------------------------------------------


@dataclass
class DatabaseRecord:
    l: int
    variant: str
    algorithm: str
    basis: list[HomogeneousPoly]
    scales: list[Fraction]
    dimension: int
    hecke: dict[int, dict[str, Any]] = field(default_factory=dict)
    certificate: dict[str, Any] | None = None

    def to_json(self) -> dict[str, Any]:
        return {
            "l": self.l,
            "variant": self.variant,
            "algorithm": self.algorithm,
            "dimension": self.dimension,
            "basis": [poly_to_json(f) for f in self.basis],
            "scales": [fraction_to_str(s) for s in self.scales],
            "hecke": {str(p): h for p, h in sorted(self.hecke.items())},
            "certificate": self.certificate,
        }

    @classmethod
    def from_json(cls, obj: dict[str, Any]) -> "DatabaseRecord":
        return cls(
            l=int(obj["l"]),
            variant=obj["variant"],
            algorithm=obj["algorithm"],
            basis=[poly_from_json(f) for f in obj["basis"]],
            scales=[Fraction(s) for s in obj["scales"]],
            dimension=int(obj["dimension"]),
            hecke={int(p): h for p, h in obj.get("hecke", {}).items()},
            certificate=obj.get("certificate"),
        )


def _record(res: BasisResult, algorithm: str) -> DatabaseRecord:
    return DatabaseRecord(res.l, res.variant.value, algorithm, list(res.basis), list(res.scales), res.dimension)


def _hecke_json(res: BasisResult, p: int) -> dict[str, Any]:
    H = hecke_matrix(p, res)
    return {
        "matrix": [[fraction_to_str(x) for x in row] for row in H.matrix.rows()],
        "charpoly": [fraction_to_str(c) for c in H.charpoly()],
    }


def _certificate_json(l: int) -> dict[str, Any]:
    try:
        c = congruence_certificate(l)
    except NotFound as exc:
        return {"l": l, "found": False, "attempts": exc.attempts}
    return {
        "l": l,
        "found": True,
        "kind": c.kind,
        "label": c.label,
        "combination": [fraction_to_str(x) for x in c.combination],
        "attempts": c.attempts,
        "leading_terms": [{"exp": list(t), "coeff": fraction_to_str(x)} for t, x in islice(c.polynomial.items(), 5)],
    }


class SpanMismatch(ArithmeticError):
    pass


def compute_records(job: tuple[int, str, str, tuple[int, ...], bool]) -> list[DatabaseRecord]:
    """Records for one degree; top-level so it can run in a worker process."""
    l, variant, algorithm, primes, with_cert = job
    out = []
    for v in expand_variants(variant):
        if algorithm == "ecoord":
            res = ecoord_basis(l, v)
        else:
            res = basis(l, v)
            if algorithm == "both":
                other = ecoord_basis(l, v)
                if (res.basis, res.scales) != (other.basis, other.scales):
                    raise SpanMismatch(f"l={l} {v.value}: main and e-coordinate pipelines disagree")
        rec = _record(res, algorithm)
        if res.dimension:
            rec.hecke = {p: _hecke_json(res, p) for p in primes}
        if with_cert and v is Variant.PLUS and l >= 4 and l % 2 == 0:
            rec.certificate = _certificate_json(l)
        out.append(rec)
    return out


# ---------------------------------------------------------------------------
# output
# ---------------------------------------------------------------------------


def _variant_symbol(v: str) -> str:
    return {"plus": "+", "minus": "-", "gamma": "Gamma"}[v]


def render_record_text(rec: DatabaseRecord) -> list[str]:
    sym = _variant_symbol(rec.variant)
    lines = [f"l = {rec.l}, {rec.variant}: dim {rec.dimension} ({rec.algorithm})"]
    for k, (f, s) in enumerate(zip(rec.basis, rec.scales), start=1):
        tag = f"f_{{{rec.l},{sym}}}" + (f"^({k})" if rec.dimension > 1 else "")
        lines.append(f"  {tag} = {render(f)}")
        lines.append(f"    scale to leading coefficient 1: {fraction_to_str(s)}")
    for p, h in sorted(rec.hecke.items()):
        lines.append(f"  T_{p} = [" + "; ".join(" ".join(row) for row in h["matrix"]) + "]")
        lines.append(f"    charpoly (t^n .. t^0): {' '.join(h['charpoly'])}")
    if rec.certificate:
        c = rec.certificate
        lines.append(f"  certificate: {c['label'] if c['found'] else 'not found'} after {c['attempts']} candidates")
    return lines


def emit(text: str, path: str | None) -> None:
    if path:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _dump(obj: Any) -> str:
    return json.dumps(obj, indent=1, ensure_ascii=False) + "\n"


def _poly_arg(args) -> HomogeneousPoly:
    if args.entry:
        polys = appendix_a_polys()
        if args.entry not in polys:
            raise UsageError(f"unknown entry {args.entry!r}; known: {', '.join(polys)}")
        return polys[args.entry]
    if args.poly:
        try:
            return parse_poly(args.poly, args.input_frame)
        except ValueError as exc:
            raise UsageError(f"cannot parse polynomial: {exc}") from None
    raise UsageError("give --poly or --entry")


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------


def _records_for(args, with_cert: bool = False) -> list[DatabaseRecord]:
    primes = tuple(args.p or ())
    jobs = [(l, args.variant, args.algorithm, primes, with_cert) for l in args.l]
    return [r for recs in ordered_map(compute_records, jobs) for r in recs]


def cmd_basis(args) -> int:
    try:
        recs = _records_for(args)
    except SpanMismatch as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    if args.format == "json":
        emit(_dump([r.to_json() for r in recs]), args.output)
    else:
        emit("".join(line + "\n" for r in recs for line in render_record_text(r)), args.output)
    return EXIT_OK


def dims_rows(ls: Iterable[int]) -> list[dict[str, Any]]:
    rows = []
    for l in ls:
        closed = dim_formula(l)
        g = dim_via_trace_formula(l)
        # plus is the (-1)^l eigenspace of T_2
        t2 = (-1) ** l * trace_T2_formula(l)
        trace = (g, (g + t2) // 2, (g - t2) // 2)
        series = dims_via_series(l)
        rows.append({"l": l, "closed": list(closed), "trace": list(trace), "series": list(series), "agree": closed == trace == series})
    return rows


def cmd_dims(args) -> int:
    rows = dims_rows(range(args.l_max + 1))
    if args.format == "json":
        emit(_dump(rows), args.output)
    else:
        lines = [f"{'l':>4} {'gamma':>6} {'plus':>6} {'minus':>6} {'trace':>14} {'series':>14} agree"]
        for r in rows:
            g, p, m = r["closed"]
            lines.append(f"{r['l']:>4} {g:>6} {p:>6} {m:>6} {'/'.join(map(str, r['trace'])):>14} {'/'.join(map(str, r['series'])):>14} {'yes' if r['agree'] else 'NO'}")
        emit("\n".join(lines) + "\n", args.output)
    return EXIT_OK if all(r["agree"] for r in rows) else EXIT_FAIL


def cmd_hecke(args) -> int:
    args.algorithm = "main"
    args.p = args.p or [2]
    recs = _records_for(args)
    if args.format == "json":
        emit(_dump([{"l": r.l, "variant": r.variant, "dimension": r.dimension, "hecke": {str(p): h for p, h in r.hecke.items()}} for r in recs]), args.output)
    else:
        lines = []
        for r in recs:
            lines.append(f"l = {r.l}, {r.variant}: dim {r.dimension}")
            for p, h in sorted(r.hecke.items()):
                lines.append(f"  T_{p} = [" + "; ".join(" ".join(row) for row in h["matrix"]) + "]")
                lines.append(f"    charpoly (t^n .. t^0): {' '.join(h['charpoly'])}")
        emit("\n".join(lines) + "\n", args.output)
    return EXIT_OK


def _congruence_job(l: int) -> dict[str, Any]:
    return _certificate_json(l)


def cmd_congruence(args) -> int:
    evens = [l for l in args.l if l >= 4 and l % 2 == 0]
    if not evens:
        raise UsageError("congruence certificates need even degrees >= 4")
    certs = ordered_map(_congruence_job, evens)
    if args.format == "json":
        emit(_dump(certs), args.output)
    else:
        lines = []
        for c in certs:
            if not c["found"]:
                lines.append(f"l = {c['l']}: NOT FOUND after {c['attempts']} candidates")
                continue
            lines.append(f"l = {c['l']}: {c['kind']} {c['label']} = Nm^{c['l'] // 2} mod 2 ({c['attempts']} candidates)")
            head = HomogeneousPoly(c["l"], {tuple(t["exp"]): Fraction(t["coeff"]) for t in c["leading_terms"]}, Frame.X)
            lines.append(f"  leading terms: {render(head)} + ...")
        lines.append(f"certified {sum(c['found'] for c in certs)}/{len(certs)} degrees")
        emit("\n".join(lines) + "\n", args.output)
    return EXIT_OK if all(c["found"] for c in certs) else EXIT_FAIL


def cmd_cm_points(args) -> int:
    if args.disc >= 0:
        raise UsageError("discriminant must be negative")
    pts = cm_points(args.disc)
    form = None
    if args.certificate is not None:
        try:
            form = congruence_certificate(args.certificate).polynomial
        except NotFound as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_FAIL
    elif args.entry or args.poly:
        form = primitive_normalize(_poly_arg(args))[0]
    parities = parity_at_cm(form, args.disc) if form is not None else None
    if args.format == "json":
        out = [{"a": list(p.a), **({"parity": par} if parities else {})} for p, par in zip(pts, parities or [None] * len(pts))]
        emit(_dump({"discriminant": args.disc, "points": out}), args.output)
    else:
        lines = [f"discriminant {args.disc}: {len(pts)} points"]
        for i, p in enumerate(pts):
            lines.append(f"  {p.a}" + (f"  parity {parities[i]}" if parities else ""))
        emit("\n".join(lines) + "\n", args.output)
    return EXIT_OK


def cmd_divide(args) -> int:
    f = _poly_arg(args)
    res = divides_f3(f) if args.by == "f3" else divides_f6minus(f)
    if not res.ok:
        print(f"not divisible: factor {res.failing_factor}", file=sys.stderr)
        return EXIT_FAIL
    q = to_frame(res.quotient, Frame(args.frame)) if args.frame else res.quotient
    if args.format == "json":
        emit(_dump({"divisor": args.by, "quotient": poly_to_json(q)}), args.output)
    else:
        emit(render(q) + "\n", args.output)
    return EXIT_OK


def cmd_verify(args) -> int:
    try:
        items = verify_fixture(args.path)
    except FixtureError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    failed = [i for i in items if not i.ok]
    if args.format == "json":
        emit(_dump({"passed": len(items) - len(failed), "failed": len(failed), "items": [i.__dict__ for i in items]}), args.output)
    else:
        lines = [i.line() for i in items]
        lines.append(f"{len(items) - len(failed)} passed, {len(failed)} failed")
        emit("\n".join(lines) + "\n", args.output)
    return EXIT_FAIL if failed else EXIT_OK


def cmd_export_db(args) -> int:
    try:
        recs = _records_for(args, with_cert=args.certificates)
    except SpanMismatch as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    emit(_dump({"version": __version__, "records": [r.to_json() for r in recs]}), args.output)
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hurwitz-amf", description="Gamma-invariant harmonic polynomials for the Hurwitz order.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, fmt=True):
        if fmt:
            p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("-o", "--output", help="write to this file instead of stdout")

    def degrees(p, default=None):
        p.add_argument("--l", type=parse_range, required=default is None, default=default, help="degree N or range A..B")

    def poly_input(p):
        p.add_argument("--poly", help="polynomial text, e.g. 'x1^3 + x2^3 - 2*x1*x2*x3'")
        p.add_argument("--entry", help="name of a bundled basis entry, e.g. f_7+")
        p.add_argument("--input-frame", choices=("x", "y"), default="x")

    p = sub.add_parser("basis", help="compute bases")
    degrees(p)
    p.add_argument("--variant", choices=VARIANT_CHOICES, default="both-signs")
    p.add_argument("--algorithm", choices=("main", "ecoord", "both"), default="main")
    p.add_argument("--p", type=parse_primes, help="also emit Hecke matrices for these primes")
    common(p)
    p.set_defaults(func=cmd_basis)

    p = sub.add_parser("dims", help="dimension table from three independent formulas")
    p.add_argument("--l-max", type=int, default=12)
    common(p)
    p.set_defaults(func=cmd_dims)

    p = sub.add_parser("hecke", help="Hecke matrices and characteristic polynomials")
    degrees(p)
    p.add_argument("--variant", choices=VARIANT_CHOICES, default="both-signs")
    p.add_argument("--p", type=parse_primes, help="comma-separated primes (default 2)")
    common(p)
    p.set_defaults(func=cmd_hecke)

    p = sub.add_parser("congruence", help="mod 2 congruence certificates")
    degrees(p)
    common(p)
    p.set_defaults(func=cmd_congruence)

    p = sub.add_parser("cm-points", help="CM points of a discriminant, optionally with parities of a form")
    p.add_argument("--disc", type=int, required=True)
    p.add_argument("--certificate", type=int, metavar="L", help="evaluate the degree-L congruence certificate")
    poly_input(p)
    common(p)
    p.set_defaults(func=cmd_cm_points)

    p = sub.add_parser("divide", help="exact division by f_{3,+} or f_{6,-}")
    poly_input(p)
    p.add_argument("--by", choices=("f3", "f6m"), required=True)
    p.add_argument("--frame", choices=("x", "y"), help="frame of the printed quotient (default: input frame)")
    common(p)
    p.set_defaults(func=cmd_divide)

    p = sub.add_parser("verify", help="recompute and compare a fixture file")
    p.add_argument("path", help="fixture path or bundled name (appendix_a, appendix_b)")
    common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("export-db", help="write a JSON database of bases")
    degrees(p)
    p.add_argument("--variant", choices=VARIANT_CHOICES, default="both-signs")
    p.add_argument("--algorithm", choices=("main", "ecoord", "both"), default="main")
    p.add_argument("--p", type=parse_primes, help="include Hecke matrices for these primes")
    p.add_argument("--certificates", action="store_true", help="include congruence certificates for even plus records")
    common(p, fmt=False)
    p.set_defaults(func=cmd_export_db)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
