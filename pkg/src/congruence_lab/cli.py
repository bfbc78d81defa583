"""Command-line front end.

Subcommands
-----------
    triangle   write one number triangle in the cache file format
    sum        evaluate one filtered sum and print its value and p-adic order
    verify     sweep a parameter grid for one theorem and write a report
    identity   run identity/lemma check suites

Exit codes: 0 success, 1 violations or failed checks, 2 usage or parameter
error, 3 capacity (triangle row limit) error.

Range flags accept "a..b" (inclusive), comma lists "x,y,z", or a mix of both;
residues also accept "all".  The --m axis of the Stirling sweeps additionally
accepts an n-coupled upper end, e.g. "1..n".  SC2 polynomials are given as
comma-separated coefficient lists, low to high: "--f 0,0,1" is x**2.

The environment variable CONGRUENCE_LAB_CACHE names a default triangle cache
directory (overridden by --cache-dir); without either, tables live only in
memory.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from datetime import datetime, timezone
from pathlib import Path
from typing import Any, Iterable, Sequence

from . import __version__, identities, triangles, verifier
from .bounds import REQUIRED_PARAMS, TheoremId
from .errors import CapacityError, CongruenceLabError, ParameterError
from .exactmath import IntPolynomial, ord_p
from .filtered_sums import (
    ResidueClass,
    Variant,
    binom_power_sum,
    eulerian_power_sum,
    eulerian_wan_sum,
    fleck_sum,
    stirling_poly_sum,
    stirling_product_sum,
)
from .triangles import Family
from .verifier import GridSpec, Verdict

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2
EXIT_CAPACITY = 3

CSV_COLUMNS = (
    "theorem",
    "n",
    "p",
    "alpha",
    "beta",
    "l",
    "m",
    "a",
    "d",
    "r",
    "f",
    "sum",
    "ord",
    "bound",
    "verdict",
    "margin",
    "sc2_l",
    "sc2_lhs",
    "sc2_rhs",
    "sc2_satisfied",
)


# ---------------------------------------------------------------------------
# Flag parsing helpers
# ---------------------------------------------------------------------------


def parse_int_set(text: str) -> tuple[int, ...]:
    """Parse "1..5", "2,3,7", "1..4,10" into a sorted tuple of ints."""
    values: set[int] = set()
    for token in text.split(","):
        token = token.strip()
        if not token:
            raise ParameterError(f"empty token in range {text!r}")
        if ".." in token:
            lo_text, hi_text = token.split("..", 1)
            try:
                lo, hi = int(lo_text), int(hi_text)
            except ValueError as exc:
                raise ParameterError(f"bad range token {token!r}") from exc
            if hi < lo:
                raise ParameterError(f"descending range {token!r}")
            values.update(range(lo, hi + 1))
        else:
            try:
                values.add(int(token))
            except ValueError as exc:
                raise ParameterError(f"bad integer {token!r}") from exc
    if not values:
        raise ParameterError(f"empty range {text!r}")
    return tuple(sorted(values))


def parse_residues(text: str) -> str | tuple[int, ...]:
    return "all" if text.strip().lower() == "all" else parse_int_set(text)


def parse_m_axis(text: str) -> tuple[str, Any]:
    """Either ("static", values) or ("upto_n", lo) for n-coupled specs like "1..n"."""
    token = text.strip()
    if token.lower().endswith("..n"):
        try:
            lo = int(token[:-3])
        except ValueError as exc:
            raise ParameterError(f"bad m range {text!r}") from exc
        return ("upto_n", lo)
    return ("static", parse_int_set(text))


def _now_stamp() -> str:
    return datetime.now(timezone.utc).isoformat(timespec="seconds")


def _write_text(path: str | None, text: str) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        Path(path).parent.mkdir(parents=True, exist_ok=True)
        Path(path).write_text(text, encoding="utf-8")


def _json_text(obj: Any) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


# ---------------------------------------------------------------------------
# triangle
# ---------------------------------------------------------------------------


def _cache_dir(args: argparse.Namespace) -> Path | None:
    if getattr(args, "cache_dir", None):
        return Path(args.cache_dir)
    env = os.environ.get("CONGRUENCE_LAB_CACHE")
    return Path(env) if env else None


def cmd_triangle(args: argparse.Namespace) -> int:
    family = Family(args.family)
    cache_dir = _cache_dir(args)
    if cache_dir is not None:
        path = cache_dir / triangles.cache_file_name(family, args.n_max)
        tri = triangles.load_or_build(family, args.n_max, path)
    else:
        tri = triangles.build(family, args.n_max)
    if args.out:
        triangles.write_cache(tri, args.out)
    else:
        header = {
            "format_version": triangles.FORMAT_VERSION,
            "family": family.value,
            "max_n": tri.max_n,
        }
        sys.stdout.write(json.dumps(header, sort_keys=True) + "\n")
        for row in tri.rows:
            sys.stdout.write(" ".join(str(v) for v in row) + "\n")
    return EXIT_OK


# ---------------------------------------------------------------------------
# sum
# ---------------------------------------------------------------------------


def cmd_sum(args: argparse.Namespace) -> int:
    kind = args.kind
    p: int | None = args.p
    if kind == "fleck":
        variant = Variant(args.variant)
        modulus = args.p ** (args.beta if variant is Variant.FLOOR else args.alpha)
        cls = ResidueClass(modulus, args.r)
        value = fleck_sum(args.n, args.p, args.alpha, cls, args.l, variant, args.beta)
    elif kind == "bpow":
        cls = ResidueClass(args.p**args.alpha, args.r)
        value = binom_power_sum(args.n, args.p, args.alpha, cls, args.a)
    elif kind == "ewan":
        cls = ResidueClass(args.p**args.alpha, args.r)
        value = eulerian_wan_sum(args.n, args.p, args.alpha, cls, args.l)
    elif kind == "epow":
        cls = ResidueClass(args.p**args.alpha, args.r)
        value = eulerian_power_sum(args.n, args.p, args.alpha, cls, args.a)
    elif kind == "cdr":
        cls = ResidueClass(args.d, args.r)
        value = stirling_product_sum(args.n, args.m, cls, args.a)
    elif kind == "spoly":
        if args.f is None:
            raise ParameterError("spoly needs --f")
        cls = ResidueClass(args.d, args.r)
        value = stirling_poly_sum(
            args.n, IntPolynomial.from_coeff_string(args.f), cls, args.a
        )
    else:  # pragma: no cover - argparse restricts choices
        raise ParameterError(f"unknown sum kind {kind!r}")
    if p is not None:
        print(f"{value} / ord_{p} = {ord_p(value, p)}")
    else:
        print(value)
    return EXIT_OK


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------


def _build_grids(theorem: TheoremId, args: argparse.Namespace) -> list[GridSpec]:
    needed = REQUIRED_PARAMS[theorem]
    ns = parse_int_set(args.n)
    primes = parse_int_set(args.p)
    residues = parse_residues(args.r)
    alphas = parse_int_set(args.alpha) if "alpha" in needed else ()
    ls = parse_int_set(args.l) if "l" in needed else ()
    a_values = parse_int_set(args.a) if "a" in needed else ()
    polys: tuple[IntPolynomial, ...] = ()
    if theorem is TheoremId.SC2:
        if not args.f:
            raise ParameterError("sc2 needs at least one --f polynomial")
        polys = tuple(IntPolynomial.from_coeff_string(t) for t in args.f)

    common = dict(
        theorem=theorem,
        primes=primes,
        alphas=alphas,
        ls=ls,
        a_values=a_values,
        residues=residues,
        polys=polys,
    )

    if "beta" in needed:
        if args.beta is None:
            raise ParameterError(f"{theorem.value} needs --beta")
        return [GridSpec(ns=ns, betas=parse_int_set(args.beta), **common)]

    if "m" in needed:
        mode, spec = parse_m_axis(args.m)
        if mode == "static":
            return [GridSpec(ns=ns, ms=spec, **common)]
        lo = spec
        grids = []
        for n in ns:
            if n >= lo:
                grids.append(GridSpec(ns=(n,), ms=tuple(range(lo, n + 1)), **common))
        if not grids:
            raise ParameterError(f"--m {args.m!r} matches no n in {args.n!r}")
        return grids

    return [GridSpec(ns=ns, **common)]


def _grid_echo(theorem: TheoremId, args: argparse.Namespace) -> dict[str, Any]:
    needed = REQUIRED_PARAMS[theorem]
    echo: dict[str, Any] = {"n": args.n, "p": args.p, "r": args.r}
    for name, flag in (("alpha", "alpha"), ("beta", "beta"), ("l", "l"), ("m", "m"), ("a", "a")):
        if name in needed:
            echo[name] = getattr(args, flag)
    if theorem is TheoremId.SC2:
        echo["f"] = list(args.f or ())
    return echo


def render_json_report(
    run: dict[str, Any], records: Iterable[verifier.ClaimRecord], summary: verifier.GridSummary
) -> str:
    payload = {
        "run": run,
        "records": [rec.to_json_dict() for rec in records],
        "summary": summary.to_json_dict(),
    }
    return _json_text(payload)


def render_csv_report(records: Iterable[verifier.ClaimRecord]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=CSV_COLUMNS, lineterminator="\n")
    writer.writeheader()
    for rec in records:
        data = rec.to_json_dict()
        row = {key: "" for key in CSV_COLUMNS}
        row["theorem"] = data["theorem"]
        for key, value in data["params"].items():
            row[key] = value
        for key in ("sum", "ord", "bound", "verdict", "margin"):
            if data[key] is not None:
                row[key] = data[key]
        if "sc2" in data:
            row["sc2_l"] = data["sc2"]["l"]
            row["sc2_lhs"] = "" if data["sc2"]["lhs"] is None else data["sc2"]["lhs"]
            row["sc2_rhs"] = data["sc2"]["rhs"]
            row["sc2_satisfied"] = data["sc2"]["satisfied"]
        writer.writerow(row)
    return buf.getvalue()


def cmd_verify(args: argparse.Namespace) -> int:
    theorem = TheoremId(args.theorem)
    grids = _build_grids(theorem, args)

    cache_dir = _cache_dir(args)
    if cache_dir is not None:
        for family, top in verifier.required_tables(grids).items():
            path = cache_dir / triangles.cache_file_name(family, top)
            triangles.install_shared(triangles.load_or_build(family, top, path))

    result = verifier.run_grids(
        grids,
        workers=args.workers,
        probe_inapplicable=args.probe_inapplicable,
        fail_fast=args.fail_fast,
    )

    # worker count is execution detail, not run identity: reports must be
    # byte-identical for any worker count
    run: dict[str, Any] = {
        "command": "verify",
        "theorem": theorem.value,
        "grid": _grid_echo(theorem, args),
        "tool_version": __version__,
    }
    if not args.no_timestamp:
        run["timestamp"] = _now_stamp()

    if args.format == "json":
        text = render_json_report(run, result.records, result.summary)
    else:
        text = render_csv_report(result.records)
    _write_text(args.out, text)

    if args.out:
        counts = result.summary.verdicts
        brief = ", ".join(f"{name}={counts[name]}" for name in sorted(counts) if counts[name])
        print(f"{theorem.value}: {result.summary.total} claims ({brief or 'none'})")
    return EXIT_VIOLATION if result.violations else EXIT_OK


# ---------------------------------------------------------------------------
# identity
# ---------------------------------------------------------------------------


def cmd_identity(args: argparse.Namespace) -> int:
    ids = identities.IDENTITY_IDS if args.identity == "all" else (args.identity.upper(),)
    kwargs: dict[str, Any] = {}
    if args.n_max is not None:
        kwargs["n_max"] = args.n_max
    elif args.n is not None:
        kwargs["n_max"] = max(parse_int_set(args.n))
    if args.l_max is not None:
        kwargs["l_max"] = args.l_max
    if args.p is not None:
        kwargs["primes"] = parse_int_set(args.p)
    if args.alpha is not None:
        kwargs["alphas"] = parse_int_set(args.alpha)
    kwargs["count"] = args.count
    kwargs["seed"] = args.seed
    kwargs["scl3e_limit"] = args.scl3e_limit

    aggregates = []
    failed_total = 0
    for identity_id in ids:
        total = passed = 0
        first_failure: dict[str, Any] | None = None
        for result in identities.suite(identity_id, **kwargs):
            total += 1
            if result.passed:
                passed += 1
            elif first_failure is None:
                first_failure = {"params": result.params, "witness": result.witness}
        failed = total - passed
        failed_total += failed
        aggregates.append(
            {
                "identity": identity_id,
                "total": total,
                "passed": passed,
                "failed": failed,
                "first_failure": first_failure,
            }
        )
        status = "all passed" if failed == 0 else f"{failed} FAILED"
        print(f"{identity_id}: {total} checks, {status}")

    if args.out:
        run: dict[str, Any] = {
            "command": "identity",
            "ids": list(ids),
            "tool_version": __version__,
        }
        if not args.no_timestamp:
            run["timestamp"] = _now_stamp()
        if args.format == "json":
            text = _json_text({"run": run, "checks": aggregates})
        else:
            buf = io.StringIO()
            writer = csv.DictWriter(
                buf,
                fieldnames=("identity", "total", "passed", "failed", "first_failure"),
                lineterminator="\n",
            )
            writer.writeheader()
            for agg in aggregates:
                row = dict(agg)
                row["first_failure"] = (
                    "" if row["first_failure"] is None else json.dumps(row["first_failure"], sort_keys=True)
                )
                writer.writerow(row)
            text = buf.getvalue()
        _write_text(args.out, text)
    return EXIT_VIOLATION if failed_total else EXIT_OK


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="congruence-lab",
        description="Exact verification of congruence lower bounds for binomial, "
        "Stirling and Eulerian filtered sums.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    tri = sub.add_parser("triangle", help="write a number triangle in the cache format")
    tri.add_argument("family", choices=[f.value for f in Family])
    tri.add_argument("--n-max", type=int, required=True)
    tri.add_argument("--out", default=None, help="output file (default: stdout)")
    tri.add_argument("--cache-dir", default=None)
    tri.set_defaults(func=cmd_triangle)

    sm = sub.add_parser("sum", help="evaluate one filtered sum")
    sm.add_argument("kind", choices=["fleck", "bpow", "ewan", "epow", "cdr", "spoly"])
    sm.add_argument("--n", type=int, required=True)
    sm.add_argument("--p", type=int, default=None, help="prime (required except cdr/spoly)")
    sm.add_argument("--alpha", type=int, default=1)
    sm.add_argument("--beta", type=int, default=None)
    sm.add_argument("--r", type=int, default=0)
    sm.add_argument("--l", type=int, default=0)
    sm.add_argument("--a", type=int, default=1)
    sm.add_argument("--m", type=int, default=1)
    sm.add_argument("--d", type=int, default=1, help="class modulus for cdr/spoly")
    sm.add_argument("--f", default=None, help="polynomial coefficients, low to high")
    sm.add_argument("--variant", choices=["exact", "floor"], default="exact")
    sm.set_defaults(func=_cmd_sum_checked)

    ver = sub.add_parser("verify", help="sweep a parameter grid for one theorem")
    ver.add_argument("theorem", choices=[t.value for t in TheoremId])
    ver.add_argument("--n", required=True, help='n range, e.g. "1..80"')
    ver.add_argument("--p", required=True, help='prime set, e.g. "2,3,5"')
    ver.add_argument("--alpha", default="1")
    ver.add_argument("--beta", default=None)
    ver.add_argument("--l", default="0")
    ver.add_argument("--m", default="1..n", help='m range; "1..n" couples the top to n')
    ver.add_argument("--a", default="1")
    ver.add_argument("--r", default="all", help='residues: "all" or a range/list')
    ver.add_argument("--f", action="append", default=None, help="SC2 polynomial (repeatable)")
    ver.add_argument("--out", default=None, help="report file (default: stdout)")
    ver.add_argument("--format", choices=["json", "csv"], default="json")
    ver.add_argument("--workers", type=int, default=1)
    ver.add_argument("--no-timestamp", action="store_true")
    ver.add_argument("--probe-inapplicable", action="store_true",
                     help="compute sums and orders even for NOT-APPLICABLE tuples")
    ver.add_argument("--fail-fast", action="store_true")
    ver.add_argument("--cache-dir", default=None)
    ver.set_defaults(func=cmd_verify)

    ident = sub.add_parser("identity", help="run identity check suites")
    ident.add_argument("identity", type=str.lower,
                       choices=[i.lower() for i in identities.IDENTITY_IDS] + ["all"])
    ident.add_argument("--n", default=None, help='n range; only the top matters, e.g. "1..12"')
    ident.add_argument("--n-max", type=int, default=None)
    ident.add_argument("--l-max", type=int, default=None)
    ident.add_argument("--p", default=None)
    ident.add_argument("--alpha", default=None)
    ident.add_argument("--count", type=int, default=200, help="random tuples for L31")
    ident.add_argument("--seed", type=int, default=20210)
    ident.add_argument("--scl3e-limit", type=int, default=100)
    ident.add_argument("--out", default=None)
    ident.add_argument("--format", choices=["json", "csv"], default="json")
    ident.add_argument("--no-timestamp", action="store_true")
    ident.set_defaults(func=cmd_identity)

    return parser


def _cmd_sum_checked(args: argparse.Namespace) -> int:
    if args.kind in ("fleck", "bpow", "ewan", "epow") and args.p is None:
        raise ParameterError(f"sum {args.kind} needs --p")
    if args.kind == "fleck" and args.variant == "floor" and args.beta is None:
        raise ParameterError("floor variant needs --beta")
    return cmd_sum(args)


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        return code if isinstance(code, int) else EXIT_USAGE
    try:
        return args.func(args)
    except ParameterError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CapacityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except CongruenceLabError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
