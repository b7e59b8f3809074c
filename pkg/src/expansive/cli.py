"""Command-line front end.

Exit codes: 0 success (whatever the verdict), 1 input error, 2 internal or
oracle failure.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import re
import sys
from dataclasses import dataclass
from fractions import Fraction

from . import bench as bench_mod
from .bounds import FAMILIES, best_bound_report
from .dpoly import d_polynomial, pair_product_polynomial, resultant_pair_product, term_count
from .enumeration import BoxTooLargeError, EnumerationSpec, enumerate_expansive
from .expansivity import DMatrixSpec, certified_gap, check_d_conditions, check_schur_cohn
from .oracle import OracleError, find_roots_numeric, numeric_expansive, numeric_gap
from .poly import IntPolynomial, PolynomialError

EXIT_OK, EXIT_INPUT, EXIT_INTERNAL = 0, 1, 2


class InputError(Exception):
    pass


@dataclass
class CliConfig:
    subcommand: str
    polynomial: str | None = None
    order: str = "asc"
    format: str = "json"
    strategy: str = "full"
    engine: str = "d-conditions"
    tol: str = "1/1000"
    certify: bool = False
    oracle: bool = False
    seed: int = 0
    out: str | None = None
    # dpoly
    kind: str = "d"
    k: int | None = None
    sign: str = "-"
    n: int | None = None
    # search
    degree: int = 2
    a0: int = 2
    height_cap: int | None = None
    box_cap: int | None = None
    workers: int = 1
    # bench
    height: int = 2**32
    trials: int = 5


def _poly(cfg: CliConfig) -> IntPolynomial:
    if cfg.polynomial is None:
        raise InputError("a polynomial is required")
    try:
        f = IntPolynomial.parse(cfg.polynomial, cfg.order)
    except PolynomialError as exc:
        raise InputError(str(exc)) from exc
    if f.is_zero():
        raise InputError("zero polynomial")
    return f


def _rational(text: str) -> Fraction:
    try:
        q = Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"not a rational number: {text!r}") from exc
    return q


def _table(rows: list[tuple]) -> str:
    rows = [tuple(str(c) for c in r) for r in rows]
    widths = [max(len(r[i]) for r in rows) for i in range(len(rows[0]))]
    return "\n".join("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in rows) + "\n"


def _kv_csv(d: dict) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(("key", "value"))
    for key, v in d.items():
        w.writerow((key, json.dumps(v) if isinstance(v, (dict, list)) else v))
    return buf.getvalue()


def cmd_check(cfg: CliConfig) -> tuple[dict, str]:
    f = _poly(cfg)
    if cfg.engine == "schur-cohn":
        v = check_schur_cohn(f)
    else:
        v = check_d_conditions(f, cfg.strategy)
    payload = {"polynomial": list(f.coeffs), "verdict": v.to_dict()}
    text = _table([("expansive", v.expansive), ("method", v.method), ("witness", v.witness),
                   ("conditions_checked", v.conditions_checked)])
    return payload, text


def cmd_gap(cfg: CliConfig) -> tuple[dict, str]:
    f = _poly(cfg)
    tol = _rational(cfg.tol)
    if tol <= 0:
        raise InputError("tolerance must be positive")
    try:
        report = best_bound_report(f)
    except PolynomialError as exc:
        raise InputError(str(exc)) from exc
    payload = {"polynomial": list(f.coeffs), "report": report.to_dict()}
    rows = [("family", "real", "complex")]
    for fam in FAMILIES:
        p = report.bounds[fam]
        rows.append((fam, p.real, "-" if p.complex is None else p.complex))
    rows.append(("best", report.best_real, report.best_complex or "-"))
    rows.append(("implied gap >=", report.implied_gap_real,
                 "-" if report.implied_gap_complex is None else report.implied_gap_complex))
    if cfg.certify:
        s_low = certified_gap(f, tol)
        payload["certified"] = {"tol": str(tol), "s_low": str(s_low), "gap_low": str(s_low - 1)}
        rows.append(("certified s_low", s_low, f"~{float(s_low):.9g}"))
    if cfg.oracle:
        g = numeric_gap(f)
        payload["numeric_gap"] = g
        rows.append(("numeric gap", f"{g:.12g}", ""))
    return payload, _table(rows)


def cmd_dpoly(cfg: CliConfig) -> tuple[dict, str]:
    if cfg.kind == "terms":
        if cfg.n is None:
            raise InputError("--n is required for --kind terms")
        try:
            r = term_count(cfg.n)
        except ValueError as exc:
            raise InputError(str(exc)) from exc
        payload = {"kind": "terms", "coeffs": [], "n": r.n, "raw_terms": r.raw_terms,
                   "collected_terms": r.collected_terms, "matching_convention": r.matching_convention}
        return payload, _table([(k, v) for k, v in payload.items() if k not in ("kind", "coeffs")])
    f = _poly(cfg)
    payload = {"kind": cfg.kind}
    try:
        if cfg.kind == "d":
            k = f.n if cfg.k is None else cfg.k
            sp = d_polynomial(f, DMatrixSpec(k, cfg.sign))
            payload.update(k=k, sign=cfg.sign)
        elif cfg.kind == "pair":
            sp = pair_product_polynomial(f)
        elif cfg.kind == "resultant":
            sp = resultant_pair_product(f)
        else:
            raise InputError(f"unknown kind {cfg.kind!r}")
    except PolynomialError as exc:
        raise InputError(str(exc)) from exc
    payload.update(coeffs=sp.to_list(), degree_bound=sp.degree_bound)
    return payload, json.dumps(sp.to_list()) + "\n"


def cmd_roots(cfg: CliConfig) -> tuple[dict, str]:
    f = _poly(cfg)
    if f.degree < 1:
        raise InputError("roots need degree >= 1")
    nr = find_roots_numeric(f)
    verdict = numeric_expansive(f)
    payload = {
        "polynomial": list(f.coeffs),
        "roots": [[z.real, z.imag] for z in nr.roots],
        "radii": list(nr.radii),
        "max_residual": nr.max_residual,
        "numeric_expansive": verdict,
    }
    rows = [("re", "im", "|z|", "radius")]
    rows += [(f"{z.real:.15g}", f"{z.imag:.15g}", f"{abs(z):.15g}", f"{r:.3g}") for z, r in zip(nr.roots, nr.radii)]
    return payload, _table(rows)


def cmd_search(cfg: CliConfig) -> tuple[dict, str]:
    try:
        spec = EnumerationSpec(cfg.degree, cfg.a0, cfg.height_cap,
                               **({} if cfg.box_cap is None else {"box_cap": cfg.box_cap}))
        res = enumerate_expansive(spec, workers=cfg.workers)
    except (ValueError, BoxTooLargeError) as exc:
        raise InputError(str(exc)) from exc
    payload = {"degree": cfg.degree, "a0": cfg.a0, "total_checked": res.total_checked,
               "expansive": res.expansive, "polynomials": [list(p) for p in res.polynomials]}
    rows = [tuple(f"a_{i}" for i in range(cfg.degree + 1))] + [tuple(p) for p in res.polynomials]
    return payload, _table(rows) if len(rows) > 1 else "(none)\n"


def _search_csv(payload: dict) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow([f"a_{i}" for i in range(payload["degree"] + 1)])
    w.writerows(payload["polynomials"])
    return buf.getvalue()


def cmd_bench(cfg: CliConfig) -> tuple[dict, str]:
    if cfg.degree < 2:
        raise InputError("bench needs --degree >= 2")
    prof = bench_mod.bench_growth(bench_mod.BenchConfig(cfg.degree, cfg.height, cfg.trials, cfg.seed))
    cfg._profile = prof  # reused for CSV output
    d = prof.to_dict()
    rows = [("step", "median schur bits")] + [(i, b) for i, b in enumerate(d["schur_median_bits"])]
    text = _table(rows) + f"max Bareiss entry bits over Hadamard bits: {d['max_bareiss_excess_bits']}\n"
    text += f"schur {d['schur_seconds']:.4f}s  bareiss {d['bareiss_seconds']:.4f}s\n"
    return d, text


COMMANDS = {"check": cmd_check, "gap": cmd_gap, "dpoly": cmd_dpoly, "roots": cmd_roots,
            "search": cmd_search, "bench": cmd_bench}


def _height(text: str) -> int:
    m = re.fullmatch(r"\s*(\d+)\s*\^\s*(\d+)\s*", text)
    if m:
        return int(m.group(1)) ** int(m.group(2))
    return int(text)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--order", choices=("asc", "desc"), default="asc",
                        help="coefficient order of the input (default: a_0 first)")
    common.add_argument("--format", choices=("json", "table", "csv"), default="json")
    common.add_argument("--out", help="write output to this path instead of stdout")

    p = argparse.ArgumentParser(prog="expansive", description="Exact expansivity toolkit for integer polynomials")
    sub = p.add_subparsers(dest="subcommand", required=True)

    c = sub.add_parser("check", parents=[common], help="decide expansivity")
    c.add_argument("polynomial")
    c.add_argument("--strategy", choices=("full", "reduced", "alternate"), default="full")
    c.add_argument("--engine", choices=("d-conditions", "schur-cohn"), default="d-conditions")

    g = sub.add_parser("gap", parents=[common], help="expansivity-gap bounds")
    g.add_argument("polynomial")
    g.add_argument("--certify", action="store_true", help="also bisect for a certified radius")
    g.add_argument("--tol", default="1/1000")
    g.add_argument("--oracle", action="store_true", help="also print the numeric gap")

    d = sub.add_parser("dpoly", parents=[common], help="D-polynomials and pair products")
    d.add_argument("polynomial", nargs="?")
    d.add_argument("--kind", choices=("d", "pair", "resultant", "terms"), default="d")
    d.add_argument("--k", type=int)
    d.add_argument("--sign", choices=("+", "-"), default="-")
    d.add_argument("--n", type=int, help="degree for --kind terms")

    r = sub.add_parser("roots", parents=[common], help="numeric roots (oracle)")
    r.add_argument("polynomial")

    s = sub.add_parser("search", parents=[common], help="enumerate expansive polynomials")
    s.add_argument("--degree", type=int, required=True)
    s.add_argument("--a0", type=int, required=True)
    s.add_argument("--height-cap", type=int)
    s.add_argument("--box-cap", type=int)
    s.add_argument("--workers", type=int, default=1)

    b = sub.add_parser("bench", parents=[common], help="coefficient-growth benchmark")
    b.add_argument("--degree", type=int, default=12)
    b.add_argument("--height", type=_height, default=2**32, help="coefficient bound, e.g. 2^32")
    b.add_argument("--trials", type=int, default=5)
    b.add_argument("--seed", type=int, default=0)
    return p


_NEG_POLY = re.compile(r"^-\d[\d,\s+-]*$")


def _protect_negative(argv: list[str]) -> list[str]:
    # "-3,0,1" would otherwise be taken for an option
    return [" " + a if _NEG_POLY.match(a) else a for a in argv]


def render(cfg: CliConfig, payload: dict, text: str) -> str:
    if cfg.format == "json":
        return json.dumps(payload, indent=2) + "\n"
    if cfg.format == "table":
        return text
    if cfg.subcommand == "search":
        return _search_csv(payload)
    if cfg.subcommand == "bench":
        return cfg._profile.to_csv()
    return _kv_csv(payload)


def run(argv: list[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    argv = sys.argv[1:] if argv is None else list(argv)
    parser = build_parser()
    try:
        args = parser.parse_args(_protect_negative(argv))
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INPUT
    cfg = CliConfig(**{k: v for k, v in vars(args).items() if k in CliConfig.__dataclass_fields__})
    try:
        payload, text = COMMANDS[cfg.subcommand](cfg)
        out = render(cfg, payload, text)
    except InputError as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_INPUT
    except OracleError as exc:
        print(f"oracle failure: {exc}", file=stderr)
        return EXIT_INTERNAL
    except Exception as exc:  # noqa: BLE001 - report, don't traceback
        print(f"internal error: {type(exc).__name__}: {exc}", file=stderr)
        return EXIT_INTERNAL
    if cfg.out:
        with open(cfg.out, "w") as fh:
            fh.write(out)
    else:
        stdout.write(out)
    return EXIT_OK


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
