"""Command-line entry point: ``dyck-area {table,verify,paths,limit}``.

Exit status is 0 on success, 1 for bad flags and 2 when ``verify`` finds a
failing identity.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass
from typing import Callable, Sequence

from . import genfun
from .genfun import BRACKET
from .pathenum import brute_force_gf, dp_gf, iter_paths, path_stats
from .polyring import MPoly, TSeries, format_poly, parse_poly
from .verify import all_passed, run_checks

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VERIFY_FAILED = 2

COMMANDS = ("table", "verify", "paths", "limit")
FORMATS = ("json", "csv", "text")


def _rational(h: int, N: int) -> TSeries:
    if h == 0:
        raise UsageError("method 'rational' needs --height >= 1")
    return genfun.d_rational(h).expand(N)


METHODS: dict[str, Callable[[int, int], TSeries]] = {
    "brute": brute_force_gf,
    "dp": dp_gf,
    "cf": genfun.cf_gf,
    "rational": _rational,
    "theorem": genfun.d_theorem,
    "corollary": genfun.d_corollary,
}


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    command: str
    h: int | None = None
    order: int = 0
    method: str = "theorem"
    format: str = "text"
    out: str | None = None


# --- table serialization -------------------------------------------------

def table_rows(series: TSeries) -> list[tuple[int, int, int, int, int]]:
    """(t, a, b, q, coeff) rows sorted by exponents."""
    rows = []
    for n, c in enumerate(series.coeffs):
        for (ea, eb, eq), v in c.terms.items():
            rows.append((n, ea, eb, eq, v))
    rows.sort()
    return rows


def render_table(series: TSeries, fmt: str, *, height: int | None, method: str) -> str:
    if fmt == "json":
        doc = {
            "height": height,
            "order": series.order,
            "method": method,
            "terms": [
                {"t": n, "a": ea, "b": eb, "q": eq, "coeff": str(v)}
                for n, ea, eb, eq, v in table_rows(series)
            ],
        }
        return json.dumps(doc, indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["t", "a", "b", "q", "coeff"])
        for n, ea, eb, eq, v in table_rows(series):
            w.writerow([n, ea, eb, eq, str(v)])
        return buf.getvalue()
    lines = [f"t^{n}: {format_poly(c)}" for n, c in enumerate(series.coeffs)]
    return "\n".join(lines) + "\n"


def parse_table(text: str, fmt: str, order: int | None = None) -> TSeries:
    """Read back anything :func:`render_table` wrote.

    CSV carries no truncation order; pass ``order`` or trailing zero
    coefficients are lost.
    """
    if fmt == "text":
        coeffs = []
        for line in text.splitlines():
            if not line.strip():
                continue
            head, _, body = line.partition(":")
            n = int(head.strip().removeprefix("t^"))
            if n != len(coeffs):
                raise ValueError(f"unexpected row t^{n}")
            coeffs.append(parse_poly(body))
        return TSeries(coeffs, len(coeffs) - 1)
    if fmt == "json":
        doc = json.loads(text)
        order = doc["order"] if order is None else order
        rows = [(r["t"], r["a"], r["b"], r["q"], int(r["coeff"])) for r in doc["terms"]]
    elif fmt == "csv":
        reader = csv.DictReader(io.StringIO(text))
        rows = [(int(r["t"]), int(r["a"]), int(r["b"]), int(r["q"]), int(r["coeff"]))
                for r in reader]
        if order is None:
            order = max((r[0] for r in rows), default=0)
    else:
        raise ValueError(f"unknown format {fmt!r}")
    terms: list[dict] = [{} for _ in range(order + 1)]
    for n, ea, eb, eq, v in rows:
        terms[n][(ea, eb, eq)] = v
    return TSeries([MPoly(t) for t in terms], order)


# --- commands ------------------------------------------------------------

def cmd_table(cfg: RunConfig) -> tuple[int, str]:
    series = METHODS[cfg.method](cfg.h, cfg.order)
    return EXIT_OK, render_table(series, cfg.format, height=cfg.h, method=cfg.method)


def cmd_limit(cfg: RunConfig) -> tuple[int, str]:
    series = genfun.d_infinite(cfg.order)
    return EXIT_OK, render_table(series, cfg.format, height=None, method="limit")


def cmd_paths(cfg: RunConfig) -> tuple[int, str]:
    rows = []
    for p in iter_paths(cfg.h, cfg.order):
        rows.append((p.steps, path_stats(p, cfg.h).as_tuple()))
    if cfg.format == "json":
        keys = ("n", "m", "u", "v", "tri_area")
        doc = {"height": cfg.h, "order": cfg.order,
               "paths": [{"steps": s, **dict(zip(keys, st))} for s, st in rows]}
        return EXIT_OK, json.dumps(doc, indent=2) + "\n"
    if cfg.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["steps", "n", "m", "u", "v", "tri_area"])
        for s, st in rows:
            w.writerow([s, *st])
        return EXIT_OK, buf.getvalue()
    lines = [f"{s or '(empty)'} {st}" for s, st in rows]
    return EXIT_OK, "".join(line + "\n" for line in lines)


def cmd_verify(cfg: RunConfig, bracket=BRACKET) -> tuple[int, str]:
    results = run_checks(cfg.h, cfg.order, bracket=bracket)
    ok = all_passed(results)
    lines = [r.line() for r in results]
    lines.append(f"{'verified' if ok else 'FAILED'}: height <= {cfg.h}, order {cfg.order}")
    return (EXIT_OK if ok else EXIT_VERIFY_FAILED), "\n".join(lines) + "\n"


HANDLERS = {"table": cmd_table, "verify": cmd_verify, "paths": cmd_paths, "limit": cmd_limit}


# --- argument parsing ----------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _nonneg(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if v < 0:
        raise argparse.ArgumentTypeError(f"must be non-negative: {v}")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="dyck-area",
                     description="Area-weighted Dyck paths of bounded height.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p, *, height=True, method=False):
        if height:
            p.add_argument("--height", type=_nonneg, required=True, help="maximum height h")
        p.add_argument("--order", type=_nonneg, required=True, help="t-truncation order N")
        if method:
            p.add_argument("--method", choices=list(METHODS), default="theorem")
        p.add_argument("--format", choices=FORMATS, default="text")
        p.add_argument("--out", help="write output to this file instead of stdout")

    common(sub.add_parser("table", help="coefficients of D_h by one method"), method=True)
    common(sub.add_parser("verify", help="check every method against every other"))
    common(sub.add_parser("paths", help="list paths of half-length ORDER with statistics"))
    common(sub.add_parser("limit", help="the h -> infinity generating function at a=b=1"),
           height=False)
    return parser


def parse_config(argv: Sequence[str] | None = None) -> RunConfig:
    ns = build_parser().parse_args(argv)
    return RunConfig(
        command=ns.command,
        h=getattr(ns, "height", None),
        order=ns.order,
        method=getattr(ns, "method", "theorem"),
        format=ns.format,
        out=ns.out,
    )


def main(argv: Sequence[str] | None = None) -> int:
    try:
        cfg = parse_config(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        status, text = HANDLERS[cfg.command](cfg)
    except UsageError as exc:
        print(f"dyck-area: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if cfg.out:
        with open(cfg.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
