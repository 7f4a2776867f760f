"""Cross-method identity checks behind ``dyck-area verify``."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from . import genfun
from .genfun import BRACKET, BracketTerm, QPolynomial
from .pathenum import brute_force_gf, dp_gf
from .polyring import B, MPoly, TSeries, format_poly


@dataclass
class CheckResult:
    name: str
    passed: bool = True
    cases: int = 0
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        tail = f" -- {self.detail}" if self.detail else ""
        return f"[{status}] {self.name} ({self.cases} cases){tail}"


def _coeff_seq(x) -> Sequence[MPoly]:
    if isinstance(x, (TSeries, QPolynomial)):
        return x.coeffs
    if isinstance(x, MPoly):
        return (x,)
    return tuple(x)


def first_difference(left, right) -> str | None:
    """Locate the first coefficient where two series/polynomials disagree.

    Returns None when they are equal.  The location names the power of t and
    the monomial in a, b, q, with both coefficients.
    """
    if isinstance(left, TSeries) and isinstance(right, TSeries) and left.order != right.order:
        return f"truncation orders differ: {left.order} vs {right.order}"
    ls, rs = _coeff_seq(left), _coeff_seq(right)
    for n in range(max(len(ls), len(rs))):
        x = ls[n] if n < len(ls) else MPoly()
        y = rs[n] if n < len(rs) else MPoly()
        if x == y:
            continue
        for exp in sorted(set(x.terms) | set(y.terms)):
            cx, cy = x.terms.get(exp, 0), y.terms.get(exp, 0)
            if cx != cy:
                ea, eb, eq = exp
                return (f"t^{n} coefficient of a^{ea}*b^{eb}*q^{eq}: {cx} != {cy} "
                        f"({format_poly(x)} vs {format_poly(y)})")
    return None


class _Checker:
    def __init__(self) -> None:
        self.results: list[CheckResult] = []

    def check(self, name: str, cases: Iterable[tuple[str, Callable[[], tuple]]]) -> CheckResult:
        res = CheckResult(name)
        for label, fn in cases:
            res.cases += 1
            left, right = fn()
            diff = first_difference(left, right)
            if diff is not None:
                res.passed = False
                res.detail = f"{label}: {diff}"
                break
        self.results.append(res)
        return res


def _nonnegative(s: TSeries) -> tuple:
    # compare against the series with negative coefficients removed
    clipped = s.map(lambda c: MPoly({e: v for e, v in c.terms.items() if v > 0}))
    return s, clipped


def run_checks(max_h: int, order: int,
               bracket: Sequence[BracketTerm] = BRACKET) -> list[CheckResult]:
    """Run every identity for heights 0..max_h at t-order ``order``.

    ``bracket`` replaces the q-binomial bracket of the closed Q_h form; it
    exists so the suite can be shown to catch a corrupted formula.
    """
    H, N = max_h, order
    c = _Checker()

    brute = {h: brute_force_gf(h, N) for h in range(H + 1)}
    cf = {h: genfun.cf_gf(h, N) for h in range(H + 1)}
    theorem = {h: genfun.d_theorem(h, N) for h in range(H + 1)}
    heights = range(H + 1)
    pos_heights = range(1, H + 1)

    c.check("D_0 = b (enumeration, transfer matrix, continued fraction)", [
        ("brute", lambda: (brute[0], TSeries.const(B, N))),
        ("dp", lambda: (dp_gf(0, N), TSeries.const(B, N))),
        ("cf", lambda: (cf[0], TSeries.const(B, N))),
    ])
    if H >= 1:
        geometric = TSeries([MPoly.monomial(n, n, 0) for n in range(N + 1)], N)
        c.check("D_1 = 1/(1-abt)", [
            ("brute", lambda: (brute[1], geometric)),
            ("cf", lambda: (cf[1], geometric)),
        ])
    c.check("transfer matrix = enumeration",
            [(f"h={h}", lambda h=h: (dp_gf(h, N), brute[h])) for h in heights])
    c.check("continued fraction = enumeration",
            [(f"h={h}", lambda h=h: (cf[h], brute[h])) for h in heights])
    c.check("Q_h(0,b)/Q_h(a,b) = continued fraction",
            [(f"h={h}", lambda h=h: (genfun.d_rational(h).expand(N), cf[h])) for h in pos_heights])
    c.check("closed q-binomial ratio = enumeration, h>=1",
            [(f"h={h}", lambda h=h: (theorem[h], brute[h])) for h in pos_heights])
    # reported on its own line: the closed sums give 1 here, enumeration gives b
    c.check("closed q-binomial ratio = enumeration, h=0",
            [("h=0", lambda: (theorem[0], brute[0]))])
    c.check("closed Q_h = recurrence Q_h",
            [(f"h={h}", lambda h=h: (genfun.q_poly_closed(h, bracket=bracket),
                                     genfun.q_poly_recurrence(h))) for h in pos_heights])
    if H >= 1:
        w = genfun.w_series(H, N)
        c.check("[z^h] W = recurrence Q_h",
                [(f"h={h}", lambda h=h: (w[h], genfun.q_poly_recurrence(h).series(N)))
                 for h in pos_heights])
    c.check("numerator = Q_h at a=0",
            [(f"h={h}", lambda h=h: (genfun.q_poly_recurrence(h).substitute("a", 0),
                                     genfun.closed_form_coeffs(h, a_zero=True)))
             for h in pos_heights])
    c.check("a=0 gives 1 for h>=1",
            [(f"h={h}", lambda h=h: (theorem[h].substitute("a", 0), TSeries.one(N)))
             for h in pos_heights])
    c.check("b=0 at height h = b=1 at height h-1",
            [(f"h={h}", lambda h=h: (theorem[h].substitute("b", 0),
                                     theorem[h - 1].substitute("b", 1)))
             for h in pos_heights])
    c.check("a=b=1 sums = full ratio at a=b=1",
            [(f"h={h}", lambda h=h: (genfun.d_corollary(h, N),
                                     theorem[h].substitute("a", 1).substitute("b", 1)))
             for h in heights])
    limit = genfun.d_infinite(N)
    c.check("a=b=1 sums = unrestricted limit for h>=N",
            [(f"h={h}", lambda h=h: (genfun.d_corollary(h, N), limit))
             for h in range(N, max(H, N) + 1)])
    c.check("nonnegative coefficients",
            [(f"h={h}", lambda h=h: _nonnegative(theorem[h])) for h in heights])
    return c.results


def all_passed(results: Iterable[CheckResult]) -> bool:
    return all(r.passed for r in results)
