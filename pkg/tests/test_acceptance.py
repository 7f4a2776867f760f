"""Exit criteria.  Every comparison is exact equality of integer coefficients."""

import itertools

import pytest

from dyckarea import cli
from dyckarea.genfun import (
    BRACKET,
    cf_gf,
    d_corollary,
    d_infinite,
    d_rational,
    d_theorem,
    q_poly_closed,
    q_poly_recurrence,
    w_series,
)
from dyckarea.pathenum import brute_force_gf
from dyckarea.polyring import ONE, B, MPoly, TSeries, parse_poly as P
from dyckarea.verify import first_difference

HEIGHTS = range(0, 7)
N = 10


@pytest.fixture(scope="module")
def brute():
    return {h: brute_force_gf(h, N) for h in HEIGHTS}


def compare(label, left, right, failures):
    diff = first_difference(left, right)
    if diff is not None:
        failures.append(f"{label}: {diff}")


def test_criterion_1_closed_ratio_vs_enumeration(brute, criterion):
    failures = []
    for h in HEIGHTS:
        compare(f"h={h}", d_theorem(h, N), brute[h], failures)
    criterion(1, "closed q-binomial ratio = enumeration, 0<=h<=6, N=10", failures)


def test_criterion_2_continued_fraction(brute, criterion):
    failures = []
    for h in HEIGHTS:
        compare(f"h={h}", cf_gf(h, N), brute[h], failures)
    compare("D_0", cf_gf(0, N), TSeries.const(B, N), failures)
    geometric = TSeries([MPoly.monomial(n, n, 0) for n in range(N + 1)], N)
    compare("D_1", cf_gf(1, N), geometric, failures)
    criterion(2, "continued fraction = enumeration; D_0 = b; D_1 = sum (ab)^n t^n", failures)


def test_criterion_3_rational_form(criterion):
    failures = []
    for h in range(1, 7):
        compare(f"h={h}", d_rational(h).expand(N), cf_gf(h, N), failures)
    compare("Q_1", q_poly_recurrence(1), (ONE, P("-a*b")), failures)
    compare("Q_2", q_poly_recurrence(2), (ONE, P("-a - b*q")), failures)
    r2 = d_rational(2)
    compare("D_2 numerator", r2.numerator, (ONE, P("-b*q")), failures)
    compare("D_2 denominator", r2.denominator, (ONE, P("-a - b*q")), failures)
    criterion(3, "Q_h(0,b)/Q_h(a,b) = continued fraction; Q_1, Q_2, D_2 as stated", failures)


def test_criterion_4_closed_q_vs_recurrence(criterion):
    failures = []
    for h in range(1, 13):
        compare(f"h={h}", q_poly_closed(h), q_poly_recurrence(h), failures)
    criterion(4, "closed Q_h = recurrence Q_h, 1<=h<=12", failures)


def test_criterion_5_w_series(criterion):
    failures = []
    try:
        w = w_series(10, 10)
    except ArithmeticError as exc:
        criterion(5, "[z^h] W = Q_h, 1<=h<=10", [f"assembly: {exc}"])
        return
    compare("z^0", w[0], TSeries([], 10), failures)
    for h in range(1, 11):
        compare(f"h={h}", w[h], q_poly_recurrence(h).series(10), failures)
    criterion(5, "[z^h] W(10,10) = Q_h mod t^11, 1<=h<=10; no 1/(tz) remainder", failures)


def test_criterion_6_corollary_and_limit(criterion):
    failures = []
    for h in range(0, 11):
        for n in range(0, 13):
            full = d_theorem(h, n).substitute("a", 1).substitute("b", 1)
            compare(f"h={h} N={n}", d_corollary(h, n), full, failures)
    for n in range(0, 13):
        limit = d_infinite(n)
        for h in range(n, n + 3):
            compare(f"limit h={h} N={n}", d_corollary(h, n), limit, failures)
    compare("t^3 of limit", d_infinite(3)[3], P("1 + 2*q + q^2 + q^3"), failures)
    criterion(6, "a=b=1 sums = full ratio; = unrestricted limit for h>=N; t^3 term", failures)


def test_criterion_7_catalan(criterion):
    failures = []
    expected = [1, 1, 2, 5, 14, 42, 132]
    for n, cat in enumerate(expected):
        for h in (n, n + 1):
            got = brute_force_gf(h, n)[n].evaluate(a=1, b=1, q=1)
            if got != cat:
                failures.append(f"n={n} h={h}: {got} != {cat}")
    criterion(7, "Catalan numbers 1,1,2,5,14,42,132 at q=a=b=1", failures)


def _mutants():
    swap_b = {"b": "1-b", "1-b": "b"}
    for i, term in enumerate(BRACKET):
        yield f"term {i} sign", i, term._replace(sign=-term.sign)
        for d in (-1, 1):
            yield f"term {i} n-index {d:+}", i, term._replace(dn=term.dn + d)
            yield f"term {i} k-index {d:+}", i, term._replace(dk=term.dk + d)
        yield f"term {i} (1-a) factor", i, term._replace(has_one_minus_a=not term.has_one_minus_a)
        yield f"term {i} b weight", i, term._replace(weight_b=swap_b[term.weight_b])


def test_criterion_8_negative_control(criterion):
    failures = []
    count = 0
    for label, i, term in _mutants():
        count += 1
        bracket = list(BRACKET)
        bracket[i] = term
        located = None
        for h in range(1, 13):
            located = first_difference(q_poly_closed(h, bracket=bracket), q_poly_recurrence(h))
            if located:
                break
        if located is None or "coefficient of" not in located:
            failures.append(f"{label}: not detected")
    assert count == 28
    criterion(8, f"each of {count} single perturbations of the bracket fails criterion 4", failures)


def test_criterion_9_cli(capsys, criterion):
    failures = []
    status = cli.main(["verify", "--height", "6", "--order", "10"])
    report = capsys.readouterr().out
    if status != cli.EXIT_OK:
        bad = [ln for ln in report.splitlines() if ln.startswith("[FAIL]")]
        failures.append(f"verify exited {status}: " + "; ".join(bad))
    for method, fmt in itertools.product(cli.METHODS, ("json", "csv")):
        h = 1 if method == "rational" else 0
        for height in (h, 4):
            series = cli.METHODS[method](height, 6)
            text = cli.render_table(series, fmt, height=height, method=method)
            if cli.parse_table(text, fmt, order=6) != series:
                failures.append(f"{method}/{fmt} h={height}: round trip differs")
    criterion(9, "verify --height 6 --order 10 exits 0; JSON/CSV round trip for every method",
              failures)
