"""Generating functions of area-weighted Dyck paths of bounded height.

D_h(a,b;q,t) is computed here by several independent routes:

* ``cf_gf``       - the continued fraction, one level per unit of height;
* ``d_rational``  - the ratio Q_h(0,b)/Q_h(a,b) of three-term-recurrence polynomials;
* ``d_theorem``   - the closed q-binomial sums for numerator and denominator;
* ``d_corollary`` / ``d_infinite`` - the a=b=1 specialization and its h -> oo limit.

``w_series`` assembles the generating function sum_h Q_h z^h from two
instances of phi(z,q,t) = sum_n q^{n(n-1)} t^n / (z;q)_n, giving a fourth
construction of Q_h.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple, Sequence

from .polyring import (
    ONE,
    ZERO,
    A,
    B,
    MPoly,
    TSeries,
    ZSeries,
    series_div,
    series_invert,
    series_mul,
    series_qt,
)
from .qcombinat import inv_poch_series, q_binomial, q_pochhammer


# --- exact polynomials in t ----------------------------------------------

def _trim(coeffs: Sequence[MPoly]) -> tuple[MPoly, ...]:
    cs = list(coeffs)
    while cs and cs[-1].is_zero():
        cs.pop()
    return tuple(cs)


def _tpoly_sub(p: Sequence[MPoly], r: Sequence[MPoly]) -> tuple[MPoly, ...]:
    n = max(len(p), len(r))
    p = list(p) + [ZERO] * (n - len(p))
    r = list(r) + [ZERO] * (n - len(r))
    return _trim(x - y for x, y in zip(p, r))


def _tpoly_shift_scale(p: Sequence[MPoly], c: MPoly) -> tuple[MPoly, ...]:
    """c * t * p(t)."""
    return _trim([ZERO] + [x * c for x in p])


@dataclass(frozen=True)
class QPolynomial:
    """Exact polynomial in t with MPoly coefficients: ``coeffs[n]`` multiplies t**n."""

    coeffs: tuple[MPoly, ...]
    h: int

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _trim(self.coeffs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, n: int) -> MPoly:
        return self.coeffs[n] if n < len(self.coeffs) else ZERO

    def substitute(self, var: str, value: int) -> "QPolynomial":
        return QPolynomial(tuple(c.substitute(var, value) for c in self.coeffs), self.h)

    def series(self, N: int) -> TSeries:
        return TSeries(self.coeffs[: N + 1], N)

    def __str__(self) -> str:
        parts = []
        for n, c in enumerate(self.coeffs):
            if c:
                parts.append(f"({c})*t^{n}" if n else f"({c})")
        return " + ".join(parts) or "0"


@dataclass(frozen=True)
class RationalGF:
    numerator: QPolynomial
    denominator: QPolynomial

    def expand(self, N: int) -> TSeries:
        return series_mul(self.numerator.series(N), series_invert(self.denominator.series(N)))


# --- continued fraction --------------------------------------------------

def cf_gf(h: int, N: int, a_general: bool = True) -> TSeries:
    """D_h through t**N from the continued fraction.

    Built from the inside out: D_0 = b, then each level is
    D_k(a) = 1 / (1 - a t D_{k-1}(1, b; q, q t)).  With ``a_general=False``
    the outermost ``a`` is set to 1 as well.
    """
    if h < 0:
        raise ValueError("h must be non-negative")
    d = TSeries.const(B, N)
    for level in range(1, h + 1):
        a = A if (a_general and level == h) else ONE
        d = series_invert(TSeries.one(N) - series_qt(d).shift_t(1).scale(a))
    return d


# --- three-term recurrence ------------------------------------------------

@lru_cache(maxsize=None)
def _p_family(h: int) -> tuple[MPoly, ...]:
    """Q_h(a, 1; q, t) as a coefficient tuple in t."""
    t_a = MPoly.monomial(e_a=1)
    if h == 1:
        return (ONE, -t_a)
    if h == 2:
        return (ONE, -(t_a + MPoly.monomial(e_q=1)))
    return _tpoly_sub(_p_family(h - 1), _tpoly_shift_scale(_p_family(h - 2), MPoly.monomial(e_q=h - 1)))


def q_poly_recurrence(h: int) -> QPolynomial:
    """Q_h(a,b;q,t) from its initial values 1-abt, 1-at-bqt and the three-term recurrence."""
    if h <= 0:
        raise ValueError(f"Q_h is defined for h >= 1, got {h}")
    if h == 1:
        return QPolynomial((ONE, -(A * B)), 1)
    if h == 2:
        return QPolynomial((ONE, -(A + B.shift(e_q=1))), 2)
    return QPolynomial(
        _tpoly_sub(_p_family(h - 1), _tpoly_shift_scale(_p_family(h - 2), B.shift(e_q=h - 1))),
        h,
    )


# --- closed q-binomial form ----------------------------------------------

class BracketTerm(NamedTuple):
    """One summand sign * weight * [h + dn - m, m + dk]_q of the bracket.

    ``weight_b`` is ``"1-b"`` or ``"b"``; ``has_one_minus_a`` adds a factor (1-a).
    """

    sign: int
    has_one_minus_a: bool
    weight_b: str
    dn: int
    dk: int


BRACKET: tuple[BracketTerm, ...] = (
    BracketTerm(+1, False, "1-b", 0, 0),
    BracketTerm(+1, False, "b", 1, 0),
    BracketTerm(-1, True, "1-b", -1, -1),
    BracketTerm(-1, True, "b", 0, -1),
)


def _sum_limit(h: int) -> int:
    # every q-binomial in the bracket vanishes for larger m
    return (h + 1) // 2 + 1


def closed_form_coeffs(
    h: int, *, a_zero: bool = False, bracket: Sequence[BracketTerm] = BRACKET
) -> tuple[MPoly, ...]:
    """t-coefficients of sum_m (-t)^m q^{m(m-1)} * bracket(h, m).

    With ``a_zero`` the (1-a) factors become 1; that is the numerator of D_h.
    """
    one_minus_a = ONE if a_zero else ONE - A
    weights = {"1-b": ONE - B, "b": B}
    out = []
    for m in range(_sum_limit(h) + 1):
        acc = ZERO
        for term in bracket:
            qb = q_binomial(h + term.dn - m, m + term.dk)
            if qb.is_zero():
                continue
            w = weights[term.weight_b]
            if term.has_one_minus_a:
                w = w * one_minus_a
            acc = acc + w * qb * term.sign
        out.append(acc.shift(e_q=m * (m - 1)) * (-1) ** m)
    return _trim(out)


def q_poly_closed(h: int, *, bracket: Sequence[BracketTerm] = BRACKET) -> QPolynomial:
    """Q_h(a,b;q,t) from the finite four-q-binomial sum."""
    if h <= 0:
        raise ValueError(f"Q_h is defined for h >= 1, got {h}")
    return QPolynomial(closed_form_coeffs(h, bracket=bracket), h)


def d_rational(h: int) -> RationalGF:
    """D_h = Q_h(0,b;q,t) / Q_h(a,b;q,t)."""
    if h <= 0:
        raise ValueError(f"the rational form needs h >= 1, got {h}")
    q_h = q_poly_recurrence(h)
    return RationalGF(q_h.substitute("a", 0), q_h)


def d_theorem(h: int, N: int) -> TSeries:
    """D_h through t**N as the ratio of the two closed q-binomial sums.

    The same formula is used for every h >= 0.  At h = 0 both sums collapse
    to 1, so the result is the constant series 1.  Enumeration gives b there,
    because the origin is a vertex on y = h.
    """
    if h < 0:
        raise ValueError("h must be non-negative")
    num = TSeries(closed_form_coeffs(h, a_zero=True)[: N + 1], N)
    den = TSeries(closed_form_coeffs(h)[: N + 1], N)
    return series_mul(num, series_invert(den))


def d_corollary(h: int, N: int) -> TSeries:
    """D_h(1,1;q,t) through t**N."""
    if h < 0:
        raise ValueError("h must be non-negative")
    num, den = [], []
    for m in range(min(_sum_limit(h), N) + 1):
        sign = (-1) ** m
        num.append(q_binomial(h - m, m).shift(e_q=m * m) * sign)
        den.append(q_binomial(h + 1 - m, m).shift(e_q=m * (m - 1)) * sign)
    return series_mul(TSeries(num, N), series_invert(TSeries(den, N)))


def d_infinite(N: int) -> TSeries:
    """Area generating function of unrestricted Dyck paths through t**N.

    Both sums are multiplied by (q;q)_N so every coefficient is a polynomial;
    the common factor then cancels in an exact series division.
    """
    if N < 0:
        raise ValueError("N must be non-negative")
    num, den = [], []
    for m in range(N + 1):
        cleared = ONE
        for i in range(m + 1, N + 1):
            cleared = cleared * (ONE - MPoly.monomial(e_q=i))
        sign = (-1) ** m
        num.append(cleared.shift(e_q=m * m) * sign)
        den.append(cleared.shift(e_q=m * (m - 1)) * sign)
    assert den[0] == q_pochhammer(N)
    return series_div(TSeries(num, N), TSeries(den, N))


# --- basic hypergeometric expansions and W ------------------------------

def phi_expand(q_shift: int, z_order: int, N: int) -> ZSeries:
    """phi(z, q, -q^{q_shift} t z^2) through z**z_order and t**N."""
    if q_shift not in (0, 1):
        raise ValueError("q_shift must be 0 or 1")
    out = ZSeries.zero(z_order, N)
    for n in range(min(N, z_order // 2) + 1):
        mono = MPoly.monomial(e_q=n * (n - 1) + q_shift * n, coeff=(-1) ** n)
        factor = TSeries.const(mono, N).shift_t(n)
        out = out + inv_poch_series(n, z_order, N).scale(factor).shift_z(2 * n)
    return out


def _zpoly(terms: dict[tuple[int, int], MPoly], z_order: int, t_order: int) -> ZSeries:
    """ZSeries from ``{(z_power, t_power): coeff}``."""
    rows: list[list[MPoly]] = [[ZERO] * (t_order + 1) for _ in range(z_order + 1)]
    for (k, n), c in terms.items():
        if k <= z_order and n <= t_order:
            rows[k][n] = rows[k][n] + c
    return ZSeries([TSeries(r, t_order) for r in rows], z_order, t_order)


# Polynomial part of W, times t*z, as {(z_power, t_power): coeff}.
# Follows from W(z;a,b) = z(1-b) - (bz-b-z) W(z;a,1).
W_PREFACTOR_NUMERATOR: dict[tuple[int, int], MPoly] = {
    (1, 1): A * B - A - B,
    (0, 1): -(A * B),
    (1, 0): ONE - B,
    (0, 0): B,
}


def w_series(z_order: int, N: int, *, prefactor: dict | None = None) -> ZSeries:
    """W(z;a,b;q,t) = sum_{h>=1} Q_h z^h through z**z_order and t**N.

    The closed form carries an overall 1/(tz).  Everything is assembled over
    that common denominator first; the numerator must then be divisible by
    t*z, which is checked before shifting down.
    """
    if z_order < 1:
        raise ValueError("z_order must be at least 1")
    zo, to = z_order + 1, N + 1
    poly = _zpoly(W_PREFACTOR_NUMERATOR if prefactor is None else prefactor, zo, to)
    bz_b_z = _zpoly({(1, 0): B - ONE, (0, 0): -B}, zo, to)
    one_minus_at = _zpoly({(0, 0): ONE, (0, 1): -A}, zo, to)
    tz = _zpoly({(1, 1): ONE}, zo, to)

    numer = (
        poly
        + bz_b_z * one_minus_at * phi_expand(0, zo, to)
        - tz * bz_b_z * phi_expand(1, zo, to)
    )

    if any(not c.is_zero() for c in numer[0].coeffs):
        raise ArithmeticError("W assembly left a 1/z term")
    if any(not numer[k][0].is_zero() for k in range(zo + 1)):
        raise ArithmeticError("W assembly left a 1/t term")
    return ZSeries(
        [TSeries(numer[k + 1].coeffs[1:], N) for k in range(z_order + 1)], z_order, N
    )
