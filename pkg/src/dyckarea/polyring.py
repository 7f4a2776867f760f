"""Exact polynomial and truncated power-series arithmetic.

``MPoly`` is a sparse polynomial in the three variables ``a``, ``b``, ``q``
with Python integer coefficients.  ``TSeries`` is a power series in ``t``
with ``MPoly`` coefficients, truncated after ``t**order``.  ``ZSeries`` is a
series in a further variable ``z`` whose coefficients are ``TSeries`` of a
common order.

Everything here is immutable and exact; there is no floating point anywhere.
"""

from __future__ import annotations

import re
from types import MappingProxyType
from typing import Iterable, Mapping, Sequence

Exponent = tuple[int, int, int]

VARIABLES = ("a", "b", "q")


class MPoly:
    """Sparse polynomial in ``a, b, q`` over the integers.

    Terms are stored as ``{(e_a, e_b, e_q): coeff}`` with no zero
    coefficients, so equality of term maps is equality of polynomials.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Exponent, int] | None = None):
        clean: dict[Exponent, int] = {}
        if terms:
            for exp, c in terms.items():
                if len(exp) != 3 or any(e < 0 for e in exp):
                    raise ValueError(f"bad exponent {exp!r}")
                if not isinstance(c, int):
                    raise TypeError(f"coefficient must be int, got {type(c).__name__}")
                if c:
                    clean[tuple(exp)] = c
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict[Exponent, int]) -> "MPoly":
        # terms already canonical; skips validation in hot loops
        p = object.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def const(cls, c: int) -> "MPoly":
        return cls._raw({(0, 0, 0): c} if c else {})

    @classmethod
    def monomial(cls, e_a: int = 0, e_b: int = 0, e_q: int = 0, coeff: int = 1) -> "MPoly":
        return cls({(e_a, e_b, e_q): coeff})

    @classmethod
    def var(cls, name: str) -> "MPoly":
        exp = [0, 0, 0]
        exp[VARIABLES.index(name)] = 1
        return cls._raw({tuple(exp): 1})

    @property
    def terms(self) -> Mapping[Exponent, int]:
        return MappingProxyType(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def constant_term(self) -> int:
        return self._terms.get((0, 0, 0), 0)

    def is_one(self) -> bool:
        return self._terms == {(0, 0, 0): 1}

    def degree(self, var: str) -> int:
        """Largest exponent of ``var``; -1 for the zero polynomial."""
        i = VARIABLES.index(var)
        return max((e[i] for e in self._terms), default=-1)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = MPoly.const(other)
        if not isinstance(other, MPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __add__(self, other: "MPoly | int") -> "MPoly":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self._terms)
        for exp, c in other._terms.items():
            s = out.get(exp, 0) + c
            if s:
                out[exp] = s
            else:
                out.pop(exp, None)
        return MPoly._raw(out)

    __radd__ = __add__

    def __neg__(self) -> "MPoly":
        return MPoly._raw({e: -c for e, c in self._terms.items()})

    def __sub__(self, other: "MPoly | int") -> "MPoly":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: int) -> "MPoly":
        return (-self) + other

    def __mul__(self, other: "MPoly | int") -> "MPoly":
        if isinstance(other, int):
            if not other:
                return MPoly()
            return MPoly._raw({e: c * other for e, c in self._terms.items()})
        if not isinstance(other, MPoly):
            return NotImplemented
        out: dict[Exponent, int] = {}
        for (a1, b1, q1), c1 in self._terms.items():
            for (a2, b2, q2), c2 in other._terms.items():
                exp = (a1 + a2, b1 + b2, q1 + q2)
                out[exp] = out.get(exp, 0) + c1 * c2
        return MPoly._raw({e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "MPoly":
        if n < 0:
            raise ValueError("negative power")
        result = MPoly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, e_a: int = 0, e_b: int = 0, e_q: int = 0) -> "MPoly":
        """Multiply by the monomial ``a**e_a * b**e_b * q**e_q``."""
        if not (e_a or e_b or e_q):
            return self
        return MPoly._raw(
            {(x + e_a, y + e_b, z + e_q): c for (x, y, z), c in self._terms.items()}
        )

    def substitute(self, var: str, value: int) -> "MPoly":
        return substitute(self, var, value)

    def evaluate(self, a: int = 1, b: int = 1, q: int = 1) -> int:
        return sum(c * a**x * b**y * q**z for (x, y, z), c in self._terms.items())

    def __repr__(self) -> str:
        return f"MPoly({format_poly(self)!r})"

    def __str__(self) -> str:
        return format_poly(self)

    @classmethod
    def parse(cls, text: str) -> "MPoly":
        return parse_poly(text)


def _coerce(x):
    if isinstance(x, MPoly):
        return x
    if isinstance(x, int):
        return MPoly.const(x)
    return NotImplemented


ZERO = MPoly()
ONE = MPoly.const(1)
A = MPoly.var("a")
B = MPoly.var("b")
Q = MPoly.var("q")


def poly_add(p: MPoly, r: MPoly) -> MPoly:
    return p + r


def poly_mul(p: MPoly, r: MPoly) -> MPoly:
    return p * r


def substitute(p: MPoly, var: str, value: int) -> MPoly:
    """Set ``var`` (``'a'`` or ``'b'``) to 0 or 1."""
    if var not in ("a", "b"):
        raise ValueError(f"can only substitute a or b, not {var!r}")
    if value not in (0, 1):
        raise ValueError(f"substitution value must be 0 or 1, not {value!r}")
    i = VARIABLES.index(var)
    if value == 0:
        return MPoly._raw({e: c for e, c in p._terms.items() if e[i] == 0})
    out: dict[Exponent, int] = {}
    for e, c in p._terms.items():
        k = list(e)
        k[i] = 0
        k = tuple(k)
        out[k] = out.get(k, 0) + c
    return MPoly._raw({e: c for e, c in out.items() if c})


def poly_divexact(p: MPoly, d: MPoly) -> MPoly:
    """Exact quotient ``p / d``; raises ``ArithmeticError`` if ``d`` does not divide ``p``.

    Plain multivariate division with respect to lex order on ``(e_a, e_b, e_q)``.
    """
    if d.is_zero():
        raise ZeroDivisionError("division by zero polynomial")
    lead_d = max(d._terms)
    lead_c = d._terms[lead_d]
    rem = dict(p._terms)
    quot: dict[Exponent, int] = {}
    while rem:
        lead = max(rem)
        c = rem[lead]
        e = tuple(x - y for x, y in zip(lead, lead_d))
        if min(e) < 0 or c % lead_c:
            raise ArithmeticError(f"{format_poly(d)} does not divide {format_poly(p)}")
        k = c // lead_c
        quot[e] = k
        for de, dc in d._terms.items():
            t = (e[0] + de[0], e[1] + de[1], e[2] + de[2])
            s = rem.get(t, 0) - k * dc
            if s:
                rem[t] = s
            else:
                rem.pop(t, None)
    return MPoly._raw(quot)


# --- canonical text form -------------------------------------------------

def _format_term(exp: Exponent, c: int) -> str:
    factors = []
    for name, e in zip(VARIABLES, exp):
        if e == 1:
            factors.append(name)
        elif e > 1:
            factors.append(f"{name}^{e}")
    mag = abs(c)
    if not factors:
        body = str(mag)
    elif mag == 1:
        body = "*".join(factors)
    else:
        body = "*".join([str(mag)] + factors)
    return body


def format_poly(p: MPoly) -> str:
    """Canonical text: terms in lexicographic exponent order, e.g. ``1 - a*b - 2*q^3``."""
    if p.is_zero():
        return "0"
    parts = []
    for i, exp in enumerate(sorted(p._terms)):
        c = p._terms[exp]
        body = _format_term(exp, c)
        if i == 0:
            parts.append(body if c > 0 else "-" + body)
        else:
            parts.append(("+ " if c > 0 else "- ") + body)
    return " ".join(parts)


_TERM_RE = re.compile(r"([+-]?)\s*(\d+)?((?:\*?[abq](?:\^\d+)?)*)")
_FACTOR_RE = re.compile(r"([abq])(?:\^(\d+))?")


def parse_poly(text: str) -> MPoly:
    """Inverse of :func:`format_poly` (also accepts reordered terms)."""
    s = text.replace(" ", "")
    if s in ("", "0"):
        return MPoly()
    out: dict[Exponent, int] = {}
    pos = 0
    while pos < len(s):
        m = _TERM_RE.match(s, pos)
        if not m or m.end() == pos or not (m.group(2) or m.group(3)):
            raise ValueError(f"cannot parse polynomial {text!r} at offset {pos}")
        sign, num, fac = m.groups()
        if pos > 0 and not sign:
            raise ValueError(f"missing operator in {text!r} at offset {pos}")
        if num and fac and not fac.startswith("*"):
            raise ValueError(f"missing '*' in {text!r}")
        c = int(num) if num else 1
        if sign == "-":
            c = -c
        exp = [0, 0, 0]
        for name, e in _FACTOR_RE.findall(fac):
            exp[VARIABLES.index(name)] += int(e) if e else 1
        key = tuple(exp)
        out[key] = out.get(key, 0) + c
        pos = m.end()
    return MPoly(out)


# --- truncated series in t -----------------------------------------------

class TSeries:
    """Power series in ``t`` with ``MPoly`` coefficients, kept through ``t**order``."""

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs: Iterable[MPoly | int], order: int):
        if order < 0:
            raise ValueError("order must be non-negative")
        cs = [_coerce(c) for c in coeffs]
        if any(c is NotImplemented for c in cs):
            raise TypeError("coefficients must be MPoly or int")
        if len(cs) > order + 1:
            if any(not c.is_zero() for c in cs[order + 1:]):
                raise ValueError("coefficients beyond the truncation order")
            cs = cs[: order + 1]
        cs += [ZERO] * (order + 1 - len(cs))
        self.order = order
        self.coeffs = tuple(cs)

    @classmethod
    def const(cls, c: MPoly | int, order: int) -> "TSeries":
        return cls([c], order)

    @classmethod
    def one(cls, order: int) -> "TSeries":
        return cls([ONE], order)

    def __getitem__(self, n: int) -> MPoly:
        return self.coeffs[n]

    def __len__(self) -> int:
        return self.order + 1

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.order, self.coeffs))

    def _check(self, other: "TSeries") -> None:
        if not isinstance(other, TSeries):
            raise TypeError(f"expected TSeries, got {type(other).__name__}")
        if other.order != self.order:
            raise ValueError(f"truncation order mismatch: {self.order} vs {other.order}")

    def __add__(self, other: "TSeries") -> "TSeries":
        self._check(other)
        return TSeries([x + y for x, y in zip(self.coeffs, other.coeffs)], self.order)

    def __sub__(self, other: "TSeries") -> "TSeries":
        self._check(other)
        return TSeries([x - y for x, y in zip(self.coeffs, other.coeffs)], self.order)

    def __neg__(self) -> "TSeries":
        return TSeries([-x for x in self.coeffs], self.order)

    def __mul__(self, other):
        if isinstance(other, (MPoly, int)):
            return self.scale(other)
        return series_mul(self, other)

    __rmul__ = __mul__

    def scale(self, c: MPoly | int) -> "TSeries":
        return TSeries([x * c for x in self.coeffs], self.order)

    def shift_t(self, k: int) -> "TSeries":
        """Multiply by ``t**k`` and drop what falls past the order."""
        if k < 0:
            raise ValueError("negative shift")
        return TSeries([ZERO] * k + list(self.coeffs[: max(self.order + 1 - k, 0)]), self.order)

    def truncate(self, order: int) -> "TSeries":
        if order > self.order:
            raise ValueError(f"cannot extend a series of order {self.order} to {order}")
        return TSeries(self.coeffs[: order + 1], order)

    def substitute(self, var: str, value: int) -> "TSeries":
        return TSeries([substitute(c, var, value) for c in self.coeffs], self.order)

    def map(self, fn) -> "TSeries":
        return TSeries([fn(c) for c in self.coeffs], self.order)

    def invert(self) -> "TSeries":
        return series_invert(self)

    def qt(self) -> "TSeries":
        return series_qt(self)

    def __repr__(self) -> str:
        body = ", ".join(format_poly(c) for c in self.coeffs)
        return f"TSeries([{body}], order={self.order})"


def series_mul(s: TSeries, u: TSeries) -> TSeries:
    s._check(u)
    n = s.order
    out = []
    for k in range(n + 1):
        acc = ZERO
        for i in range(k + 1):
            x, y = s.coeffs[i], u.coeffs[k - i]
            if x and y:
                acc = acc + x * y
        out.append(acc)
    return TSeries(out, n)


def series_invert(s: TSeries) -> TSeries:
    """Inverse of a series whose constant term is exactly 1."""
    if not s.coeffs[0].is_one():
        raise ZeroDivisionError(
            f"series with constant term {format_poly(s.coeffs[0])} is not invertible"
        )
    out = [ONE]
    for k in range(1, s.order + 1):
        acc = ZERO
        for i in range(1, k + 1):
            if s.coeffs[i]:
                acc = acc - s.coeffs[i] * out[k - i]
        out.append(acc)
    return TSeries(out, s.order)


def series_div(num: TSeries, den: TSeries) -> TSeries:
    """``num / den`` where ``den[0]`` is any polynomial dividing exactly at every step."""
    num._check(den)
    if den.coeffs[0].is_one():
        return series_mul(num, series_invert(den))
    lead = den.coeffs[0]
    out: list[MPoly] = []
    for k in range(num.order + 1):
        acc = num.coeffs[k]
        for i in range(1, k + 1):
            if den.coeffs[i]:
                acc = acc - den.coeffs[i] * out[k - i]
        out.append(poly_divexact(acc, lead))
    return TSeries(out, num.order)


def series_qt(s: TSeries) -> TSeries:
    """Substitute ``t -> q*t``."""
    return TSeries([c.shift(e_q=n) for n, c in enumerate(s.coeffs)], s.order)


def series_from_poly(coeffs: Sequence[MPoly], order: int) -> TSeries:
    """Truncate an exact polynomial in ``t`` to a series."""
    return TSeries(list(coeffs[: order + 1]), order)


# --- truncated series in z ----------------------------------------------

class ZSeries:
    """Series in ``z`` through ``z**z_order``; coefficients share one t-order."""

    __slots__ = ("z_order", "t_order", "coeffs")

    def __init__(self, coeffs: Iterable[TSeries], z_order: int, t_order: int):
        cs = list(coeffs)
        for c in cs:
            if c.order != t_order:
                raise ValueError("non-uniform t-truncation in ZSeries")
        if len(cs) > z_order + 1:
            cs = cs[: z_order + 1]
        zero = TSeries([], t_order)
        cs += [zero] * (z_order + 1 - len(cs))
        self.z_order = z_order
        self.t_order = t_order
        self.coeffs = tuple(cs)

    @classmethod
    def zero(cls, z_order: int, t_order: int) -> "ZSeries":
        return cls([], z_order, t_order)

    def __getitem__(self, k: int) -> TSeries:
        return self.coeffs[k]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ZSeries):
            return NotImplemented
        return (self.z_order, self.t_order, self.coeffs) == (
            other.z_order, other.t_order, other.coeffs)

    def _check(self, other: "ZSeries") -> None:
        if (self.z_order, self.t_order) != (other.z_order, other.t_order):
            raise ValueError("ZSeries truncation mismatch")

    def __add__(self, other: "ZSeries") -> "ZSeries":
        self._check(other)
        return ZSeries([x + y for x, y in zip(self.coeffs, other.coeffs)],
                       self.z_order, self.t_order)

    def __sub__(self, other: "ZSeries") -> "ZSeries":
        self._check(other)
        return ZSeries([x - y for x, y in zip(self.coeffs, other.coeffs)],
                       self.z_order, self.t_order)

    def __neg__(self) -> "ZSeries":
        return ZSeries([-x for x in self.coeffs], self.z_order, self.t_order)

    def __mul__(self, other: "ZSeries") -> "ZSeries":
        self._check(other)
        out = []
        for k in range(self.z_order + 1):
            acc = TSeries([], self.t_order)
            for i in range(k + 1):
                acc = acc + self.coeffs[i] * other.coeffs[k - i]
            out.append(acc)
        return ZSeries(out, self.z_order, self.t_order)

    def scale(self, c: MPoly | TSeries) -> "ZSeries":
        return ZSeries([x * c for x in self.coeffs], self.z_order, self.t_order)

    def shift_z(self, k: int) -> "ZSeries":
        zero = TSeries([], self.t_order)
        return ZSeries([zero] * k + list(self.coeffs), self.z_order, self.t_order)

    def shift_t(self, k: int) -> "ZSeries":
        return ZSeries([c.shift_t(k) for c in self.coeffs], self.z_order, self.t_order)

    def __repr__(self) -> str:
        return f"ZSeries(z_order={self.z_order}, t_order={self.t_order}, coeffs={list(self.coeffs)!r})"
