"""q-Pochhammer symbols, Gaussian binomials and expansions of 1/(z;q)_n."""

from __future__ import annotations

from functools import lru_cache

from .polyring import ONE, ZERO, MPoly, TSeries, ZSeries

QPoly = MPoly  # an MPoly with only q-exponents


@lru_cache(maxsize=None)
def q_pochhammer(n: int) -> MPoly:
    """(q;q)_n = (1-q)(1-q^2)...(1-q^n)."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if n == 0:
        return ONE
    return q_pochhammer(n - 1) * (ONE - MPoly.monomial(e_q=n))


@lru_cache(maxsize=None)
def q_binomial(n: int, k: int) -> MPoly:
    """Gaussian binomial [n choose k]_q, taken to be 0 when k < 0 or k > n.

    Built from the q-Pascal rule [n,k] = [n-1,k-1] + q^k [n-1,k], so the
    coefficients are integers without any polynomial division.
    """
    if k < 0 or k > n:
        return ZERO
    if k == 0 or k == n:
        return ONE
    return q_binomial(n - 1, k - 1) + q_binomial(n - 1, k).shift(e_q=k)


def inv_poch_series(n: int, z_order: int, t_order: int = 0) -> ZSeries:
    """Expansion of 1/(z;q)_n = prod_{i<n} 1/(1 - z q^i) through z**z_order.

    Coefficients are t-free; ``t_order`` only fixes the truncation of the
    ``TSeries`` slots so the result can be mixed with other z-series.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    coeffs = [ONE] + [ZERO] * z_order
    for i in range(n):
        # multiply by 1/(1 - z q^i): c_m <- c_m + q^i c_{m-1}, running upward
        for m in range(1, z_order + 1):
            coeffs[m] = coeffs[m] + coeffs[m - 1].shift(e_q=i)
    return ZSeries([TSeries.const(c, t_order) for c in coeffs], z_order, t_order)
