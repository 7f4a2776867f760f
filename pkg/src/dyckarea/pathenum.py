"""Height-bounded Dyck paths, their statistics, and two ground-truth generating functions.

Contact convention: ``u`` counts vertices on y=0 other than the origin,
``v`` counts vertices on y=h, and the origin does count toward ``v`` when
h=0.  This is what makes D_0 = b and D_1 = 1/(1-abt).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .polyring import ONE, MPoly, TSeries

UP = "U"
DOWN = "D"


@dataclass(frozen=True)
class DyckPath:
    steps: str = ""

    def __post_init__(self):
        y = 0
        for s in self.steps:
            if s == UP:
                y += 1
            elif s == DOWN:
                y -= 1
                if y < 0:
                    raise ValueError(f"{self.steps!r} dips below y=0")
            else:
                raise ValueError(f"unknown step {s!r}")
        if y != 0:
            raise ValueError(f"{self.steps!r} does not return to y=0")

    def __len__(self) -> int:
        return len(self.steps)

    def __str__(self) -> str:
        return self.steps

    def heights(self) -> list[int]:
        """Heights of all vertices, origin included."""
        ys = [0]
        for s in self.steps:
            ys.append(ys[-1] + (1 if s == UP else -1))
        return ys

    @property
    def height(self) -> int:
        return max(self.heights())


@dataclass(frozen=True)
class PathStats:
    n: int
    m: int
    u: int
    v: int

    @property
    def tri_area(self) -> int:
        # sum of heights over all steps, i.e. triangular plaquettes
        return self.n + 2 * self.m

    def as_tuple(self) -> tuple[int, int, int, int, int]:
        return (self.n, self.m, self.u, self.v, self.tri_area)


def path_stats(p: DyckPath, h: int) -> PathStats:
    ys = p.heights()
    if max(ys) > h:
        raise ValueError(f"path {p.steps!r} has height {max(ys)} > {h}")
    area = sum(y for y, s in zip(ys, p.steps) if s == UP)
    u = sum(1 for y in ys[1:] if y == 0)
    v = sum(1 for y in ys if y == h) if h == 0 else sum(1 for y in ys[1:] if y == h)
    return PathStats(n=len(p.steps) // 2, m=area, u=u, v=v)


def iter_paths(h: int, n: int) -> Iterator[DyckPath]:
    """Paths of half-length ``n`` and height <= ``h`` in lexicographic order (U < D)."""
    if h < 0 or n < 0:
        raise ValueError("h and n must be non-negative")
    total = 2 * n
    buf: list[str] = []

    def walk(y: int) -> Iterator[str]:
        left = total - len(buf)
        if left == 0:
            yield "".join(buf)
            return
        # an up step needs room to come back down in the remaining steps
        if y < h and y + 1 <= left - 1:
            buf.append(UP)
            yield from walk(y + 1)
            buf.pop()
        if y > 0:
            buf.append(DOWN)
            yield from walk(y - 1)
            buf.pop()

    for steps in walk(0):
        yield DyckPath(steps)


def generate_paths(h: int, n: int) -> list[DyckPath]:
    return list(iter_paths(h, n))


def brute_force_gf(h: int, N: int) -> TSeries:
    """D_h(a,b;q,t) through t**N by summing a^u b^v q^m over every path."""
    coeffs = []
    for n in range(N + 1):
        acc: dict[tuple[int, int, int], int] = {}
        for p in iter_paths(h, n):
            st = path_stats(p, h)
            key = (st.u, st.v, st.m)
            acc[key] = acc.get(key, 0) + 1
        coeffs.append(MPoly(acc))
    return TSeries(coeffs, N)


def dp_gf(h: int, N: int) -> TSeries:
    """Same contract as :func:`brute_force_gf`, by a transfer-matrix sweep over heights."""
    if h < 0 or N < 0:
        raise ValueError("h and N must be non-negative")
    a = MPoly.var("a")
    b = MPoly.var("b")
    start = b if h == 0 else ONE
    state: dict[int, MPoly] = {0: start}
    coeffs = [start]
    for step in range(1, 2 * N + 1):
        nxt: dict[int, MPoly] = {}
        for y, w in state.items():
            moves = []
            if y < h:
                moves.append((y + 1, w.shift(e_q=y)))
            if y > 0:
                moves.append((y - 1, w))
            for y2, w2 in moves:
                if y2 == 0:
                    w2 = w2 * a
                if y2 == h:
                    w2 = w2 * b
                nxt[y2] = nxt[y2] + w2 if y2 in nxt else w2
        state = nxt
        if step % 2 == 0:
            coeffs.append(state.get(0, MPoly()))
    return TSeries(coeffs, N)
