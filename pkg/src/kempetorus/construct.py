"""Constructive 4-colorings with degree 6 (mod 12): the non-ergodicity witnesses.

The symmetric witness on T(3L,3L) is built by coloring counter-diagonals
in a prescribed order.  Except for a handful of explicitly listed
vertices per case, every vertex is forced: exactly one color of the
diagonal's designated pair keeps the coloring proper.  A forced vertex
admitting zero or two colors means the construction guarantee is
violated, which is a bug, not an input condition.

In checked mode the builder verifies every assignment against its
colored neighbours and asserts the running partial degree after each
step against the per-case ledger (e.g. 4, 4+12(k-1), 2+12(k-1),
6+12(k-1) for L = 4k-1).

Asymmetric witnesses on T(3L,3M) are obtained by gluing degree-zero
strips T(3L,3) on top of the symmetric witness, or for L = 2 by tiling
the T(6,6) witness an odd number of times.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .coloring import (Coloring, coloring_from_rows, expand_row_pattern,
                       is_proper, nonsingular_coloring)
from .degree import partial_degree
from .lattice import Triangulation, build


class ConstructionError(AssertionError):
    """A 'unique choice' step found 0 or >= 2 admissible colors."""


@dataclass
class TraceEntry:
    label: str
    diagonals: list
    partial_degree: int


@dataclass
class ConstructionTrace:
    steps: list = field(default_factory=list)

    def degrees(self) -> list[int]:
        return [e.partial_degree for e in self.steps]


class _DiagonalBuilder:
    def __init__(self, tri: Triangulation, checked: bool):
        self.tri = tri
        self.checked = checked
        self.colors = bytearray(tri.n)
        self.trace = ConstructionTrace()
        self._pending: list[int] = []

    def color_at(self, x: int, y: int) -> int:
        return self.colors[self.tri.vertex(x, y)]

    def admissible(self, v: int, pool) -> list[int]:
        cols = self.colors
        nbrs = self.tri.neighbors[v]
        return [c for c in pool
                if all(cols[w] != c for w in nbrs if cols[w])]

    def put(self, x: int, y: int, color: int, source: str = "") -> None:
        v = self.tri.vertex(x, y)
        if self.colors[v]:
            raise ConstructionError(f"vertex ({x},{y}) colored twice")
        if self.checked and color not in self.admissible(v, (color,)):
            raise ConstructionError(
                f"{source or 'assignment'} at ({x},{y}) breaks properness")
        self.colors[v] = color

    def forced(self, x: int, y: int, pool) -> int:
        v = self.tri.vertex(x, y)
        cand = self.admissible(v, pool)
        if (len(cand) != 1 if self.checked else not cand):
            raise ConstructionError(
                f"unique choice failed at ({x},{y}): {len(cand)} colors "
                f"admissible from {tuple(pool)}")
        self.colors[v] = cand[0]
        return cand[0]

    def fill(self, j: int, pool, skip=()) -> None:
        """Color every uncolored vertex on Dj with its unique choice from pool."""
        skip_v = {self.tri.vertex(x, y) for x, y in skip}
        for v in self.tri.counter_diagonal(j):
            if self.colors[v] or v in skip_v:
                continue
            x, y = self.tri.coords(v)
            self.forced(x, y, pool)
        self._pending.append(j)

    def mark(self, j: int) -> None:
        self._pending.append(j)

    def checkpoint(self, label: str, expect=None) -> int:
        deg = partial_degree(self.tri, self.colors)
        if self.checked and expect is not None and deg != expect:
            raise ConstructionError(
                f"partial degree after {label} is {deg}, ledger says {expect}")
        self.trace.steps.append(TraceEntry(label, self._pending, deg))
        self._pending = []
        return deg

    def finish(self) -> Coloring:
        if 0 in self.colors:
            raise ConstructionError("construction left uncolored vertices")
        c = Coloring(self.tri, 4, bytes(self.colors))
        if self.checked and not is_proper(self.tri, c):
            raise ConstructionError("constructed coloring is not proper")
        return c

    def seed_diagonal(self, j: int, rule) -> None:
        """Explicitly color all of Dj; rule(x, y) -> color."""
        for v in self.tri.counter_diagonal(j):
            x, y = self.tri.coords(v)
            self.put(x, y, rule(x, y), source=f"seed D{j}")
        self._pending.append(j)

    def ranged_diagonal(self, j: int, pool, group1, group2, lo, hi) -> None:
        """Two forced vertex groups taking opposite colors of `pool`, then
        an explicit x-range rule: lo <= x <= hi gets group2's color, the
        rest group1's."""
        x0, y0 = group1[0]
        c1 = self.forced(x0, y0, pool)
        c2 = pool[0] if c1 == pool[1] else pool[1]
        for x, y in group1[1:]:
            self.put(x, y, c1, source=f"D{j} forced group")
        for x, y in group2:
            self.put(x, y, c2, source=f"D{j} forced group")
        for v in self.tri.counter_diagonal(j):
            if self.colors[v]:
                continue
            x, y = self.tri.coords(v)
            self.put(x, y, c2 if lo <= x <= hi else c1, source=f"D{j} range rule")
        self._pending.append(j)


def _case_l_eq_2(checked: bool):
    tri = build(6, 6, 0)
    c = nonsingular_coloring(tri)
    trace = ConstructionTrace()
    trace.steps.append(TraceEntry("nonsingular", list(range(1, 7)),
                                  partial_degree(tri, c.colors)))
    return c, trace


def _case_4k_minus_1(k: int, checked: bool):
    M = 12 * k - 3
    b = _DiagonalBuilder(build(M, M, 0), checked)

    b.seed_diagonal(1, lambda x, y: 1 if x <= 6 * k - 1 else 2)
    b.seed_diagonal(2, lambda x, y: 3 if 3 * k + 1 <= x <= 9 * k - 1 else 4)
    b.fill(M, (3, 4))
    b.fill(3, (1, 2))
    b.fill(M - 1, (1, 2))
    b.checkpoint("step1", expect=4)

    for i in range(3 * (k - 1)):
        j = 3 + 2 * i
        b.fill(j + 1, (3, 4))
        b.fill(12 * k - j - 2, (3, 4))
        b.fill(j + 2, (1, 2))
        b.fill(12 * k - j - 3, (1, 2))
    b.checkpoint("step2", expect=4 + 12 * (k - 1))

    for x, y in ((3 * k - 1, 3 * k - 1), (9 * k - 2, 9 * k - 3)):
        b.forced(x, y, (3, 4))
    b.fill(6 * k - 2, (1, 2))
    b.fill(6 * k + 1, (3, 4))
    b.checkpoint("step3", expect=4 + 12 * (k - 1))

    b.fill(6 * k - 1, (3, 4))
    b.checkpoint("step4a", expect=2 + 12 * (k - 1))
    b.fill(6 * k, (1, 2))
    b.checkpoint("step4", expect=6 + 12 * (k - 1))
    return b.finish(), b.trace


def _case_4k(k: int, checked: bool):
    M = 12 * k
    b = _DiagonalBuilder(build(M, M, 0), checked)

    b.seed_diagonal(1, lambda x, y: 1 if x <= 6 * k else 2)
    b.seed_diagonal(2, lambda x, y: 3 if 3 * k + 2 <= x <= 9 * k + 1 else 4)
    b.fill(M, (3, 4))
    b.fill(3, (1, 2))
    b.fill(M - 1, (1, 2))
    b.fill(4, (3, 4))
    b.fill(M - 2, (3, 4))
    b.checkpoint("step1", expect=4)

    for i in range(3 * (k - 1)):
        j = 4 + 2 * i
        b.fill(j + 1, (1, 2))
        b.fill(12 * k - j + 1, (1, 2))
        b.fill(j + 2, (3, 4))
        b.fill(12 * k - j, (3, 4))
    b.checkpoint("step2", expect=4 + 12 * (k - 1))

    for x, y in ((6 * k, 12 * k - 1), (12 * k, 6 * k - 1)):
        b.forced(x, y, (1, 2))
    b.fill(6 * k - 1, (3, 4))
    b.fill(6 * k + 3, (1, 2))
    b.checkpoint("step3", expect=8 + 12 * (k - 1))

    # D(6k): four forced 1/2 vertices, the rest by an explicit x-rule
    ca = b.forced(1, 6 * k - 1, (1, 2))
    ca2 = b.forced(12 * k, 6 * k, (1, 2))
    cb = b.forced(6 * k + 1, 12 * k - 1, (1, 2))
    cb2 = b.forced(6 * k, 12 * k, (1, 2))
    if checked and (ca != ca2 or cb != cb2 or ca == cb):
        raise ConstructionError("forced 1/2 vertices on the middle diagonal "
                                "do not pair up as the ledger requires")
    for v in b.tri.counter_diagonal(6 * k):
        if b.colors[v]:
            continue
        x, y = b.tri.coords(v)
        b.put(x, y, ca if x < 6 * k else cb, source="middle diagonal rule")
    b.mark(6 * k)
    # D(6k+1): unique 3/4 everywhere except two free vertices, fixed explicitly
    b.put(1, 6 * k, 4, source="free vertex")
    b.put(6 * k + 1, 12 * k, 3, source="free vertex")
    b.fill(6 * k + 1, (3, 4))
    b.checkpoint("step4", expect=6 + 12 * (k - 1))

    free = ((2, 6 * k), (6 * k + 2, 12 * k)) if k % 2 else \
        ((1, 6 * k + 1), (6 * k + 1, 1))
    for x, y in free:
        b.forced(x, y, (1, 2))
    b.fill(6 * k + 2, (3, 4))
    b.checkpoint("step5", expect=6 + 12 * (k - 1))
    return b.finish(), b.trace


def _case_4k_plus_1(k: int, checked: bool):
    M = 12 * k + 3
    b = _DiagonalBuilder(build(M, M, 0), checked)

    b.seed_diagonal(1, lambda x, y: 1 if x <= 6 * k + 2 else 2)
    b.seed_diagonal(2, lambda x, y: 3 if 3 * k + 3 <= x <= 9 * k + 3 else 4)
    b.fill(M, (3, 4))
    b.fill(3, (1, 2))
    b.fill(5, (1, 2))
    b.fill(12 * k + 2, (1, 2))
    b.fill(12 * k, (1, 2))
    b.fill(4, (3, 4))
    b.fill(12 * k + 1, (3, 4))
    b.checkpoint("step1", expect=8)

    for i in range(3 * (k - 1)):
        j = 5 + 2 * i
        b.fill(j + 1, (3, 4))
        b.fill(12 * k - j + 4, (3, 4))
        b.fill(j + 2, (1, 2))
        b.fill(12 * k - j + 3, (1, 2))
    b.checkpoint("step2", expect=8 + 12 * (k - 1))

    for x, y in ((3 * k, 3 * k), (9 * k + 2, 9 * k + 1)):
        b.forced(x, y, (3, 4))
    b.fill(6 * k, (1, 2))
    # second exception listed at (3k+3,3k) in prose; the reference figure
    # places it at (3k+3,3k+2), which is the one on this diagonal
    for x, y in ((3 * k + 3, 3 * k + 2), (9 * k + 4, 9 * k + 4)):
        b.forced(x, y, (3, 4))
    b.fill(6 * k + 5, (1, 2))
    b.checkpoint("step3a", expect=8 + 12 * (k - 1))

    c_range = 3 if k % 2 else 4
    c_other = 7 - c_range

    def parity_diagonal(j, pair1, pair2, lo, hi, count_match=None):
        p1 = b.forced(*pair1[0], (3, 4))
        b.put(*pair1[1], p1, source=f"D{j} forced pair")
        p2 = b.forced(*pair2[0], (3, 4))
        b.put(*pair2[1], p2, source=f"D{j} forced pair")
        if checked and p1 == p2:
            raise ConstructionError(f"forced pairs on D{j} took equal colors")
        deferred = None
        for v in b.tri.counter_diagonal(j):
            if b.colors[v]:
                continue
            x, y = b.tri.coords(v)
            if count_match is not None and (x, y) == count_match:
                deferred = (x, y)
                continue
            b.put(x, y, c_range if lo < x < hi else c_other,
                  source=f"D{j} parity rule")
        b.mark(j)
        return deferred

    def count_threes(j):
        return sum(1 for v in b.tri.counter_diagonal(j) if b.colors[v] == 3)

    parity_diagonal(6 * k + 1,
                    ((3 * k + 1, 3 * k), (3 * k, 3 * k + 1)),
                    ((9 * k + 3, 9 * k + 1), (9 * k + 2, 9 * k + 2)),
                    3 * k + 1, 9 * k + 2)
    target = count_threes(6 * k + 1)
    deferred = parity_diagonal(6 * k + 4,
                               ((3 * k + 3, 3 * k + 1), (3 * k + 2, 3 * k + 2)),
                               ((9 * k + 4, 9 * k + 3), (9 * k + 3, 9 * k + 4)),
                               3 * k + 3, 9 * k + 3,
                               count_match=(3 * k + 1, 3 * k + 3))
    # the last free vertex balances the 3-counts of the two parity diagonals
    have = count_threes(6 * k + 4)
    b.put(*deferred, 3 if have < target else 4, source="count-matching vertex")
    if checked and count_threes(6 * k + 4) != target:
        raise ConstructionError("3-counts of the parity diagonals differ")
    b.mark(6 * k + 4)
    b.checkpoint("step3", expect=4 + 12 * (k - 1))

    b.forced(3 * k, 3 * k + 2, (1, 2))
    cf = b.forced(9 * k + 2, 9 * k + 3, (1, 2))
    b.put(3 * k + 1, 3 * k + 1, cf, source="copy-colored vertex")
    b.put(9 * k + 3, 9 * k + 2, cf, source="copy-colored vertex")
    b.fill(6 * k + 2, (1, 2))

    six = ((3 * k + 2, 3 * k + 1), (3 * k + 1, 3 * k + 2), (3 * k, 3 * k + 3),
           (9 * k + 4, 9 * k + 2), (9 * k + 3, 9 * k + 3), (9 * k + 2, 9 * k + 4))
    b.fill(6 * k + 3, (3, 4), skip=six)
    for x, y in six:
        b.forced(x, y, (1, 2, 3, 4))
    b.mark(6 * k + 3)
    b.checkpoint("step4", expect=6 + 12 * (k - 1))
    return b.finish(), b.trace


def _case_4k_minus_2(k: int, checked: bool):
    if k < 2:
        raise ValueError("the counter-diagonal algorithm needs k >= 2")
    M = 12 * k - 6
    b = _DiagonalBuilder(build(M, M, 0), checked)

    b.seed_diagonal(1, lambda x, y: 1 if x <= 6 * k - 3 else 2)
    b.seed_diagonal(2, lambda x, y: 3 if 3 * k <= x <= 9 * k - 4 else 4)
    b.fill(M, (3, 4))
    b.fill(3, (1, 2))
    b.fill(12 * k - 7, (1, 2))
    b.fill(4, (3, 4))
    b.fill(12 * k - 8, (3, 4))
    b.fill(5, (1, 2))
    b.fill(12 * k - 9, (1, 2))
    b.checkpoint("step1", expect=8)

    for i in range(3 * (k - 2)):
        j = 5 + 2 * i
        b.fill(j + 1, (3, 4))
        b.fill(12 * k - j - 5, (3, 4))
        b.fill(j + 2, (1, 2))
        b.fill(12 * k - j - 6, (1, 2))
    b.checkpoint("step2", expect=8 + 12 * (k - 2))

    for x, y in ((3 * k - 3, 3 * k - 3), (9 * k - 6, 9 * k - 6)):
        b.forced(x, y, (3, 4))
    b.fill(6 * k - 6, (1, 2))
    for x, y in ((3 * k + 1, 3 * k + 1), (9 * k - 2, 9 * k - 2)):
        b.forced(x, y, (3, 4))
    b.fill(6 * k + 2, (1, 2))
    # prose puts the range end at 9k-4; the reference figure ends it at 9k-5
    b.ranged_diagonal(6 * k - 5, (3, 4),
                      ((3 * k - 2, 3 * k - 3), (3 * k - 3, 3 * k - 2)),
                      ((9 * k - 5, 9 * k - 6), (9 * k - 6, 9 * k - 5)),
                      3 * k - 1, 9 * k - 5)
    b.ranged_diagonal(6 * k + 1, (3, 4),
                      ((3 * k + 1, 3 * k), (3 * k, 3 * k + 1)),
                      ((9 * k - 2, 9 * k - 3), (9 * k - 3, 9 * k - 2)),
                      3 * k + 2, 9 * k - 4)
    b.checkpoint("step3", expect=4 + 12 * (k - 2))

    # D(6k-4): the color is read off the vertex directly below
    for v in b.tri.counter_diagonal(6 * k - 4):
        x, y = b.tri.coords(v)
        below = b.color_at(x, 1 + (y - 2) % M)
        if below not in (3, 4):
            raise ConstructionError(
                f"vertex below ({x},{y}) should be colored 3 or 4")
        b.put(x, y, 1 if below == 4 else 2, source="row-below rule")
    b.mark(6 * k - 4)

    # D(6k): one forced vertex fixes the out-of-range color, its partner
    # (misprinted in the prose) is recovered as the opposite color
    c2 = b.forced(9 * k - 2, 9 * k - 4, (1, 2))
    c1 = 3 - c2
    for v in b.tri.counter_diagonal(6 * k):
        if b.colors[v]:
            continue
        x, y = b.tri.coords(v)
        b.put(x, y, c1 if 3 * k <= x <= 9 * k - 4 else c2,
              source="middle diagonal rule")
    b.mark(6 * k)

    for x, y in ((3 * k - 1, 3 * k - 2), (9 * k - 4, 9 * k - 5)):
        b.forced(x, y, (3, 4))
    b.fill(6 * k - 3, (1, 2))
    b.ranged_diagonal(6 * k - 2, (3, 4),
                      ((3 * k, 3 * k - 2), (3 * k - 1, 3 * k - 1)),
                      ((9 * k - 3, 9 * k - 5), (9 * k - 4, 9 * k - 4)),
                      3 * k + 1, 9 * k - 2)

    seven = ((3 * k + 1, 3 * k - 2), (3 * k, 3 * k - 1), (3 * k - 1, 3 * k),
             (9 * k - 1, 9 * k - 6), (9 * k - 2, 9 * k - 5),
             (9 * k - 3, 9 * k - 4), (9 * k - 4, 9 * k - 3))
    b.fill(6 * k - 1, (3, 4), skip=seven)
    for x, y in seven:
        b.forced(x, y, (1, 2, 3, 4))
    b.mark(6 * k - 1)
    b.checkpoint("step4", expect=6 + 12 * (k - 2))
    return b.finish(), b.trace


def construct_deg6_symmetric(L: int, checked: bool = True
                             ) -> tuple[Coloring, ConstructionTrace]:
    """A proper 4-coloring of T(3L,3L) with degree 6 (mod 12), L >= 2."""
    if L < 2:
        raise ValueError("witnesses exist for L >= 2 only")
    m = L % 4
    if m == 2:
        if L == 2:
            return _case_l_eq_2(checked)
        return _case_4k_minus_2((L + 2) // 4, checked)
    if m == 3:
        return _case_4k_minus_1((L + 1) // 4, checked)
    if m == 0:
        return _case_4k(L // 4, checked)
    return _case_4k_plus_1((L - 1) // 4, checked)


def extend_periodic(c: Coloring, p: int, q: int) -> Coloring:
    """Tile a coloring of T(r,s) p times horizontally and q times vertically.

    The degree multiplies by p*q.  Undefined across a twist.
    """
    if c.tri.t != 0:
        raise ValueError("periodic extension across a twist is not defined")
    if p < 1 or q < 1:
        raise ValueError("extension factors must be positive")
    r, s = c.tri.r, c.tri.s
    big = build(r * p, s * q, 0)
    out = bytearray(big.n)
    for v in range(big.n):
        x, y = big.coords(v)
        out[v] = c.colors[c.tri.vertex((x - 1) % r + 1, (y - 1) % s + 1)]
    return Coloring(big, c.q, bytes(out))


_STRIP_ROWS = {
    # L mod 4 -> k parity -> (c1, c2, c3) row patterns; {t} is the repeat
    3: {0: ("23[1423]^{t} 14 [2413]^{t} 4",
            "3[1423]^{t} 142 [1324]^{t} 2",
            "[1423]^{t} 1231 [3241]^{t} 3"),
        1: ("23[1423]^{t} 14231 [3241]^{t} 34",
            "3[1423]^{t} 1423124 [1324]^{t} 2",
            "[1423]^{t} 14214241 [3241]^{t} 3")},
    0: {0: ("4[2314]^{t} 312413 [2413]^{t} 2",
            "3[1423]^{t} 124132 [4132]^{t} 4",
            "[1423]^{t} 1431341 [3241]^{t} 3"),
        1: ("4[2314]^{t} 2342312413 [2413]^{t} 2",
            "3[1423]^{t} 1423423132 [4132]^{t} 4",
            "[1423]^{t} 14234231241 [3241]^{t} 3")},
    # odd-k rows below fix two misprints in the published table (c2's
    # leading block and c1's final digit), pinned by properness plus the
    # top-row match; any proper width-3 strip has degree zero regardless
    1: {0: ("2[3142]^{t} 314214213 [2413]^{t} 4",
            "3[1423]^{t} 14214213 [2413]^{t} 42",
            "[1423]^{t} 1421423421 [3241]^{t} 3"),
        1: ("[2314]^{t1} 2312312413 [2413]^{t} 4",
            "[3142]^{t1} 312312413 [2413]^{t} 42",
            "[1423]^{t1} 1231431241 [3241]^{t} 3")},
    2: {0: ("[2314]^{t1} 231241243 [2413]^{t1} 4",
            "3[1423]^{t1} 1241243 [2413]^{t1} 42",
            "[1423]^{t1} 1241243241241 [3241]^{t} 3"),
        1: ("[2314]^{t2} 21321341 3 [2413]^{t1} 4",
            "[3142]^{t2} 13213413 [2413]^{t1} 42",
            "[1423]^{t1} 14213213413213 [2413]^{t1}")},
}


def strip_rows(L: int) -> tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]]:
    """Row sequences (c1, c2, c3) of the degree-zero strip on T(3L,3)."""
    if L < 3:
        raise ValueError("strips are defined for L >= 3")
    m = L % 4
    if m == 3:
        k = (L + 1) // 4
        t = (3 * k - 2) // 2
    elif m == 0:
        k = L // 4
        t = (3 * k - 2) // 2
    elif m == 1:
        k = (L - 1) // 4
        t = (3 * k - 2) // 2
    else:
        k = (L + 2) // 4
        if k < 2:
            raise ValueError("no strip table for L = 2")
        t = (3 * k - 6) // 2
    pats = _STRIP_ROWS[m][k % 2]
    subst = {"{t}": str(t), "{t1}": str(t + 1), "{t2}": str(t + 2)}
    rows = []
    for pat in pats:
        for key, val in subst.items():
            pat = pat.replace(key, val)
        rows.append(expand_row_pattern(pat))
    return tuple(rows)


def build_strip(L: int) -> Coloring:
    """Proper degree-zero 4-coloring of T(3L,3) whose top row matches the
    top row of construct_deg6_symmetric(L)."""
    rows = strip_rows(L)
    tri = build(3 * L, 3, 0)
    c = coloring_from_rows(tri, rows)
    if not is_proper(tri, c):
        raise ConstructionError(f"strip for L={L} is not proper: bug")
    return c


def glue_strip(c: Coloring, strip: Coloring) -> Coloring:
    """Stack a width-3 torus coloring on top of c along their shared top row.

    Properness carries over and the signed degree is preserved exactly,
    because every strip has degree zero.
    """
    if strip.tri.s != 3 or strip.tri.t != 0:
        raise ValueError("second argument must color some T(L,3,0)")
    if strip.tri.r != c.tri.r:
        raise ValueError("widths differ; cannot glue")
    top = c.rows()[-1]
    if strip.rows()[-1] != top:
        raise ValueError("top rows differ; cannot glue")
    tri = build(c.tri.r, c.tri.s + 3, c.tri.t)
    return Coloring(tri, c.q, c.colors + strip.colors)


def construct_deg6(L: int, M: int, checked: bool = True) -> Coloring:
    """Witness 4-coloring of T(3L,3M) with degree 6 (mod 12).

    Supported: L >= 3 with M >= L (symmetric witness plus M-L glued
    strips), and L = 2 with M = 2p for odd p (tiled T(6,6) witness).
    Width-3 tori (L = 1) admit only degree-zero colorings.
    """
    if L == 2:
        if M % 2 or (M // 2) % 2 == 0:
            raise ValueError(
                f"T(6,{3 * M}) witness exists only for M = 2p with p odd")
        base, _ = construct_deg6_symmetric(2, checked)
        return extend_periodic(base, 1, M // 2)
    if L < 3 or M < L:
        raise ValueError(f"unsupported parameters (L={L}, M={M}): "
                         "need L >= 3 and M >= L, or L = 2 with M/2 odd")
    c, _ = construct_deg6_symmetric(L, checked)
    if M > L:
        strip = build_strip(L)
        for _ in range(M - L):
            c = glue_strip(c, strip)
    return c
