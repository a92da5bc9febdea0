"""Topological degree of a 4-coloring and derived invariants.

A proper 4-coloring maps the triangulation onto the boundary of the
tetrahedron on colors {1,2,3,4}.  Scanning all faces, each face whose
colors hit a fixed target triangle contributes +1 when the clockwise
boundary ordering agrees with the target's orientation and -1 when it is
reversed; the degree is the net count and is independent of the target
triangle up to sign conventions.

The global sign is pinned by one fixture: the reference non-singular
coloring of T(6,6) (see fixtures/t66_ns.grid) has degree +18.
"""

from __future__ import annotations

from dataclasses import dataclass

from .coloring import Coloring, is_proper
from .lattice import Triangulation

# Orientations of the four triangles of the tetrahedron boundary, chosen
# consistently so the signed count agrees for every target.
TARGET_ORIENTATIONS = {
    frozenset({1, 2, 3}): (1, 2, 3),
    frozenset({1, 3, 4}): (1, 3, 4),
    frozenset({1, 2, 4}): (1, 4, 2),
    frozenset({2, 3, 4}): (2, 4, 3),
}


@dataclass(frozen=True)
class DegreeReport:
    p: int            # orientation-preserving faces on the target triangle
    n: int            # orientation-reversing faces
    degree: int       # p - n
    degree_abs: int
    mod2: int
    mod4: int
    mod6: int
    mod12: int

    @classmethod
    def from_counts(cls, p: int, n: int) -> "DegreeReport":
        d = p - n
        return cls(p, n, d, abs(d), d % 2, d % 4, d % 6, d % 12)

    def to_dict(self) -> dict:
        return {"p": self.p, "n": self.n, "degree": self.degree,
                "degree_abs": self.degree_abs,
                "mod2": self.mod2, "mod4": self.mod4,
                "mod6": self.mod6, "mod12": self.mod12}


def _orient_sign(a: int, b: int, c: int, positive: tuple[int, int, int]) -> int:
    if (a, b, c) == positive or (b, c, a) == positive or (c, a, b) == positive:
        return 1
    return -1


def face_degree_counts(tri: Triangulation, colors, target=(1, 2, 3),
                       faces=None) -> tuple[int, int]:
    """(p, n) over the given faces (all faces by default).

    Accepts raw color sequences; faces containing a 0 (uncolored vertex)
    are skipped, which is what partial-degree monitoring needs.
    """
    tset = frozenset(target)
    if len(tset) != 3 or not tset <= {1, 2, 3, 4}:
        raise ValueError(f"target {target} is not a triangle of the tetrahedron")
    positive = TARGET_ORIENTATIONS[tset]
    p = n = 0
    face_list = tri.faces if faces is None else [tri.faces[f] for f in faces]
    for va, vb, vc in face_list:
        a, b, c = colors[va], colors[vb], colors[vc]
        if a == b or b == c or a == c:
            continue
        if {a, b, c} != tset:
            continue
        if _orient_sign(a, b, c, positive) > 0:
            p += 1
        else:
            n += 1
    return p, n


def partial_degree(tri: Triangulation, colors, faces=None, target=(1, 2, 3)) -> int:
    p, n = face_degree_counts(tri, colors, target, faces)
    return p - n


def degree(tri: Triangulation, c: Coloring, target=(1, 2, 3)) -> DegreeReport:
    """Degree report of a proper 4-coloring."""
    if c.q != 4:
        raise ValueError("degree is defined for 4-colorings only")
    if not is_proper(tri, c):
        raise ValueError("degree requires a proper coloring")
    p, n = face_degree_counts(tri, c.colors, target)
    return DegreeReport.from_counts(p, n)


def tutte_parity(tri: Triangulation, c: Coloring, a: int) -> int:
    """(sum of vertex degrees over the color class a) mod 2.

    Equals degree mod 2 for every color a; identically 0 on the
    6-regular tori, which is why all their 4-colorings have even degree.
    """
    if not 1 <= a <= c.q:
        raise ValueError(f"color {a} out of range 1..{c.q}")
    total = sum(len(tri.neighbors[v]) for v in range(tri.n) if c.colors[v] == a)
    return total % 2


def degree_residue_checks(tri: Triangulation, c: Coloring) -> dict:
    """Residue record for a proper 4-coloring of a 3-colorable torus.

    deg = 0 (mod 6) is a theorem there; a violation means the degree
    machinery itself is broken, so it raises AssertionError rather than
    reporting bad input.
    """
    if not tri.is_three_colorable():
        raise ValueError(f"{tri.descriptor()} is not three-colorable")
    rep = degree(tri, c)
    assert rep.mod6 == 0, (
        f"degree {rep.degree} not divisible by 6 on {tri.descriptor()}: bug")
    label = "ergodic-class" if rep.mod12 == 0 else "obstructed-class"
    return {"degree": rep.degree, "degree_abs": rep.degree_abs,
            "mod6": rep.mod6, "mod12": rep.mod12, "label": label}


def max_degree_bound(L: int) -> int:
    """Largest possible |degree| of a 4-coloring of T(3L,3L)."""
    if L < 1:
        raise ValueError("L must be positive")
    return 9 * L * L // 2
