"""Non-singular edge structure of 4-colorings.

An edge xy with flanking triangles xyz and xyw is singular when z and w
receive the same color and non-singular otherwise.  For each unordered
color pair {i,j}, the non-singular edges whose endpoints are colored i
and j form N_ij, a disjoint union of cycles; every cycle has a homotopy
type (a,b) on the torus (winding numbers along the two fundamental
loops, twist crossings included) and is contractible iff (a,b) = (0,0).

ns_minimal_reduce eliminates non-singular structure by color swaps on
disk and cylinder regions bounded by N_ij cycles.  Each surgery is a set
of Kempe changes, strictly shrinks N(f), and never creates non-singular
edges outside the previous N(f); the loop stops when every nonempty N_ij
is a single non-contractible cycle (an NS-minimal coloring).
"""

from __future__ import annotations

from dataclasses import dataclass

from .coloring import Coloring, is_proper
from .degree import degree
from .kempe import KempeMove, kempe_components
from .lattice import Triangulation

PAIRS = ((1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4))


@dataclass(frozen=True)
class NsCycle:
    pair: tuple[int, int]
    vertices: tuple[int, ...]   # consecutive vertices adjacent, cyclically
    homotopy: tuple[int, int]   # sign-canonical winding numbers

    @property
    def contractible(self) -> bool:
        return self.homotopy == (0, 0)

    def edges(self, tri: Triangulation) -> list[int]:
        vs = self.vertices
        return [tri.edge_between(vs[i], vs[(i + 1) % len(vs)])
                for i in range(len(vs))]


@dataclass(frozen=True)
class EdgeClassification:
    singular: tuple[int, ...]
    nonsingular: dict  # (i, j) with i < j -> tuple of edge ids

    def all_nonsingular(self) -> list[int]:
        return [e for es in self.nonsingular.values() for e in es]


def classify_edges(tri: Triangulation, c: Coloring) -> EdgeClassification:
    """Label every edge singular / non-singular; bucket the latter by pair."""
    singular = []
    buckets: dict[tuple[int, int], list[int]] = {p: [] for p in PAIRS}
    col = c.colors
    for eid, (u, v, z, w) in enumerate(tri.edges):
        if col[z] == col[w]:
            singular.append(eid)
        else:
            a, b = col[u], col[v]
            buckets[(a, b) if a < b else (b, a)].append(eid)
    return EdgeClassification(tuple(singular),
                              {p: tuple(es) for p, es in buckets.items()})


def _sign_canonical(a: int, b: int) -> tuple[int, int]:
    if a < 0 or (a == 0 and b < 0):
        return -a, -b
    return a, b


def _cycle_homotopy(tri: Triangulation, vertices) -> tuple[int, int]:
    dx = dy = 0
    for i, u in enumerate(vertices):
        v = vertices[(i + 1) % len(vertices)]
        sx, sy = tri.step_vector[(u, v)]
        dx += sx
        dy += sy
    if dy % tri.s:
        raise AssertionError("cycle displacement not a lattice period: bug")
    b = dy // tri.s
    if (dx - b * tri.t) % tri.r:
        raise AssertionError("cycle displacement not a lattice period: bug")
    return _sign_canonical((dx - b * tri.t) // tri.r, b)


def ns_cycles(tri: Triangulation, c: Coloring, i: int, j: int) -> list[NsCycle]:
    """Decompose N_ij into vertex-disjoint cycles with homotopy types."""
    if i == j:
        raise ValueError("colors must be distinct")
    pair = (i, j) if i < j else (j, i)
    col = c.colors
    incident: dict[int, list[int]] = {}
    for u, v, z, w in tri.edges:
        if col[z] != col[w] and {col[u], col[v]} == set(pair):
            incident.setdefault(u, []).append(v)
            incident.setdefault(v, []).append(u)
    for v, nb in incident.items():
        if len(nb) != 2:
            raise AssertionError(
                f"vertex {v} has {len(nb)} incident non-singular {pair} edges; "
                "expected exactly 2: bug")
    cycles = []
    seen = set()
    for start in sorted(incident):
        if start in seen:
            continue
        walk = [start]
        seen.add(start)
        prev, cur = None, start
        while True:
            a, b = incident[cur]
            nxt = a if a != prev else b
            if nxt == start:
                break
            walk.append(nxt)
            seen.add(nxt)
            prev, cur = cur, nxt
        cycles.append(NsCycle(pair, tuple(walk), _cycle_homotopy(tri, walk)))
    return cycles


def all_ns_cycles(tri: Triangulation, c: Coloring) -> dict:
    return {p: ns_cycles(tri, c, *p) for p in PAIRS}


def algcr(h1, h2) -> int:
    """Algebraic crossing number of homotopy types: det of their 2x2 matrix."""
    (a, b), (cc, d) = h1, h2
    return a * d - b * cc


def _face_components(tri: Triangulation, cut_edges: set) -> list[list[int]]:
    """Components of the face-adjacency graph after cutting along edges."""
    seen = [False] * len(tri.faces)
    comps = []
    for f0 in range(len(tri.faces)):
        if seen[f0]:
            continue
        comp = []
        stack = [f0]
        seen[f0] = True
        while stack:
            f = stack.pop()
            comp.append(f)
            for g, eid in tri.face_adjacency[f]:
                if eid not in cut_edges and not seen[g]:
                    seen[g] = True
                    stack.append(g)
        comps.append(comp)
    return comps


def _euler_characteristic(tri: Triangulation, faces) -> int:
    vs = set()
    es = set()
    for f in faces:
        a, b, c = tri.faces[f]
        vs.update((a, b, c))
        es.add(tri.edge_between(a, b))
        es.add(tri.edge_between(b, c))
        es.add(tri.edge_between(c, a))
    return len(vs) - len(es) + len(faces)


def _region_vertices(tri: Triangulation, faces) -> set:
    out = set()
    for f in faces:
        out.update(tri.faces[f])
    return out


def _swap_region(tri: Triangulation, c: Coloring, interior: set,
                 k: int, l: int) -> tuple[Coloring, list[KempeMove]]:
    """Swap colors k,l on the interior of a region bounded by {i,j} cycles.

    The interior k/l vertices split into whole Kempe components of the
    k,l subgraph (no component can cross the boundary, which carries
    neither color), so the swap is a set of K-changes; they are returned
    as the replayable move log.
    """
    moves = []
    for comp in kempe_components(tri, c, k, l):
        inside = comp & interior
        if not inside:
            continue
        if inside != comp:
            raise AssertionError(
                "Kempe component crosses a two-colored region boundary: bug")
        moves.append(KempeMove(k, l, comp))
    out = bytearray(c.colors)
    for move in moves:
        for v in move.component:
            out[v] = l if out[v] == k else k
    return c.with_colors(out), moves


def _disk_surgery(tri, c, cycle: NsCycle):
    cut = set(cycle.edges(tri))
    comps = _face_components(tri, cut)
    if len(comps) != 2:
        raise AssertionError(
            f"contractible cycle split faces into {len(comps)} regions: bug")
    disks = [fs for fs in comps if _euler_characteristic(tri, fs) == 1]
    if len(disks) != 1:
        raise AssertionError("no unique disk side for a contractible cycle: bug")
    interior = _region_vertices(tri, disks[0]) - set(cycle.vertices)
    k, l = [x for x in (1, 2, 3, 4) if x not in cycle.pair]
    return _swap_region(tri, c, interior, k, l)


def _cylinder_surgery(tri, c, c1: NsCycle, c2: NsCycle):
    if c1.homotopy != c2.homotopy:
        raise AssertionError(
            "disjoint cycles of one N_ij with unequal homotopy types: bug")
    cut = set(c1.edges(tri)) | set(c2.edges(tri))
    comps = _face_components(tri, cut)
    if len(comps) != 2:
        raise AssertionError(
            f"cycle pair split faces into {len(comps)} regions: bug")
    # both sides are cylinders; pick the smaller, tie -> least face index
    comps.sort(key=lambda fs: (len(fs), min(fs)))
    interior = (_region_vertices(tri, comps[0])
                - set(c1.vertices) - set(c2.vertices))
    k, l = [x for x in (1, 2, 3, 4) if x not in c1.pair]
    return _swap_region(tri, c, interior, k, l)


def ns_minimal_reduce(tri: Triangulation, c: Coloring
                      ) -> tuple[Coloring, list[KempeMove]]:
    """Reduce to an NS-minimal coloring in the same Kempe class.

    Returns the reduced coloring and the K-change log; replaying the log
    through kempe_change reproduces the reduction.  |N(f)| strictly
    decreases at every step and never gains new members, so the loop
    terminates within |E| surgeries.
    """
    if not tri.is_three_colorable():
        raise ValueError(f"{tri.descriptor()} is not three-colorable")
    if c.q != 4:
        raise ValueError("reduction expects a 4-coloring")
    if not is_proper(tri, c):
        raise ValueError("reduction expects a proper coloring")
    log: list[KempeMove] = []
    prev_ns = None
    for _ in range(len(tri.edges) + 1):
        cls = classify_edges(tri, c)
        current = set(cls.all_nonsingular())
        if prev_ns is not None:
            if not current < prev_ns:
                raise AssertionError(
                    "surgery failed to strictly shrink the non-singular set: bug")
        prev_ns = current
        surgery = None
        for pair in PAIRS:
            if not cls.nonsingular[pair]:
                continue
            cycles = ns_cycles(tri, c, *pair)
            contractible = [cy for cy in cycles if cy.contractible]
            if contractible:
                surgery = ("disk", contractible[0])
                break
            if len(cycles) >= 2 and surgery is None:
                surgery = ("cylinder", cycles[0], cycles[1])
                # keep scanning: a contractible cycle elsewhere takes priority
        if surgery is None:
            return c, log
        if surgery[0] == "disk":
            c, moves = _disk_surgery(tri, c, surgery[1])
        else:
            c, moves = _cylinder_surgery(tri, c, surgery[1], surgery[2])
        log.extend(moves)
    raise AssertionError("reduction exceeded the |E| surgery bound: bug")


def check_ns_minimal_structure(tri: Triangulation, c: Coloring) -> dict:
    """Structure report of an NS-minimal coloring.

    For a non-trivial NS-minimal coloring: all six N_ij are single
    non-contractible cycles; N_ij and N_kl are homotopic exactly when
    the pairs are disjoint; the three |algcr| values among {N_12, N_13,
    N_14} coincide; and the degree is 2 (mod 4).  Any violation on a
    certified input is an implementation bug (AssertionError).
    """
    if not tri.is_three_colorable():
        raise ValueError(f"{tri.descriptor()} is not three-colorable")
    cycles = all_ns_cycles(tri, c)
    if all(not cs for cs in cycles.values()):
        return {"trivial": True}
    for pair in PAIRS:
        cs = cycles[pair]
        assert len(cs) == 1, \
            f"N_{pair} has {len(cs)} cycles in an NS-minimal coloring: bug"
        assert not cs[0].contractible, \
            f"N_{pair} is contractible in an NS-minimal coloring: bug"
    hom = {pair: cycles[pair][0].homotopy for pair in PAIRS}
    for p1 in PAIRS:
        for p2 in PAIRS:
            if p1 >= p2:
                continue
            disjoint = not (set(p1) & set(p2))
            assert (hom[p1] == hom[p2]) == disjoint, (
                f"homotopy pattern violated for {p1} vs {p2}: "
                f"{hom[p1]} vs {hom[p2]}: bug")
    crossings = {abs(algcr(hom[(1, 2)], hom[(1, 3)])),
                 abs(algcr(hom[(1, 2)], hom[(1, 4)])),
                 abs(algcr(hom[(1, 3)], hom[(1, 4)]))}
    assert len(crossings) == 1, \
        f"pairwise |algcr| values differ: {crossings}: bug"
    rep = degree(tri, c)
    assert rep.mod4 == 2, \
        f"NS-minimal degree {rep.degree} is not 2 (mod 4): bug"
    return {"trivial": False,
            "homotopy": {p: hom[p] for p in PAIRS},
            "cycle_lengths": {p: len(cycles[p][0].vertices) for p in PAIRS},
            "algcr_abs": crossings.pop(),
            "degree": rep.degree,
            "degree_mod4": rep.mod4}
