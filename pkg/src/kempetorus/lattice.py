"""6-regular torus triangulations T(r,s,t).

Vertices live on an r x s grid with coordinates (x, y), 1 <= x <= r,
1 <= y <= s, and are indexed v = (y-1)*r + (x-1).  Every vertex has six
neighbours: east/west, north/south, and the two inclined ones to the
north-east and south-west.  Horizontal wrap is plain; crossing the top
row shifts x by the twist t (the north neighbour of (x, s) is
(x+t mod r, 1)), and the bottom wrap shifts by -t.

Each unit cell contributes two triangular faces, stored with their
boundary in clockwise order so that degree computations have a fixed
global orientation:

    up   triangle at (x, y): (x,y) -> (x+1,y+1) -> (x+1,y)
    down triangle at (x, y): (x,y) -> (x,y+1)   -> (x+1,y+1)
"""

from __future__ import annotations

import json
from functools import lru_cache

# direction order: E, W, N, S, NE, SW
DISPLACEMENTS = ((1, 0), (-1, 0), (0, 1), (0, -1), (1, 1), (-1, -1))


class NotSimpleError(ValueError):
    """Raised when (r,s,t) does not yield a simple 6-regular triangulation."""


class Triangulation:
    """Immutable triangulation T(r,s,t); safe to share between workers."""

    __slots__ = (
        "r", "s", "t", "n",
        "neighbors",        # list of 6-tuples, direction order E,W,N,S,NE,SW
        "faces",            # list of vertex triples, clockwise boundary order
        "edges",            # list of (u, v, apex1, apex2) with u < v
        "edge_index",       # (u, v) sorted pair -> edge id
        "face_adjacency",   # face id -> 3 (neighbour face id, shared edge id)
        "step_vector",      # (u, v) directed edge -> displacement (dx, dy)
    )

    def __init__(self, r: int, s: int, t: int):
        if r < 1 or s < 1 or not 0 <= t < max(r, 1):
            raise NotSimpleError(f"invalid parameters T({r},{s},{t})")
        self.r, self.s, self.t = r, s, t
        self.n = r * s

        nbrs = []
        step = {}
        for v in range(self.n):
            x, y = v % r + 1, v // r + 1
            row = []
            for dx, dy in DISPLACEMENTS:
                w = self._wrap(x + dx, y + dy)
                row.append(w)
                step[(v, w)] = (dx, dy)
            nbrs.append(tuple(row))
        # simplicity: no loops, no parallel edges
        for v, row in enumerate(nbrs):
            if v in row or len(set(row)) != 6:
                raise NotSimpleError(
                    f"T({r},{s},{t}) is not a simple 6-regular triangulation")
        self.neighbors = nbrs
        self.step_vector = step

        faces = []
        for v in range(self.n):
            x, y = v % r + 1, v // r + 1
            e = self._wrap(x + 1, y)
            ne = self._wrap(x + 1, y + 1)
            no = self._wrap(x, y + 1)
            faces.append((v, ne, e))   # up, clockwise
            faces.append((v, no, ne))  # down, clockwise
        self.faces = faces

        by_edge: dict[tuple[int, int], list[tuple[int, int]]] = {}
        for fid, (a, b, c) in enumerate(faces):
            for u, w, apex in ((a, b, c), (b, c, a), (c, a, b)):
                key = (u, w) if u < w else (w, u)
                by_edge.setdefault(key, []).append((fid, apex))
        edges = []
        edge_index = {}
        face_adj = [[] for _ in faces]
        for key in sorted(by_edge):
            inc = by_edge[key]
            if len(inc) != 2:
                raise NotSimpleError(
                    f"edge {key} lies in {len(inc)} faces in T({r},{s},{t})")
            (f1, apex1), (f2, apex2) = inc
            eid = len(edges)
            edges.append((key[0], key[1], apex1, apex2))
            edge_index[key] = eid
            face_adj[f1].append((f2, eid))
            face_adj[f2].append((f1, eid))
        self.edges = edges
        self.edge_index = edge_index
        self.face_adjacency = [tuple(x) for x in face_adj]

    def _wrap(self, x: int, y: int) -> int:
        # a vertical wrap shifts x by +-t; only +-1 row steps occur here
        qy, ry = divmod(y - 1, self.s)
        return (x - 1 + qy * self.t) % self.r + ry * self.r

    def vertex(self, x: int, y: int) -> int:
        """Index of the vertex at coordinates (x, y), 1-based."""
        if not (1 <= x <= self.r and 1 <= y <= self.s):
            raise ValueError(f"coordinates ({x},{y}) outside T({self.r},{self.s},{self.t})")
        return (y - 1) * self.r + (x - 1)

    def coords(self, v: int) -> tuple[int, int]:
        return v % self.r + 1, v // self.r + 1

    def is_three_colorable(self) -> bool:
        return is_three_colorable(self.r, self.s, self.t)

    def counter_diagonal(self, j: int) -> list[int]:
        """Vertices of the anti-diagonal Dj, ordered by increasing y.

        Dj is the class x + y = j (mod r); D1 passes through (r, 1).
        """
        if not 1 <= j <= self.r:
            raise ValueError(f"diagonal index {j} out of range 1..{self.r}")
        return [(j - y - 1) % self.r + (y - 1) * self.r for y in range(1, self.s + 1)]

    def edge_between(self, u: int, v: int) -> int:
        key = (u, v) if u < v else (v, u)
        return self.edge_index[key]

    def descriptor(self) -> str:
        return f"T({self.r},{self.s},{self.t})"

    def to_json(self) -> str:
        """Adjacency and face tables, for debugging."""
        return json.dumps({
            "r": self.r, "s": self.s, "t": self.t,
            "adjacency": [list(row) for row in self.neighbors],
            "faces": [list(f) for f in self.faces],
        })

    def __repr__(self):
        return f"Triangulation({self.r},{self.s},{self.t})"

    def __eq__(self, other):
        return (isinstance(other, Triangulation)
                and (self.r, self.s, self.t) == (other.r, other.s, other.t))

    def __hash__(self):
        return hash((self.r, self.s, self.t))


@lru_cache(maxsize=None)
def build(r: int, s: int, t: int = 0) -> Triangulation:
    """Construct T(r,s,t), rejecting parameters that give loops or multi-edges."""
    return Triangulation(r, s, t)


def is_three_colorable(r: int, s: int, t: int = 0) -> bool:
    """Three-colorability criterion: r = 0 (mod 3) and s - t = 0 (mod 3)."""
    return r % 3 == 0 and (s - t) % 3 == 0


def parse_descriptor(text: str) -> Triangulation:
    """Parse the textual form "T(r,s,t)" (twist optional, default 0)."""
    body = text.strip()
    if body.startswith(("T(", "t(")) and body.endswith(")"):
        body = body[2:-1]
    parts = [p.strip() for p in body.split(",")]
    if len(parts) == 2:
        parts.append("0")
    if len(parts) != 3:
        raise ValueError(f"cannot parse triangulation descriptor {text!r}")
    try:
        r, s, t = (int(p) for p in parts)
    except ValueError as exc:
        raise ValueError(f"cannot parse triangulation descriptor {text!r}") from exc
    return build(r, s, t)
