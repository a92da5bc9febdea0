"""Exhaustive enumeration of canonical proper colorings and their Kempe classes.

Enumeration is depth-first backtracking over vertices in row-major order
with forward properness checks against already-colored neighbours.  One
orbit representative per global color permutation is generated by pinning
the face {(1,1),(2,1),(2,2)} to colors 1,2,3 (every orbit of a proper
coloring contains exactly one member with that face so colored); colors
beyond 3 must first appear in ascending order, which is vacuous for q=4.
The signed degree is maintained incrementally as faces complete, so the
|degree| histogram costs O(1) per leaf.

Class decomposition is a BFS over the Kempe graph on canonical states,
keyed by a 2-bit-per-vertex packed encoding.  Kempe components are found
with shift-based bitboard flood fills (the lattice is translation
invariant, so the neighbourhood of a vertex set is six shifted copies).
The visited set is an in-memory set by default and spills to sorted
on-disk runs above a configurable threshold.
"""

from __future__ import annotations

import heapq
import itertools
import multiprocessing
import os
import time
from dataclasses import dataclass, field

import numpy as np

from .coloring import Coloring, canonicalize, three_coloring
from .degree import degree
from .lattice import Triangulation, build


class BudgetExceeded(RuntimeError):
    def __init__(self, kind: str, limit):
        super().__init__(f"{kind} budget exceeded (limit {limit})")
        self.kind = kind
        self.limit = limit


# sign of a face colored (a,b,c) clockwise against target triangle {1,2,3};
# indexed base 10 so any q <= 9 stays in range
_SIGN = [0] * 1000
for _perm in itertools.permutations((1, 2, 3)):
    _s = 1 if _perm in ((1, 2, 3), (2, 3, 1), (3, 1, 2)) else -1
    _SIGN[_perm[0] * 100 + _perm[1] * 10 + _perm[2]] = _s


@dataclass
class EnumerationResult:
    total: int
    histogram: dict | None          # |degree| -> count, q = 4 only
    nodes: int                      # DFS assignments explored
    elapsed: float
    states: list | None = None      # canonical packed keys, if collected
    state_degrees: dict | None = None  # packed key -> |degree|


def _prepare(tri: Triangulation):
    n = tri.n
    back = [tuple(w for w in tri.neighbors[v] if w < v) for v in range(n)]
    faces_at = [[] for _ in range(n)]
    for f in tri.faces:
        faces_at[max(f)].append(f)
    faces_at = [tuple(fs) for fs in faces_at]
    return back, faces_at


def _dfs(tri, q, colors, start, used_max, budget, sink):
    """Backtracking continuation from vertex `start`; calls sink(colors, deg).

    `colors` must hold a proper partial assignment of vertices < start.
    Returns the number of assignments performed (nodes).
    """
    n = tri.n
    back, faces_at = _prepare(tri)
    pinned = {0: 1, 1: 2, tri.r + 1: 3}
    sign = _SIGN
    nodes = 0
    limit = budget if budget is not None else float("inf")

    deg0 = 0
    for v in range(start):
        for a, b, c in faces_at[v]:
            deg0 += sign[colors[a] * 100 + colors[b] * 10 + colors[c]]

    def rec(v, deg, used_max):
        nonlocal nodes
        if v == n:
            sink(colors, deg)
            return
        pin = pinned.get(v)
        if pin is not None:
            lo = hi = pin
        else:
            lo, hi = 1, min(q, used_max + 1)
        bk = back[v]
        fs = faces_at[v]
        for col in range(lo, hi + 1):
            ok = True
            for w in bk:
                if colors[w] == col:
                    ok = False
                    break
            if not ok:
                continue
            nodes += 1
            if nodes > limit:
                raise BudgetExceeded("nodes", budget)
            colors[v] = col
            d = deg
            for a, b, c in fs:
                d += sign[colors[a] * 100 + colors[b] * 10 + colors[c]]
            rec(v + 1, d, used_max if col <= used_max else col)
        colors[v] = 0

    rec(start, deg0, used_max)
    return nodes


def _collect_prefixes(tri, q, depth):
    """Proper pinned assignments of vertices [0, depth) for task splitting."""
    prefixes = []
    colors = bytearray(tri.n)
    back, _ = _prepare(tri)
    pinned = {0: 1, 1: 2, tri.r + 1: 3}

    def rec(v, used_max):
        if v == depth:
            prefixes.append((bytes(colors[:depth]), used_max))
            return
        pin = pinned.get(v)
        lo, hi = (pin, pin) if pin is not None else (1, min(q, used_max + 1))
        for col in range(lo, hi + 1):
            if any(colors[w] == col for w in back[v]):
                continue
            colors[v] = col
            rec(v + 1, max(used_max, col))
        colors[v] = 0

    rec(0, 3)
    return prefixes


def _pack(colors, offset=1) -> int:
    """2 bits per vertex, vertex 0 in the lowest bits; colors offset..offset+3."""
    packed = 0
    for v in reversed(range(len(colors))):
        packed = (packed << 2) | (colors[v] - offset)
    return packed


def _unpack(packed: int, n: int) -> bytes:
    return bytes(((packed >> (2 * v)) & 3) + 1 for v in range(n))


# 24 color-permutation remap tables over one packed byte (4 vertices)
_PERM_TABLES: dict[tuple, bytes] = {}
for _p in itertools.permutations(range(4)):
    _PERM_TABLES[_p] = bytes(
        _p[b & 3] | (_p[(b >> 2) & 3] << 2) | (_p[(b >> 4) & 3] << 4)
        | (_p[(b >> 6) & 3] << 6) for b in range(256))
_IDENTITY_PERM = (0, 1, 2, 3)

# spread a vertex-mask byte to a packed-domain 16-bit word (bit v -> bit 2v)
_SPREAD = []
for _b in range(256):
    _w = 0
    for _i in range(8):
        if _b >> _i & 1:
            _w |= 1 << (2 * _i)
    _SPREAD.append(_w)


def canonical_packed(packed: int, n: int, nbytes: int) -> int:
    """First-appearance canonical form of a packed q=4 coloring."""
    perm = [-1, -1, -1, -1]
    nxt = 0
    p = packed
    for _ in range(n):
        c = p & 3
        if perm[c] < 0:
            perm[c] = nxt
            nxt += 1
            if nxt == 4:
                break
        p >>= 2
    if nxt < 4:
        for c in range(4):
            if perm[c] < 0:
                perm[c] = nxt
                nxt += 1
    perm = tuple(perm)
    if perm == _IDENTITY_PERM:
        return packed
    table = _PERM_TABLES[perm]
    raw = packed.to_bytes(nbytes, "little")
    out = int.from_bytes(bytes(table[b] for b in raw), "little")
    return out & ((1 << (2 * n)) - 1)  # padding bits also got remapped


class PackedKempe:
    """Bitboard Kempe-move engine for q=4 on a fixed triangulation."""

    def __init__(self, tri: Triangulation):
        self.tri = tri
        n = self.n = tri.n
        self.nbytes = (2 * n + 7) // 8
        r, s, t = tri.r, tri.s, tri.t
        full = (1 << n) - 1
        col1 = colr = 0
        for y in range(s):
            col1 |= 1 << (y * r)
            colr |= 1 << (y * r + r - 1)
        row1 = (1 << r) - 1
        rows_mask = row1 << ((s - 1) * r)
        not_col1 = full ^ col1
        not_colr = full ^ colr
        not_row1 = full ^ row1
        not_rows = full ^ rows_mask

        def east(m):
            return ((m & not_colr) << 1) | ((m & colr) >> (r - 1))

        def west(m):
            return ((m & not_col1) >> 1) | ((m & col1) << (r - 1))

        def north(m):
            top = m >> ((s - 1) * r)
            if t:
                top = ((top << t) | (top >> (r - t))) & row1
            return ((m & not_rows) << r) | top

        def south(m):
            bot = m & row1
            if t:
                bot = ((bot >> t) | (bot << (r - t))) & row1
            return ((m & not_row1) >> r) | (bot << ((s - 1) * r))

        def neighborhood(m):
            nn = north(m)
            ss = south(m)
            return east(m) | west(m) | nn | ss | east(nn) | west(ss)

        self._nbh = neighborhood

    def pack(self, c: Coloring) -> int:
        return _pack(c.colors)

    def unpack(self, packed: int) -> Coloring:
        return Coloring(self.tri, 4, _unpack(packed, self.n))

    def canonical(self, packed: int) -> int:
        return canonical_packed(packed, self.n, self.nbytes)

    def color_masks(self, packed: int) -> list[int]:
        masks = [0, 0, 0, 0]
        for v in range(self.n):
            masks[(packed >> (2 * v)) & 3] |= 1 << v
        return masks

    def components(self, region: int) -> list[int]:
        nbh = self._nbh
        comps = []
        rem = region
        while rem:
            comp = rem & -rem
            while True:
                grown = comp | (nbh(comp) & region)
                if grown == comp:
                    break
                comp = grown
            comps.append(comp)
            rem &= ~comp
        return comps

    def _xor_mask(self, comp: int, xv: int) -> int:
        spread = 0
        shift = 0
        while comp:
            spread |= _SPREAD[comp & 0xFF] << shift
            comp >>= 8
            shift += 16
        return spread * xv

    def neighbor_keys(self, packed: int) -> list[int]:
        """Canonical packed forms reachable by one Kempe change.

        Swapping a component that covers the whole two-color subgraph is
        a global color permutation, hence canonically trivial; skipped.
        """
        masks = self.color_masks(packed)
        n, nbytes = self.n, self.nbytes
        out = []
        for a in range(4):
            for b in range(a + 1, 4):
                region = masks[a] | masks[b]
                if not region:
                    continue
                comps = self.components(region)
                if len(comps) <= 1:
                    continue
                xv = a ^ b
                for comp in comps:
                    out.append(canonical_packed(
                        packed ^ self._xor_mask(comp, xv), n, nbytes))
        return out


def _leaf_sink_factory(tri, q, collect):
    """Returns (sink, finish) where finish() -> (total, hist, states, degs)."""
    n = tri.n
    total = 0
    hist: dict[int, int] = {}
    states: list[int] = [] if collect else None
    degs: dict[int, int] = {} if collect else None
    nbytes = (2 * n + 7) // 8

    if q == 4:
        def sink(colors, deg):
            nonlocal total
            total += 1
            d = abs(deg)
            hist[d] = hist.get(d, 0) + 1
            if collect:
                key = canonical_packed(_pack(colors), n, nbytes)
                states.append(key)
                degs[key] = d
    else:
        def sink(colors, deg):
            nonlocal total
            total += 1

    def finish():
        return total, (hist if q == 4 else None), states, degs

    return sink, finish


def _enum_task(args):
    r, s, t, q, prefix, used_max, budget, collect = args
    tri = build(r, s, t)
    colors = bytearray(tri.n)
    colors[:len(prefix)] = prefix
    sink, finish = _leaf_sink_factory(tri, q, collect)
    nodes = _dfs(tri, q, colors, len(prefix), used_max, budget, sink)
    total, hist, states, degs = finish()
    return total, hist, nodes, states, degs


def enumerate_colorings(tri: Triangulation, q: int, *, budget_nodes=None,
                        threads: int = 1, collect: bool = False,
                        on_state=None) -> EnumerationResult:
    """Count canonical proper q-colorings; histogram |degree| for q = 4.

    `collect` gathers the canonical packed states (q = 4 only); results
    are independent of `threads`.
    """
    if q < 2:
        raise ValueError("q must be at least 2")
    if collect and q != 4:
        raise ValueError("state collection is implemented for q = 4")
    t0 = time.perf_counter()

    if threads > 1:
        depth = min(2 * tri.r, tri.n)
        prefixes = _collect_prefixes(tri, q, depth)
        args = [(tri.r, tri.s, tri.t, q, pre, um, budget_nodes, collect)
                for pre, um in prefixes]
        total = nodes = 0
        hist: dict[int, int] = {}
        states = [] if collect else None
        degs = {} if collect else None
        with multiprocessing.Pool(threads) as pool:
            for ptotal, phist, pnodes, pstates, pdegs in pool.imap_unordered(
                    _enum_task, args, chunksize=max(1, len(args) // (8 * threads))):
                total += ptotal
                nodes += pnodes
                if budget_nodes is not None and nodes > budget_nodes:
                    raise BudgetExceeded("nodes", budget_nodes)
                if phist:
                    for k, v in phist.items():
                        hist[k] = hist.get(k, 0) + v
                if collect:
                    states.extend(pstates)
                    degs.update(pdegs)
        if collect:
            states.sort()
        if on_state is not None and collect:
            for key in states:
                on_state(key)
        return EnumerationResult(total, hist if q == 4 else None, nodes,
                                 time.perf_counter() - t0, states, degs)

    colors = bytearray(tri.n)
    sink, finish = _leaf_sink_factory(tri, q, collect)
    if on_state is not None:
        base_sink = sink
        n, nbytes = tri.n, (2 * tri.n + 7) // 8

        def sink(cols, deg):
            base_sink(cols, deg)
            on_state(canonical_packed(_pack(cols), n, nbytes))

    nodes = _dfs(tri, q, colors, 0, 3, budget_nodes, sink)
    total, hist, states, degs = finish()
    if collect:
        states.sort()
    return EnumerationResult(total, hist, nodes, time.perf_counter() - t0,
                             states, degs)


@dataclass
class KempeClass:
    size: int
    residue: int                 # degree mod 12, constant on the class
    representative: Coloring
    degree_abs_counts: dict = field(default_factory=dict)


@dataclass
class ClassDecomposition:
    tri: Triangulation
    q: int
    total: int
    classes: list

    @property
    def num_classes(self) -> int:
        return len(self.classes)


class SortedRunKeySet:
    """Insert-only key set with sorted-run spill to disk.

    Keys are arbitrary-width ints, stored big-endian in fixed 16-byte
    cells so numpy 'S16' lexicographic order matches numeric order.
    Membership filtering is a vectorised searchsorted over the runs plus
    a bounded in-memory buffer; flushing writes one sorted, deduplicated
    run per chunk.
    """

    WIDTH = 16

    def __init__(self, directory, flush_items=2_000_000):
        os.makedirs(directory, exist_ok=True)
        self.dir = directory
        self.flush_items = flush_items
        self.buffer: set[bytes] = set()
        self.runs: list[str] = []
        self.count = 0

    @staticmethod
    def _enc(key: int) -> bytes:
        return key.to_bytes(SortedRunKeySet.WIDTH, "big")

    def _in_runs(self, arr: np.ndarray) -> np.ndarray:
        mask = np.zeros(len(arr), dtype=bool)
        for path in self.runs:
            run = np.load(path, mmap_mode="r")
            if not len(run):
                continue
            idx = np.searchsorted(run, arr)
            idx[idx == len(run)] = len(run) - 1
            mask |= np.asarray(run[idx]) == arr
        return mask

    def add_new(self, keys) -> list[int]:
        """Insert keys not already present; returns the truly new ones."""
        fresh = [(k, b) for k, b in ((k, self._enc(k)) for k in keys)
                 if b not in self.buffer]
        if not fresh:
            return []
        if self.runs:
            hit = self._in_runs(np.array([b for _, b in fresh], dtype="S16"))
        else:
            hit = np.zeros(len(fresh), dtype=bool)
        out = []
        for (k, b), h in zip(fresh, hit):
            if not h and b not in self.buffer:
                self.buffer.add(b)
                out.append(k)
        self.count += len(out)
        if len(self.buffer) >= self.flush_items:
            self.flush()
        return out

    def __contains__(self, key: int) -> bool:
        b = self._enc(key)
        if b in self.buffer:
            return True
        if not self.runs:
            return False
        return bool(self._in_runs(np.array([b], dtype="S16"))[0])

    def flush(self):
        if not self.buffer:
            return
        arr = np.array(sorted(self.buffer), dtype="S16")
        path = os.path.join(self.dir, f"run{len(self.runs):05d}.npy")
        np.save(path, arr)
        self.runs.append(path)
        self.buffer.clear()

    def iter_sorted(self):
        """Stream all keys in ascending order (runs merged lazily)."""
        self.flush()
        streams = [iter(np.load(p, mmap_mode="r")) for p in self.runs]
        for b in heapq.merge(*streams):
            yield int.from_bytes(bytes(b), "big")

    def __len__(self):
        return self.count


def _bfs_class_stats(engine: PackedKempe, seed: int, universe, visited,
                     deg_of, budget_states=None):
    """BFS one Kempe class; returns (size, |degree| histogram).

    `visited` is a set or a SortedRunKeySet; membership marking is
    level-synchronous, so memory is bounded by the widest BFS level
    when the visited set spills.
    """
    in_memory = isinstance(visited, set)
    if in_memory:
        visited.add(seed)
    else:
        visited.add_new([seed])
    frontier = [seed]
    size = 0
    dhist: dict[int, int] = {}
    while frontier:
        size += len(frontier)
        if budget_states is not None and size > budget_states:
            raise BudgetExceeded("states", budget_states)
        for k in frontier:
            d = deg_of(k)
            dhist[d] = dhist.get(d, 0) + 1
        nxt = set()
        for state in frontier:
            nxt.update(engine.neighbor_keys(state))
        if in_memory:
            fresh = []
            for k in nxt:
                if k not in visited:
                    if universe is not None and k not in universe:
                        raise AssertionError(
                            "Kempe move left the enumerated state universe: bug")
                    visited.add(k)
                    fresh.append(k)
        else:
            fresh = visited.add_new(sorted(nxt))
        frontier = fresh
    return size, dhist


def _decode_degree(tri: Triangulation, packed: int) -> int:
    from .degree import face_degree_counts
    colors = _unpack(packed, tri.n)
    p, n = face_degree_counts(tri, colors)
    return abs(p - n)


def kempe_classes(tri: Triangulation, q: int = 4, *, budget_nodes=None,
                  budget_states=None, threads: int = 1,
                  spill_dir=None) -> ClassDecomposition:
    """Partition all canonical proper q-colorings into Kempe classes.

    q = 4 uses the packed bitboard engine, with every state held in
    memory by default; `spill_dir` switches the enumerated universe and
    the BFS visited set to sorted-run files so only one BFS level plus a
    bounded buffer stays resident.  Other q fall back to a generic
    canonical-bytes BFS (small instances only).
    """
    if q != 4:
        return _kempe_classes_generic(tri, q, budget_nodes, budget_states)
    engine = PackedKempe(tri)
    classes = []
    if spill_dir is None:
        enum = enumerate_colorings(tri, q, budget_nodes=budget_nodes,
                                   threads=threads, collect=True)
        keys = enum.states
        degs = enum.state_degrees
        universe = set(keys)
        visited: set[int] = set()
        seeds = keys
        deg_of = degs.__getitem__
        total_expected = enum.total
    else:
        universe = SortedRunKeySet(os.path.join(spill_dir, "universe"))
        batch: list[int] = []

        def on_state(key):
            batch.append(key)
            if len(batch) >= 65536:
                universe.add_new(batch)
                batch.clear()

        enum = enumerate_colorings(tri, q, budget_nodes=budget_nodes,
                                   threads=1, on_state=on_state)
        universe.add_new(batch)
        universe.flush()
        visited = SortedRunKeySet(os.path.join(spill_dir, "visited"))
        seeds = universe.iter_sorted()
        deg_of = lambda k: _decode_degree(tri, k)  # noqa: E731
        total_expected = enum.total

    for seed in seeds:
        if seed in visited:
            continue
        size, dhist = _bfs_class_stats(engine, seed, universe, visited,
                                       deg_of, budget_states)
        residues = {d % 12 for d in dhist}
        assert len(residues) == 1, (
            f"Kempe class mixes degree residues {residues}: bug")
        classes.append(KempeClass(size, residues.pop(),
                                  engine.unpack(seed), dhist))
    classes.sort(key=lambda c: -c.size)
    total = sum(c.size for c in classes)
    assert total == total_expected, \
        "class sizes do not sum to the enumeration total"
    return ClassDecomposition(tri, q, total, classes)


def _kempe_classes_generic(tri, q, budget_nodes, budget_states):
    from .kempe import kempe_change, kempe_components, KempeMove

    states: list[bytes] = []
    seen = set()

    def sink(colors, deg):
        key = canonicalize(Coloring(tri, q, bytes(colors))).colors
        if key not in seen:
            seen.add(key)
            states.append(key)

    colors = bytearray(tri.n)
    _dfs(tri, q, colors, 0, 3, budget_nodes, sink)
    states.sort()
    universe = set(states)
    visited = set()
    classes = []
    for seed in states:
        if seed in visited:
            continue
        visited.add(seed)
        frontier = [seed]
        size = 0
        while frontier:
            size += len(frontier)
            nxt = []
            for key in frontier:
                c = Coloring(tri, q, key)
                for a in range(1, q + 1):
                    for b in range(a + 1, q + 1):
                        comps = kempe_components(tri, c, a, b)
                        if len(comps) <= 1:
                            continue
                        for comp in comps:
                            c2 = kempe_change(tri, c, KempeMove(a, b, comp))
                            k2 = canonicalize(c2).colors
                            if k2 not in visited:
                                assert k2 in universe
                                visited.add(k2)
                                nxt.append(k2)
            frontier = nxt
            if budget_states is not None and size > budget_states:
                raise BudgetExceeded("states", budget_states)
        rep = Coloring(tri, q, seed)
        residue = degree(tri, rep).mod12 if q == 4 else 0
        classes.append(KempeClass(size, residue, rep))
    classes.sort(key=lambda c: -c.size)
    return ClassDecomposition(tri, q, sum(c.size for c in classes), classes)


def class_of(tri: Triangulation, c: Coloring, *, certify: bool = False,
             budget_states: int = 200_000) -> dict:
    """Degree residue mod 12 as a sound Kempe-class separator.

    Distinct residues imply distinct classes on 3-colorable tori.  With
    `certify`, a bounded BFS checks reachability of the 3-coloring.
    """
    if not tri.is_three_colorable():
        raise ValueError(f"{tri.descriptor()} is not three-colorable")
    rep = degree(tri, c)
    residue = rep.degree % 12
    out = {"residue": residue,
           "label": "ergodic-class" if residue == 0 else "obstructed-class",
           "certified_with_three_coloring": None}
    if certify:
        engine = PackedKempe(tri)
        target = engine.canonical(engine.pack(
            Coloring(tri, 4, three_coloring(tri).colors)))
        seed = engine.canonical(engine.pack(c))
        visited = {seed}
        frontier = [seed]
        found = seed == target
        try:
            while frontier and not found:
                nxt = []
                for state in frontier:
                    for key in engine.neighbor_keys(state):
                        if key not in visited:
                            visited.add(key)
                            nxt.append(key)
                            if key == target:
                                found = True
                if len(visited) > budget_states:
                    raise BudgetExceeded("states", budget_states)
                frontier = nxt
            out["certified_with_three_coloring"] = found
        except BudgetExceeded:
            out["certified_with_three_coloring"] = None
    return out
