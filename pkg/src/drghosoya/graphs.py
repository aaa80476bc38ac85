"""Graphs in CSR form, the all-pairs BFS oracle, and the distance-regularity checker.

One compiled sweep runs a BFS from every source and, in the same pass,
counts for every reached vertex ``u`` its neighbours one level closer to and
one level farther from the source. That single O(n*m) pass feeds both the
distance distribution and the intersection-array extraction; the result is
cached on the (immutable) graph.
"""

from __future__ import annotations

import io
import os
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, TextIO

import numpy as np
from numba import njit

from .intersection import IntersectionArray
from .polynomial import IntPolynomial

DIST_DTYPE = np.int32
_UNREACHED = np.iinfo(DIST_DTYPE).max


class GraphError(ValueError):
    pass


class Disconnected(GraphError):
    def __init__(self, reached: int, n: int):
        super().__init__(f"graph is disconnected: BFS from vertex 0 reaches {reached} of {n} vertices")
        self.reached = reached
        self.n = n


class NotDistanceRegularError(GraphError):
    """Base for rejections by :func:`check_distance_regular`."""

    def witness(self) -> dict:
        raise NotImplementedError


class NotRegular(NotDistanceRegularError):
    def __init__(self, vertex: int, degree: int, expected: int):
        super().__init__(f"not regular: vertex {vertex} has degree {degree}, vertex 0 has degree {expected}")
        self.vertex = vertex
        self.degree = degree
        self.expected = expected

    def witness(self) -> dict:
        return {"reason": "NotRegular", "vertex": self.vertex, "degree": self.degree, "expected": self.expected}


class NotDistanceRegular(NotDistanceRegularError):
    """Pair ``(u, v)`` at distance ``level`` has ``found`` neighbours of ``u`` in the
    ``kind`` direction (``"c"``: one step closer to ``v``, ``"b"``: one step farther)
    where an earlier pair at the same distance had ``expected``."""

    def __init__(self, u: int, v: int, level: int, kind: str, expected: int, found: int):
        super().__init__(
            f"not distance-regular: pair (u={u}, v={v}) at distance {level} has "
            f"{kind}_{level} = {found}, expected {expected}"
        )
        self.u, self.v, self.level, self.kind = u, v, level, kind
        self.expected, self.found = expected, found

    def witness(self) -> dict:
        return {
            "reason": "NotDistanceRegular",
            "u": self.u,
            "v": self.v,
            "level": self.level,
            "kind": self.kind,
            "expected": self.expected,
            "found": self.found,
        }


class TrivialGraph(NotDistanceRegularError):
    def __init__(self):
        super().__init__("single-vertex graph has diameter 0 and no intersection array")

    def witness(self) -> dict:
        return {"reason": "TrivialGraph"}


class Graph:
    """Undirected simple graph on vertices ``0..n-1``.

    Adjacency is stored as CSR arrays: the neighbours of ``v`` are
    ``indices[indptr[v]:indptr[v+1]]``, sorted ascending.
    """

    def __init__(self, n: int, indptr: np.ndarray, indices: np.ndarray):
        self.n = int(n)
        self.indptr = np.ascontiguousarray(indptr, dtype=np.int64)
        self.indices = np.ascontiguousarray(indices, dtype=np.int32)
        self.indptr.setflags(write=False)
        self.indices.setflags(write=False)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        """Build from an edge iterable; repeated edges (either orientation) collapse, loops are rejected."""
        arr = np.asarray(list(edges) if not isinstance(edges, np.ndarray) else edges, dtype=np.int64)
        if arr.size == 0:
            arr = arr.reshape(0, 2)
        if arr.ndim != 2 or arr.shape[1] != 2:
            raise GraphError("edges must be pairs")
        if n < 1:
            raise GraphError(f"vertex count must be positive (got {n})")
        if arr.size and (arr.min() < 0 or arr.max() >= n):
            raise GraphError(f"edge endpoint out of range 0..{n - 1}")
        loops = arr[:, 0] == arr[:, 1]
        if loops.any():
            v = int(arr[loops][0, 0])
            raise GraphError(f"self-loop at vertex {v}")
        both = np.concatenate([arr, arr[:, ::-1]])
        both = np.unique(both, axis=0)  # sorted by (src, dst)
        indptr = np.zeros(n + 1, dtype=np.int64)
        np.add.at(indptr, both[:, 0] + 1, 1)
        np.cumsum(indptr, out=indptr)
        return cls(n, indptr, both[:, 1])

    @classmethod
    def from_adjacency(cls, adjacency: Iterable[Iterable[int]]) -> Graph:
        adj = [list(nb) for nb in adjacency]
        return cls.from_edges(len(adj), [(u, v) for u, nb in enumerate(adj) for v in nb])

    def neighbors(self, v: int) -> np.ndarray:
        return self.indices[self.indptr[v] : self.indptr[v + 1]]

    def degree(self, v: int) -> int:
        return int(self.indptr[v + 1] - self.indptr[v])

    @property
    def num_edges(self) -> int:
        return len(self.indices) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(u, int(v)) for u in range(self.n) for v in self.neighbors(u) if u < v]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return (
            self.n == other.n
            and np.array_equal(self.indptr, other.indptr)
            and np.array_equal(self.indices, other.indices)
        )

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.num_edges})"

    @cached_property
    def _sweep(self) -> _Sweep:
        return _run_sweep(self)


@dataclass(frozen=True)
class DistanceDistribution:
    n: int
    counts: tuple[int, ...]  # counts[k-1] = d(G, k)

    @property
    def diameter(self) -> int:
        return len(self.counts)

    def __getitem__(self, k: int) -> int:
        """``d(G, k)`` for ``k >= 1``; zero beyond the diameter."""
        if k < 1:
            raise IndexError(k)
        return self.counts[k - 1] if k <= len(self.counts) else 0


@njit(cache=True)
def _bfs(indptr, indices, source, dist, queue):
    dist[:] = _UNREACHED
    dist[source] = 0
    queue[0] = source
    head, tail = 0, 1
    while head < tail:
        u = queue[head]
        head += 1
        du = dist[u] + 1
        for p in range(indptr[u], indptr[u + 1]):
            w = indices[p]
            if dist[w] == _UNREACHED:
                dist[w] = du
                queue[tail] = w
                tail += 1
    return tail


@njit(cache=True)
def _sweep_kernel(indptr, indices, n):
    # Per-level totals over all sources; levels run 0..n-1.
    counts = np.zeros(n, dtype=np.int64)
    # First-seen c_j and b_j per level.
    c_level = np.full(n, -1, dtype=np.int64)
    b_level = np.full(n, -1, dtype=np.int64)
    # violation: [u, v, level, kind(0=c, 1=b), expected, found]; u = -1 means none.
    violation = np.full(6, -1, dtype=np.int64)
    dist = np.empty(n, dtype=np.int32)
    queue = np.empty(n, dtype=np.int32)
    for v in range(n):
        reached = _bfs(indptr, indices, v, dist, queue)
        for qi in range(reached):
            u = queue[qi]
            j = dist[u]
            counts[j] += 1
            if violation[0] >= 0:
                continue
            cu = 0
            bu = 0
            for p in range(indptr[u], indptr[u + 1]):
                dw = dist[indices[p]]
                if dw == j - 1:
                    cu += 1
                elif dw == j + 1:
                    bu += 1
            if c_level[j] < 0:
                c_level[j] = cu
            elif c_level[j] != cu:
                violation[0], violation[1], violation[2] = u, v, j
                violation[3], violation[4], violation[5] = 0, c_level[j], cu
                continue
            if b_level[j] < 0:
                b_level[j] = bu
            elif b_level[j] != bu:
                violation[0], violation[1], violation[2] = u, v, j
                violation[3], violation[4], violation[5] = 1, b_level[j], bu
    return counts, c_level, b_level, violation


@dataclass(frozen=True)
class _Sweep:
    ordered_counts: tuple[int, ...]  # ordered pairs per distance, index 0 = distance 0
    c: tuple[int, ...]
    b: tuple[int, ...]
    violation: tuple[int, ...] | None


def _run_sweep(g: Graph) -> _Sweep:
    reached = int(np.count_nonzero(_distances_array(g, 0) != _UNREACHED))
    if reached != g.n:
        raise Disconnected(reached, g.n)
    counts, c_level, b_level, violation = _sweep_kernel(g.indptr, g.indices, g.n)
    diam = int(np.flatnonzero(counts)[-1])
    return _Sweep(
        ordered_counts=tuple(int(x) for x in counts[: diam + 1]),
        c=tuple(int(x) for x in c_level[: diam + 1]),
        b=tuple(int(x) for x in b_level[: diam + 1]),
        violation=None if violation[0] < 0 else tuple(int(x) for x in violation),
    )


def _distances_array(g: Graph, source: int) -> np.ndarray:
    if not 0 <= source < g.n:
        raise IndexError(f"source {source} out of range 0..{g.n - 1}")
    dist = np.empty(g.n, dtype=DIST_DTYPE)
    queue = np.empty(g.n, dtype=np.int32)
    _bfs(g.indptr, g.indices, source, dist, queue)
    return dist


def bfs_distances(g: Graph, source: int) -> list[int | None]:
    """Distances from ``source``; unreachable vertices map to ``None``."""
    return [None if d == _UNREACHED else int(d) for d in _distances_array(g, source)]


def is_connected(g: Graph) -> bool:
    return bool(np.all(_distances_array(g, 0) != _UNREACHED))


def distance_distribution(g: Graph) -> DistanceDistribution:
    sweep = g._sweep
    counts = []
    for k, ordered in enumerate(sweep.ordered_counts[1:], start=1):
        # every unordered pair is seen from both endpoints
        if ordered % 2:
            raise AssertionError(f"odd ordered-pair count {ordered} at distance {k}: adjacency not symmetric")
        counts.append(ordered // 2)
    return DistanceDistribution(g.n, tuple(counts))


def hosoya_oracle(g: Graph) -> IntPolynomial:
    return IntPolynomial([0, *distance_distribution(g).counts])


def wiener_oracle(g: Graph) -> int:
    dd = distance_distribution(g)
    return sum(k * dd[k] for k in range(1, dd.diameter + 1))


def hyper_wiener_oracle(g: Graph) -> int:
    dd = distance_distribution(g)
    twice = sum((k + k * k) * dd[k] for k in range(1, dd.diameter + 1))
    return twice // 2


def check_distance_regular(g: Graph) -> IntersectionArray:
    """Extract the intersection array of ``g`` or raise a rejection carrying a witness."""
    sweep = g._sweep  # raises Disconnected first
    degrees = np.diff(g.indptr)
    bad = np.flatnonzero(degrees != degrees[0])
    if bad.size:
        v = int(bad[0])
        raise NotRegular(v, int(degrees[v]), int(degrees[0]))
    if sweep.violation is not None:
        u, v, level, kind, expected, found = sweep.violation
        raise NotDistanceRegular(u, v, level, "cb"[kind], expected, found)
    diam = len(sweep.ordered_counts) - 1
    if diam < 1:
        raise TrivialGraph()
    return IntersectionArray(sweep.b[:diam], sweep.c[1 : diam + 1])


def read_edge_list(source: str | os.PathLike | TextIO, n: int | None = None) -> Graph:
    """Parse ``u v`` lines; blank lines and ``#`` comments are skipped.

    The vertex count is ``1 + max index`` unless ``n`` is given.
    """
    if isinstance(source, (str, os.PathLike)):
        with open(source, encoding="utf-8") as fh:
            return read_edge_list(fh, n)
    edges = []
    for lineno, line in enumerate(source, start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphError(f"line {lineno}: expected two vertex indices, got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphError(f"line {lineno}: non-integer vertex in {line!r}") from None
        if u < 0 or v < 0:
            raise GraphError(f"line {lineno}: negative vertex index")
        edges.append((u, v))
    inferred = 1 + max((max(e) for e in edges), default=-1)
    if n is None:
        n = inferred
    elif n < inferred:
        raise GraphError(f"declared vertex count {n} is smaller than max index + 1 = {inferred}")
    if n < 1:
        raise GraphError("edge list is empty")
    return Graph.from_edges(n, edges)


def parse_edge_list(text: str, n: int | None = None) -> Graph:
    return read_edge_list(io.StringIO(text), n)
