"""Deterministic generators for classical distance-regular families.

Vertex labellings are canonical (binary labels, lexicographic subsets and
strings) so that equal parameters always give byte-identical adjacency.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from math import comb

import numpy as np

from .graphs import Graph

DEFAULT_MAX_VERTICES = 50_000


class BadParams(ValueError):
    pass


class SizeLimit(ValueError):
    def __init__(self, family: str, vertices: int, cap: int):
        super().__init__(f"{family} would have {vertices} vertices, above the cap of {cap}")
        self.vertices = vertices
        self.cap = cap


def _guard(family: str, vertices: int, max_vertices: int | None) -> None:
    cap = DEFAULT_MAX_VERTICES if max_vertices is None else max_vertices
    if vertices > cap:
        raise SizeLimit(family, vertices, cap)


def complete(n: int, *, max_vertices: int | None = None) -> Graph:
    if n < 2:
        raise BadParams(f"complete graph needs n >= 2 (got {n})")
    _guard("complete", n, max_vertices)
    return Graph.from_edges(n, list(combinations(range(n), 2)))


def cycle(n: int, *, max_vertices: int | None = None) -> Graph:
    if n < 3:
        raise BadParams(f"cycle needs n >= 3 (got {n})")
    _guard("cycle", n, max_vertices)
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_bipartite(m: int, *, max_vertices: int | None = None) -> Graph:
    """K_{m,m} with parts ``0..m-1`` and ``m..2m-1``."""
    if m < 2:
        raise BadParams(f"complete bipartite graph needs m >= 2 (got {m})")
    _guard("bipartite", 2 * m, max_vertices)
    return Graph.from_edges(2 * m, [(i, m + j) for i in range(m) for j in range(m)])


def hypercube(k: int, *, max_vertices: int | None = None) -> Graph:
    if k < 1:
        raise BadParams(f"hypercube needs k >= 1 (got {k})")
    _guard("hypercube", 2**k, max_vertices)
    v = np.arange(2**k, dtype=np.int64)
    bits = np.int64(1) << np.arange(k, dtype=np.int64)
    u = (v[:, None] ^ bits[None, :]).ravel()
    src = np.repeat(v, k)
    keep = src < u
    return Graph.from_edges(2**k, np.stack([src[keep], u[keep]], axis=1))


def _kneser(n: int, r: int) -> Graph:
    verts = list(combinations(range(n), r))
    masks = [sum(1 << x for x in s) for s in verts]
    edges = [(i, j) for i, j in combinations(range(len(verts)), 2) if not masks[i] & masks[j]]
    return Graph.from_edges(len(verts), edges)


def kneser2(n: int, *, max_vertices: int | None = None) -> Graph:
    """K(n, 2): unordered pairs from ``0..n-1`` in lexicographic order, adjacent when disjoint."""
    if n < 5:
        raise BadParams(f"Kneser graph K(n,2) needs n >= 5 (got {n}); smaller n is disconnected or edgeless")
    _guard("kneser2", comb(n, 2), max_vertices)
    return _kneser(n, 2)


def petersen() -> Graph:
    return kneser2(5)


def hamming(d: int, q: int, *, max_vertices: int | None = None) -> Graph:
    """H(d, q): q-ary strings of length ``d`` in lexicographic order, adjacent at Hamming distance 1."""
    if d < 1 or q < 2:
        raise BadParams(f"Hamming graph needs d >= 1 and q >= 2 (got d={d}, q={q})")
    _guard("hamming", q**d, max_vertices)
    words = list(product(range(q), repeat=d))
    index = {w: i for i, w in enumerate(words)}
    edges = []
    for i, w in enumerate(words):
        for pos in range(d):
            for sym in range(w[pos] + 1, q):
                edges.append((i, index[w[:pos] + (sym,) + w[pos + 1 :]]))
    return Graph.from_edges(len(words), edges)


def johnson(n: int, k: int, *, max_vertices: int | None = None) -> Graph:
    """J(n, k): k-subsets of ``0..n-1`` in lexicographic order, adjacent when they share k-1 elements."""
    if not n > k >= 1:
        raise BadParams(f"Johnson graph needs n > k >= 1 (got n={n}, k={k})")
    _guard("johnson", comb(n, k), max_vertices)
    verts = list(combinations(range(n), k))
    masks = [sum(1 << x for x in s) for s in verts]
    edges = [
        (i, j) for i, j in combinations(range(len(verts)), 2) if (masks[i] & masks[j]).bit_count() == k - 1
    ]
    return Graph.from_edges(len(verts), edges)


def odd(k: int, *, max_vertices: int | None = None) -> Graph:
    """Odd graph O_k = K(2k-1, k-1)."""
    if k < 2:
        raise BadParams(f"odd graph needs k >= 2 (got {k})")
    _guard("odd", comb(2 * k - 1, k - 1), max_vertices)
    return _kneser(2 * k - 1, k - 1)


# name -> (generator, arity)
_FAMILIES = {
    "complete": (complete, 1),
    "cycle": (cycle, 1),
    "bipartite": (complete_bipartite, 1),
    "complete_bipartite": (complete_bipartite, 1),
    "hypercube": (hypercube, 1),
    "petersen": (None, 0),
    "kneser2": (kneser2, 1),
    "hamming": (hamming, 2),
    "johnson": (johnson, 2),
    "odd": (odd, 1),
}


_RANGES = {
    "complete": (lambda n: n >= 2, "n >= 2"),
    "cycle": (lambda n: n >= 3, "n >= 3"),
    "bipartite": (lambda m: m >= 2, "m >= 2"),
    "complete_bipartite": (lambda m: m >= 2, "m >= 2"),
    "hypercube": (lambda k: k >= 1, "k >= 1"),
    "petersen": (lambda: True, ""),
    "kneser2": (lambda n: n >= 5, "n >= 5"),
    "hamming": (lambda d, q: d >= 1 and q >= 2, "d >= 1, q >= 2"),
    "johnson": (lambda n, k: n > k >= 1, "n > k >= 1"),
    "odd": (lambda k: k >= 2, "k >= 2"),
}


@dataclass(frozen=True)
class FamilySpec:
    family: str
    params: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "params", tuple(self.params))
        if self.family not in _FAMILIES:
            raise BadParams(f"unknown family {self.family!r}; known: {', '.join(sorted(_FAMILIES))}")
        arity = _FAMILIES[self.family][1]
        if len(self.params) != arity:
            raise BadParams(f"{self.family} takes {arity} parameter(s), got {len(self.params)}")
        ok, requirement = _RANGES[self.family]
        if not ok(*self.params):
            raise BadParams(f"{self} is out of range: requires {requirement}")

    @classmethod
    def parse(cls, text: str) -> FamilySpec:
        """Parse ``"hamming:2,3"``, ``"petersen"`` and the like."""
        name, _, rest = text.strip().partition(":")
        try:
            params = tuple(int(x) for x in rest.split(",")) if rest else ()
        except ValueError:
            raise BadParams(f"non-integer parameter in {text!r}") from None
        return cls(name, params)

    def __str__(self) -> str:
        name = "bipartite" if self.family == "complete_bipartite" else self.family
        return f"{name}:{','.join(map(str, self.params))}" if self.params else name

    def build(self, max_vertices: int | None = None) -> Graph:
        if self.family == "petersen":
            _guard("petersen", 10, max_vertices)
            return petersen()
        fn = _FAMILIES[self.family][0]
        return fn(*self.params, max_vertices=max_vertices)
