"""Independent oracles and generators shared by the tests."""

from __future__ import annotations

import random
from collections import Counter
from fractions import Fraction


def floyd_warshall(n: int, edges) -> list[list[float]]:
    """Independent all-pairs distances; deliberately shares no code with the package."""
    inf = float("inf")
    d = [[0 if i == j else inf for j in range(n)] for i in range(n)]
    for u, v in edges:
        d[u][v] = d[v][u] = 1
    for k in range(n):
        dk = d[k]
        for i in range(n):
            dik = d[i][k]
            if dik == inf:
                continue
            row = d[i]
            for j in range(n):
                if dik + dk[j] < row[j]:
                    row[j] = dik + dk[j]
    return d


def brute_pair_counts(n: int, edges) -> dict[int, int]:
    d = floyd_warshall(n, edges)
    return dict(sorted(Counter(int(d[i][j]) for i in range(n) for j in range(i + 1, n)).items()))


def random_valid_array(rng: random.Random, max_diameter: int = 6, max_entry: int = 9) -> tuple[list[int], list[int]]:
    """Random ``(b, c)`` with integral sphere sizes and even ``n*k_i``.

    Each ``c_i`` is drawn from the values that keep ``k_i`` integral, so
    rejection only happens on the parity condition.
    """
    while True:
        d = rng.randint(1, max_diameter)
        b = [rng.randint(1, max_entry) for _ in range(d)]
        c = [1]
        k = [1, b[0]]
        for i in range(2, d + 1):
            num = k[-1] * b[i - 1]
            choices = [x for x in range(1, max_entry + 1) if num % x == 0]
            c.append(rng.choice(choices))
            k.append(num // c[-1])
        n = sum(k)
        if all(n * ki % 2 == 0 for ki in k[1:]):
            return b, c


def naive_spheres(b, c) -> list[Fraction]:
    """Sphere sizes straight from the product formula (no recurrence)."""
    out = [Fraction(1), Fraction(b[0])]
    for i in range(2, len(b) + 1):
        num = 1
        for j in range(i):
            num *= b[j]
        den = 1
        for j in range(2, i + 1):
            den *= c[j - 1]
        out.append(Fraction(num, den))
    return out
