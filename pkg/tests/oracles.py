"""Brute-force reference computations that share no code with the package."""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations, permutations
from math import gcd, prod


def leibniz_det(m: list[list[int]]) -> int:
    n = len(m)
    total = 0
    for perm in permutations(range(n)):
        inversions = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        total += (-1) ** inversions * prod(m[i][perm[i]] for i in range(n))
    return total


def determinantal_divisors(m: list[list[int]]) -> list[int]:
    """``D_k`` = gcd of all k x k minors, for k = 1.. until it vanishes."""
    rows, cols = len(m), len(m[0]) if m else 0
    out = []
    for k in range(1, min(rows, cols) + 1):
        g = 0
        for r in combinations(range(rows), k):
            for c in combinations(range(cols), k):
                g = gcd(g, leibniz_det([[m[i][j] for j in c] for i in r]))
        if g == 0:
            break
        out.append(g)
    return out


def invariant_factors_by_minors(m: list[list[int]]) -> list[int]:
    divs = determinantal_divisors(m)
    return [d // p for d, p in zip(divs, [1] + divs)]


def rank_mod(m: list[list[int]], p: int | None = None) -> int:
    """Rank over Q (``p`` is None) or over GF(p), by Gaussian elimination."""
    if not m or not m[0]:
        return 0
    if p is None:
        a = [[Fraction(x) for x in row] for row in m]
    else:
        a = [[x % p for x in row] for row in m]
    rows, cols = len(a), len(a[0])
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = 1 / a[r][c] if p is None else pow(a[r][c], -1, p)
        for i in range(rows):
            if i != r and a[i][c] != 0:
                f = a[i][c] * inv
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
                if p is not None:
                    a[i] = [x % p for x in a[i]]
        r += 1
    return r


def simplicial_betti(simplices: set[tuple[int, ...]], p: int | None = None) -> dict[int, int]:
    """Reduced Betti numbers over Q or GF(p) straight from the face lists."""
    by_dim: dict[int, list[tuple[int, ...]]] = {-1: [()]}
    for s in simplices:
        by_dim.setdefault(len(s) - 1, []).append(s)
    for faces in by_dim.values():
        faces.sort()
    top = max(by_dim)

    def boundary_rank(n: int) -> int:
        # rank of the map from n-faces to (n-1)-faces
        if n not in by_dim or n - 1 not in by_dim:
            return 0
        index = {f: i for i, f in enumerate(by_dim[n - 1])}
        mat = [[0] * len(by_dim[n]) for _ in by_dim[n - 1]]
        for j, s in enumerate(by_dim[n]):
            for k in range(len(s)):
                mat[index[s[:k] + s[k + 1:]]][j] = (-1) ** k
        return rank_mod(mat, p)

    out = {}
    for n in range(-1, top + 1):
        dim = len(by_dim.get(n, []))
        out[n] = dim - boundary_rank(n) - boundary_rank(n + 1)
    return out
