"""Finite abstract simplicial complexes.

Vertices are always the dense integers ``0 .. n-1``; ``labels`` only keeps
the names the complex was read with, for printing.  Simplices are sorted
tuples of vertex indices, and the chain complex lists each degree's basis in
lexicographic order, so boundary signs (and hence all output) are
reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Hashable, Iterable, Sequence

from .chaincomplex import ChainComplex
from .intlinalg import IntMatrix

__all__ = [
    "SimplicialComplex",
    "SimplicialError",
    "from_maximal_simplices",
    "chain_complex",
    "join",
    "suspension",
    "cone",
    "wedge",
    "disjoint_union",
    "connected_components",
    "is_nonempty",
    "subcomplex_indices",
    "point",
    "empty",
    "s0",
    "sphere",
    "simplex",
    "circle",
    "torus7",
    "rp2_6",
    "corpus",
]


class SimplicialError(ValueError):
    pass


Simplex = tuple[int, ...]


@dataclass(frozen=True)
class SimplicialComplex:
    labels: tuple[Hashable, ...]
    simplices: frozenset[Simplex]

    def __post_init__(self):
        n = len(self.labels)
        for s in self.simplices:
            if not s:
                raise SimplicialError("the empty simplex is not stored")
            if list(s) != sorted(set(s)):
                raise SimplicialError(f"simplex {s} is not a sorted tuple of distinct vertices")
            if s[0] < 0 or s[-1] >= n:
                raise SimplicialError(f"simplex {s} uses a vertex outside 0..{n - 1}")
            if len(s) > 1:
                for face in combinations(s, len(s) - 1):
                    if face not in self.simplices:
                        raise SimplicialError(f"face {face} of {s} is missing")
        for v in range(n):
            if (v,) not in self.simplices:
                raise SimplicialError(f"vertex {v} is not a simplex")

    @property
    def n_vertices(self) -> int:
        return len(self.labels)

    @property
    def dimension(self) -> int:
        return max((len(s) for s in self.simplices), default=0) - 1

    @cached_property
    def _by_dim(self) -> dict[int, list[Simplex]]:
        out: dict[int, list[Simplex]] = {}
        for s in self.simplices:
            out.setdefault(len(s) - 1, []).append(s)
        for v in out.values():
            v.sort()
        return out

    def faces(self, n: int) -> list[Simplex]:
        """The ``n``-simplices in lexicographic order."""
        return list(self._by_dim.get(n, ()))

    def f_vector(self) -> tuple[int, ...]:
        return tuple(len(self._by_dim.get(n, ())) for n in range(self.dimension + 1))

    def euler_characteristic(self) -> int:
        return sum((-1) ** n * c for n, c in enumerate(self.f_vector()))

    def reduced_euler_characteristic(self) -> int:
        return self.euler_characteristic() - 1

    def edges(self) -> list[Simplex]:
        return self.faces(1)

    def maximal_simplices(self) -> list[Simplex]:
        out = []
        for s in self.simplices:
            bigger = (tuple(sorted(s + (v,))) for v in range(self.n_vertices) if v not in s)
            if not any(b in self.simplices for b in bigger):
                out.append(s)
        return sorted(out, key=lambda s: (-len(s), s))

    def __len__(self) -> int:
        return len(self.simplices)

    def to_text(self) -> str:
        """One maximal simplex per line, labels separated by spaces."""
        lines = [" ".join(str(self.labels[v]) for v in s) for s in self.maximal_simplices()]
        return "\n".join(lines) + ("\n" if lines else "")

    def to_json(self) -> list[list]:
        return [[self.labels[v] for v in s] for s in self.maximal_simplices()]


def _closure(maximal: Iterable[Iterable[int]]) -> frozenset[Simplex]:
    out: set[Simplex] = set()
    for m in maximal:
        m = tuple(sorted(set(m)))
        if not m:
            raise SimplicialError("maximal simplices must be nonempty")
        if m in out:
            continue
        for k in range(1, len(m) + 1):
            out.update(combinations(m, k))
    return frozenset(out)


def _dense(n: int, simplices: Iterable[Simplex]) -> SimplicialComplex:
    return SimplicialComplex(tuple(range(n)), frozenset(simplices))


def from_maximal_simplices(labels: Sequence[Hashable], maximal: Iterable[Iterable[Hashable]]) -> SimplicialComplex:
    """Close a list of maximal simplices under taking faces.

    ``labels`` fixes the vertex order.  Labels that occur in no simplex are
    dropped, so an empty ``maximal`` gives the empty complex.
    """
    index = {}
    for lab in labels:
        if lab in index:
            raise SimplicialError(f"duplicate vertex label {lab!r}")
        index[lab] = len(index)
    maximal = [list(m) for m in maximal]
    for m in maximal:
        if not m:
            raise SimplicialError("maximal simplices must be nonempty")
        for lab in m:
            if lab not in index:
                raise SimplicialError(f"undeclared vertex label {lab!r}")
    used = sorted({index[lab] for m in maximal for lab in m})
    renum = {old: new for new, old in enumerate(used)}
    ordered_labels = tuple(labels[old] for old in used)
    simplices = _closure([renum[index[lab]] for lab in m] for m in maximal)
    return SimplicialComplex(ordered_labels, simplices)


def chain_complex(K: SimplicialComplex) -> ChainComplex:
    """Augmented simplicial chain complex; its homology is reduced homology."""
    dim = K.dimension
    bases = [K.faces(n) for n in range(dim + 1)]
    ranks = [1] + [len(b) for b in bases]
    mats = []
    if dim >= 0:
        mats.append(IntMatrix.from_rows([[1] * ranks[1]]))
    for n in range(1, dim + 1):
        pos = {s: i for i, s in enumerate(bases[n - 1])}
        rows: list[dict[int, int]] = [dict() for _ in bases[n - 1]]
        for j, s in enumerate(bases[n]):
            for i in range(len(s)):
                rows[pos[s[:i] + s[i + 1:]]][j] = -1 if i % 2 else 1
        mats.append(IntMatrix.from_sparse(len(bases[n - 1]), len(bases[n]), rows))
    return ChainComplex(-1, ranks, mats, augmented=True)


def subcomplex_indices(K: SimplicialComplex, L: SimplicialComplex) -> dict[int, list[int]]:
    """Basis indices of ``L``'s simplices inside ``chain_complex(K)``.

    Both complexes use the same vertex numbering.  Degree -1 is included
    when ``L`` is nonempty, so the quotient computes relative homology.
    """
    out: dict[int, list[int]] = {}
    if L.simplices:
        out[-1] = [0]
    for n in range(L.dimension + 1):
        pos = {s: i for i, s in enumerate(K.faces(n))}
        try:
            out[n] = [pos[s] for s in L.faces(n)]
        except KeyError as e:
            raise SimplicialError(f"simplex {e.args[0]} of L is not in K") from None
    return out


# constructions


def join(K: SimplicialComplex, L: SimplicialComplex) -> SimplicialComplex:
    """Simplices ``s u t`` with ``s`` in ``K`` or empty, ``t`` in ``L`` or empty."""
    off = K.n_vertices
    left = [()] + sorted(K.simplices)
    right = [()] + [tuple(v + off for v in t) for t in sorted(L.simplices)]
    simplices = {s + t for s in left for t in right if s or t}
    return _dense(off + L.n_vertices, simplices)


def suspension(K: SimplicialComplex) -> SimplicialComplex:
    return join(s0(), K)


def cone(K: SimplicialComplex) -> SimplicialComplex:
    return join(point(), K)


def disjoint_union(K: SimplicialComplex, L: SimplicialComplex) -> SimplicialComplex:
    off = K.n_vertices
    simplices = set(K.simplices) | {tuple(v + off for v in t) for t in L.simplices}
    return _dense(off + L.n_vertices, simplices)


def wedge(K: SimplicialComplex, v: int, L: SimplicialComplex, w: int) -> SimplicialComplex:
    """Glue vertex ``w`` of ``L`` onto vertex ``v`` of ``K``."""
    if not 0 <= v < K.n_vertices:
        raise SimplicialError(f"base point {v} is not a vertex of the first complex")
    if not 0 <= w < L.n_vertices:
        raise SimplicialError(f"base point {w} is not a vertex of the second complex")
    renum = {}
    nxt = K.n_vertices
    for u in range(L.n_vertices):
        if u == w:
            renum[u] = v
        else:
            renum[u] = nxt
            nxt += 1
    simplices = set(K.simplices) | {tuple(sorted(renum[u] for u in t)) for t in L.simplices}
    return _dense(nxt, simplices)


def connected_components(K: SimplicialComplex) -> int:
    parent = list(range(K.n_vertices))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in K.edges():
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb
    return len({find(x) for x in range(K.n_vertices)})


def is_nonempty(K: SimplicialComplex) -> bool:
    return bool(K.simplices)


# corpus


def point() -> SimplicialComplex:
    return _dense(1, [(0,)])


def empty() -> SimplicialComplex:
    return _dense(0, [])


def s0() -> SimplicialComplex:
    return _dense(2, [(0,), (1,)])


def simplex(n: int) -> SimplicialComplex:
    if n < 0:
        raise SimplicialError("simplex dimension must be >= 0")
    return _dense(n + 1, _closure([range(n + 1)]))


def sphere(n: int) -> SimplicialComplex:
    """Boundary of the ``(n+1)``-simplex."""
    if n < 0:
        raise SimplicialError("sphere dimension must be >= 0")
    return _dense(n + 2, _closure(combinations(range(n + 2), n + 1)))


def circle(m: int) -> SimplicialComplex:
    """The ``m``-gon."""
    if m < 3:
        raise SimplicialError("a simplicial circle needs at least 3 vertices")
    return _dense(m, _closure((i, (i + 1) % m) for i in range(m)))


def torus7() -> SimplicialComplex:
    """Seven-vertex torus: triangles ``{i, i+1, i+3}`` and ``{i, i+2, i+3}`` mod 7."""
    tris = []
    for i in range(7):
        tris.append((i, (i + 1) % 7, (i + 3) % 7))
        tris.append((i, (i + 2) % 7, (i + 3) % 7))
    return _dense(7, _closure(tris))


# vertices 1..6 of the six-vertex projective plane (hemi-icosahedron)
_RP2_TRIANGLES = [
    (1, 2, 3), (1, 2, 4), (1, 3, 5), (1, 4, 6), (1, 5, 6),
    (2, 3, 6), (2, 4, 5), (2, 5, 6), (3, 4, 5), (3, 4, 6),
]


def rp2_6() -> SimplicialComplex:
    """Six-vertex real projective plane: 6 vertices, 15 edges, 10 triangles."""
    return _dense(6, _closure([tuple(v - 1 for v in t) for t in _RP2_TRIANGLES]))


def corpus() -> dict[str, SimplicialComplex]:
    """Named complexes used throughout the tests and the CLI presets."""
    out = {"point": point(), "empty": empty(), "s0": s0()}
    for n in range(4):
        out[f"sphere{n}"] = sphere(n)
    for n in range(4):
        out[f"simplex{n}"] = simplex(n)
    for m in range(3, 7):
        out[f"circle{m}"] = circle(m)
    out["torus7"] = torus7()
    out["rp2_6"] = rp2_6()
    return out
