"""Edge-path presentations of the fundamental group of a simplicial complex.

This is independent of the chain-level machinery: abelianizing the edge-path
group must reproduce the first homology computed from boundary matrices.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .grouppres import AbelianizationResult, Presentation, Word, abelianization
from .simplicial import SimplicialComplex, SimplicialError, connected_components

__all__ = ["Pi1Presentation", "edge_path_presentation", "pi1_abelianized"]


@dataclass(frozen=True)
class Pi1Presentation:
    presentation: Presentation
    tree_edges: frozenset[tuple[int, int]]
    generator_edges: tuple[tuple[int, int], ...]
    basepoint: int
    component: frozenset[int]


def _spanning_tree(K: SimplicialComplex, basepoint: int):
    nbrs: dict[int, list[int]] = {v: [] for v in range(K.n_vertices)}
    for a, b in K.edges():
        nbrs[a].append(b)
        nbrs[b].append(a)
    seen = {basepoint}
    tree = set()
    queue = deque([basepoint])
    while queue:
        v = queue.popleft()
        for w in sorted(nbrs[v]):
            if w not in seen:
                seen.add(w)
                tree.add((min(v, w), max(v, w)))
                queue.append(w)
    return seen, tree


def edge_path_presentation(K: SimplicialComplex, basepoint: int = 0) -> Pi1Presentation:
    """Presentation of pi_1 of the basepoint's component.

    BFS spanning tree, neighbors visited in increasing order.  Each non-tree
    edge ``u < v`` is a generator (oriented ``u -> v``) and each triangle
    ``u < v < w`` gives the relator ``e(u,v) e(v,w) e(u,w)^-1`` with tree
    edges read as the empty word.  Relators that become empty are dropped.
    """
    if not 0 <= basepoint < K.n_vertices:
        raise SimplicialError(f"basepoint {basepoint} is not a vertex of the complex")
    component, tree = _spanning_tree(K, basepoint)
    gen_edges = [e for e in K.edges() if e[0] in component and e not in tree]
    gen_index = {e: i for i, e in enumerate(gen_edges)}

    def edge_word(u: int, v: int) -> Word:
        i = gen_index.get((u, v))
        return Word() if i is None else Word.gen(i)

    relators = []
    for u, v, w in K.faces(2):
        if u not in component:
            continue
        r = edge_word(u, v) * edge_word(v, w) * edge_word(u, w).inverse()
        if r:
            relators.append(r)
    names = tuple(f"e{u}_{v}" for u, v in gen_edges)
    return Pi1Presentation(
        Presentation(names, tuple(relators)),
        frozenset(tree),
        tuple(gen_edges),
        basepoint,
        frozenset(component),
    )


def pi1_abelianized(K: SimplicialComplex, basepoint: int = 0) -> AbelianizationResult:
    """Abelianization of the edge-path group; requires a connected complex."""
    n = connected_components(K)
    if n != 1:
        raise SimplicialError(f"complex must be connected, it has {n} components")
    return abelianization(edge_path_presentation(K, basepoint).presentation)
