"""Finite permutation groups, small enough to enumerate.

Composition convention: ``compose(p, q)`` (also ``p * q``) applies ``q``
first, like composing functions.  With this choice the 5-cycle
``a = (1 2 3 4 5)`` and ``b = (2 5 4)`` multiply to ``ab = (1 2)(3 4)``.
Cycle notation is 1-based; images are stored 0-based.

Groups are built by breadth-first closure rather than Schreier-Sims; every
group of interest here has at most 20160 elements (A8).
"""

from __future__ import annotations

import math
import re
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping, Sequence

from .grouppres import Presentation, Word

__all__ = [
    "Permutation",
    "FiniteGroup",
    "GroupCapError",
    "from_cycles",
    "parse_cycles",
    "compose",
    "inverse",
    "generate",
    "evaluate",
    "satisfies",
    "commutator_subgroup",
    "is_perfect_finite",
    "alternating",
    "symmetric",
    "cyclic_group",
    "DEFAULT_CAP",
]

DEFAULT_CAP = 1_000_000


class GroupCapError(RuntimeError):
    """Raised when a closure would exceed the element cap."""


@dataclass(frozen=True, order=True)
class Permutation:
    images: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "images", tuple(self.images))
        if sorted(self.images) != list(range(len(self.images))):
            raise ValueError(f"{self.images} is not a permutation of 0..{len(self.images) - 1}")

    @classmethod
    def identity(cls, degree: int) -> Permutation:
        return cls(tuple(range(degree)))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        return self.images[point]

    def __mul__(self, other: Permutation) -> Permutation:
        return compose(self, other)

    def __pow__(self, k: int) -> Permutation:
        base = self if k >= 0 else inverse(self)
        out = Permutation.identity(self.degree)
        for _ in range(abs(k)):
            out = compose(out, base)
        return out

    def is_identity(self) -> bool:
        return all(i == x for i, x in enumerate(self.images))

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, 1-based, each starting at its least point."""
        seen = set()
        out = []
        for start in range(self.degree):
            if start in seen or self.images[start] == start:
                continue
            cyc = []
            x = start
            while x not in seen:
                seen.add(x)
                cyc.append(x + 1)
                x = self.images[x]
            out.append(tuple(cyc))
        return out

    def order(self) -> int:
        return math.lcm(*(len(c) for c in self.cycles())) if self.cycles() else 1

    def __str__(self) -> str:
        cyc = self.cycles()
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cyc) if cyc else "()"


def from_cycles(degree: int, cycles: Iterable[Sequence[int]]) -> Permutation:
    """Permutation of ``{1..degree}`` from disjoint 1-based cycles."""
    images = list(range(degree))
    seen: set[int] = set()
    for cyc in cycles:
        cyc = list(cyc)
        for p in cyc:
            if not 1 <= p <= degree:
                raise ValueError(f"point {p} outside 1..{degree}")
            if p in seen:
                raise ValueError(f"point {p} repeated in cycles")
            seen.add(p)
        for i, p in enumerate(cyc):
            images[p - 1] = cyc[(i + 1) % len(cyc)] - 1
    return Permutation(tuple(images))


_CYCLE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text: str, degree: int | None = None) -> Permutation:
    """Parse ``(1 2 3 4 5)(7 8)``; ``()`` or an empty string is the identity.

    Without ``degree`` the largest point mentioned is used.
    """
    text = text.strip()
    stripped = _CYCLE.sub("", text).strip()
    if stripped:
        raise ValueError(f"unexpected text {stripped!r} in cycle notation")
    cycles = []
    for body in _CYCLE.findall(text):
        pts = body.replace(",", " ").split()
        try:
            cycles.append([int(p) for p in pts])
        except ValueError:
            raise ValueError(f"non-integer point in cycle ({body})") from None
    if degree is None:
        degree = max((p for c in cycles for p in c), default=0)
    return from_cycles(degree, [c for c in cycles if c])


def compose(p: Permutation, q: Permutation) -> Permutation:
    """``p * q``: apply ``q``, then ``p``."""
    if p.degree != q.degree:
        raise ValueError("degree mismatch")
    pi = p.images
    return Permutation(tuple(pi[x] for x in q.images))


def inverse(p: Permutation) -> Permutation:
    inv = [0] * p.degree
    for i, x in enumerate(p.images):
        inv[x] = i
    return Permutation(tuple(inv))


@dataclass(frozen=True)
class FiniteGroup:
    degree: int
    elements: tuple[Permutation, ...]
    generators: tuple[Permutation, ...] = field(default=(), compare=False)

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, p: Permutation) -> bool:
        return p in self._set

    @cached_property
    def _set(self) -> frozenset[Permutation]:
        return frozenset(self.elements)

    def is_subgroup_of(self, other: FiniteGroup) -> bool:
        return self._set <= other._set


def generate(degree: int, gens: Iterable[Permutation], cap: int = DEFAULT_CAP) -> FiniteGroup:
    """Subgroup generated by ``gens``, by breadth-first closure from the identity."""
    gens = tuple(gens)
    for g in gens:
        if g.degree != degree:
            raise ValueError(f"generator {g} has degree {g.degree}, expected {degree}")
    raw = [g.images for g in gens]
    start = tuple(range(degree))
    seen = {start}
    queue = deque([start])
    while queue:
        x = queue.popleft()
        for g in raw:
            y = tuple(x[i] for i in g)  # x * g
            if y not in seen:
                seen.add(y)
                if len(seen) > cap:
                    raise GroupCapError(f"group closure exceeded the cap of {cap} elements")
                queue.append(y)
    elements = tuple(Permutation(e) for e in sorted(seen))
    return FiniteGroup(degree, elements, gens)


def evaluate(word: Word, assignment: Sequence[Permutation], degree: int) -> Permutation:
    out = Permutation.identity(degree)
    for g, s in word.letters:
        p = assignment[g]
        out = compose(out, p if s > 0 else inverse(p))
    return out


def _assignment_list(P: Presentation, assignment: Mapping[str, Permutation] | Sequence[Permutation]):
    if isinstance(assignment, Mapping):
        missing = [n for n in P.generator_names if n not in assignment]
        if missing:
            raise KeyError(f"no permutation assigned to generator(s) {', '.join(missing)}")
        perms = [assignment[n] for n in P.generator_names]
    else:
        perms = list(assignment)
        if len(perms) != P.n_generators:
            raise KeyError(f"expected {P.n_generators} permutations, got {len(perms)}")
    degrees = {p.degree for p in perms}
    if len(degrees) > 1:
        raise ValueError(f"assignment mixes degrees {sorted(degrees)}")
    return perms, (degrees.pop() if degrees else 0)


def satisfies(P: Presentation, assignment: Mapping[str, Permutation] | Sequence[Permutation]) -> bool:
    """True iff every relator evaluates to the identity under ``assignment``."""
    perms, degree = _assignment_list(P, assignment)
    return all(evaluate(r, perms, degree).is_identity() for r in P.relators)


def _commutator(x: Permutation, y: Permutation) -> Permutation:
    return compose(compose(x, y), compose(inverse(x), inverse(y)))


def commutator_subgroup(G: FiniteGroup, cap: int = DEFAULT_CAP) -> FiniteGroup:
    """Derived subgroup.

    With known generators this is the normal closure of their pairwise
    commutators; otherwise every pair of elements is tried.
    """
    if len(G.elements) > cap:
        raise GroupCapError(f"group of order {len(G.elements)} exceeds the cap of {cap}")
    if G.generators:
        gens = list(dict.fromkeys(_commutator(s, t) for s in G.generators for t in G.generators))
        while True:
            N = generate(G.degree, gens, cap)
            extra = []
            for g in G.generators:
                gi = inverse(g)
                for n in gens:
                    c = compose(compose(g, n), gi)
                    if c not in N and c not in extra:
                        extra.append(c)
            if not extra:
                return N
            gens.extend(extra)
    comms = {_commutator(x, y) for x in G.elements for y in G.elements}
    return generate(G.degree, sorted(comms), cap)


def is_perfect_finite(G: FiniteGroup, cap: int = DEFAULT_CAP) -> bool:
    return commutator_subgroup(G, cap).order == G.order


def alternating(n: int) -> FiniteGroup:
    """``A_n`` for ``3 <= n <= 8``, generated by the 3-cycles ``(1 2 k)``."""
    if not 3 <= n <= 8:
        raise ValueError("alternating(n) needs 3 <= n <= 8")
    return generate(n, [from_cycles(n, [(1, 2, k)]) for k in range(3, n + 1)])


def symmetric(n: int) -> FiniteGroup:
    if not 1 <= n <= 8:
        raise ValueError("symmetric(n) needs 1 <= n <= 8")
    if n == 1:
        return generate(1, [])
    return generate(n, [from_cycles(n, [(1, 2)]), from_cycles(n, [tuple(range(1, n + 1))])])


def cyclic_group(n: int) -> FiniteGroup:
    if n < 1:
        raise ValueError("order must be >= 1")
    if n == 1:
        return generate(1, [])
    return generate(n, [from_cycles(n, [tuple(range(1, n + 1))])])
