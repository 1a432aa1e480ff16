"""Free-group words and finite group presentations.

A relation ``w1 = w2`` is always stored as the reduced relator
``w1 * w2^-1``.  Only abelian invariants are computed here: triviality of a
finitely presented group is undecidable in general, so there is no word
problem solver.
"""

from __future__ import annotations

import re
import string
from dataclasses import dataclass
from typing import Iterable, Sequence, Union

from .chaincomplex import ChainComplex, HomologyGroup
from .intlinalg import IntMatrix, cokernel_structure

__all__ = [
    "Word",
    "Presentation",
    "PresentationError",
    "AbelianizationResult",
    "reduce",
    "commutator",
    "exponent_matrix",
    "abelianization",
    "is_perfect",
    "presentation_complex_chain",
    "hatcher",
    "higman",
    "higman_n",
    "baumslag_solitar",
    "free",
    "cyclic",
    "corpus",
]

Letter = tuple[int, int]
_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


class PresentationError(ValueError):
    pass


def reduce(letters: Iterable[Letter]) -> tuple[Letter, ...]:
    """Free reduction: cancel adjacent ``x x^-1`` pairs until none remain."""
    stack: list[Letter] = []
    for g, s in letters:
        if s not in (1, -1):
            raise ValueError(f"letter sign must be +1 or -1, got {s}")
        if stack and stack[-1] == (g, -s):
            stack.pop()
        else:
            stack.append((g, s))
    return tuple(stack)


@dataclass(frozen=True)
class Word:
    """Element of a free group as a sequence of ``(generator, +-1)`` letters.

    ``Word(...)`` keeps the letters as given; products, inverses and powers
    return reduced words.
    """

    letters: tuple[Letter, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple((int(g), int(s)) for g, s in self.letters))

    @classmethod
    def gen(cls, g: int, power: int = 1) -> Word:
        s = 1 if power >= 0 else -1
        return cls(((g, s),) * abs(power))

    @classmethod
    def identity(cls) -> Word:
        return cls()

    def reduce(self) -> Word:
        return Word(reduce(self.letters))

    def is_reduced(self) -> bool:
        return reduce(self.letters) == self.letters

    def inverse(self) -> Word:
        return Word(tuple((g, -s) for g, s in reversed(self.letters))).reduce()

    def __mul__(self, other: Word) -> Word:
        return Word(self.letters + other.letters).reduce()

    def __pow__(self, k: int) -> Word:
        base = self.reduce() if k >= 0 else self.inverse()
        return Word(base.letters * abs(k)).reduce()

    def __len__(self) -> int:
        return len(self.letters)

    def __bool__(self) -> bool:
        return bool(self.letters)

    def exponent_sums(self, n_generators: int) -> list[int]:
        out = [0] * n_generators
        for g, s in self.letters:
            out[g] += s
        return out

    def generators(self) -> set[int]:
        return {g for g, _ in self.letters}

    def format(self, names: Sequence[str]) -> str:
        """Space separated syllables, e.g. ``a^5 b^-3``; ``1`` for the empty word."""
        if not self.letters:
            return "1"
        parts = []
        i = 0
        letters = self.letters
        while i < len(letters):
            g, s = letters[i]
            j = i
            while j < len(letters) and letters[j] == (g, s):
                j += 1
            k = (j - i) * s
            parts.append(names[g] if k == 1 else f"{names[g]}^{k}")
            i = j
        return " ".join(parts)


def commutator(x: Word, y: Word) -> Word:
    """``[x, y] = x y x^-1 y^-1``."""
    return x * y * x.inverse() * y.inverse()


RelationLike = Union[Word, tuple[Word, Word]]


@dataclass(frozen=True)
class Presentation:
    generator_names: tuple[str, ...]
    relators: tuple[Word, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "generator_names", tuple(self.generator_names))
        object.__setattr__(self, "relators", tuple(self.relators))
        names = self.generator_names
        if len(set(names)) != len(names):
            raise PresentationError(f"duplicate generator names in {names}")
        for name in names:
            if not _IDENT.match(name):
                raise PresentationError(f"generator name {name!r} is not an identifier")
        n = len(names)
        for r in self.relators:
            if not r.is_reduced():
                raise PresentationError(f"relator {r.letters} is not reduced")
            if any(not 0 <= g < n for g in r.generators()):
                raise PresentationError(f"relator {r.letters} uses an undeclared generator")

    @classmethod
    def from_relations(cls, names: Sequence[str], relations: Iterable[RelationLike]) -> Presentation:
        """Relations are relator words or ``(lhs, rhs)`` pairs meaning ``lhs = rhs``."""
        rels = []
        for rel in relations:
            if isinstance(rel, Word):
                rels.append(rel.reduce())
            else:
                lhs, rhs = rel
                rels.append(lhs * rhs.inverse())
        return cls(tuple(names), tuple(rels))

    @property
    def n_generators(self) -> int:
        return len(self.generator_names)

    def word(self, text: str) -> Word:
        """Quick constructor: ``"a b^-1 a"`` style, generators by name."""
        index = {name: i for i, name in enumerate(self.generator_names)}
        out = Word()
        for tok in text.split():
            name, _, power = tok.partition("^")
            out = out * Word.gen(index[name], int(power) if power else 1)
        return out

    def __str__(self) -> str:
        rels = ", ".join(r.format(self.generator_names) for r in self.relators)
        gens = ", ".join(self.generator_names)
        head = f"< {gens} |" if gens else "< |"
        return f"{head} {rels} >" if rels else f"{head} >"


@dataclass(frozen=True)
class AbelianizationResult:
    free_rank: int
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "torsion", tuple(self.torsion))

    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    def as_homology(self) -> HomologyGroup:
        return HomologyGroup(self.free_rank, self.torsion)

    def __str__(self) -> str:
        return str(self.as_homology())


def exponent_matrix(P: Presentation) -> IntMatrix:
    """Relators x generators matrix of signed letter counts."""
    rows = [r.exponent_sums(P.n_generators) for r in P.relators]
    return IntMatrix.from_rows(rows, cols=P.n_generators)


def abelianization(P: Presentation) -> AbelianizationResult:
    """``Z^generators`` modulo the row span of the exponent matrix."""
    free_rank, torsion = cokernel_structure(exponent_matrix(P).transpose())
    return AbelianizationResult(free_rank, tuple(torsion))


def is_perfect(P: Presentation) -> bool:
    return abelianization(P).is_trivial()


def presentation_complex_chain(P: Presentation) -> ChainComplex:
    """Augmented cellular chains of the presentation 2-complex.

    One 0-cell, a 1-cell per generator and a 2-cell per relator.  The
    attaching loops are closed, so the 1-cells are cycles; a 2-cell's
    boundary is its relator's exponent row.
    """
    n, m = P.n_generators, len(P.relators)
    return ChainComplex(
        -1,
        (1, 1, n, m),
        (
            IntMatrix.identity(1),
            IntMatrix.zeros(1, n),
            exponent_matrix(P).transpose(),
        ),
        augmented=True,
    )


# corpus


def _letters(n: int) -> list[str]:
    if n <= 26:
        return list(string.ascii_lowercase[:n])
    return [f"x{i + 1}" for i in range(n)]


def free(n: int) -> Presentation:
    if n < 0:
        raise PresentationError("rank must be >= 0")
    return Presentation(tuple(_letters(n)))


def cyclic(n: int) -> Presentation:
    if n < 1:
        raise PresentationError("cyclic order must be >= 1")
    return Presentation(("a",), (Word.gen(0, n),))


def hatcher() -> Presentation:
    """``< a, b | a^5 = b^3, b^3 = (ab)^2 >``."""
    a, b = Word.gen(0), Word.gen(1)
    return Presentation.from_relations(("a", "b"), [(a ** 5, b ** 3), (b ** 3, (a * b) ** 2)])


def higman_n(n: int) -> Presentation:
    """Cyclic Higman-type presentation on ``n`` generators.

    Generator ``x_i`` satisfies ``x_i = [x_{i-1}, x_i]`` (indices mod ``n``).
    Each relation is entered as ``[x_{i-1}, x_i] = x_i``, so the stored
    relator ``[x_{i-1}, x_i] x_i^-1`` has exponent sum -1 in ``x_i``.
    """
    if n < 1:
        raise PresentationError("need at least one generator")
    gens = [Word.gen(i) for i in range(n)]
    rels = [(commutator(gens[i - 1], gens[i]), gens[i]) for i in range(n)]
    return Presentation.from_relations(_letters(n), rels)


def higman() -> Presentation:
    """Higman's group ``< a, b, c, d | a = [d,a], b = [a,b], c = [b,c], d = [c,d] >``."""
    return higman_n(4)


def baumslag_solitar(m: int, n: int) -> Presentation:
    """``< a, b | a b^m a^-1 = b^n >``."""
    if m == 0 or n == 0:
        raise PresentationError("Baumslag-Solitar parameters must be nonzero")
    a, b = Word.gen(0), Word.gen(1)
    return Presentation.from_relations(("a", "b"), [(a * b ** m * a.inverse(), b ** n)])


def corpus() -> dict[str, Presentation]:
    out = {"hatcher": hatcher(), "higman": higman(), "bs12": baumslag_solitar(1, 2)}
    for n in range(1, 4):
        out[f"free{n}"] = free(n)
    for n in range(2, 7):
        out[f"cyclic{n}"] = cyclic(n)
    for n in range(1, 9):
        out[f"higman{n}"] = higman_n(n)
    return out
