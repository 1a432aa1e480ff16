"""Finite chain complexes of free abelian groups.

A complex is stored as ranks per degree plus the boundary matrices between
consecutive degrees.  ``boundary(n)`` maps degree ``n + 1`` into degree
``n`` and has shape ``rank(n) x rank(n + 1)``.

An *augmented* complex has rank 1 in degree -1 and the map from degree 0 to
degree -1 is the augmentation.  Its homology is reduced homology; the
unreduced homology of a space is the reduced homology of the space with a
disjoint base point, which is what :meth:`ChainComplex.unreduced` gives.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Mapping, Sequence

from .intlinalg import IntMatrix, invariant_factors, snf

__all__ = [
    "ChainComplex",
    "HomologyGroup",
    "ChainComplexError",
    "homology",
    "cohomology",
    "shift",
    "reduced_tensor",
    "direct_sum",
    "relative",
]


class ChainComplexError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class HomologyGroup:
    """Finitely generated abelian group ``Z^betti + sum Z/t``."""

    betti: int = 0
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "torsion", tuple(self.torsion))
        if self.betti < 0 or any(t < 2 for t in self.torsion):
            raise ValueError(f"invalid homology group {self.betti}, {self.torsion}")
        for a, b in zip(self.torsion, self.torsion[1:]):
            if b % a:
                raise ValueError(f"torsion {self.torsion} breaks the divisibility chain")

    def is_zero(self) -> bool:
        return self.betti == 0 and not self.torsion

    def to_dict(self) -> dict:
        return {"betti": self.betti, "torsion": list(self.torsion)}

    def __str__(self) -> str:
        parts = []
        if self.betti:
            parts.append("Z" if self.betti == 1 else f"Z^{self.betti}")
        parts.extend(f"Z/{t}" for t in self.torsion)
        return " + ".join(parts) if parts else "0"


ZERO = HomologyGroup()


@dataclass(frozen=True)
class ChainComplex:
    bottom_degree: int
    ranks: tuple[int, ...]
    boundaries: tuple[IntMatrix, ...] = ()
    augmented: bool = False

    def __post_init__(self):
        object.__setattr__(self, "ranks", tuple(self.ranks))
        object.__setattr__(self, "boundaries", tuple(self.boundaries))
        n = len(self.ranks)
        if len(self.boundaries) != max(n - 1, 0):
            raise ChainComplexError(
                f"{n} degrees need {max(n - 1, 0)} boundary matrices, got {len(self.boundaries)}"
            )
        for k, b in enumerate(self.boundaries):
            if b.shape != (self.ranks[k], self.ranks[k + 1]):
                raise ChainComplexError(
                    f"boundary into degree {self.bottom_degree + k} has shape {b.shape}, "
                    f"expected {(self.ranks[k], self.ranks[k + 1])}"
                )
        if self.augmented and (self.bottom_degree != -1 or not self.ranks or self.ranks[0] != 1):
            raise ChainComplexError("an augmented complex has rank 1 in degree -1 and nothing below")
        for k in range(len(self.boundaries) - 1):
            if not (self.boundaries[k] @ self.boundaries[k + 1]).is_zero():
                raise ChainComplexError(
                    f"boundary squares to a nonzero map at degree {self.bottom_degree + k + 2}"
                )

    @property
    def top_degree(self) -> int:
        return self.bottom_degree + len(self.ranks) - 1

    @property
    def degrees(self) -> range:
        return range(self.bottom_degree, self.top_degree + 1)

    def rank(self, n: int) -> int:
        k = n - self.bottom_degree
        return self.ranks[k] if 0 <= k < len(self.ranks) else 0

    def boundary(self, n: int) -> IntMatrix:
        """Boundary from degree ``n + 1`` into degree ``n``."""
        k = n - self.bottom_degree
        if 0 <= k < len(self.boundaries):
            return self.boundaries[k]
        return IntMatrix.zeros(self.rank(n), self.rank(n + 1))

    def euler_characteristic(self) -> int:
        return sum((-1) ** n * self.rank(n) for n in self.degrees)

    def unreduced(self) -> ChainComplex:
        """Drop the augmentation; homology becomes unreduced homology."""
        if not self.augmented:
            return self
        return ChainComplex(0, self.ranks[1:], self.boundaries[1:])

    # homology

    @cached_property
    def _homology(self) -> dict[int, HomologyGroup]:
        return {n: _homology_at(self, n) for n in self.degrees}

    def homology(self, i: int) -> HomologyGroup:
        return self._homology.get(i, ZERO)

    def homology_table(self) -> dict[int, HomologyGroup]:
        return dict(self._homology)

    def dual(self) -> ChainComplex:
        """Cochain complex as a chain complex: degree ``n`` moves to ``-n``."""
        if not self.ranks:
            return self
        return ChainComplex(
            -self.top_degree,
            self.ranks[::-1],
            tuple(b.transpose() for b in reversed(self.boundaries)),
        )

    # serialization

    def to_dict(self) -> dict:
        return {
            "bottom_degree": self.bottom_degree,
            "ranks": list(self.ranks),
            "boundaries": [b.tolist() for b in self.boundaries],
            "augmented": self.augmented,
        }

    @classmethod
    def from_dict(cls, data: Mapping) -> ChainComplex:
        ranks = [int(r) for r in data["ranks"]]
        mats = []
        for k, rows in enumerate(data.get("boundaries", [])):
            mats.append(IntMatrix.from_rows(rows, cols=ranks[k + 1]))
        return cls(int(data["bottom_degree"]), ranks, mats, bool(data.get("augmented", False)))


def _homology_at(C: ChainComplex, n: int) -> HomologyGroup:
    """Kernel of the outgoing boundary modulo the image of the incoming one.

    Two SNF passes: the first gives a basis of the cycles (trailing columns
    of ``V``), then the incoming boundary is rewritten in that basis with
    ``V^-1`` and its invariant factors are the torsion coefficients.
    """
    dim = C.rank(n)
    if dim == 0:
        return ZERO
    outgoing = C.boundary(n - 1)
    incoming = C.boundary(n)
    dec = snf(outgoing)
    r = dec.rank
    coords = dec.V_inv @ incoming
    for i in range(r):
        if any(coords.row(i)):
            raise ChainComplexError(f"incoming boundary at degree {n} is not made of cycles")
    in_cycles = coords.submatrix(range(r, dim), range(incoming.cols))
    factors = invariant_factors(in_cycles)
    return HomologyGroup(dim - r - len(factors), tuple(d for d in factors if d > 1))


def homology(C: ChainComplex, i: int) -> HomologyGroup:
    return C.homology(i)


def cohomology(C: ChainComplex, i: int) -> HomologyGroup:
    """Integral cohomology in degree ``i`` (reduced when ``C`` is augmented)."""
    return C.dual().homology(-i)


# constructions


def _reduced_part(C: ChainComplex) -> ChainComplex:
    """Pointed model: quotient of the non-negative part by the base point.

    The base point is the first degree-0 generator on which the augmentation
    is a unit.  Deleting its row from the degree-1 boundary gives the
    boundary into the kernel of the augmentation.
    """
    if not C.augmented:
        raise ChainComplexError("a pointed (augmented) complex is required")
    eps = C.boundary(-1)
    base = next((j for j in range(eps.cols) if abs(eps[0, j]) == 1), None)
    if base is None:
        raise ChainComplexError("complex has no base point (empty, or augmentation not a unit)")
    keep = [j for j in range(C.rank(0)) if j != base]
    ranks = [len(keep)] + [C.rank(n) for n in range(1, C.top_degree + 1)]
    mats = []
    if len(ranks) > 1:
        d1 = C.boundary(0)
        mats.append(d1.submatrix(keep, range(d1.cols)))
        mats.extend(C.boundary(n) for n in range(1, C.top_degree))
    return ChainComplex(0, ranks, mats)


def _augment(R: ChainComplex) -> ChainComplex:
    """Inverse of :func:`_reduced_part` for a complex living in degrees >= 0.

    A new base point is put first in degree 0; every old degree-0 generator
    ``e`` becomes ``e - base``, so the augmentation is all ones.
    """
    if R.bottom_degree < 0:
        raise ChainComplexError("expected a complex in non-negative degrees")
    top = max(R.top_degree, 0)
    ranks = [1, R.rank(0) + 1] + [R.rank(n) for n in range(1, top + 1)]
    mats = [IntMatrix.from_rows([[1] * ranks[1]])]
    if top >= 1:
        d1 = R.boundary(0)
        sums = [-sum(d1.column(j)) for j in range(d1.cols)]
        mats.append(IntMatrix.from_rows([sums] + d1.tolist(), cols=d1.cols))
        mats.extend(R.boundary(n) for n in range(1, top))
    return ChainComplex(-1, ranks, mats, augmented=True)


def _regrade(C: ChainComplex, bottom: int, top: int) -> ChainComplex:
    ranks = [C.rank(n) for n in range(bottom, top + 1)]
    return ChainComplex(bottom, ranks, [C.boundary(n) for n in range(bottom, top)], C.augmented)


def shift(C: ChainComplex, n: int = 1) -> ChainComplex:
    """Chain model of the ``n``-fold suspension.

    Reduced homology moves up by ``n``.  The result is augmented again; the
    new degrees below ``n`` carry no homology.
    """
    if n < 1:
        raise ValueError("shift amount must be >= 1")
    if not C.augmented:
        raise ChainComplexError("suspension is only defined for augmented complexes")
    sign = -1 if n % 2 else 1
    moved = ChainComplex(
        C.bottom_degree + n,
        C.ranks,
        tuple(-b if sign < 0 else b for b in C.boundaries),
    )
    return _augment(_regrade(moved, 0, moved.top_degree))


def _tensor(R: ChainComplex, S: ChainComplex) -> ChainComplex:
    """Tensor product of complexes in non-negative degrees, Koszul signs."""
    top = R.top_degree + S.top_degree
    index: dict[int, dict[tuple[int, int], int]] = {}
    ranks = []
    for n in range(top + 1):
        offs, off = {}, 0
        for p in range(n + 1):
            offs[(p, n - p)] = off
            off += R.rank(p) * S.rank(n - p)
        index[n] = offs
        ranks.append(off)
    mats = []
    for n in range(1, top + 1):
        rows: list[dict[int, int]] = [dict() for _ in range(ranks[n - 1])]
        for p in range(n + 1):
            q = n - p
            rp, sq = R.rank(p), S.rank(q)
            if not rp or not sq:
                continue
            base = index[n][(p, q)]
            if p >= 1 and R.rank(p - 1):
                dR = R.boundary(p - 1)
                tgt = index[n - 1][(p - 1, q)]
                for i in range(rp):
                    col = dR.column(i)
                    for k, v in enumerate(col):
                        if v:
                            for j in range(sq):
                                rows[tgt + k * sq + j][base + i * sq + j] = v
            if q >= 1 and S.rank(q - 1):
                dS = S.boundary(q - 1)
                tgt = index[n - 1][(p, q - 1)]
                s = -1 if p % 2 else 1
                sq1 = S.rank(q - 1)
                for j in range(sq):
                    col = dS.column(j)
                    for l, v in enumerate(col):
                        if v:
                            for i in range(rp):
                                rows[tgt + i * sq1 + l][base + i * sq + j] = s * v
        mats.append(IntMatrix.from_sparse(ranks[n - 1], ranks[n], rows))
    return ChainComplex(0, ranks, mats)


def reduced_tensor(C: ChainComplex, D: ChainComplex) -> ChainComplex:
    """Chain model of the smash product of two pointed spaces.

    The pointed parts (augmentation kernels) are tensored and the result is
    augmented again.  Degree ``n >= 1`` has rank
    ``sum_{p+q=n} rank_p(C~) * rank_q(D~)``; degree 0 has one more generator,
    the base point.
    """
    if not (C.augmented and D.augmented):
        raise ChainComplexError("reduced tensor needs augmented inputs")
    return _augment(_tensor(_reduced_part(C), _reduced_part(D)))


def direct_sum(C: ChainComplex, D: ChainComplex) -> ChainComplex:
    """Degreewise direct sum.  The result is not augmented."""
    if not C.ranks:
        return _regrade(D, D.bottom_degree, D.top_degree) if D.ranks else C
    if not D.ranks:
        return ChainComplex(C.bottom_degree, C.ranks, C.boundaries)
    lo = min(C.bottom_degree, D.bottom_degree)
    hi = max(C.top_degree, D.top_degree)
    ranks = [C.rank(n) + D.rank(n) for n in range(lo, hi + 1)]
    mats = []
    for n in range(lo, hi):
        a, b = C.boundary(n), D.boundary(n)
        rows = [list(a.row(i)) + [0] * b.cols for i in range(a.rows)]
        rows += [[0] * a.cols + list(b.row(i)) for i in range(b.rows)]
        mats.append(IntMatrix.from_rows(rows, cols=a.cols + b.cols))
    return ChainComplex(lo, ranks, mats)


def relative(K: ChainComplex, L: ChainComplex, inclusion: Mapping[int, Sequence[int]]) -> ChainComplex:
    """Quotient complex ``K / L``.

    ``inclusion[n]`` lists, in the order of ``L``'s basis, the indices of
    ``K``'s degree-``n`` basis that span ``L``.  Missing degrees mean ``L`` is
    zero there.  The index sets must be closed under the boundary and ``L``'s
    boundary must be the restriction of ``K``'s.
    """
    sets = {n: list(inclusion.get(n, ())) for n in K.degrees}
    for n in L.degrees:
        if L.rank(n) != len(sets.get(n, [])):
            raise ChainComplexError(f"degree {n}: L has rank {L.rank(n)} but {len(sets.get(n, []))} indices given")
    for n, idx in sets.items():
        if len(set(idx)) != len(idx) or any(not 0 <= j < K.rank(n) for j in idx):
            raise ChainComplexError(f"degree {n}: bad index set {idx}")
    for n in K.degrees:
        if n - 1 < K.bottom_degree:
            continue
        below = set(sets.get(n - 1, ()))
        d = K.boundary(n - 1)
        for j in sets.get(n, ()):
            for i, v in enumerate(d.column(j)):
                if v and i not in below:
                    raise ChainComplexError(
                        f"not a subcomplex: boundary of generator {j} in degree {n} leaves L"
                    )
        if sets.get(n) and sets.get(n - 1) is not None:
            restricted = d.submatrix(sets[n - 1], sets[n])
            if restricted != L.boundary(n - 1):
                raise ChainComplexError(f"L's boundary into degree {n - 1} is not the restriction of K's")
    keep = {n: [j for j in range(K.rank(n)) if j not in set(sets[n])] for n in K.degrees}
    ranks = [len(keep[n]) for n in K.degrees]
    mats = [K.boundary(n).submatrix(keep[n], keep[n + 1]) for n in range(K.bottom_degree, K.top_degree)]
    augmented = K.augmented and len(keep.get(-1, [])) == 1
    return ChainComplex(K.bottom_degree, ranks, mats, augmented=augmented)
