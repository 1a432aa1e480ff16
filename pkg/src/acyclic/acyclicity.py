"""Homological k-acyclicity verdicts.

Indexing (the default, ``"section3"``): a space is

* (-1)-acyclic always,
* 0-acyclic iff it is nonempty,
* k-acyclic for k >= 1 iff it is connected and ``H~_i = 0`` for ``1 <= i <= k-1``.

Equivalently, the suspension has vanishing reduced homology through
degree ``k`` and is connected when ``k >= 0``.  With this convention
0-acyclic means inhabited, 1-acyclic means connected and 2-acyclic means
connected with perfect fundamental group.

The ``"section5"`` indexing asks for ``H~_i = 0`` for every ``i <= k``
(including ``H~_{-1}``, i.e. nonemptiness, and ``H~_0``, connectedness);
it is offered for comparison and is one step stricter.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Literal, Union

from .chaincomplex import ChainComplex, HomologyGroup
from .grouppres import Presentation, is_perfect, presentation_complex_chain
from .simplicial import SimplicialComplex, chain_complex

__all__ = [
    "INFINITY",
    "CAVEAT",
    "AcyclicityReport",
    "analyze_chain",
    "analyze_complex",
    "analyze_presentation",
    "k_acyclic",
    "homological_connectivity",
]

INFINITY = math.inf

CAVEAT = (
    "homological verdict: vanishing reduced integral homology; concluding that "
    "the space itself is acyclic (contractible suspension) assumes Whitehead's principle"
)

Indexing = Literal["section3", "section5"]
ExtInt = Union[int, float]


@dataclass(frozen=True)
class AcyclicityReport:
    nonempty: bool
    connected: bool
    reduced_homology: dict[int, HomologyGroup]
    max_k: ExtInt
    perfect_pi1_h1: bool
    indexing: str = "section3"
    caveat: str = field(default=CAVEAT, repr=False)

    @property
    def acyclic(self) -> bool:
        return self.max_k == INFINITY

    def k_acyclic(self, k: int) -> bool:
        return k <= self.max_k

    def to_dict(self) -> dict:
        return {
            "nonempty": self.nonempty,
            "connected": self.connected,
            "homology": {str(i): g.to_dict() for i, g in sorted(self.reduced_homology.items())},
            "max_k": "infinity" if self.max_k == INFINITY else int(self.max_k),
            "perfect_pi1_h1": self.perfect_pi1_h1,
            "indexing": self.indexing,
            "caveat": self.caveat,
        }


def homological_connectivity(C: ChainComplex) -> ExtInt:
    """Largest ``c`` with ``H~_i(C) = 0`` for all ``i <= c`` (reduced homology).

    ``-2`` when ``H~_{-1}`` is nonzero (the empty space); ``INFINITY`` when
    everything vanishes.
    """
    for i in C.degrees:
        if not C.homology(i).is_zero():
            return i - 1
    return INFINITY


def _max_k(C: ChainComplex, indexing: Indexing) -> ExtInt:
    conn = homological_connectivity(C)
    if indexing == "section3":
        # k-acyclic iff H~_i = 0 for i <= k - 1, with k = -1 free
        return max(conn + 1, -1)
    if indexing == "section5":
        # inhabited and H~_i = 0 for i <= k; -2 means not even (-1)-acyclic
        return conn
    raise ValueError(f"unknown indexing {indexing!r}")


def analyze_chain(C: ChainComplex, indexing: Indexing = "section3") -> AcyclicityReport:
    """Report for an augmented chain complex (reduced homology)."""
    if not C.augmented:
        raise ValueError("acyclicity needs reduced homology: pass an augmented complex")
    table = {i: C.homology(i) for i in C.degrees}
    nonempty = table.get(-1, HomologyGroup()).is_zero()
    connected = nonempty and table.get(0, HomologyGroup()).is_zero()
    return AcyclicityReport(
        nonempty=nonempty,
        connected=connected,
        reduced_homology=table,
        max_k=_max_k(C, indexing),
        perfect_pi1_h1=table.get(1, HomologyGroup()).is_zero(),
        indexing=indexing,
    )


def analyze_complex(K: SimplicialComplex, indexing: Indexing = "section3") -> AcyclicityReport:
    return analyze_chain(chain_complex(K), indexing)


def analyze_presentation(P: Presentation, indexing: Indexing = "section3") -> AcyclicityReport:
    report = analyze_chain(presentation_complex_chain(P), indexing)
    assert report.perfect_pi1_h1 == is_perfect(P)
    return report


def k_acyclic(
    X: SimplicialComplex | Presentation | ChainComplex,
    k: int,
    indexing: Indexing = "section3",
) -> bool:
    """Homological k-acyclicity of a complex, presentation complex or augmented chain complex."""
    if k < -1:
        raise ValueError("k must be >= -1")
    if isinstance(X, SimplicialComplex):
        C = chain_complex(X)
    elif isinstance(X, Presentation):
        C = presentation_complex_chain(X)
    else:
        C = X
    if indexing == "section3" and k == -1:
        return True
    return k <= analyze_chain(C, indexing).max_k
