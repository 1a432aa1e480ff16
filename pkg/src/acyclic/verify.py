"""Reproducibility table: every headline example checked end to end.

``verify_paper()`` returns one :class:`Row` per check.  Each check is exact
(integer arithmetic, finite enumeration); the randomized property suites use
a fixed seed so the table is deterministic.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Callable

from . import grouppres as gp
from . import simplicial as sc
from .acyclicity import INFINITY, analyze_complex, analyze_presentation, k_acyclic
from .chaincomplex import ChainComplex, HomologyGroup, cohomology, reduced_tensor, shift
from .fundgroup import edge_path_presentation, pi1_abelianized
from .intlinalg import IntMatrix, snf
from .parsing import format_presentation, parse_presentation
from .permgroup import alternating, from_cycles, generate, is_perfect_finite, satisfies

__all__ = ["Row", "verify_paper", "CHECKS", "SEED"]

SEED = 20240531


@dataclass(frozen=True)
class Row:
    id: str
    criterion: int
    passed: bool
    detail: str
    seconds: float = 0.0

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "criterion": self.criterion,
            "passed": self.passed,
            "detail": self.detail,
            "seconds": round(self.seconds, 4),
        }


class CheckFailed(AssertionError):
    pass


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise CheckFailed(message)


def _chain(K: sc.SimplicialComplex) -> ChainComplex:
    return sc.chain_complex(K)


# 1


def check_hatcher() -> str:
    P = gp.hatcher()
    E = gp.exponent_matrix(P)
    _require(E.tolist() == [[5, -3], [-2, 1]], f"exponent matrix {E.tolist()}")
    C = gp.presentation_complex_chain(P)
    _require(C.homology(1).is_zero(), f"H~1 = {C.homology(1)}")
    _require(C.homology(2).is_zero(), f"H~2 = {C.homology(2)}")
    report = analyze_presentation(P)
    _require(report.max_k == INFINITY, f"max_k = {report.max_k}")
    return "E = [[5,-3],[-2,1]], H~1 = H~2 = 0, max_k = infinity"


# 2


def check_higman() -> str:
    for n in range(1, 9):
        P = gp.higman_n(n)
        ab = gp.abelianization(P)
        _require(ab.is_trivial(), f"higman_n({n}) abelianization {ab}")
        E = gp.exponent_matrix(P)
        s = snf(E)
        _require(s.rank == n, f"higman_n({n}) exponent matrix has a kernel")
        _require(all(d == 1 for d in s.diagonal), f"higman_n({n}) cokernel torsion {s.diagonal}")
        _require(analyze_presentation(P).max_k == INFINITY, f"higman_n({n}) not acyclic")
    return "abelianization 0, det E = +-1, max_k = infinity for n = 1..8"


# 3


def check_a5() -> str:
    a = from_cycles(5, [(1, 2, 3, 4, 5)])
    b = from_cycles(5, [(2, 5, 4)])
    ab = a * b
    _require(ab == from_cycles(5, [(1, 2), (3, 4)]), f"ab = {ab}")
    _require(satisfies(gp.hatcher(), {"a": a, "b": b}), "Hatcher relators fail")
    G = generate(5, [a, b])
    A5 = alternating(5)
    _require(G.order == 60, f"|<a,b>| = {G.order}")
    _require(G == A5, "<a,b> differs from A5")
    _require(is_perfect_finite(A5), "A5 not perfect")
    return f"ab = {ab}, relators hold, |<a,b>| = 60 = |A5|, A5 perfect"


# 4

PERFECTNESS_CORPUS = ("hatcher", "higman", "free1", "free2", "free3",
                      "cyclic2", "cyclic3", "cyclic4", "cyclic5", "cyclic6", "bs12")


def check_perfect_iff_2_acyclic() -> str:
    presets = gp.corpus()
    verdicts = []
    for name in PERFECTNESS_CORPUS:
        P = presets[name]
        perfect = gp.is_perfect(P)
        h1_zero = gp.presentation_complex_chain(P).homology(1).is_zero()
        two = k_acyclic(P, 2)
        _require(perfect == h1_zero == two, f"{name}: perfect={perfect}, H~1=0 {h1_zero}, 2-acyclic {two}")
        verdicts.append(perfect)
    return f"{len(verdicts)} presentations agree ({sum(verdicts)} perfect)"


# 5


def check_baumslag_solitar() -> str:
    ab = gp.abelianization(gp.baumslag_solitar(1, 2))
    _require((ab.free_rank, ab.torsion) == (1, ()), f"abelianization {ab}")
    return "BS(1,2)^ab = Z"


# 6

SUSPENSION_CORPUS = ("point", "empty", "s0", "sphere0", "sphere1", "sphere2", "sphere3",
                     "circle3", "circle4", "circle5", "circle6", "torus7", "rp2_6")


def check_suspension_shift() -> str:
    complexes = sc.corpus()
    count = 0
    for name in SUSPENSION_CORPUS:
        K = complexes[name]
        C = _chain(K)
        S = _chain(sc.suspension(K))
        T = shift(C, 1)
        for i in range(-1, 6):
            want = C.homology(i - 1)
            _require(S.homology(i) == want, f"{name}: H~{i}(join model) = {S.homology(i)}, want {want}")
            _require(T.homology(i) == want, f"{name}: H~{i}(shift) = {T.homology(i)}, want {want}")
            count += 1
    return f"{len(SUSPENSION_CORPUS)} complexes x degrees -1..5 ({count} identities, two models)"


# 7

POINTED = ("s0", "circle3", "sphere2", "rp2_6")


def check_join_smash() -> str:
    complexes = sc.corpus()
    pairs = 0
    for x in POINTED:
        for y in POINTED:
            A, B = complexes[x], complexes[y]
            J = _chain(sc.join(A, B))
            M = shift(reduced_tensor(_chain(A), _chain(B)), 1)
            top = max(J.top_degree, M.top_degree)
            for i in range(-1, top + 1):
                _require(J.homology(i) == M.homology(i),
                         f"{x}*{y}: H~{i} join {J.homology(i)} vs model {M.homology(i)}")
            pairs += 1
    return f"{pairs} ordered pairs agree in every degree"


# 8

JOIN_CORPUS = ("point", "s0", "circle3", "circle4", "sphere2", "torus7", "rp2_6")


def check_join_connectivity() -> str:
    complexes = sc.corpus()
    levels = {name: analyze_complex(complexes[name]).max_k for name in JOIN_CORPUS}
    checked = 0
    for x, y in combinations_with_replacement(JOIN_CORPUS, 2):
        k, l = levels[x], levels[y]
        if k < 0 or l < 0:
            continue
        J = _chain(sc.join(complexes[x], complexes[y]))
        bound = min(k + l, J.top_degree)
        i = -1
        while i <= bound:
            _require(J.homology(i).is_zero(), f"{x}*{y}: H~{i} = {J.homology(i)} with k+l = {k + l}")
            i += 1
        checked += 1
    C33 = _chain(sc.join(sc.circle(3), sc.circle(3)))
    for i in range(-1, 3):
        _require(C33.homology(i).is_zero(), f"circle3*circle3: H~{i} = {C33.homology(i)}")
    _require(C33.homology(3) == HomologyGroup(1), f"circle3*circle3: H~3 = {C33.homology(3)}")
    return f"{checked} pairs respect the k+l bound; circle3*circle3 has H~3 = Z"


# 9


def check_pi1_h1() -> str:
    complexes = sc.corpus()
    checked = []
    for name, K in complexes.items():
        if not K.simplices or sc.connected_components(K) != 1:
            continue
        ab = pi1_abelianized(K)
        h1 = _chain(K).homology(1)
        _require(ab.as_homology() == h1, f"{name}: pi1^ab = {ab}, H1 = {h1}")
        checked.append(name)
    t = pi1_abelianized(sc.torus7())
    _require((t.free_rank, t.torsion) == (2, ()), f"torus7: {t}")
    r = pi1_abelianized(sc.rp2_6())
    _require((r.free_rank, r.torsion) == (0, (2,)), f"rp2_6: {r}")
    P = edge_path_presentation(sc.circle(3)).presentation
    _require(P.n_generators == 1 and not P.relators, f"circle3 pi1 = {P}")
    return f"{len(checked)} connected complexes agree; torus7 Z^2, rp2_6 Z/2, circle3 free of rank 1"


# 10


def _random_matrix(rng: random.Random) -> IntMatrix:
    rows, cols = rng.randint(1, 6), rng.randint(1, 6)
    density = rng.choice([0.3, 0.6, 1.0])
    data = [[rng.randint(-9, 9) if rng.random() < density else 0 for _ in range(cols)] for _ in range(rows)]
    return IntMatrix.from_rows(data, cols=cols)


def snf_invariants_hold(M: IntMatrix) -> None:
    s = snf(M)
    _require(s.U @ M @ s.V == s.D, "U M V != D")
    _require(abs(s.U.det()) == 1 and abs(s.V.det()) == 1, "transform not unimodular")
    _require(s.V @ s.V_inv == IntMatrix.identity(M.cols), "V_inv is not the inverse of V")
    r = s.rank
    for i in range(M.rows):
        for j in range(M.cols):
            want = s.diagonal[i] if i == j and i < r else 0
            _require(s.D[i, j] == want, f"D[{i},{j}] = {s.D[i, j]}")
    _require(all(d > 0 for d in s.diagonal), "nonpositive invariant factor")
    _require(all(b % a == 0 for a, b in zip(s.diagonal, s.diagonal[1:])), f"divisibility fails {s.diagonal}")


def _constructed_complexes() -> list[ChainComplex]:
    out = []
    base = sc.corpus()
    for K in base.values():
        out.append(_chain(K))
        out.append(_chain(sc.suspension(K)))
        out.append(_chain(sc.cone(K)))
    for x in POINTED:
        for y in POINTED:
            out.append(_chain(sc.join(base[x], base[y])))
            out.append(reduced_tensor(_chain(base[x]), _chain(base[y])))
    for P in gp.corpus().values():
        out.append(gp.presentation_complex_chain(P))
    return out


def _boundary_squares_vanish(C: ChainComplex) -> bool:
    for n in range(C.bottom_degree, C.top_degree - 1):
        if not (C.boundary(n) @ C.boundary(n + 1)).is_zero():
            return False
    return True


def uct_holds(C: ChainComplex) -> bool:
    """``H^i = free(H_i) + torsion(H_{i-1})`` in every degree."""
    for i in range(C.bottom_degree, C.top_degree + 2):
        want = HomologyGroup(C.homology(i).betti, C.homology(i - 1).torsion)
        if cohomology(C, i) != want:
            return False
    return True


def ladder_is_monotone(X, top: int = 6) -> bool:
    for indexing in ("section3", "section5"):
        verdicts = [k_acyclic(X, k, indexing) for k in range(-1, top + 1)]
        # once false, stays false
        if any(later and not earlier for earlier, later in zip(verdicts, verdicts[1:])):
            return False
    return True


def random_presentation_text(rng: random.Random, max_depth: int = 4, max_gens: int = 5) -> str:
    n = rng.randint(1, max_gens)
    names = rng.sample(["a", "b", "c", "d", "x", "y", "g1", "h_2"], n)

    def word(depth: int) -> str:
        return " ".join(factor(depth) for _ in range(rng.randint(1, 3)))

    def factor(depth: int) -> str:
        atom = primary(depth)
        if rng.random() < 0.35:
            atom += f"^{rng.choice([-3, -2, -1, 2, 3, 5])}"
        return atom

    def primary(depth: int) -> str:
        roll = rng.random()
        if depth <= 0 or roll < 0.55:
            return rng.choice(names)
        if roll < 0.6:
            return "1"
        if roll < 0.8:
            return f"({word(depth - 1)})"
        return f"[{word(depth - 1)}, {word(depth - 1)}]"

    rels = []
    for _ in range(rng.randint(0, 4)):
        depth = rng.randint(0, max_depth)
        rels.append(f"{word(depth)} = {word(depth)}" if rng.random() < 0.5 else word(depth))
    return f"< {', '.join(names)} | {', '.join(rels)} >"


def check_properties() -> str:
    rng = random.Random(SEED)
    for _ in range(500):
        snf_invariants_hold(_random_matrix(rng))
    complexes = _constructed_complexes()
    for C in complexes:
        _require(_boundary_squares_vanish(C), "a boundary composite is nonzero")
    corpus = sc.corpus()
    for name, K in corpus.items():
        _require(uct_holds(_chain(K)), f"UCT fails on {name}")
        _require(uct_holds(_chain(K).unreduced()), f"unreduced UCT fails on {name}")
        _require(ladder_is_monotone(K), f"ladder not monotone on {name}")
    for name, P in gp.corpus().items():
        _require(ladder_is_monotone(P), f"ladder not monotone on {name}")
    for _ in range(200):
        text = random_presentation_text(rng)
        P = parse_presentation(text)
        again = parse_presentation(format_presentation(P))
        _require(again == P, f"round trip changed {text!r}")
    return (f"500 SNFs, d^2 = 0 on {len(complexes)} complexes, UCT and ladder on corpus, "
            f"200 parser round trips (seed {SEED})")


CHECKS: tuple[tuple[str, int, Callable[[], str]], ...] = (
    ("hatcher-acyclic", 1, check_hatcher),
    ("higman-acyclic", 2, check_higman),
    ("a5-quotient", 3, check_a5),
    ("perfect-iff-2-acyclic", 4, check_perfect_iff_2_acyclic),
    ("baumslag-solitar", 5, check_baumslag_solitar),
    ("suspension-shift", 6, check_suspension_shift),
    ("join-smash", 7, check_join_smash),
    ("join-connectivity", 8, check_join_connectivity),
    ("pi1-h1-oracle", 9, check_pi1_h1),
    ("property-suites", 10, check_properties),
)


def run_check(row_id: str, criterion: int, fn: Callable[[], str]) -> Row:
    start = time.perf_counter()
    try:
        detail = fn()
        passed = True
    except Exception as e:  # a crash is a failed row, not a crashed table
        detail = f"{type(e).__name__}: {e}"
        passed = False
    return Row(row_id, criterion, passed, detail, time.perf_counter() - start)


def verify_paper() -> list[Row]:
    return [run_check(*check) for check in CHECKS]
