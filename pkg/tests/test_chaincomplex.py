import pytest

from acyclic import simplicial as sc
from acyclic.chaincomplex import (
    ChainComplex,
    ChainComplexError,
    HomologyGroup,
    cohomology,
    direct_sum,
    reduced_tensor,
    relative,
    shift,
)
from acyclic.intlinalg import IntMatrix

Z = HomologyGroup(1)
ZERO = HomologyGroup()


def table(C, lo=None, hi=None):
    lo = C.bottom_degree if lo is None else lo
    hi = C.top_degree if hi is None else hi
    return {i: C.homology(i) for i in range(lo, hi + 1)}


def test_homology_group_validation_and_text():
    assert str(HomologyGroup(2, (2, 4))) == "Z^2 + Z/2 + Z/4"
    assert str(ZERO) == "0"
    with pytest.raises(ValueError):
        HomologyGroup(0, (2, 3))
    with pytest.raises(ValueError):
        HomologyGroup(0, (1,))


def test_boundary_squared_checked():
    with pytest.raises(ChainComplexError):
        ChainComplex(0, (1, 1, 1), (IntMatrix.from_rows([[1]]), IntMatrix.from_rows([[1]])))


def test_shape_checked():
    with pytest.raises(ChainComplexError):
        ChainComplex(0, (1, 2), (IntMatrix.from_rows([[1]]),))


def test_multiplication_by_two():
    C = ChainComplex(0, (1, 1), (IntMatrix.from_rows([[2]]),))
    assert C.homology(0) == HomologyGroup(0, (2,))
    assert C.homology(1) == ZERO
    assert cohomology(C, 1) == HomologyGroup(0, (2,))
    assert cohomology(C, 0) == ZERO


def test_sphere2_and_rp2():
    S = sc.chain_complex(sc.sphere(2))
    assert table(S) == {-1: ZERO, 0: ZERO, 1: ZERO, 2: Z}
    R = sc.chain_complex(sc.rp2_6())
    assert table(R) == {-1: ZERO, 0: ZERO, 1: HomologyGroup(0, (2,)), 2: ZERO}
    U = R.unreduced()
    assert U.bottom_degree == 0
    assert table(U) == {0: Z, 1: HomologyGroup(0, (2,)), 2: ZERO}


def test_rp2_cohomology_by_uct():
    R = sc.chain_complex(sc.rp2_6()).unreduced()
    assert [cohomology(R, i) for i in range(3)] == [Z, ZERO, HomologyGroup(0, (2,))]


def test_empty_complex_reduced_homology():
    E = sc.chain_complex(sc.empty())
    assert E.homology(-1) == Z
    assert E.euler_characteristic() == -1


def test_euler_characteristic_matches_f_vector():
    for name, K in sc.corpus().items():
        C = sc.chain_complex(K)
        assert C.euler_characteristic() == K.reduced_euler_characteristic(), name
        betti = sum((-1) ** i * C.homology(i).betti for i in C.degrees)
        assert betti == C.euler_characteristic(), name


def test_shift_moves_homology():
    for name in ("s0", "circle4", "torus7", "rp2_6", "empty", "point"):
        C = sc.chain_complex(sc.corpus()[name])
        for n in (1, 2, 3):
            T = shift(C, n)
            assert T.augmented
            for i in range(-1, C.top_degree + n + 2):
                assert T.homology(i) == C.homology(i - n), (name, n, i)


def test_shift_rejects_bad_input():
    C = sc.chain_complex(sc.point())
    with pytest.raises(ValueError):
        shift(C, 0)
    with pytest.raises(ChainComplexError):
        shift(C.unreduced(), 1)


def test_reduced_tensor_ranks():
    A = sc.chain_complex(sc.circle(3))
    B = sc.chain_complex(sc.sphere(2))
    T = reduced_tensor(A, B)
    # reduced ranks: circle3 (2, 3), sphere2 (3, 6, 4) in degrees 0, 1, 2
    ra, rb = [2, 3], [3, 6, 4]
    for n in range(1, 4):
        want = sum(ra[p] * rb[n - p] for p in range(2) if 0 <= n - p < 3)
        assert T.rank(n) == want
    assert T.rank(0) == ra[0] * rb[0] + 1


def test_reduced_tensor_of_spheres_is_sphere():
    T = reduced_tensor(sc.chain_complex(sc.circle(3)), sc.chain_complex(sc.circle(4)))
    assert table(T, -1, 3) == {-1: ZERO, 0: ZERO, 1: ZERO, 2: Z, 3: ZERO}


def test_reduced_tensor_kunneth_torsion():
    # RP2 smash RP2: Tor(Z/2, Z/2) lands one degree up
    R = sc.chain_complex(sc.rp2_6())
    T = reduced_tensor(R, R)
    assert T.homology(2) == HomologyGroup(0, (2,))
    assert T.homology(3) == HomologyGroup(0, (2,))
    assert T.homology(4) == ZERO


def test_reduced_tensor_needs_base_point():
    with pytest.raises(ChainComplexError):
        reduced_tensor(sc.chain_complex(sc.empty()), sc.chain_complex(sc.point()))


def test_direct_sum():
    A = sc.chain_complex(sc.circle(3)).unreduced()
    B = sc.chain_complex(sc.sphere(2)).unreduced()
    D = direct_sum(A, B)
    assert not D.augmented
    assert table(D) == {0: HomologyGroup(2), 1: Z, 2: Z}


def test_relative_simplex_mod_boundary():
    K = sc.simplex(2)
    L = sc.sphere(1)  # same vertex set, all edges
    idx = sc.subcomplex_indices(K, L)
    Q = relative(sc.chain_complex(K), sc.chain_complex(L), idx)
    assert [Q.rank(n) for n in range(-1, 3)] == [0, 0, 0, 1]
    assert Q.homology(2) == Z
    assert all(Q.homology(i).is_zero() for i in range(-1, 2))


def test_relative_rejects_non_subcomplex():
    K = sc.chain_complex(sc.simplex(2))
    L = ChainComplex(1, (1,), ())
    with pytest.raises(ChainComplexError):
        relative(K, L, {1: [0]})


def test_dict_round_trip():
    C = sc.chain_complex(sc.torus7())
    again = ChainComplex.from_dict(C.to_dict())
    assert again == C
    assert table(again) == table(C)
