import pytest

from acyclic import grouppres as gp
from acyclic.grouppres import Presentation, Word, commutator
from acyclic.parsing import parse_presentation

a, b = Word.gen(0), Word.gen(1)


def test_free_reduction():
    w = Word(((0, 1), (1, 1), (1, -1), (0, -1), (0, 1)))
    assert not w.is_reduced()
    assert w.reduce() == a
    assert (a * a.inverse()) == Word()
    assert (a * b) ** -1 == b.inverse() * a.inverse()


def test_commutator_and_format():
    c = commutator(a, b)
    assert c.format(["a", "b"]) == "a b a^-1 b^-1"
    assert (a ** 5).format(["a"]) == "a^5"
    assert Word().format([]) == "1"


def test_exponent_sums():
    assert commutator(a, b).exponent_sums(2) == [0, 0]
    assert (a ** 3 * b.inverse()).exponent_sums(2) == [3, -1]


def test_hatcher_exponent_matrix():
    P = gp.hatcher()
    assert gp.exponent_matrix(P).tolist() == [[5, -3], [-2, 1]]
    assert gp.is_perfect(P)


def test_higman_orientation():
    for n in range(1, 9):
        E = gp.exponent_matrix(gp.higman_n(n)).tolist()
        assert E == [[-1 if i == j else 0 for j in range(n)] for i in range(n)]
    # the other orientation of the same relations gives +I and the same group
    flipped = parse_presentation("< a, b, c, d | a = [d,a], b = [a,b], c = [b,c], d = [c,d] >")
    assert gp.exponent_matrix(flipped).tolist() == [[int(i == j) for j in range(4)] for i in range(4)]
    assert gp.is_perfect(flipped)


def test_abelianizations():
    assert gp.abelianization(gp.baumslag_solitar(1, 2)) == gp.AbelianizationResult(1, ())
    assert gp.abelianization(gp.baumslag_solitar(2, 4)) == gp.AbelianizationResult(1, (2,))
    assert gp.abelianization(gp.free(3)) == gp.AbelianizationResult(3, ())
    for n in range(2, 7):
        assert gp.abelianization(gp.cyclic(n)) == gp.AbelianizationResult(0, (n,))
    assert gp.abelianization(gp.cyclic(1)).is_trivial()
    rel = Presentation.from_relations(("a", "b"), [commutator(a, b)])
    assert gp.abelianization(rel) == gp.AbelianizationResult(2, ())


def test_abelianization_by_enumeration():
    # Z^2 / <(6, 4), (2, 2)> has order |det| = 4
    P = Presentation.from_relations(("a", "b"), [a ** 6 * b ** 4, a ** 2 * b ** 2])
    ab = gp.abelianization(P)
    assert ab.free_rank == 0
    order = 1
    for t in ab.torsion:
        order *= t
    assert order == 4
    assert ab.torsion == (2, 2)


def test_presentation_complex_homology():
    C = gp.presentation_complex_chain(gp.cyclic(3))
    assert C.homology(1).torsion == (3,)
    assert C.homology(2).is_zero()
    T = gp.presentation_complex_chain(Presentation.from_relations(("a", "b"), [commutator(a, b)]))
    assert T.homology(2).betti == 1


def test_validation():
    with pytest.raises(gp.PresentationError):
        Presentation(("a", "a"))
    with pytest.raises(gp.PresentationError):
        Presentation(("1a",))
    with pytest.raises(gp.PresentationError):
        Presentation(("a",), (Word(((0, 1), (0, -1))),))
    with pytest.raises(gp.PresentationError):
        Presentation(("a",), (b,))
    with pytest.raises(gp.PresentationError):
        gp.baumslag_solitar(0, 1)


def test_str_forms():
    assert str(gp.free(1)) == "< a | >"
    assert str(gp.hatcher()) == "< a, b | a^5 b^-3, b^2 a^-1 b^-1 a^-1 >"
    assert str(Presentation(())) == "< | >"
    assert parse_presentation("< | >") == Presentation(())


def test_word_helper():
    P = gp.hatcher()
    assert P.word("a^5 b^-3") == P.relators[0]
