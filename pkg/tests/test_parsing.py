import json
import random

import pytest

from acyclic import grouppres as gp
from acyclic import simplicial as sc
from acyclic.parsing import (
    ParseError,
    format_presentation,
    parse_complex,
    parse_matrix,
    parse_presentation,
    parse_presentation_source,
)
from acyclic.verify import random_presentation_text


def test_examples():
    assert parse_presentation("< a, b | a^5 = b^3, b^3 = (a b)^2 >") == gp.hatcher()
    assert parse_presentation("< a | >") == gp.free(1)
    assert parse_presentation("< a, b | a b a^-1 = b^2 >") == gp.baumslag_solitar(1, 2)
    higman = "< a, b, c, d | [d,a] = a, [a,b] = b, [b,c] = c, [c,d] = d >"
    assert parse_presentation(higman) == gp.higman()


def test_atoms():
    P = parse_presentation("< x, y | 1, x^2^3, [x, y]^-1, (x y)^+2, x = 1 >")
    x, y = gp.Word.gen(0), gp.Word.gen(1)
    assert P.relators == (gp.Word(), x ** 6, gp.commutator(x, y).inverse(), (x * y) ** 2, x)


def test_multiline_and_spans():
    text = "< a,\n  b |\n  a^2,\n  b = a >"
    src = parse_presentation_source(text)
    assert src.presentation.n_generators == 2
    assert [text[s:e] for s, e in src.spans] == ["a^2", "b = a"]


@pytest.mark.parametrize(
    "text, line, column",
    [
        ("< a, b | a^5 = c >", 1, 16),
        ("< a b | >", 1, 5),
        ("< a | a^ >", 1, 10),
        ("< a | a = >", 1, 11),
        ("< a, a | >", 1, 6),
        ("< a | a > extra", 1, 11),
        ("< a |\n  a 2 >", 2, 5),
        ("< a | a ; >", 1, 9),
        ("< a | [a a] >", 1, 11),
        ("< a | a", 1, 8),
    ],
)
def test_positioned_errors(text, line, column):
    with pytest.raises(ParseError) as info:
        parse_presentation(text)
    assert (info.value.line, info.value.column) == (line, column)


def test_expected_set_reported():
    with pytest.raises(ParseError) as info:
        parse_presentation("< a | a = >")
    assert "generator" in info.value.expected


def test_round_trip_random():
    rng = random.Random(99)
    for _ in range(200):
        P = parse_presentation(random_presentation_text(rng))
        assert parse_presentation(format_presentation(P)) == P


def test_round_trip_corpus():
    for P in gp.corpus().values():
        assert parse_presentation(str(P)) == P


def test_parse_complex_text():
    K = parse_complex("# a triangle boundary\n1 2\n2 3\n3 1\n")
    assert K.labels == ("1", "2", "3")
    assert sc.chain_complex(K).homology(1).betti == 1
    assert parse_complex("") == sc.empty()
    named = parse_complex("b c\na\n")
    assert named.labels == ("a", "b", "c")


def test_parse_complex_numeric_order():
    K = parse_complex("10 2\n")
    assert K.labels == ("2", "10")


def test_parse_complex_json_round_trip():
    K = sc.torus7()
    again = parse_complex(json.dumps(K.to_json()))
    assert again == K
    assert parse_complex(K.to_text()).f_vector() == K.f_vector()


def test_parse_complex_errors():
    with pytest.raises(ParseError):
        parse_complex("[[1, 2], []]")
    with pytest.raises(ParseError):
        parse_complex("[[1, 2.5]]")
    with pytest.raises(ParseError) as info:
        parse_complex("1 2\n3 3\n")
    assert info.value.line == 2
    with pytest.raises(ParseError):
        parse_complex("[[1, 2]")


def test_parse_matrix():
    assert parse_matrix("1 2\n3, 4\n").tolist() == [[1, 2], [3, 4]]
    assert parse_matrix("[[5, -3], [-2, 1]]").tolist() == [[5, -3], [-2, 1]]
    with pytest.raises(ParseError):
        parse_matrix("1 2\n3\n")
    with pytest.raises(ParseError) as info:
        parse_matrix("1 2\n3 x\n")
    assert info.value.line == 2
