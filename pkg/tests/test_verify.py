import random

from acyclic import simplicial as sc
from acyclic.verify import (
    CHECKS,
    ladder_is_monotone,
    random_presentation_text,
    run_check,
    uct_holds,
)


def test_failing_check_becomes_failed_row():
    def boom():
        raise ZeroDivisionError("x")

    row = run_check("demo", 0, boom)
    assert not row.passed
    assert row.detail.startswith("ZeroDivisionError")


def test_rows_cover_every_criterion():
    assert [c[1] for c in CHECKS] == list(range(1, 11))
    assert len({c[0] for c in CHECKS}) == 10


def test_random_presentations_are_deterministic():
    a = [random_presentation_text(random.Random(5)) for _ in range(3)]
    assert len(set(a)) == 1


def test_helpers_on_examples():
    assert uct_holds(sc.chain_complex(sc.rp2_6()))
    assert ladder_is_monotone(sc.torus7())
