from itertools import product

import pytest

from qlie.cg import structure_constants
from qlie.freealg import NCPoly, chi, ff
from qlie.rtt import (
    all_bcc_relations,
    all_rtt_relations,
    bcc_relation,
    compare_relation_spans,
    dump_relations,
    rtt_relation,
)
from qlie.scalars import BETA, C, ONE, Scalar


def gen2(a, b):
    return NCPoly.generator(a) * NCPoly.generator(b)


# -- single relations against hand expansion -------------------------------------


def test_corner_relation_is_trivial():
    assert rtt_relation(0, 0, 0, 0, 2).is_zero()


def test_relations_with_zero_row_index_vanish():
    # the zero-pattern of T wipes out every term of these instances
    assert rtt_relation(0, 1, 1, 2, 2).is_zero()
    assert rtt_relation(0, 0, 0, 1, 2).is_zero()
    assert rtt_relation(0, 2, 1, 0, 2).is_zero()


def test_chi_chi_family_sits_at_capital_zero_columns():
    # (i, j; 0, 0) carries the bracket relation: s.c.. chi chi + C chi = chi chi
    n = 2
    for i, j in product((1, 2), repeat=2):
        assert rtt_relation(i, j, 0, 0, n) == bcc_relation(1, (i, j), n).scale(-1)


def test_hand_expansion_of_the_n2_bracket_instance():
    # relation (2, 1; 0, 0): sigma^{kl}_{21} x_k x_l + C^k_{21} x_k - x_2 x_1
    expect = (
        gen2(chi(1), chi(2)).scale(ONE - BETA)
        + NCPoly.generator(chi(2), C)
        - gen2(chi(2), chi(1))
    )
    assert rtt_relation(2, 1, 0, 0, 2) == expect


def test_fourth_family_instance():
    # x_2 f^2_1 = sigma^{kl}_{21} f^2_k x_l, realized at (2, 1; 2, 0)
    rel = bcc_relation(4, (2, 1, 2), 2)
    expect = gen2(chi(2), ff(2, 1)) - gen2(ff(2, 1), chi(2)).scale(ONE - BETA)
    assert rel == expect
    assert rtt_relation(2, 1, 2, 0, 2) == expect.scale(-1)


def test_second_family_is_purely_quadratic_in_f():
    for idx in product((1, 2), repeat=4):
        rel = bcc_relation(2, idx, 2)
        for word, _ in rel.terms():
            assert all(g[0] == "f" for g in word)


def test_first_family_diagonal_instance_cancels():
    # x_1 x_1 - sigma^{11}_{11} x_1 x_1 - C^k_{11} x_k = 0
    assert bcc_relation(1, (1, 1), 2).is_zero()


@pytest.mark.parametrize("n", [1, 2, 3])
def test_all_relations_are_at_most_quadratic(n):
    for _, rel in all_rtt_relations(n):
        assert rel.max_word_length() <= 2
    for _, rel in all_bcc_relations(n):
        assert rel.max_word_length() <= 2


@pytest.mark.parametrize("n", [1, 2, 3])
def test_degenerate_index_patterns(n):
    """Exchange relations reduce to known shorter forms, exhaustively.

    Instances with a 0 among the input indices collapse to zero; the others
    are (up to sign) exactly the four directly-substituted families.
    """
    for I, J, A, B in product(range(n + 1), repeat=4):
        rel = rtt_relation(I, J, A, B, n)
        if I == 0 or J == 0:
            assert rel.is_zero()
        elif A == 0 and B == 0:
            assert rel == bcc_relation(1, (I, J), n).scale(-1)
        elif A == 0:
            assert rel == bcc_relation(3, (I, J, B), n)
        elif B == 0:
            assert rel == bcc_relation(4, (I, J, A), n).scale(-1)
        else:
            assert rel == bcc_relation(2, (I, J, A, B), n)


# -- span comparison ----------------------------------------------------------------


def test_spans_at_n1_by_hand():
    # at n = 1 every nonzero relation on either side is the single commutator
    commutator = gen2(chi(1), ff(1, 1)) - gen2(ff(1, 1), chi(1))
    nonzero_rtt = [rel for _, rel in all_rtt_relations(1) if not rel.is_zero()]
    nonzero_bcc = [rel for _, rel in all_bcc_relations(1) if not rel.is_zero()]
    assert nonzero_rtt == [commutator, -commutator]
    assert nonzero_bcc == [commutator, commutator]
    report = compare_relation_spans(1)
    assert report.passed


@pytest.mark.parametrize("n", [1, 2])
def test_spans_equal(n):
    report = compare_relation_spans(n)
    assert report.passed
    assert report.failures == 0


@pytest.mark.slow
def test_spans_equal_n3():
    assert compare_relation_spans(3).passed


def test_span_mismatch_with_corrupted_constants():
    ct = structure_constants(2).with_entry(2, 2, 1, C + C)
    report = compare_relation_spans(2, bcc_constants=ct)
    assert not report.passed
    sides = {w["outside"] for w in report.witnesses}
    # both directions are checked, and both must notice
    assert sides == {"bcc-span", "rtt-span"}
    assert all(w["prefilter"] for w in report.witnesses)


def test_span_comparison_is_seeded_deterministic():
    a = compare_relation_spans(2, seed=1)
    b = compare_relation_spans(2, seed=1)
    assert a.witnesses == b.witnesses and a.passed == b.passed


def test_relation_dump_is_stable():
    text = dump_relations(1)
    assert text == dump_relations(1)
    lines = text.strip().split("\n")
    assert lines[0] == "rtt 0 0 0 0 : 0"
    # n = 1: 16 exchange instances plus 1 + 1 + 1 + 1 calculus instances
    assert len(lines) == 20
    assert "bcc 1 1 1 : 0" in text


def test_dump_word_format():
    text = dump_relations(2)
    assert "x2*f(2,1)" in text
