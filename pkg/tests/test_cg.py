from itertools import product

import pytest

from qlie.cg import extended_rhat, sigma_cg, sigma_cg_family, structure_constants
from qlie.laurent import SpaceConfig, op_rhat
from qlie.operators import Operator, from_functional, op_equal
from qlie.scalars import BETA, C, ONE, Scalar


# -- brute-force oracles: literal delta sums, no shared code with qlie.cg -----


def delta(a, b):
    return 1 if a == b else 0


def sigma_entry_oracle(i, j, k, l):
    total = Scalar.rational(delta(i, l) * delta(j, k))
    for s in range(k, l):  # k <= s < l
        total = total + BETA * (delta(i, s) * delta(j, k + l - s))
    for s in range(l, k):  # l <= s < k
        total = total - BETA * (delta(i, s) * delta(j, k + l - s))
    return total


def family_entry_oracle(i, j, k, l):
    total = Scalar.monomial((0, 0, k - l), delta(i, l) * delta(j, k))
    for s in range(k, l):
        total = total + Scalar.monomial((1, 0, k - s), delta(i, s) * delta(j, k + l - s))
    for s in range(l, k):
        total = total - Scalar.monomial((1, 0, k - s), delta(i, s) * delta(j, k + l - s))
    return total


def constants_entry_oracle(j, k, l):
    return C * (delta(1, l) * delta(j, k) - delta(1, k) * delta(j, l))


# -- sigma ---------------------------------------------------------------------


def test_sigma_n1_is_the_unit_entry():
    sg = sigma_cg(1)
    assert sg.entries == {((1, 1), (1, 1)): ONE}


def test_sigma_n2_exact_table():
    sg = sigma_cg(2)
    assert sg.entries == {
        ((1, 1), (1, 1)): ONE,
        ((2, 2), (2, 2)): ONE,
        ((2, 1), (1, 2)): ONE,
        ((1, 2), (1, 2)): BETA,
        ((1, 2), (2, 1)): ONE - BETA,
    }


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_sigma_matches_brute_force_sum(n):
    sg = sigma_cg(n)
    for i, j, k, l in product(range(1, n + 1), repeat=4):
        assert sg.coeff((i, j), (k, l)) == sigma_entry_oracle(i, j, k, l)


def test_sigma_at_beta_zero_is_a_permutation():
    for n in (1, 2, 3):
        sg = sigma_cg(n).map_entries(lambda s: s.substitute(beta=0))
        assert sg == Operator.flip(n, lo=1)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6])
def test_sigma_conserves_index_weight(n):
    for ((i, j), (k, l)), _ in sigma_cg(n).entries.items():
        assert i + j == k + l


# -- the p-family ----------------------------------------------------------------


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_family_at_p1_reproduces_sigma(n):
    fam = sigma_cg_family(n).map_entries(lambda s: s.substitute(p=1))
    assert fam == sigma_cg(n)


def test_family_n2_entry():
    assert sigma_cg_family(2).coeff((2, 1), (1, 2)) == Scalar.monomial((0, 0, -1))


@pytest.mark.parametrize("n", [1, 2, 3])
def test_family_matches_brute_force_sum(n):
    fam = sigma_cg_family(n)
    for i, j, k, l in product(range(1, n + 1), repeat=4):
        assert fam.coeff((i, j), (k, l)) == family_entry_oracle(i, j, k, l)


def test_family_at_beta_zero_is_weighted_flip():
    fam = sigma_cg_family(3).map_entries(lambda s: s.substitute(beta=0))
    expect = {
        ((l, k), (k, l)): Scalar.monomial((0, 0, k - l))
        for k, l in product(range(1, 4), repeat=2)
    }
    assert fam.entries == expect


# -- structure constants -----------------------------------------------------------


def test_constants_n2_exact():
    ct = structure_constants(2)
    assert ct.entries == {(2, 2, 1): C, (2, 1, 2): -C}


def test_constants_n1_all_zero():
    assert structure_constants(1).entries == {}


def test_constants_match_formula_up_to_n6():
    for n in range(1, 7):
        ct = structure_constants(n)
        for j, k, l in product(range(1, n + 1), repeat=3):
            assert ct.coeff(j, k, l) == constants_entry_oracle(j, k, l)
        expect = {}
        for j in range(2, n + 1):
            expect[(j, j, 1)] = C
            expect[(j, 1, j)] = -C
        assert ct.entries == expect


def test_constants_c3_31_for_larger_n():
    for n in (3, 4, 5):
        assert structure_constants(n).coeff(3, 3, 1) == C


# -- the extended matrix -------------------------------------------------------------


def test_extended_corner_and_blocks():
    ext = extended_rhat(2)
    assert ext.coeff((0, 0), (0, 0)) == ONE
    assert ext.coeff((0, 2), (2, 1)) == C
    assert ext.coeff((1, 0), (1, 0)) == Scalar.zero()
    # delta blocks
    for a in range(0, 3):
        assert ext.coeff((0, a), (a, 0)) == ONE
        assert ext.coeff((a, 0), (0, a)) == ONE


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_small_block_is_sigma(n):
    ext = extended_rhat(n)
    sg = sigma_cg(n)
    small = {
        key: coeff
        for key, coeff in ext.entries.items()
        if all(idx >= 1 for idx in key[0] + key[1])
    }
    assert small == sg.entries


def test_extended_zero_pattern():
    # entries outside the four blocks must vanish identically
    ext = extended_rhat(2)
    for (out, inp) in ext.entries:
        I, J = out
        K, L = inp
        in_sigma = min(out + inp) >= 1
        in_constants = I == 0 and J >= 1 and K >= 1 and L >= 1
        in_delta = (I == 0 and L == 0 and J == K) or (J == 0 and K == 0 and I == L)
        assert in_sigma or in_constants or in_delta


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_cross_construction_equality(n):
    functional = from_functional(op_rhat, SpaceConfig(n))
    eq, witness = op_equal(functional, extended_rhat(n))
    assert eq, witness
