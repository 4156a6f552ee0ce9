import json
from random import Random

import pytest

from qlie.laurent import LaurentFn, SpaceConfig, op_rho, op_rhat, permute
from qlie.operators import (
    Operator,
    StabilityError,
    compose,
    embed,
    from_functional,
    matrix_of,
    op_equal,
)
from qlie.scalars import BETA, C, ONE, Scalar


def test_from_functional_examples():
    m1 = from_functional(op_rhat, SpaceConfig(1))
    assert m1.coeff((1, 0), (0, 1)) == ONE
    m2 = from_functional(op_rhat, SpaceConfig(2))
    assert m2.coeff((1, 2), (2, 1)) == ONE - BETA
    ident = from_functional(lambda fn: fn, SpaceConfig(2))
    assert ident == Operator.identity(2, 2, lo=0)


def test_from_functional_reports_stability_violations():
    def bad(fn):
        # shift every exponent up by one: leaves the space at the top degree
        return LaurentFn(
            fn.cfg, fn.arity, {tuple(e + 1 for e in k): v for k, v in fn.terms()}
        )

    with pytest.raises(StabilityError):
        from_functional(bad, SpaceConfig(2))


def test_embed_identity_and_flip():
    ident = Operator.identity(2, 2, lo=0)
    assert embed(ident, "12") == Operator.identity(2, 3, lo=0)
    P = Operator.flip(2, lo=0)
    P12 = embed(P, "12")
    assert P12.coeff((1, 0, 2), (0, 1, 2)) == ONE
    assert P12.coeff((1, 0, 2), (1, 0, 2)) == Scalar.zero()


@pytest.mark.parametrize("pair,slots", [("12", (0, 1)), ("13", (0, 2)), ("23", (1, 2))])
@pytest.mark.parametrize("n", [1, 2, 3])
def test_embedded_matrix_agrees_with_three_slot_functional(n, pair, slots):
    cfg = SpaceConfig(n)
    two = from_functional(op_rho, cfg)
    direct = matrix_of(lambda fn: op_rho(fn, slots), cfg, legs=3)
    assert embed(two, pair) == direct


def test_compose_examples():
    P = Operator.flip(2, lo=0)
    assert compose(P, P) == Operator.identity(2, 2, lo=0)
    sigma = from_functional(op_rhat, SpaceConfig(2))
    assert compose(sigma, Operator.identity(2, 2, lo=0)) == sigma
    a = compose(embed(P, "12"), embed(P, "23"))
    b = compose(embed(P, "23"), embed(P, "12"))
    assert a != b


def test_op_equal_reports_first_discrepancy():
    P = Operator.flip(1, lo=0)
    eq, wit = op_equal(P, P)
    assert eq and wit is None
    eq, wit = op_equal(P, Operator.identity(1, 2, lo=0))
    assert not eq
    assert wit == {"out": [0, 1], "in": [0, 1], "lhs": "0", "rhs": "1"}


def test_shape_mismatch_raises():
    with pytest.raises(ValueError):
        compose(Operator.flip(1, lo=0), Operator.flip(2, lo=0))
    with pytest.raises(ValueError):
        compose(Operator.flip(2, lo=0), Operator.flip(2, lo=1))


def random_operator(rng, n=2, legs=2, lo=0):
    ent = {}
    idx = list(range(lo, n + 1))
    for _ in range(rng.randint(0, 8)):
        out = tuple(rng.choice(idx) for _ in range(legs))
        inp = tuple(rng.choice(idx) for _ in range(legs))
        ent[(out, inp)] = Scalar.monomial(
            (rng.randint(0, 2), rng.randint(0, 1), 0), rng.randint(-3, 3)
        )
    return Operator(n, legs, ent, lo)


def test_compose_is_associative_on_random_operators():
    rng = Random(5)
    for _ in range(100):
        a, b, c = (random_operator(rng) for _ in range(3))
        assert compose(compose(a, b), c) == compose(a, compose(b, c))


def test_embed_is_multiplicative():
    rng = Random(6)
    for _ in range(60):
        a, b = random_operator(rng), random_operator(rng)
        for pair in ("12", "13", "23"):
            assert embed(compose(a, b), pair) == compose(embed(a, pair), embed(b, pair))


def test_from_functional_is_linear_in_the_operator():
    cfg = SpaceConfig(2)
    sum_op = from_functional(lambda fn: op_rho(fn) + permute(fn), cfg)
    assert sum_op == from_functional(op_rho, cfg) + from_functional(permute, cfg)


def test_json_export_schema_and_determinism():
    op = Operator(1, 2, {((0, 1), (1, 0)): BETA}, lo=0)
    doc = json.loads(op.to_json())
    assert doc == {
        "n": 1,
        "legs": 2,
        "entries": [{"out": [0, 1], "in": [1, 0], "coeff": "b"}],
    }
    assert op.to_json() == op.to_json()


def test_csv_export():
    op = Operator(1, 2, {((0, 1), (1, 0)): BETA, ((0, 0), (0, 0)): ONE}, lo=0)
    assert op.to_csv() == (
        "n,legs,out,in,coeff\n"
        "1,2,0 0,0 0,1\n"
        "1,2,0 1,1 0,b\n"
    )


def test_with_entry_override_and_bounds():
    op = Operator.flip(2, lo=0)
    mutated = op.with_entry((0, 2), (2, 1), C + C)
    assert mutated.coeff((0, 2), (2, 1)) == C * 2
    assert op.coeff((0, 2), (2, 1)) == Scalar.zero()  # original untouched
    with pytest.raises(ValueError):
        op.with_entry((0, 5), (0, 0), ONE)
