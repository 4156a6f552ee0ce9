import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qlie.freealg import NCPoly, chi, ff, generator_key, word_str
from qlie.scalars import BETA, ONE, Scalar


def test_generator_ordering():
    # unit < x_i by index < f(i, j) lexicographically
    assert generator_key(chi(1)) < generator_key(chi(2))
    assert generator_key(chi(9)) < generator_key(ff(1, 1))
    assert generator_key(ff(1, 2)) < generator_key(ff(2, 1))


def test_unit_is_absorbed_in_products():
    unit = NCPoly.unit()
    x1 = NCPoly.generator(chi(1))
    assert unit * x1 == x1
    assert x1 * unit == x1
    assert unit * unit == unit


def test_free_product_does_not_commute():
    a = NCPoly.generator(chi(1))
    b = NCPoly.generator(ff(1, 1))
    assert a * b != b * a
    assert (a * b - b * a).max_word_length() == 2


def test_word_strings():
    assert word_str(()) == "1"
    assert word_str((chi(1), ff(2, 1))) == "x1*f(2,1)"


def test_string_form():
    p = NCPoly.generator(chi(2), BETA) - NCPoly.unit()
    assert str(p) == "(-1)*1 + (b)*x2"
    assert str(NCPoly.zero()) == "0"


def test_index_validation():
    with pytest.raises(ValueError):
        chi(0)
    with pytest.raises(ValueError):
        ff(1, 0)


words = st.lists(
    st.one_of(
        st.integers(1, 3).map(chi),
        st.tuples(st.integers(1, 2), st.integers(1, 2)).map(lambda t: ff(*t)),
    ),
    max_size=3,
).map(tuple)
coeffs = st.fractions(min_value=-4, max_value=4, max_denominator=5).map(Scalar.rational)
polys = st.dictionaries(words, coeffs, max_size=5).map(NCPoly)


@settings(max_examples=150, deadline=None)
@given(polys, polys, polys)
def test_algebra_laws(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a + b == b + a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert (a - a).is_zero()


@settings(max_examples=100, deadline=None)
@given(polys)
def test_scaling(a):
    assert a.scale(0).is_zero()
    assert a.scale(ONE) == a
    assert a.scale(-1) == -a
