from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from ncinvariants.exactfield import (QQ, FieldSpec, Scalar, cyclotomic_field, scalar_arith,
                                     scalar_inverse)

GAUSS = FieldSpec((1, 0, 1), "Q(i)")
EISENSTEIN = FieldSpec((1, 1, 1), "Q(w)")


def test_rational_sum():
    a, b = QQ.scalar(Fraction(1, 2)), QQ.scalar(Fraction(1, 3))
    assert scalar_arith("add", a, b) == Fraction(5, 6)


def test_i_squared():
    i = GAUSS.generator()
    assert scalar_arith("mul", i, i) == -1


def test_cube_root_of_unity():
    w = EISENSTEIN.generator()
    assert scalar_arith("mul", w, w * w) == 1


def test_inverses():
    assert scalar_inverse(QQ.scalar(Fraction(2, 3))) == Fraction(3, 2)
    i = GAUSS.generator()
    assert scalar_inverse(i) == -i
    w = EISENSTEIN.generator()
    assert scalar_inverse(1 + w) == -w


def test_mismatched_fields():
    with pytest.raises(ValueError):
        scalar_arith("add", GAUSS.generator(), EISENSTEIN.generator())


def test_zero_has_no_inverse():
    with pytest.raises(ZeroDivisionError):
        scalar_inverse(GAUSS.zero())


def test_irreducibility_check():
    assert GAUSS.check_irreducible()
    assert not FieldSpec((-1, 0, 1)).check_irreducible()
    assert cyclotomic_field(5).check_irreducible()


def test_cyclotomic_root_order():
    for m in (3, 4, 5, 6):
        w = cyclotomic_field(m).generator()
        assert w ** m == 1
        assert all(w ** k != 1 for k in range(1, m))


def test_coefficients_have_field_degree_length():
    f = cyclotomic_field(5)
    assert len(f.generator().coeffs) == 4
    assert len((f.generator() ** 7).coeffs) == 4


# ---------------------------------------------------------------------------
# field axioms on random elements

FIELDS = [GAUSS, EISENSTEIN, cyclotomic_field(5), FieldSpec((-2, 0, 0, 1), "Q(2^(1/3))")]

fractions = st.fractions(min_value=-20, max_value=20, max_denominator=12)


@st.composite
def field_elements(draw, n=3):
    f = draw(st.sampled_from(FIELDS))
    return [Scalar(f, draw(st.lists(fractions, min_size=f.degree, max_size=f.degree))) for _ in range(n)]


@settings(max_examples=150, deadline=None)
@given(field_elements())
def test_ring_axioms(xs):
    a, b, c = xs
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    assert a - a == 0


@settings(max_examples=150, deadline=None)
@given(field_elements(1))
def test_inverse_axiom(xs):
    (a,) = xs
    if a:
        assert a * scalar_inverse(a) == 1


@settings(max_examples=100, deadline=None)
@given(st.sampled_from(FIELDS), st.lists(fractions, min_size=1, max_size=9))
def test_reduction_idempotent(f, coeffs):
    once = Scalar(f, coeffs)
    assert len(once.coeffs) == f.degree
    assert Scalar(f, once.coeffs).coeffs == once.coeffs
    # reduction is a ring map: it agrees with evaluating the polynomial at the generator
    a = f.generator()
    assert once == sum((c * a ** k for k, c in enumerate(coeffs)), f.zero())
