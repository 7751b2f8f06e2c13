from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from blowup_calc.chow import (
    CANONICAL,
    ChowClass,
    E,
    E2,
    H,
    H2,
    PT,
    ZERO,
    add,
    degree,
    epsilon_override,
    exp,
    format_class,
    get_epsilon,
    mul,
    parse_class,
    set_epsilon,
    todd_class,
)
from blowup_calc.sheafdata import TwistDescriptor, chi_line_bundle

coeff = st.fractions(min_value=-100, max_value=100, max_denominator=6)
classes = st.builds(ChowClass, coeff, coeff, coeff, coeff, coeff, coeff)


def test_add_examples():
    assert add(H, H) == ChowClass.divisor(2, 0)
    assert add(H2 + E2, H2 - E2) == ChowClass.codim2(2, 0)
    assert add(ZERO, PT) == PT


def test_mul_examples():
    assert mul(H, E) == ZERO
    assert mul(E, E2) == PT
    d = ChowClass.divisor(4, -2)
    assert d * d == ChowClass.codim2(16, 4)


def test_degree_examples():
    assert degree(PT) == 1
    assert mul(H, H2).degPt == 1
    assert degree(E * E2) == get_epsilon() == 1


def test_epsilon_flip():
    with epsilon_override(-1):
        assert degree(E * E2) == -1
        assert degree(E ** 3) == -1
    assert degree(E ** 3) == 1


def test_set_epsilon_rejects_other_values():
    with pytest.raises(ValueError):
        set_epsilon(0)


def test_floats_rejected():
    with pytest.raises(TypeError):
        ChowClass(0.5)


def test_truncation_above_dimension_three():
    assert PT * H == ZERO
    assert H2 * E2 == ZERO


@given(classes, classes, classes)
def test_ring_axioms(x, y, z):
    assert x * y == y * x
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x + (y + z) == (x + y) + z


@given(classes, classes, classes)
def test_ring_axioms_negative_epsilon(x, y, z):
    with epsilon_override(-1):
        assert (x * y) * z == x * (y * z)
        assert x * (y + z) == x * y + x * z


@given(st.integers(-30, 30), st.integers(-30, 30))
def test_divisor_powers_have_no_mixed_terms(p, q):
    d = ChowClass.divisor(p, q)
    assert d ** 2 == ChowClass.codim2(p * p, q * q)
    assert d ** 3 == ChowClass.point(p ** 3 + q ** 3)
    with epsilon_override(-1):
        assert d ** 3 == ChowClass.point(p ** 3 - q ** 3)


def test_todd_class_shape():
    td = todd_class()
    assert td.deg0 == 1
    assert td.part(1) == ChowClass.divisor(2, -1)
    assert td.part(1) == CANONICAL * Fraction(-1, 2)


def test_todd_against_golden_chi():
    td = todd_class()
    assert degree(exp(ZERO) * td) == 1
    assert degree(exp(ChowClass.divisor(2, -1)) * td) == 9


@pytest.mark.parametrize("p", range(-10, 11))
def test_todd_cross_oracle(p):
    td = todd_class()
    for q in range(-10, 11):
        assert degree(exp(ChowClass.divisor(p, q)) * td) == chi_line_bundle(TwistDescriptor(p, q))


def test_exp_requires_nilpotent():
    with pytest.raises(ValueError):
        exp(ChowClass.scalar(1))


@pytest.mark.parametrize(
    "text, expected",
    [
        ("1", ChowClass(1)),
        ("2 + 3 H - E", ChowClass(2, 3, -1)),
        ("H2 + E2", ChowClass.codim2(1, 1)),
        ("-1/2 H2 + 1/6 P", ChowClass(0, 0, 0, Fraction(-1, 2), 0, Fraction(1, 6))),
        ("4H - 2E", CANONICAL * -1),
    ],
)
def test_parse_class(text, expected):
    assert parse_class(text) == expected


@pytest.mark.parametrize("text", ["", "H H", "2 + Q", "1/ H"])
def test_parse_class_rejects(text):
    with pytest.raises(ValueError):
        parse_class(text)


@given(classes)
def test_format_parse_roundtrip(x):
    assert parse_class(format_class(x)) == x
