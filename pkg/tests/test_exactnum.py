from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from tricensus.exactnum import (
    ContractError,
    MixedRadicandError,
    QuadExt,
    as_quad,
    compare,
    is_squarefree,
    parse,
    render,
    sign,
)

PHI2 = QuadExt(F(3, 2), F(1, 2), 5)


def q5(a, b):
    return QuadExt(a, b, 5)


def test_addition():
    assert q5(F(1, 2), 0) + q5(F(1, 2), 1) == q5(1, 1)


def test_sqrt_squared():
    assert q5(0, 1) * q5(0, 1) == q5(5, 0)


def test_golden_fourth_power():
    assert PHI2 ** 2 == q5(F(7, 2), F(3, 2))
    assert PHI2 * PHI2 == PHI2 ** 2


@pytest.mark.parametrize("value, expected", [
    (q5(0, 0), 0),
    (q5(-2, 1), 1),
    (QuadExt(3, -2, 2), 1),
    (QuadExt(-3, 2, 2), -1),
    (QuadExt(2, -1, 5), -1),
])
def test_sign(value, expected):
    assert sign(value) == expected


def test_compare():
    assert compare(q5(1, 0), q5(1, 0)) == 0
    assert compare(PHI2, q5(1, 0)) == 1
    assert compare(q5(2, 0), PHI2) == -1
    assert PHI2 > 1 and 2 < PHI2 + 1


def test_mixed_radicand_rejected():
    with pytest.raises(MixedRadicandError):
        QuadExt(0, 1, 5) + QuadExt(0, 1, 2)
    with pytest.raises(ContractError):
        compare(QuadExt(0, 1, 5), QuadExt(0, 1, 3))


def test_bad_radicand():
    with pytest.raises(ContractError):
        QuadExt(1, 1, 8)
    assert not is_squarefree(12) and is_squarefree(30)


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        q5(1, 1) / q5(0, 0)
    with pytest.raises(ZeroDivisionError):
        q5(0, 0).inverse()


def test_rational_canonical_form():
    assert QuadExt(2, 7, 0) == 2
    assert QuadExt(2, 3, 1) == 5
    assert hash(QuadExt(F(1, 2), 0, 5)) == hash(F(1, 2))


def test_render_and_parse():
    assert render(PHI2) == "3/2 + 1/2*sqrt(5)"
    assert render(q5(1, -1)) == "1 - 1*sqrt(5)"
    assert parse("3/2 + 1/2*sqrt(5)", 5) == PHI2
    assert parse("-4", 0) == -4
    with pytest.raises(MixedRadicandError):
        parse("1 + 1*sqrt(3)", 5)
    with pytest.raises(ValueError):
        parse("one", 0)


def test_as_quad():
    assert as_quad("1/3", 5) == QuadExt(F(1, 3), 0, 5)
    assert as_quad(QuadExt(2, 0, 0), 5).D == 5


rationals = st.fractions(min_value=-50, max_value=50, max_denominator=20)
radicands = st.sampled_from([2, 3, 5, 6, 7])


@st.composite
def triples(draw):
    D = draw(radicands)
    return tuple(QuadExt(draw(rationals), draw(rationals), D) for _ in range(3))


@given(triples())
def test_field_axioms(xyz):
    x, y, z = xyz
    assert x + y == y + x
    assert x * y == y * x
    assert (x + y) + z == x + (y + z)
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x - x == 0
    if x:
        assert x * x.inverse() == 1
        assert (y / x) * x == y


@given(triples())
def test_order_is_total_and_compatible(xyz):
    x, y, z = xyz
    assert (x < y) + (x == y) + (x > y) == 1
    if x <= y and y <= z:
        assert x <= z
    if x < y:
        assert x + z < y + z
    if x < y and z > 0:
        assert x * z < y * z
    # float agreement where the gap is not tiny
    if abs(float(x) - float(y)) > 1e-9:
        assert (x < y) == (float(x) < float(y))


@given(triples())
def test_round_trip(xyz):
    for x in xyz:
        assert parse(render(x), x.D) == x


@given(triples())
def test_norm_is_multiplicative(xyz):
    x, y, _ = xyz
    assert (x * y).norm() == x.norm() * y.norm()
    assert x * x.conjugate() == x.norm()
