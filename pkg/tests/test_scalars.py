import json

import pytest
from hypothesis import given, strategies as st

from fockrep.scalars import ONE, SQRT2, ZERO, Rational, Scalar, rat

rationals = st.builds(Rational, st.integers(-10**6, 10**6), st.integers(1, 10**4))
scalars = st.builds(Scalar, rationals, rationals)


def test_basic_examples():
    # (1 + s)(1 - s) = -1
    assert (ONE + SQRT2) * (ONE - SQRT2) == Scalar(-1)
    # 1/s = s/2
    assert SQRT2.inverse() == Scalar(0, rat(1, 2))
    assert Scalar(rat(1, 3)) + Scalar(rat(1, 6)) == Scalar(rat(1, 2))


def test_inverse_formula():
    x = Scalar(rat(3, 2), rat(-1, 3))
    assert x * x.inverse() == ONE
    with pytest.raises(ZeroDivisionError):
        ZERO.inverse()


def test_pow():
    assert SQRT2 ** 2 == Scalar(2)
    assert SQRT2 ** -2 == Scalar(rat(1, 2))
    assert (ONE + SQRT2) ** 0 == ONE


@given(scalars, scalars, scalars)
def test_field_axioms(x, y, z):
    assert (x + y) + z == x + (y + z)
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x + y == y + x
    assert x * y == y * x
    if not x.is_zero():
        assert x * x.inverse() == ONE


@given(scalars)
def test_json_round_trip(x):
    encoded = json.dumps(x.to_json())
    assert Scalar.from_json(json.loads(encoded)) == x


def test_json_shape():
    assert Scalar(rat(-3, 2)).to_json() == {"r": "-3/2"}
    assert Scalar(1, rat(1, 2)).to_json() == {"r": "1", "s2": "1/2"}


def test_rat_parses_strings():
    assert rat("-3/2") == rat(-3, 2)
    assert rat("4") == rat(4)
