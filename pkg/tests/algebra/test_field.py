# -*- coding: utf-8 -*-
# emacs: -*- mode: python; py-indent-offset: 4; indent-tabs-mode: nil -*-
# vi: set ft=python sts=4 ts=4 sw=4 et:

from fractions import Fraction

import numpy as np
import pytest

from p1torsor.algebra.field import Q, FieldDescriptor, is_prime, scalar_arithmetic
from p1torsor.errors import DivisionByZeroError, FieldMismatchError, ParseError


@pytest.mark.parametrize("n, expected", [(2, True), (5, True), (9, False), (1, False), (2**31 - 1, True), (561, False)])
def test_is_prime(n: int, expected: bool):
    assert is_prime(n) is expected


def test_prime_field_validation():
    with pytest.raises(ValueError):
        FieldDescriptor.prime_field(6)
    with pytest.raises(ValueError):
        FieldDescriptor.prime_field(2**31 + 11)


def test_rational_arithmetic():
    a = Q.scalar("1/2")
    b = Q.scalar("1/3")
    assert scalar_arithmetic("add", a, b).value == Fraction(5, 6)
    assert scalar_arithmetic("mul", a, b).value == Fraction(1, 6)
    assert scalar_arithmetic("neg", a).value == Fraction(-1, 2)
    assert scalar_arithmetic("inv", a).value == 2


def test_prime_field_arithmetic(f5: FieldDescriptor):
    assert (f5.scalar(3) + 4).value == 2
    assert f5.scalar(2).inverse().value == 3
    assert f5.element(Fraction(1, 2)) == 3
    assert f5.parse_value("-1") == 4


def test_inverse_of_zero(f5: FieldDescriptor):
    with pytest.raises(DivisionByZeroError):
        f5.scalar(0).inverse()
    with pytest.raises(DivisionByZeroError):
        Q.scalar(0).inverse()


def test_field_mismatch(f5: FieldDescriptor):
    with pytest.raises(FieldMismatchError):
        Q.scalar(1) + f5.scalar(1)


@pytest.mark.parametrize("text", ["", "1/0", "x", "1.5"])
def test_parse_value_errors(text: str):
    with pytest.raises(ParseError):
        Q.parse_value(text)


def test_random_element_nonzero(field: FieldDescriptor, rng):
    assert all(field.random_element(rng, nonzero=True) != 0 for _ in range(50))


def test_denominator_divisible_by_characteristic(f5: FieldDescriptor):
    assert f5.parse_value("1/2") == 3
    for text in ["1/5", "3/10", "-2/25"]:
        with pytest.raises(ParseError):
            f5.parse_value(text)


@pytest.mark.parametrize("seed", range(5))
def test_field_axioms(field: FieldDescriptor, seed: int):
    rng = np.random.default_rng(seed)
    zero, one = field.scalar(0), field.scalar(1)
    for _ in range(20):
        a, b, c = (field.scalar(field.random_element(rng)) for _ in range(3))
        assert a + b == b + a
        assert a * b == b * a
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a + zero == a
        assert a * one == a
        assert a + (-a) == zero
        if not a.is_zero():
            assert a * a.inverse() == one
