# -*- coding: utf-8 -*-
# emacs: -*- mode: python; py-indent-offset: 4; indent-tabs-mode: nil -*-
# vi: set ft=python sts=4 ts=4 sw=4 et:

import numpy as np
import pytest

from p1torsor.algebra.field import Q, FieldDescriptor
from p1torsor.algebra.laurent import LaurentPoly, Ring
from p1torsor.algebra.matrix import (
    LaurentMatrix,
    block_diagonal,
    characteristic_coefficients,
    invert_variable,
    matrix_determinant,
    matrix_inverse,
    matrix_multiply,
)
from p1torsor.errors import DimensionMismatchError, NotAUnitError
from p1torsor.utils.random import random_unimodular


def matrix(rows: list[list[str]], field: FieldDescriptor = Q) -> LaurentMatrix:
    return LaurentMatrix.from_strings(field, rows)


def test_construction():
    m = matrix([["t", "1"], ["0", "t^-1"]])
    assert m.shape == (2, 2)
    assert m[0, 0] == LaurentPoly.monomial(Q, 1)
    assert m.to_strings() == [["t", "1"], ["0", "t^-1"]]
    with pytest.raises(DimensionMismatchError):
        LaurentMatrix(Q, [["1", "t"], ["1"]])
    with pytest.raises(DimensionMismatchError):
        LaurentMatrix(Q, [])


def test_multiply():
    a = matrix([["t", "1"], ["0", "1"]])
    b = matrix([["1", "0"], ["t^-1", "1"]])
    assert matrix_multiply(a, b) == matrix([["t + t^-1", "1"], ["t^-1", "1"]])
    with pytest.raises(DimensionMismatchError):
        a @ matrix([["1", "2", "3"]])


@pytest.mark.parametrize(
    "rows, determinant",
    [
        ([["t^3"]], "t^3"),
        ([["t", "1"], ["0", "t^-1"]], "1"),
        ([["1", "t", "0"], ["0", "1", "t"], ["t^-2", "0", "1"]], "2"),
        ([["1", "t", "0"], ["0", "1", "t"], ["t^-1", "0", "1"]], "t + 1"),
        ([["t", "0", "0", "0"], ["1", "t", "0", "0"], ["0", "1", "t", "0"], ["0", "0", "1", "t^-3"]], "1"),
        ([["1", "2", "3"], ["4", "5", "6"], ["7", "8", "10"]], "-3"),
    ],
)
def test_determinant(rows: list[list[str]], determinant: str):
    assert matrix_determinant(matrix(rows)) == LaurentPoly.parse(Q, determinant)


def test_characteristic_coefficients():
    m = matrix([["2", "0", "0"], ["0", "3", "0"], ["0", "0", "5"]])
    # (x - 2)(x - 3)(x - 5)
    assert [str(c) for c in characteristic_coefficients(m)] == ["1", "-10", "31", "-30"]


def test_determinant_is_multiplicative(field: FieldDescriptor, rng):
    for _ in range(5):
        a = random_unimodular(field, rng, 4, sign=1)
        b = random_unimodular(field, rng, 4, sign=-1).shift(1)
        assert (a @ b).determinant() == a.determinant() * b.determinant()


def test_inverse(field: FieldDescriptor, rng):
    for n in range(1, 5):
        a = random_unimodular(field, rng, n, sign=1, degree=2) @ LaurentMatrix.diagonal(field, list(range(n)))
        inverse = matrix_inverse(a)
        assert (a @ inverse).is_identity()
        assert (inverse @ a).is_identity()


def test_inverse_requires_unit():
    with pytest.raises(NotAUnitError):
        matrix([["t + 1"]]).inverse()
    with pytest.raises(NotAUnitError):
        matrix([["1", "2"], ["2", "4"]]).inverse()


def test_unimodular_generators_stay_in_their_ring(field: FieldDescriptor, rng):
    p = random_unimodular(field, rng, 3, sign=1)
    q = random_unimodular(field, rng, 3, sign=-1)
    assert p.in_ring(Ring.POLY_IN_T)
    assert q.in_ring(Ring.POLY_IN_T_INV)
    assert p.determinant().in_ring(Ring.CONST_UNIT)
    assert q.determinant().in_ring(Ring.CONST_UNIT)


def test_helpers():
    a = matrix([["t", "1"], ["0", "t^-2"]])
    assert invert_variable(a) == matrix([["t^-1", "1"], ["0", "t^2"]])
    assert a.transpose() == matrix([["t", "0"], ["1", "t^-2"]])
    assert a.max_exponent() == 1
    assert a.min_exponent() == -2
    assert a.shift(2) == matrix([["t^3", "t^2"], ["0", "1"]])
    assert a.kron(LaurentMatrix.identity(Q, 2)).shape == (4, 4)
    assert block_diagonal(a, matrix([["t^5"]])) == matrix([["t", "1", "0"], ["0", "t^-2", "0"], ["0", "0", "t^5"]])
    assert LaurentMatrix.permutation(Q, [1, 0]) == matrix([["0", "1"], ["1", "0"]])


def random_matrix(field: FieldDescriptor, rng: np.random.Generator, rows: int, cols: int) -> LaurentMatrix:
    entries = [
        [
            LaurentPoly(field, {int(e): field.random_element(rng) for e in rng.integers(-3, 4, size=int(rng.integers(0, 3)))})
            for _ in range(cols)
        ]
        for _ in range(rows)
    ]
    return LaurentMatrix(field, entries)


@pytest.mark.parametrize("seed", range(10))
def test_invert_variable_is_a_ring_involution(field: FieldDescriptor, seed: int):
    rng = np.random.default_rng(seed)
    n = int(rng.integers(1, 4))
    a = random_matrix(field, rng, n, n)
    b = random_matrix(field, rng, n, n)
    assert invert_variable(a @ b) == invert_variable(a) @ invert_variable(b)
    assert invert_variable(a + b) == invert_variable(a) + invert_variable(b)
    assert invert_variable(invert_variable(a)) == a
    assert invert_variable(a).determinant() == a.determinant().invert_variable()
