# -*- coding: utf-8 -*-
# emacs: -*- mode: python; py-indent-offset: 4; indent-tabs-mode: nil -*-
# vi: set ft=python sts=4 ts=4 sw=4 et:

from itertools import product

import pytest

from p1torsor.algebra.field import Q, FieldDescriptor
from p1torsor.algebra.laurent import Ring
from p1torsor.algebra.matrix import LaurentMatrix
from p1torsor.errors import NotABundleError
from p1torsor.torsors.cocharacter import Cocharacter, GroupFamily, GroupTag, dominantize
from p1torsor.torsors.loop import double_coset_type, double_coset_witnesses, uniformization_certificate
from p1torsor.utils.random import random_cocharacter, random_loop_multipliers


def test_diagonal_example():
    g = LaurentMatrix.diagonal(Q, [2, -1])
    witness = double_coset_witnesses(g)
    assert witness.cocharacter.weights == (2, -1)
    assert witness.verify(g)
    assert uniformization_certificate(g, witness) == g


@pytest.mark.parametrize("n", [1, 2, 3])
def test_diagonal_normal_forms(n: int):
    for weights in product(range(-3, 4), repeat=n):
        cocharacter = Cocharacter(GroupTag(GroupFamily.GL, n), weights)
        assert double_coset_type(LaurentMatrix.diagonal(Q, weights)) == dominantize(cocharacter)


def test_coset_invariance(field: FieldDescriptor, rng):
    for _ in range(10):
        n = int(rng.integers(1, 4))
        cocharacter = random_cocharacter(rng, n)
        u, v = random_loop_multipliers(field, rng, n)
        g = u @ LaurentMatrix.diagonal(field, cocharacter.weights) @ v

        witness = double_coset_witnesses(g)
        assert witness.cocharacter == dominantize(cocharacter)
        assert witness.failures(g) == []
        assert witness.u.in_ring(Ring.POLY_IN_T_INV)
        assert witness.v.in_ring(Ring.POLY_IN_T)
        assert uniformization_certificate(g) == witness.diagonal


def test_not_a_loop_group_element():
    with pytest.raises(NotABundleError):
        double_coset_type(LaurentMatrix.from_strings(Q, [["1 + t"]]))


@pytest.mark.parametrize(
    "rows",
    [
        [["t", "1"], ["0", "t^-1"]],
        [["1", "t^-1"], ["0", "1"]],
    ],
)
def test_trivial_double_cosets(rows: list[list[str]], field: FieldDescriptor):
    g = LaurentMatrix.from_strings(field, rows)
    witness = double_coset_witnesses(g)
    assert witness.cocharacter.weights == (0, 0)
    assert double_coset_type(g) == Cocharacter.of("GL", (0, 0))
    assert witness.verify(g)
