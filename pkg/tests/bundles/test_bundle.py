# -*- coding: utf-8 -*-
# emacs: -*- mode: python; py-indent-offset: 4; indent-tabs-mode: nil -*-
# vi: set ft=python sts=4 ts=4 sw=4 et:

from fractions import Fraction

import pytest

from p1torsor.algebra.field import Q
from p1torsor.algebra.matrix import LaurentMatrix
from p1torsor.bundles.bundle import SplittingType, check_splitting_type, line_bundle, make_bundle, split_bundle, twist
from p1torsor.errors import DimensionMismatchError, InternalSearchFailureError, NotABundleError


def test_make_bundle():
    bundle = make_bundle(LaurentMatrix.from_strings(Q, [["t", "1"], ["0", "t^2"]]))
    assert bundle.rank == 2
    assert bundle.degree == 3
    assert bundle.slope == Fraction(3, 2)


@pytest.mark.parametrize("rows", [[["t + 1"]], [["1", "t"], ["1", "t"]], [["0"]]])
def test_not_a_bundle(rows: list[list[str]]):
    with pytest.raises(NotABundleError):
        make_bundle(LaurentMatrix.from_strings(Q, rows))


def test_non_square_transition():
    with pytest.raises(DimensionMismatchError):
        make_bundle(LaurentMatrix.from_strings(Q, [["1", "t"]]))


def test_twist():
    bundle = twist(split_bundle(Q, [1, -2]), 3)
    assert bundle.transition == LaurentMatrix.diagonal(Q, [4, 1])
    assert line_bundle(Q, 2).degree == 2


def test_splitting_type():
    exponents = SplittingType.from_unsorted([-1, 3, 0, 3])
    assert exponents.exponents == (3, 3, 0, -1)
    assert exponents.rank == 4
    assert exponents.degree == 5
    assert exponents.multiplicities()[3] == 2
    assert not exponents.is_semistable()
    assert SplittingType((2, 2)).is_semistable()
    with pytest.raises(ValueError):
        SplittingType((0, 1))


@pytest.mark.parametrize("a", range(-5, 6))
def test_line_bundle_cohomology_formula(a: int):
    exponents = SplittingType((a,))
    assert exponents.h0() == max(0, a + 1)
    assert exponents.h1() == max(0, -a - 1)
    assert exponents.h0(-a) == 1


def test_check_splitting_type():
    bundle = split_bundle(Q, [2, 0])
    check_splitting_type(bundle, SplittingType((2, 0)))
    with pytest.raises(InternalSearchFailureError):
        check_splitting_type(bundle, SplittingType((1, 0)))
    with pytest.raises(InternalSearchFailureError):
        check_splitting_type(bundle, SplittingType((2,)))
