# -*- coding: utf-8 -*-
# emacs: -*- mode: python; py-indent-offset: 4; indent-tabs-mode: nil -*-
# vi: set ft=python sts=4 ts=4 sw=4 et:

import numpy as np
import pytest

from p1torsor.algebra.field import Q, FieldDescriptor
from p1torsor.algebra.matrix import LaurentMatrix
from p1torsor.bundles.bundle import SplittingType, split_bundle
from p1torsor.bundles.morphism import hom_dimension
from p1torsor.bundles.splitting import splitting_type
from p1torsor.errors import DimensionMismatchError
from p1torsor.graded.functor import (
    FilGr,
    e_functor,
    fil_and_gr,
    gr_hn,
    graded_constructions,
    inverse_e,
    rep_hom_dimension,
)
from p1torsor.graded.space import GradedVectorSpace
from p1torsor.utils.random import random_bundle, random_graded_space


@pytest.mark.parametrize(
    "dims, exponents",
    [
        ({-1: 1}, (-1,)),
        ({0: 1}, (0,)),
        ({1: 1, 0: 2}, (1, 0, 0)),
    ],
)
def test_e_functor(dims: dict[int, int], exponents: tuple[int, ...]):
    bundle = e_functor(GradedVectorSpace.of(dims), Q)
    assert bundle.transition == LaurentMatrix.diagonal(Q, exponents)
    assert splitting_type(bundle) == SplittingType(exponents)


def test_e_functor_of_zero_space():
    with pytest.raises(DimensionMismatchError):
        e_functor(GradedVectorSpace.of(), Q)


def test_inverse_e():
    assert inverse_e(split_bundle(Q, [2, 2, -1])) == GradedVectorSpace.of({2: 2, -1: 1})
    assert inverse_e(split_bundle(Q, [0, 0, 0])) == GradedVectorSpace.of({0: 3})


def test_round_trips(field: FieldDescriptor, rng):
    for _ in range(20):
        space = random_graded_space(rng)
        assert inverse_e(e_functor(space, field)) == space
        bundle, _ = random_bundle(field, rng, space.dimension, exponents=SplittingType(space.exponents()))
        assert splitting_type(e_functor(inverse_e(bundle), field)) == splitting_type(bundle)
        assert gr_hn(bundle) == space


@pytest.mark.parametrize(
    "i, expected",
    [
        (0, FilGr(fil_dim=3, gr_dim=1)),
        (-5, FilGr(fil_dim=4, gr_dim=0)),
        (5, FilGr(fil_dim=0, gr_dim=0)),
        (2, FilGr(fil_dim=2, gr_dim=2)),
    ],
)
def test_fil_and_gr(i: int, expected: FilGr):
    space = GradedVectorSpace.of({2: 2, 0: 1, -1: 1})
    assert fil_and_gr(space, i) == expected


def test_constructions():
    assert graded_constructions("dual", GradedVectorSpace.of({1: 2})) == GradedVectorSpace.of({-1: 2})
    assert graded_constructions("tensor", GradedVectorSpace.of({1: 1}), GradedVectorSpace.of({-1: 1})) == GradedVectorSpace.of(
        {0: 1}
    )
    v = GradedVectorSpace.of({1: 2, 0: 1})
    assert graded_constructions("exterior2", v) == GradedVectorSpace.of({2: 1, 1: 2})
    assert graded_constructions("sym2", v) == GradedVectorSpace.of({2: 3, 1: 2, 0: 1})
    assert graded_constructions("directSum", v, v) == GradedVectorSpace.of({1: 4, 0: 2})
    with pytest.raises(DimensionMismatchError):
        graded_constructions("tensor", v)


def test_rep_hom_dimension():
    v = GradedVectorSpace.of({1: 2, 0: 1})
    w = GradedVectorSpace.of({1: 1, -1: 3})
    assert rep_hom_dimension(v, w) == 2
    assert rep_hom_dimension(v, v) == 5


@pytest.mark.parametrize("seed", range(10))
def test_rep_hom_is_a_lower_bound(field: FieldDescriptor, seed: int):
    rng = np.random.default_rng(seed)
    for _ in range(5):
        v = random_graded_space(rng)
        w = random_graded_space(rng)
        assert rep_hom_dimension(v, w) <= hom_dimension(e_functor(v, field), e_functor(w, field))
