# -*- coding: utf-8 -*-
# emacs: -*- mode: python; py-indent-offset: 4; indent-tabs-mode: nil -*-
# vi: set ft=python sts=4 ts=4 sw=4 et:

import pytest

from p1torsor.graded.space import GradedVectorSpace


def test_zero_blocks_are_dropped():
    space = GradedVectorSpace.of({2: 2, 0: 0, -1: 1})
    assert space.weights() == [2, -1]
    assert space[0] == 0
    assert space.dimension == 3
    assert space == GradedVectorSpace.of({-1: 1, 2: 2})


def test_from_weights():
    space = GradedVectorSpace.from_weights([1, 0, 0])
    assert space.items() == [(1, 1), (0, 2)]
    assert space.exponents() == (1, 0, 0)


def test_negative_dimension():
    with pytest.raises(ValueError):
        GradedVectorSpace.of({1: -1})


def test_zero_space():
    assert GradedVectorSpace.of().is_zero()
    assert GradedVectorSpace.of({3: 0}).is_zero()
