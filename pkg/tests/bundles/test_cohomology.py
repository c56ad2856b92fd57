# -*- coding: utf-8 -*-
# emacs: -*- mode: python; py-indent-offset: 4; indent-tabs-mode: nil -*-
# vi: set ft=python sts=4 ts=4 sw=4 et:

import numpy as np
import pytest

from p1torsor.algebra.field import Q, FieldDescriptor
from p1torsor.algebra.matrix import LaurentMatrix
from p1torsor.bundles.bundle import SplittingType, line_bundle, make_bundle, split_bundle
from p1torsor.bundles.cohomology import decode_splitting_type, h0_dimension, h0_of_twists
from p1torsor.bundles.splitting import cohomology_dims, is_semistable, splitting_type
from p1torsor.utils.random import random_bundle


@pytest.mark.parametrize("a", range(-5, 6))
def test_line_bundles(a: int, field: FieldDescriptor):
    dims = cohomology_dims(line_bundle(field, a))
    assert (dims.h0, dims.h1) == (max(0, a + 1), max(0, -a - 1))
    assert h0_dimension(line_bundle(field, a)) == max(0, a + 1)


def test_examples():
    assert cohomology_dims(line_bundle(Q, -2)).h1 == 1
    nontrivial = make_bundle(LaurentMatrix.from_strings(Q, [["t", "1"], ["0", "t^-1"]]))
    assert cohomology_dims(nontrivial).h0 == 2
    assert cohomology_dims(nontrivial).h1 == 0
    assert h0_dimension(nontrivial) == 2


def test_twists():
    bundle = split_bundle(Q, [1, -1])
    assert h0_of_twists(bundle, range(-3, 2)) == {-3: 0, -2: 0, -1: 1, 0: 2, 1: 4}


def test_decode_agrees_with_reduction(field: FieldDescriptor, rng):
    for _ in range(10):
        n = int(rng.integers(1, 4))
        bundle, exponents = random_bundle(field, rng, n)
        assert decode_splitting_type(bundle) == exponents
        assert splitting_type(bundle, "cohomology") == splitting_type(bundle, "reduction")


def test_semistable_vanishing(field: FieldDescriptor, rng):
    for slope in range(3):
        bundle, _ = random_bundle(field, rng, 3, exponents=SplittingType((slope,) * 3))
        assert is_semistable(bundle)
        dims = cohomology_dims(bundle)
        assert dims.h1 == 0
        assert dims.h0 == 3 * (slope + 1) == h0_dimension(bundle)


def test_unknown_method():
    with pytest.raises(ValueError):
        splitting_type(line_bundle(Q, 0), "guess")  # type: ignore[arg-type]


@pytest.mark.parametrize("seed", range(5))
def test_h0_matches_splitting_type_on_twists(field: FieldDescriptor, seed: int):
    rng = np.random.default_rng(seed)
    bundle, exponents = random_bundle(field, rng, int(rng.integers(1, 4)))
    assert h0_of_twists(bundle, range(-6, 7)) == {m: exponents.h0(m) for m in range(-6, 7)}
    assert all(exponents.h0(m) == sum(max(0, a + m + 1) for a in exponents) for m in range(-6, 7))
