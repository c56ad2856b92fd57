# -*- coding: utf-8 -*-
# emacs: -*- mode: python; py-indent-offset: 4; indent-tabs-mode: nil -*-
# vi: set ft=python sts=4 ts=4 sw=4 et:

import pytest

from p1torsor.algebra.field import Q, FieldDescriptor
from p1torsor.algebra.laurent import Ring
from p1torsor.algebra.matrix import LaurentMatrix
from p1torsor.bundles.birkhoff import birkhoff_factorize
from p1torsor.bundles.bundle import SplittingType, TransitionBundle, make_bundle, split_bundle
from p1torsor.bundles.splitting import splitting_type
from p1torsor.utils.random import random_bundle, random_gauge_pair


@pytest.mark.parametrize(
    "rows, expected",
    [
        ([["t", "0"], ["1", "t^-1"]], (0, 0)),
        ([["t", "1"], ["0", "t^-1"]], (1, -1)),
        ([["t^2", "0"], ["0", "t^-3"]], (2, -3)),
        ([["t^-3", "0"], ["0", "t^2"]], (2, -3)),
        ([["t^2", "t"], ["0", "1"]], (2, 0)),
        ([["1", "t^-1", "0"], ["0", "1", "t^-1"], ["0", "0", "1"]], (0, 0, 0)),
    ],
)
def test_examples(rows: list[list[str]], expected: tuple[int, ...]):
    transition = LaurentMatrix.from_strings(Q, rows)
    witness = birkhoff_factorize(make_bundle(transition))
    assert witness.splitting_type == SplittingType(expected)
    assert witness.verify(transition)
    assert witness.p.in_ring(Ring.POLY_IN_T)
    assert witness.q.in_ring(Ring.POLY_IN_T_INV)
    assert witness.product() == transition


def test_split_bundle_is_its_own_witness():
    bundle = split_bundle(Q, [3, 1, 1])
    witness = birkhoff_factorize(bundle)
    assert witness.splitting_type == SplittingType((3, 1, 1))
    assert witness.diagonal == bundle.transition


def test_inverses():
    transition = LaurentMatrix.from_strings(Q, [["t", "0"], ["1", "t^-1"]])
    witness = birkhoff_factorize(make_bundle(transition))
    assert (witness.p @ witness.p_inverse).is_identity()
    assert (witness.q_inverse @ witness.q).is_identity()


def test_random_bundles(field: FieldDescriptor, rng):
    for _ in range(20):
        n = int(rng.integers(1, 5))
        bundle, exponents = random_bundle(field, rng, n)
        witness = birkhoff_factorize(bundle)
        assert witness.failures(bundle.transition) == []
        assert witness.splitting_type == exponents


def test_gauge_invariance(field: FieldDescriptor, rng):
    for _ in range(10):
        n = int(rng.integers(1, 4))
        bundle, exponents = random_bundle(field, rng, n)
        p, q = random_gauge_pair(field, rng, n)
        assert splitting_type(TransitionBundle(p @ bundle.transition @ q)) == exponents


def test_failures_are_reported():
    transition = LaurentMatrix.from_strings(Q, [["t", "1"], ["0", "t^-1"]])
    witness = birkhoff_factorize(make_bundle(transition))
    other = LaurentMatrix.from_strings(Q, [["t", "0"], ["0", "t^-1"]])
    assert "P · diag(t^D) · Q differs from T" in witness.failures(other)
