# -*- coding: utf-8 -*-
# emacs: -*- mode: python; py-indent-offset: 4; indent-tabs-mode: nil -*-
# vi: set ft=python sts=4 ts=4 sw=4 et:

import json
from dataclasses import dataclass
from fractions import Fraction

import numpy as np
import pytest
from pyrsistent import pmap

from p1torsor.algebra.field import Q
from p1torsor.algebra.laurent import LaurentPoly
from p1torsor.algebra.matrix import LaurentMatrix
from p1torsor.torsors.cocharacter import GroupFamily
from p1torsor.utils.json import TypeAwareJSONEncoder, dump_json


@pytest.mark.parametrize("value", [np.int32(5) > np.int32(6), np.int64(5), np.uint32(5), np.float32(5)])
def test_numpy_scalars(value):
    with pytest.raises(TypeError):
        json.dumps(dict(x=value))

    json.dumps(dict(x=value), cls=TypeAwareJSONEncoder)


def test_pmap():
    x = pmap(dict(x=5))

    with pytest.raises(TypeError):
        json.dumps(dict(x=x))

    assert json.loads(json.dumps(dict(x=x), cls=TypeAwareJSONEncoder)) == dict(x=dict(x=5))


def test_dataclass() -> None:
    @dataclass
    class Record:
        x: int
        weights: tuple[int, ...]

    x = Record(x=5, weights=(1, 0))

    with pytest.raises(TypeError):
        json.dumps(dict(x=x))

    assert json.loads(json.dumps(dict(x=x), cls=TypeAwareJSONEncoder)) == dict(x=dict(x=5, weights=[1, 0]))

    with pytest.raises(TypeError):
        json.dumps(dict(x=Record), cls=TypeAwareJSONEncoder)


def test_algebra_values():
    document = dict(
        poly=LaurentPoly.parse(Q, "t - 1/2"),
        matrix=LaurentMatrix.diagonal(Q, [1, -1]),
        slope=Fraction(1, 2),
        family=GroupFamily.PGL,
    )
    assert json.loads(dump_json(document)) == dict(
        poly="t - 1/2",
        matrix=[["t", "0"], ["0", "t^-1"]],
        slope="1/2",
        family="PGL",
    )


def test_dump_json_keeps_unicode():
    assert "↦" in dump_json(dict(space="{1 ↦ 2}"))
