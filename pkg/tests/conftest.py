# -*- coding: utf-8 -*-
# emacs: -*- mode: python; py-indent-offset: 4; indent-tabs-mode: nil -*-
# vi: set ft=python sts=4 ts=4 sw=4 et:

import numpy as np
import pytest

from p1torsor.algebra.field import Q, FieldDescriptor
from p1torsor.constants import Constants


@pytest.fixture(scope="session")
def rational() -> FieldDescriptor:
    return Q


@pytest.fixture(scope="session")
def f5() -> FieldDescriptor:
    return FieldDescriptor.prime_field(5)


@pytest.fixture(params=["Q", "F5"])
def field(request) -> FieldDescriptor:
    if request.param == "Q":
        return Q
    return FieldDescriptor.prime_field(5)


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(Constants.default_seed)
