# -*- coding: utf-8 -*-
# emacs: -*- mode: python; py-indent-offset: 4; indent-tabs-mode: nil -*-
# vi: set ft=python sts=4 ts=4 sw=4 et:

import os
from typing import Final


class Constants:
    default_seed: Final[int] = 20190731

    max_prime: Final[int] = 2**31

    # extra reduction steps allowed beyond the degree bound
    reduction_slack: Final[int] = 8

    selftest_trials: Final[dict[str, int]] = {
        "classification": 200,
        "gauge": 100,
        "cohomology": 50,
        "constructions": 100,
        "functoriality": 20,
        "euler": 1,
        "graded": 100,
        "torsors": 1,
        "double-coset": 100,
        "pgl-lift": 1,
    }


def check_enabled() -> bool:
    """Whether exact post-condition assertions are switched on

    Test builds set `P1TORSOR_CHECK=1` through pytest-env
    """
    return os.environ.get("P1TORSOR_CHECK", "0").lower() in {"1", "true", "yes", "on"}
