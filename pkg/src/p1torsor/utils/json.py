# -*- coding: utf-8 -*-
# emacs: -*- mode: python; py-indent-offset: 4; indent-tabs-mode: nil -*-
# vi: set ft=python sts=4 ts=4 sw=4 et:

from collections import OrderedDict
from dataclasses import asdict, is_dataclass
from enum import Enum
from fractions import Fraction
from json import JSONEncoder, dumps
from typing import Any, Mapping, Optional

import numpy as np

from ..algebra.laurent import LaurentPoly
from ..algebra.matrix import LaurentMatrix


class TypeAwareJSONEncoder(JSONEncoder):
    """
    adapted from https://github.com/illagrenan/django-numpy-json-encoder
    """

    def default(self, o: Any) -> Any:
        if isinstance(o, LaurentMatrix):
            return o.to_strings()

        if isinstance(o, (LaurentPoly, Fraction)):
            return str(o)

        if isinstance(o, Enum):
            return o.value

        if is_dataclass(o) and not isinstance(o, type):
            o = asdict(o, dict_factory=OrderedDict)

        if isinstance(o, Mapping):
            if not isinstance(o, dict):
                o = dict(o)
            return o

        if isinstance(o, (tuple, set, frozenset)):
            return list(o)

        if isinstance(o, np.ndarray):
            return o.tolist()

        dtype = getattr(o, "dtype", None)
        kind: Optional[str] = getattr(dtype, "kind", None)

        if kind == "b":
            return bool(o)

        elif kind in ["i", "u"]:
            return int(o)

        elif kind == "f":
            return float(o)

        else:
            return super().default(o)


def dump_json(document: Any) -> str:
    return dumps(document, cls=TypeAwareJSONEncoder, indent=2, ensure_ascii=False)
