# -*- coding: utf-8 -*-
# emacs: -*- mode: python; py-indent-offset: 4; indent-tabs-mode: nil -*-
# vi: set ft=python sts=4 ts=4 sw=4 et:

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping

from pyrsistent import PMap, pmap


@dataclass(frozen=True)
class GradedVectorSpace:
    """
    A finite dimensional representation V = ⊕ V_i of G_m, where V_i is the
    block on which z acts by z^-i

    Only the dimension of each weight block is recorded; zero blocks are not stored
    """

    dims: PMap

    def __post_init__(self) -> None:
        dims: dict[int, int] = dict()
        for weight, dimension in self.dims.items():
            if int(dimension) < 0:
                raise ValueError(f"Negative dimension {dimension} for weight {weight}")
            if int(dimension) > 0:
                dims[int(weight)] = int(dimension)
        object.__setattr__(self, "dims", pmap(dims))

    @classmethod
    def of(cls, dims: Mapping[int, int] | None = None) -> "GradedVectorSpace":
        return cls(pmap(dims or dict()))

    @classmethod
    def from_weights(cls, weights: Iterable[int]) -> "GradedVectorSpace":
        """One dimension per listed weight"""
        return cls.of(Counter(weights))

    def __getitem__(self, weight: int) -> int:
        return self.dims.get(weight, 0)

    def __iter__(self) -> Iterator[int]:
        return iter(self.weights())

    def weights(self) -> list[int]:
        return sorted(self.dims, reverse=True)

    def items(self) -> list[tuple[int, int]]:
        return [(weight, self.dims[weight]) for weight in self.weights()]

    @property
    def dimension(self) -> int:
        return sum(self.dims.values())

    def is_zero(self) -> bool:
        return len(self.dims) == 0

    def exponents(self) -> tuple[int, ...]:
        """Each weight repeated by its dimension, weakly decreasing"""
        return tuple(weight for weight, dimension in self.items() for _ in range(dimension))

    def __str__(self) -> str:
        return "{" + ", ".join(f"{weight} ↦ {dimension}" for weight, dimension in self.items()) + "}"
