# -*- coding: utf-8 -*-
# emacs: -*- mode: python; py-indent-offset: 4; indent-tabs-mode: nil -*-
# vi: set ft=python sts=4 ts=4 sw=4 et:

from dataclasses import dataclass
from enum import Enum
from typing import Sequence

from ..errors import CocharacterError, UnsupportedGroupError


class GroupFamily(Enum):
    GL = "GL"
    SL = "SL"
    PGL = "PGL"


@dataclass(frozen=True)
class GroupTag:
    """A split group with the diagonal torus as maximal split torus"""

    family: GroupFamily
    n: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "family", GroupFamily(self.family))
        if self.n < 1:
            raise CocharacterError(f"Group rank parameter must be positive, got {self.n}")

    def __str__(self) -> str:
        return f"{self.family.value}_{self.n}"


@dataclass(frozen=True)
class Cocharacter:
    """
    A cocharacter of the diagonal torus, z ↦ diag(z^w_1, ..., z^w_n)

    For SL the weights sum to zero. For PGL the weights represent their class
    modulo Z·(1, ..., 1)
    """

    group: GroupTag
    weights: tuple[int, ...]

    def __post_init__(self) -> None:
        weights = tuple(int(w) for w in self.weights)
        if len(weights) != self.group.n:
            raise CocharacterError(f"{self.group} cocharacter needs {self.group.n} weights, got {len(weights)}")
        if self.group.family is GroupFamily.SL and sum(weights) != 0:
            raise CocharacterError(f"SL cocharacter weights {weights} do not sum to zero")
        object.__setattr__(self, "weights", weights)

    @classmethod
    def of(cls, family: GroupFamily | str, weights: Sequence[int]) -> "Cocharacter":
        return cls(GroupTag(GroupFamily(family), len(weights)), tuple(weights))

    @property
    def family(self) -> GroupFamily:
        return self.group.family

    def canonical(self) -> "Cocharacter":
        """The PGL representative with minimum entry 0; other groups are returned as they are"""
        if self.family is not GroupFamily.PGL:
            return self
        m = min(self.weights)
        return Cocharacter(self.group, tuple(w - m for w in self.weights))

    def __str__(self) -> str:
        return f"{self.group}({', '.join(str(w) for w in self.weights)})"


def is_dominant(cocharacter: Cocharacter) -> bool:
    weights = cocharacter.weights
    return all(a >= b for a, b in zip(weights, weights[1:]))


def dominantize(cocharacter: Cocharacter) -> Cocharacter:
    """Weyl group representative with weakly decreasing weights, PGL shifted so the last entry is 0"""
    weights = tuple(sorted(cocharacter.weights, reverse=True))
    if cocharacter.family is GroupFamily.PGL:
        weights = tuple(w - weights[-1] for w in weights)
    return Cocharacter(cocharacter.group, weights)


def project_to_pgl(cocharacter: Cocharacter) -> Cocharacter:
    """Image under GL_n -> PGL_n, in canonical form"""
    if cocharacter.family is not GroupFamily.GL:
        raise UnsupportedGroupError(f"Can only project GL cocharacters, got {cocharacter.group}")
    return Cocharacter(GroupTag(GroupFamily.PGL, cocharacter.group.n), cocharacter.weights).canonical()


def pgl_lift(cocharacter: Cocharacter) -> Cocharacter:
    """
    Lift a PGL_n cocharacter to GL_n along the split surjection of cocharacter
    lattices; the lift is the canonical representative
    """
    if cocharacter.family is not GroupFamily.PGL:
        raise UnsupportedGroupError(f"Can only lift PGL cocharacters, got {cocharacter.group}")
    return Cocharacter(GroupTag(GroupFamily.GL, cocharacter.group.n), cocharacter.canonical().weights)


def same_pgl_class(a: Cocharacter, b: Cocharacter) -> bool:
    if a.group.n != b.group.n:
        return False
    differences = {x - y for x, y in zip(a.weights, b.weights, strict=True)}
    return len(differences) == 1
