# -*- coding: utf-8 -*-
# emacs: -*- mode: python; py-indent-offset: 4; indent-tabs-mode: nil -*-
# vi: set ft=python sts=4 ts=4 sw=4 et:

import re
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Any, Literal

import numpy as np

from ..constants import Constants
from ..errors import DivisionByZeroError, FieldMismatchError, ParseError

Value = Fraction | int

scalar_pattern = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*$")


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13):
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7):  # deterministic below 3215031751
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class FieldKind(Enum):
    RATIONALS = "Q"
    PRIME_FIELD = "Fp"


@dataclass(frozen=True)
class FieldDescriptor:
    kind: FieldKind
    characteristic: int = 0

    def __post_init__(self) -> None:
        if self.kind is FieldKind.RATIONALS:
            if self.characteristic != 0:
                raise ValueError("The rationals have characteristic 0")
        elif not (is_prime(self.characteristic) and self.characteristic < Constants.max_prime):
            raise ValueError(f"Characteristic {self.characteristic} is not a prime below 2^31")

    @classmethod
    def rationals(cls) -> "FieldDescriptor":
        return cls(FieldKind.RATIONALS, 0)

    @classmethod
    def prime_field(cls, p: int) -> "FieldDescriptor":
        return cls(FieldKind.PRIME_FIELD, p)

    @property
    def is_prime_field(self) -> bool:
        return self.kind is FieldKind.PRIME_FIELD

    def __str__(self) -> str:
        if self.is_prime_field:
            return f"F_{self.characteristic}"
        return "Q"

    # raw values: reduced `Fraction` over Q, residue in [0, p) over F_p

    @property
    def zero(self) -> Value:
        return 0 if self.is_prime_field else Fraction(0)

    @property
    def one(self) -> Value:
        return 1 if self.is_prime_field else Fraction(1)

    def element(self, value: Any) -> Value:
        if isinstance(value, Scalar):
            self.check(value.descriptor)
            return value.value
        if isinstance(value, str):
            return self.parse_value(value)
        if self.is_prime_field:
            if isinstance(value, Fraction):
                return self.div(value.numerator % self.characteristic, value.denominator % self.characteristic)
            return int(value) % self.characteristic
        if isinstance(value, np.integer):
            value = int(value)
        return Fraction(value)

    def check(self, other: "FieldDescriptor") -> None:
        if other != self:
            raise FieldMismatchError(f"Cannot combine elements of {self} and {other}")

    def add(self, a: Value, b: Value) -> Value:
        if self.is_prime_field:
            return (a + b) % self.characteristic
        return a + b

    def sub(self, a: Value, b: Value) -> Value:
        if self.is_prime_field:
            return (a - b) % self.characteristic
        return a - b

    def mul(self, a: Value, b: Value) -> Value:
        if self.is_prime_field:
            return (a * b) % self.characteristic
        return a * b

    def neg(self, a: Value) -> Value:
        if self.is_prime_field:
            return (-a) % self.characteristic
        return -a

    def inv(self, a: Value) -> Value:
        if a == 0:
            raise DivisionByZeroError(f"Cannot invert zero in {self}")
        if self.is_prime_field:
            return pow(int(a), -1, self.characteristic)
        return 1 / Fraction(a)

    def div(self, a: Value, b: Value) -> Value:
        return self.mul(a, self.inv(b))

    def parse_value(self, text: str) -> Value:
        match = scalar_pattern.match(text)
        if match is None:
            raise ParseError(f'Cannot read "{text}" as an element of {self}')
        numerator, denominator = match.groups()
        if denominator is None:
            return self.element(int(numerator))
        if int(denominator) == 0:
            raise ParseError(f'Zero denominator in "{text}"')
        if self.is_prime_field and int(denominator) % self.characteristic == 0:
            raise ParseError(f'Denominator of "{text}" is zero in {self}')
        return self.element(Fraction(int(numerator), int(denominator)))

    def format_value(self, a: Value) -> str:
        return str(a)

    def random_element(self, rng: np.random.Generator, bound: int = 3, nonzero: bool = False) -> Value:
        while True:
            if self.is_prime_field:
                value = self.element(int(rng.integers(0, self.characteristic)))
            else:
                numerator = int(rng.integers(-bound, bound + 1))
                denominator = int(rng.integers(1, bound + 1))
                value = Fraction(numerator, denominator)
            if not nonzero or value != 0:
                return value

    def scalar(self, value: Any) -> "Scalar":
        return Scalar(self, self.element(value))


Q = FieldDescriptor.rationals()


@dataclass(frozen=True)
class Scalar:
    descriptor: FieldDescriptor
    value: Value

    def __post_init__(self) -> None:
        object.__setattr__(self, "value", self.descriptor.element(self.value))

    def _other(self, other: Any) -> Value:
        if isinstance(other, Scalar):
            self.descriptor.check(other.descriptor)
            return other.value
        return self.descriptor.element(other)

    def __add__(self, other: Any) -> "Scalar":
        return Scalar(self.descriptor, self.descriptor.add(self.value, self._other(other)))

    __radd__ = __add__

    def __sub__(self, other: Any) -> "Scalar":
        return Scalar(self.descriptor, self.descriptor.sub(self.value, self._other(other)))

    def __mul__(self, other: Any) -> "Scalar":
        return Scalar(self.descriptor, self.descriptor.mul(self.value, self._other(other)))

    __rmul__ = __mul__

    def __neg__(self) -> "Scalar":
        return Scalar(self.descriptor, self.descriptor.neg(self.value))

    def __truediv__(self, other: Any) -> "Scalar":
        return Scalar(self.descriptor, self.descriptor.div(self.value, self._other(other)))

    def inverse(self) -> "Scalar":
        return Scalar(self.descriptor, self.descriptor.inv(self.value))

    def is_zero(self) -> bool:
        return self.value == 0

    def __str__(self) -> str:
        return self.descriptor.format_value(self.value)


ScalarOperation = Literal["add", "mul", "neg", "inv"]


def scalar_arithmetic(op: ScalarOperation, a: Scalar, b: Scalar | None = None) -> Scalar:
    if op == "neg":
        return -a
    if op == "inv":
        return a.inverse()
    if b is None:
        raise ValueError(f'Operation "{op}" needs two operands')
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    raise ValueError(f'Unknown operation "{op}"')
