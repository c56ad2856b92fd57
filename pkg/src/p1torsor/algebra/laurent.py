# -*- coding: utf-8 -*-
# emacs: -*- mode: python; py-indent-offset: 4; indent-tabs-mode: nil -*-
# vi: set ft=python sts=4 ts=4 sw=4 et:

import re
from enum import Enum
from types import MappingProxyType
from typing import Any, Iterator, Literal, Mapping

from ..errors import ParseError
from .field import FieldDescriptor, Value


class Ring(Enum):
    """Subrings and unit groups of k[t, t^-1]"""

    POLY_IN_T = "PolyInT"
    POLY_IN_T_INV = "PolyInTInv"
    CONST_UNIT = "ConstUnit"
    MONOMIAL_UNIT = "MonomialUnit"


term_pattern = re.compile(
    r"""
    \s*(?P<sign>[+-])?\s*
    (?P<coefficient>\d+(?:\s*/\s*\d+)?)?
    \s*(?P<times>\*(?!\*))?\s*
    (?P<variable>t(?:\s*(?:\^|\*\*)\s*(?P<paren>\(|\{)?\s*(?P<exponent>[+-]?\d+)\s*[)}]?)?)?
    \s*
    """,
    re.VERBOSE,
)


class LaurentPoly:
    """An element of k[t, t^-1], stored as exponent to nonzero coefficient

    The zero polynomial has no stored coefficients, so equality is structural
    """

    __slots__ = ("field", "_coefficients", "_hash")

    def __init__(self, field: FieldDescriptor, coefficients: Mapping[int, Any] | None = None) -> None:
        canonical: dict[int, Value] = dict()
        if coefficients is not None:
            for exponent, coefficient in coefficients.items():
                value = field.element(coefficient)
                if value != 0:
                    canonical[int(exponent)] = value
        self.field = field
        self._coefficients = canonical
        self._hash: int | None = None

    @classmethod
    def _wrap(cls, field: FieldDescriptor, canonical: dict[int, Value]) -> "LaurentPoly":
        poly = cls.__new__(cls)
        poly.field = field
        poly._coefficients = canonical
        poly._hash = None
        return poly

    @classmethod
    def zero(cls, field: FieldDescriptor) -> "LaurentPoly":
        return cls._wrap(field, dict())

    @classmethod
    def one(cls, field: FieldDescriptor) -> "LaurentPoly":
        return cls._wrap(field, {0: field.one})

    @classmethod
    def monomial(cls, field: FieldDescriptor, exponent: int, coefficient: Any = 1) -> "LaurentPoly":
        return cls(field, {exponent: coefficient})

    @classmethod
    def constant(cls, field: FieldDescriptor, coefficient: Any) -> "LaurentPoly":
        return cls(field, {0: coefficient})

    @property
    def coefficients(self) -> Mapping[int, Value]:
        return MappingProxyType(self._coefficients)

    def raw(self, exponent: int) -> Value:
        return self._coefficients.get(exponent, self.field.zero)

    def terms(self) -> Iterator[tuple[int, Value]]:
        for exponent in sorted(self._coefficients, reverse=True):
            yield exponent, self._coefficients[exponent]

    def __len__(self) -> int:
        return len(self._coefficients)

    def is_zero(self) -> bool:
        return len(self._coefficients) == 0

    def min_exponent(self) -> int:
        if self.is_zero():
            raise ValueError("The zero polynomial has no exponents")
        return min(self._coefficients)

    def max_exponent(self) -> int:
        if self.is_zero():
            raise ValueError("The zero polynomial has no exponents")
        return max(self._coefficients)

    def is_monomial(self) -> bool:
        return len(self._coefficients) == 1

    def monomial_exponent(self) -> int:
        if not self.is_monomial():
            raise ValueError(f'"{self}" is not a single term')
        (exponent,) = self._coefficients
        return exponent

    def in_ring(self, ring: Ring) -> bool:
        if ring is Ring.POLY_IN_T:
            return all(exponent >= 0 for exponent in self._coefficients)
        if ring is Ring.POLY_IN_T_INV:
            return all(exponent <= 0 for exponent in self._coefficients)
        if ring is Ring.CONST_UNIT:
            return self.is_monomial() and 0 in self._coefficients
        if ring is Ring.MONOMIAL_UNIT:
            return self.is_monomial()
        raise ValueError(f"Unknown ring {ring}")

    # arithmetic

    def _coerce(self, other: Any) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            self.field.check(other.field)
            return other
        return LaurentPoly.constant(self.field, other)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.field == other.field and self._coefficients == other._coefficients

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.field, frozenset(self._coefficients.items())))
        return self._hash

    def __add__(self, other: Any) -> "LaurentPoly":
        other = self._coerce(other)
        field = self.field
        result = dict(self._coefficients)
        for exponent, value in other._coefficients.items():
            if exponent in result:
                total = field.add(result[exponent], value)
                if total == 0:
                    del result[exponent]
                else:
                    result[exponent] = total
            else:
                result[exponent] = value
        return LaurentPoly._wrap(field, result)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        field = self.field
        return LaurentPoly._wrap(field, {exponent: field.neg(value) for exponent, value in self._coefficients.items()})

    def __sub__(self, other: Any) -> "LaurentPoly":
        return self + (-self._coerce(other))

    def __rsub__(self, other: Any) -> "LaurentPoly":
        return self._coerce(other) - self

    def __mul__(self, other: Any) -> "LaurentPoly":
        other = self._coerce(other)
        field = self.field
        result: dict[int, Value] = dict()
        for e, a in self._coefficients.items():
            for f, b in other._coefficients.items():
                product = field.mul(a, b)
                if e + f in result:
                    result[e + f] = field.add(result[e + f], product)
                else:
                    result[e + f] = product
        return LaurentPoly._wrap(field, {exponent: value for exponent, value in result.items() if value != 0})

    __rmul__ = __mul__

    def scale(self, coefficient: Any) -> "LaurentPoly":
        field = self.field
        value = field.element(coefficient)
        if value == 0:
            return LaurentPoly.zero(field)
        return LaurentPoly._wrap(field, {e: field.mul(c, value) for e, c in self._coefficients.items()})

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by t^k"""
        return LaurentPoly._wrap(self.field, {e + k: c for e, c in self._coefficients.items()})

    def invert_variable(self) -> "LaurentPoly":
        return LaurentPoly._wrap(self.field, {-e: c for e, c in self._coefficients.items()})

    def constant_term(self) -> Value:
        return self.raw(0)

    # text form

    def __str__(self) -> str:
        if self.is_zero():
            return "0"

        parts: list[str] = list()
        for exponent, value in self.terms():
            negative = not self.field.is_prime_field and value < 0
            magnitude = -value if negative else value
            if exponent == 0:
                body = self.field.format_value(magnitude)
            else:
                variable = "t" if exponent == 1 else f"t^{exponent}"
                body = variable if magnitude == 1 else f"{self.field.format_value(magnitude)}*{variable}"
            if len(parts) == 0:
                parts.append(f"-{body}" if negative else body)
            else:
                parts.append(f"{'-' if negative else '+'} {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f'LaurentPoly({self.field}, "{self}")'

    @classmethod
    def parse(cls, field: FieldDescriptor, text: str) -> "LaurentPoly":
        if not isinstance(text, str):
            text = str(text)
        if text.strip() == "":
            raise ParseError("Empty Laurent polynomial")

        result = LaurentPoly.zero(field)
        position = 0
        first = True
        while position < len(text):
            match = term_pattern.match(text, position)
            if match is None or match.end() == position:
                raise ParseError(f'Cannot read "{text}" at position {position}')
            sign, coefficient, times, variable, _, exponent = match.groups()
            if not first and sign is None:
                raise ParseError(f'Expected "+" or "-" in "{text}" at position {position}')
            if coefficient is None and variable is None:
                raise ParseError(f'Missing term in "{text}" at position {position}')
            if times is not None and (coefficient is None or variable is None):
                raise ParseError(f'Dangling "*" in "{text}" at position {position}')

            value = field.parse_value(coefficient) if coefficient is not None else field.one
            if sign == "-":
                value = field.neg(value)
            power = 0
            if variable is not None:
                power = int(exponent) if exponent is not None else 1

            result = result + LaurentPoly.monomial(field, power, value)
            position = match.end()
            first = False

        return result


LaurentOperation = Literal["add", "mul", "neg"]


def laurent_arithmetic(op: LaurentOperation, a: LaurentPoly, b: LaurentPoly | None = None) -> LaurentPoly:
    if op == "neg":
        return -a
    if b is None:
        raise ValueError(f'Operation "{op}" needs two operands')
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    raise ValueError(f'Unknown operation "{op}"')


def ring_membership(p: LaurentPoly, ring: Ring | str) -> bool:
    return p.in_ring(Ring(ring))
