# -*- coding: utf-8 -*-
# emacs: -*- mode: python; py-indent-offset: 4; indent-tabs-mode: nil -*-
# vi: set ft=python sts=4 ts=4 sw=4 et:

from functools import reduce
from typing import Any, Iterator, Sequence

from ..constants import check_enabled
from ..errors import DimensionMismatchError, NotAUnitError
from .field import FieldDescriptor
from .laurent import LaurentPoly, Ring


class LaurentMatrix:
    """A rows × cols matrix over k[t, t^-1], immutable"""

    __slots__ = ("field", "rows", "cols", "_entries", "_hash")

    def __init__(self, field: FieldDescriptor, entries: Sequence[Sequence[Any]]) -> None:
        rows = len(entries)
        cols = len(entries[0]) if rows > 0 else 0
        if rows == 0 or cols == 0:
            raise DimensionMismatchError("A matrix needs at least one row and one column")

        converted: list[tuple[LaurentPoly, ...]] = list()
        for row in entries:
            if len(row) != cols:
                raise DimensionMismatchError(f"Ragged matrix: expected {cols} columns, found {len(row)}")
            converted.append(tuple(_as_poly(field, entry) for entry in row))

        self.field = field
        self.rows = rows
        self.cols = cols
        self._entries: tuple[tuple[LaurentPoly, ...], ...] = tuple(converted)
        self._hash: int | None = None

    @classmethod
    def _wrap(cls, field: FieldDescriptor, entries: list[list[LaurentPoly]]) -> "LaurentMatrix":
        matrix = cls.__new__(cls)
        matrix.field = field
        matrix.rows = len(entries)
        matrix.cols = len(entries[0])
        matrix._entries = tuple(tuple(row) for row in entries)
        matrix._hash = None
        return matrix

    @classmethod
    def zeros(cls, field: FieldDescriptor, rows: int, cols: int) -> "LaurentMatrix":
        zero = LaurentPoly.zero(field)
        return cls._wrap(field, [[zero] * cols for _ in range(rows)])

    @classmethod
    def identity(cls, field: FieldDescriptor, n: int) -> "LaurentMatrix":
        return cls.diagonal(field, [0] * n)

    @classmethod
    def diagonal(
        cls, field: FieldDescriptor, exponents: Sequence[int], coefficients: Sequence[Any] | None = None
    ) -> "LaurentMatrix":
        """diag(c_i t^{e_i})"""
        if coefficients is None:
            coefficients = [1] * len(exponents)
        n = len(exponents)
        zero = LaurentPoly.zero(field)
        entries = [[zero] * n for _ in range(n)]
        for i, (exponent, coefficient) in enumerate(zip(exponents, coefficients, strict=True)):
            entries[i][i] = LaurentPoly.monomial(field, exponent, coefficient)
        return cls._wrap(field, entries)

    @classmethod
    def permutation(cls, field: FieldDescriptor, order: Sequence[int]) -> "LaurentMatrix":
        """The matrix whose row i is the standard basis row order[i]"""
        n = len(order)
        zero, one = LaurentPoly.zero(field), LaurentPoly.one(field)
        return cls._wrap(field, [[one if j == order[i] else zero for j in range(n)] for i in range(n)])

    @classmethod
    def from_strings(cls, field: FieldDescriptor, rows: Sequence[Sequence[str]]) -> "LaurentMatrix":
        return cls(field, [[LaurentPoly.parse(field, text) for text in row] for row in rows])

    def to_strings(self) -> list[list[str]]:
        return [[str(entry) for entry in row] for row in self._entries]

    # access

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, index: tuple[int, int]) -> LaurentPoly:
        i, j = index
        return self._entries[i][j]

    def row(self, i: int) -> tuple[LaurentPoly, ...]:
        return self._entries[i]

    def column(self, j: int) -> tuple[LaurentPoly, ...]:
        return tuple(row[j] for row in self._entries)

    def entries(self) -> Iterator[LaurentPoly]:
        for row in self._entries:
            yield from row

    def to_lists(self) -> list[list[LaurentPoly]]:
        return [list(row) for row in self._entries]

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "LaurentMatrix":
        return LaurentMatrix._wrap(self.field, [[self._entries[i][j] for j in cols] for i in rows])

    def max_exponent(self) -> int:
        return max(entry.max_exponent() for entry in self.entries() if not entry.is_zero())

    def min_exponent(self) -> int:
        return min(entry.min_exponent() for entry in self.entries() if not entry.is_zero())

    def in_ring(self, ring: Ring) -> bool:
        return all(entry.is_zero() or entry.in_ring(ring) for entry in self.entries())

    def is_zero(self) -> bool:
        return all(entry.is_zero() for entry in self.entries())

    def is_identity(self) -> bool:
        return self.is_square and self == LaurentMatrix.identity(self.field, self.rows)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LaurentMatrix):
            return NotImplemented
        return self.field == other.field and self._entries == other._entries

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.field, self._entries))
        return self._hash

    def __repr__(self) -> str:
        return f"LaurentMatrix({self.field}, {self.to_strings()})"

    # arithmetic

    def _check(self, other: "LaurentMatrix") -> None:
        self.field.check(other.field)

    def __matmul__(self, other: "LaurentMatrix") -> "LaurentMatrix":
        self._check(other)
        if self.cols != other.rows:
            raise DimensionMismatchError(f"Cannot multiply {self.rows}×{self.cols} by {other.rows}×{other.cols}")
        zero = LaurentPoly.zero(self.field)
        columns = [other.column(j) for j in range(other.cols)]
        entries = [
            [
                reduce(LaurentPoly.__add__, (a * b for a, b in zip(row, column, strict=True) if not a.is_zero()), zero)
                for column in columns
            ]
            for row in self._entries
        ]
        return LaurentMatrix._wrap(self.field, entries)

    def __add__(self, other: "LaurentMatrix") -> "LaurentMatrix":
        self._check(other)
        if self.shape != other.shape:
            raise DimensionMismatchError(f"Cannot add {self.shape} and {other.shape}")
        return LaurentMatrix._wrap(
            self.field,
            [[a + b for a, b in zip(r, s, strict=True)] for r, s in zip(self._entries, other._entries, strict=True)],
        )

    def __neg__(self) -> "LaurentMatrix":
        return LaurentMatrix._wrap(self.field, [[-a for a in row] for row in self._entries])

    def __sub__(self, other: "LaurentMatrix") -> "LaurentMatrix":
        return self + (-other)

    def scale(self, p: LaurentPoly | Any) -> "LaurentMatrix":
        p = _as_poly(self.field, p)
        return LaurentMatrix._wrap(self.field, [[a * p for a in row] for row in self._entries])

    def shift(self, k: int) -> "LaurentMatrix":
        """Multiply by t^k"""
        return LaurentMatrix._wrap(self.field, [[a.shift(k) for a in row] for row in self._entries])

    def transpose(self) -> "LaurentMatrix":
        return LaurentMatrix._wrap(self.field, [list(self.column(j)) for j in range(self.cols)])

    def invert_variable(self) -> "LaurentMatrix":
        return LaurentMatrix._wrap(self.field, [[a.invert_variable() for a in row] for row in self._entries])

    def kron(self, other: "LaurentMatrix") -> "LaurentMatrix":
        self._check(other)
        entries = [
            [self._entries[i][j] * other._entries[k][l] for j in range(self.cols) for l in range(other.cols)]  # noqa: E741
            for i in range(self.rows)
            for k in range(other.rows)
        ]
        return LaurentMatrix._wrap(self.field, entries)

    def determinant(self) -> LaurentPoly:
        if not self.is_square:
            raise DimensionMismatchError(f"Determinant of a non-square {self.rows}×{self.cols} matrix")
        a = self._entries
        if self.rows == 1:
            return a[0][0]
        if self.rows == 2:
            return a[0][0] * a[1][1] - a[0][1] * a[1][0]
        coefficients = characteristic_coefficients(self)
        return coefficients[-1] if self.rows % 2 == 0 else -coefficients[-1]

    def adjugate(self) -> "LaurentMatrix":
        if not self.is_square:
            raise DimensionMismatchError(f"Adjugate of a non-square {self.rows}×{self.cols} matrix")
        n = self.rows
        field = self.field
        if n == 1:
            return LaurentMatrix.identity(field, 1)
        if n == 2:
            (a, b), (c, d) = self._entries
            return LaurentMatrix._wrap(field, [[d, -b], [-c, a]])

        coefficients = characteristic_coefficients(self)
        adjugate = LaurentMatrix.identity(field, n)
        for c in coefficients[1:n]:
            adjugate = (self @ adjugate) + LaurentMatrix.identity(field, n).scale(c)
        return adjugate if n % 2 == 1 else -adjugate

    def inverse(self) -> "LaurentMatrix":
        determinant = self.determinant()
        if not determinant.is_monomial():
            raise NotAUnitError(f'Determinant "{determinant}" is not a unit of k[t, t^-1]')

        exponent = determinant.monomial_exponent()
        coefficient = self.field.inv(determinant.raw(exponent))
        inverse = self.adjugate().scale(coefficient).shift(-exponent)

        if check_enabled() and not (self @ inverse).is_identity():
            raise AssertionError(f"Inverse of {self!r} does not multiply to the identity")

        return inverse


def _as_poly(field: FieldDescriptor, entry: Any) -> LaurentPoly:
    if isinstance(entry, LaurentPoly):
        field.check(entry.field)
        return entry
    if isinstance(entry, str):
        return LaurentPoly.parse(field, entry)
    return LaurentPoly.constant(field, entry)


def characteristic_coefficients(matrix: LaurentMatrix) -> list[LaurentPoly]:
    """
    Coefficients [1, c_1, ..., c_n] of det(x I - A) by Berkowitz's division-free
    algorithm, adapted from sympy `_berkowitz_vector`
    """
    field = matrix.field
    a = matrix.to_lists()
    n = matrix.rows
    one, zero = LaurentPoly.one(field), LaurentPoly.zero(field)

    vector = [one, -a[n - 1][n - 1]]
    for k in range(n - 2, -1, -1):
        m = n - k
        head = a[k][k]
        r = a[k][k + 1 :]
        column = [a[i][k] for i in range(k + 1, n)]
        block = [row[k + 1 :] for row in a[k + 1 :]]

        diagonals = [one, -head]
        current = column
        for i in range(m - 1):
            diagonals.append(-_dot(r, current, zero))
            if i < m - 2:
                current = [_dot(row, current, zero) for row in block]

        vector = [
            reduce(LaurentPoly.__add__, (diagonals[i - j] * vector[j] for j in range(min(i + 1, m))), zero)
            for i in range(m + 1)
        ]

    return vector


def _dot(a: Sequence[LaurentPoly], b: Sequence[LaurentPoly], zero: LaurentPoly) -> LaurentPoly:
    return reduce(LaurentPoly.__add__, (x * y for x, y in zip(a, b, strict=True) if not x.is_zero()), zero)


def matrix_multiply(a: LaurentMatrix, b: LaurentMatrix) -> LaurentMatrix:
    return a @ b


def matrix_determinant(a: LaurentMatrix) -> LaurentPoly:
    return a.determinant()


def matrix_inverse(a: LaurentMatrix) -> LaurentMatrix:
    return a.inverse()


def invert_variable(a: LaurentMatrix) -> LaurentMatrix:
    return a.invert_variable()


def block_diagonal(*matrices: LaurentMatrix) -> LaurentMatrix:
    field = matrices[0].field
    cols = sum(m.cols for m in matrices)
    zero = LaurentPoly.zero(field)
    entries: list[list[LaurentPoly]] = list()
    offset = 0
    for m in matrices:
        field.check(m.field)
        for row in m.to_lists():
            entries.append([zero] * offset + row + [zero] * (cols - offset - m.cols))
        offset += m.cols
    return LaurentMatrix._wrap(field, entries)
