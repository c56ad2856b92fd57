# -*- coding: utf-8 -*-
# emacs: -*- mode: python; py-indent-offset: 4; indent-tabs-mode: nil -*-
# vi: set ft=python sts=4 ts=4 sw=4 et:

from typing import Iterable, Mapping, Sequence

from .field import FieldDescriptor, Value

Vector = list[Value]


def reduced_row_echelon(
    field: FieldDescriptor, matrix: Sequence[Sequence[Value]], ncols: int
) -> tuple[list[Vector], list[int]]:
    """
    Adapted from cctbx `row_echelon.form_rational`, with every pivot normalized and
    eliminated above as well as below
    """
    rows = [list(row) for row in matrix]
    pivots: list[int] = list()

    r = 0
    for c in range(ncols):
        if r == len(rows):
            break
        pivot = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]

        inverse = field.inv(rows[r][c])
        rows[r] = [field.mul(x, inverse) for x in rows[r]]

        for i in range(len(rows)):
            factor = rows[i][c]
            if i == r or factor == 0:
                continue
            rows[i] = [field.sub(x, field.mul(factor, y)) for x, y in zip(rows[i], rows[r], strict=True)]

        pivots.append(c)
        r += 1

    return rows[:r], pivots


def nullspace(field: FieldDescriptor, matrix: Sequence[Sequence[Value]], ncols: int) -> list[Vector]:
    """Basis of {x : A x = 0}"""
    rows, pivots = reduced_row_echelon(field, matrix, ncols)
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]

    basis: list[Vector] = list()
    for f in free:
        vector = [field.zero] * ncols
        vector[f] = field.one
        for row, p in zip(rows, pivots, strict=True):
            vector[p] = field.neg(row[f])
        basis.append(vector)
    return basis


def left_nullspace(field: FieldDescriptor, matrix: Sequence[Sequence[Value]]) -> list[Vector]:
    """Basis of {c : c A = 0}"""
    if len(matrix) == 0:
        return list()
    transposed = [list(column) for column in zip(*matrix, strict=True)]
    return nullspace(field, transposed, len(matrix))


def sparse_rank(field: FieldDescriptor, rows: Iterable[Mapping[int, Value]]) -> int:
    """Rank of a matrix given as sparse rows, by incremental elimination

    Each stored pivot row is normalized and has its leading entry at its key
    """
    pivots: dict[int, dict[int, Value]] = dict()

    for sparse_row in rows:
        row = {c: v for c, v in sparse_row.items() if v != 0}
        while len(row) > 0:
            leading = min(row)
            pivot_row = pivots.get(leading)
            if pivot_row is None:
                inverse = field.inv(row[leading])
                pivots[leading] = {c: field.mul(v, inverse) for c, v in row.items()}
                break
            factor = row[leading]
            for c, v in pivot_row.items():
                updated = field.sub(row.get(c, field.zero), field.mul(factor, v))
                if updated == 0:
                    row.pop(c, None)
                else:
                    row[c] = updated

    return len(pivots)


def rank(field: FieldDescriptor, matrix: Sequence[Sequence[Value]]) -> int:
    return sparse_rank(field, ({c: v for c, v in enumerate(row)} for row in matrix))
