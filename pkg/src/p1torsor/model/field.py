# -*- coding: utf-8 -*-
# emacs: -*- mode: python; py-indent-offset: 4; indent-tabs-mode: nil -*-
# vi: set ft=python sts=4 ts=4 sw=4 et:

from typing import Any

from marshmallow import RAISE, Schema, ValidationError, fields, post_load, pre_dump, validate, validates_schema

from ..algebra.field import FieldDescriptor, FieldKind, is_prime
from ..algebra.matrix import LaurentMatrix
from ..constants import Constants
from ..errors import DimensionMismatchError, ParseError


class FieldDescriptorSchema(Schema):
    class Meta:
        unknown = RAISE
        ordered = True

    field = fields.Str(required=True, validate=validate.OneOf([kind.value for kind in FieldKind]))
    p = fields.Int(allow_none=True)

    @validates_schema
    def validate_characteristic(self, data, **_):
        p = data.get("p")
        if data.get("field") == FieldKind.PRIME_FIELD.value:
            if p is None:
                raise ValidationError("A prime field needs a characteristic", field_name="p")
            if not (is_prime(p) and p < Constants.max_prime):
                raise ValidationError(f"{p} is not a prime below 2^31", field_name="p")
        elif p not in {None, 0}:
            raise ValidationError("The rationals take no characteristic", field_name="p")

    @post_load
    def make_object(self, data, **_):
        if data["field"] == FieldKind.RATIONALS.value:
            return FieldDescriptor.rationals()
        return FieldDescriptor.prime_field(data["p"])

    @pre_dump
    def from_object(self, obj, **_):
        if isinstance(obj, FieldDescriptor):
            if obj.is_prime_field:
                return dict(field=obj.kind.value, p=obj.characteristic)
            return dict(field=obj.kind.value)
        return obj


class MatrixField(fields.Field):
    """A matrix as a list of rows of Laurent polynomial strings

    Loads to a list of rows of strings; the schema builds the matrix once the
    field descriptor is known
    """

    def _serialize(self, value: Any, attr: str | None, obj: Any, **kwargs) -> Any:
        if value is None:
            return None
        if not isinstance(value, LaurentMatrix):
            raise ValidationError("Not a matrix")
        return value.to_strings()

    def _deserialize(self, value: Any, attr: str | None, data: Any, **kwargs) -> list[list[str]]:
        if not isinstance(value, list) or len(value) == 0:
            raise ValidationError("Expected a non-empty list of rows")
        rows: list[list[str]] = list()
        for row in value:
            if not isinstance(row, list) or len(row) == 0:
                raise ValidationError("Expected every row to be a non-empty list")
            if not all(isinstance(entry, (str, int)) and not isinstance(entry, bool) for entry in row):
                raise ValidationError("Expected matrix entries to be strings")
            rows.append([str(entry) for entry in row])
        if len(set(map(len, rows))) != 1:
            raise ValidationError("Rows have different lengths")
        return rows


def build_matrix(field: FieldDescriptor, rows: list[list[str]], field_name: str) -> LaurentMatrix:
    try:
        return LaurentMatrix.from_strings(field, rows)
    except (ParseError, DimensionMismatchError) as e:
        raise ValidationError(str(e), field_name=field_name) from e
