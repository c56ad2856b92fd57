# -*- coding: utf-8 -*-
# emacs: -*- mode: python; py-indent-offset: 4; indent-tabs-mode: nil -*-
# vi: set ft=python sts=4 ts=4 sw=4 et:

import json
from dataclasses import dataclass
from typing import Any

from marshmallow import RAISE, Schema, ValidationError, fields, post_load, validate, validates_schema
from marshmallow_oneofschema.one_of_schema import OneOfSchema

from ..constants import Constants
from ..errors import ParseError, UnknownCommandError
from ..graded.space import GradedVectorSpace
from .bundle import BundleSchema, MorphismSchema, load_bundle
from .field import FieldDescriptorSchema
from .graded import GradedSpaceSchema
from .torsor import CocharacterSchema, GroupElementSchema, load_cocharacter


@dataclass(frozen=True)
class TaskRequest:
    command: str
    payload: Any
    seed: int | None = None


# payloads


class SplittingTypePayloadSchema(BundleSchema):
    method = fields.Str(load_default="reduction", validate=validate.OneOf(["reduction", "cohomology"]))

    @post_load
    def make_object(self, data, **_):
        method = data.pop("method")
        return dict(bundle=load_bundle(data), method=method)


class ClassifyPayloadSchema(BundleSchema):
    family = fields.Str(load_default="GL", validate=validate.OneOf(["GL", "SL"]))

    @post_load
    def make_object(self, data, **_):
        family = data.pop("family")
        return dict(bundle=load_bundle(data), family=family)


class ConstructPayloadSchema(Schema):
    class Meta:
        unknown = RAISE
        ordered = True

    kind = fields.Str(required=True, validate=validate.OneOf(["dual", "tensor", "exterior2", "sym2", "directSum"]))
    bundle = fields.Nested(BundleSchema, required=True)
    other = fields.Nested(BundleSchema, load_default=None)

    @validates_schema
    def validate_other(self, data, **_):
        if data.get("kind") in {"tensor", "directSum"} and data.get("other") is None:
            raise ValidationError(f'Construction "{data["kind"]}" needs a second bundle', field_name="other")


class PushoutPayloadSchema(CocharacterSchema):
    field = fields.Nested(FieldDescriptorSchema, load_default=None)

    @post_load
    def make_object(self, data, **_):
        field = data.pop("field")
        return dict(cocharacter=load_cocharacter(data), field=field)


class EulerPayloadSchema(Schema):
    class Meta:
        unknown = RAISE
        ordered = True

    field = fields.Nested(FieldDescriptorSchema, load_default=None)


class GradedPayloadSchema(GradedSpaceSchema):
    field = fields.Nested(FieldDescriptorSchema, load_default=None)
    kind = fields.Str(load_default=None, validate=validate.OneOf(["dual", "tensor", "exterior2", "sym2", "directSum"]))
    other = fields.Nested(GradedSpaceSchema, load_default=None)

    @validates_schema
    def validate_other(self, data, **_):
        if data.get("kind") in {"tensor", "directSum"} and data.get("other") is None:
            raise ValidationError(f'Construction "{data["kind"]}" needs a second graded space', field_name="other")

    @post_load
    def make_object(self, data, **_):
        space = GradedVectorSpace.of(data.pop("weights"))
        return dict(space=space, **data)


class SelftestPayloadSchema(Schema):
    class Meta:
        unknown = RAISE
        ordered = True

    suites = fields.List(fields.Str(validate=validate.OneOf(list(Constants.selftest_trials))), load_default=None)
    trials = fields.Int(load_default=None, validate=validate.Range(min=1))


# requests


class BaseRequestSchema(Schema):
    class Meta:
        unknown = RAISE
        ordered = True

    seed = fields.Int(load_default=None, allow_none=True)

    @post_load
    def make_object(self, data, **_):
        return TaskRequest(**data)


def _request_schema(command: str, payload: Schema | type[Schema], required: bool = True) -> type[Schema]:
    payload_field = fields.Nested(payload, required=required)
    if not required:
        payload_field = fields.Nested(payload, load_default=dict)
    return BaseRequestSchema.from_dict(
        dict(command=fields.Str(required=True, validate=validate.Equal(command)), payload=payload_field),
        name=f"{command.title().replace('-', '')}RequestSchema",
    )


class TaskRequestSchema(OneOfSchema):
    type_field = "command"
    type_field_remove = False
    type_schemas = {
        "splitting-type": _request_schema("splitting-type", SplittingTypePayloadSchema),
        "factorize": _request_schema("factorize", BundleSchema),
        "cohomology": _request_schema("cohomology", BundleSchema),
        "hn": _request_schema("hn", BundleSchema),
        "construct": _request_schema("construct", ConstructPayloadSchema),
        "classify": _request_schema("classify", ClassifyPayloadSchema),
        "pushout": _request_schema("pushout", PushoutPayloadSchema),
        "pgl-lift": _request_schema("pgl-lift", CocharacterSchema),
        "double-coset": _request_schema("double-coset", GroupElementSchema),
        "euler-witness": _request_schema("euler-witness", EulerPayloadSchema, required=False),
        "selftest": _request_schema("selftest", SelftestPayloadSchema, required=False),
        "graded": _request_schema("graded", GradedPayloadSchema),
        "validate-morphism": _request_schema("validate-morphism", MorphismSchema),
    }

    def get_obj_type(self, obj):
        if isinstance(obj, TaskRequest):
            return obj.command
        raise Exception("Cannot get obj type for TaskRequestSchema")


commands: tuple[str, ...] = tuple(TaskRequestSchema.type_schemas)


def first_error(messages: Any) -> tuple[str | None, str]:
    """Dotted path and text of the first message in a marshmallow error tree"""
    path: list[str] = list()
    node = messages
    while True:
        if isinstance(node, dict) and len(node) > 0:
            key, node = next(iter(node.items()))
            if key != "_schema":
                path.append(str(key))
        elif isinstance(node, list) and len(node) > 0:
            node = node[0]
        else:
            break
    field = ".".join(path) if len(path) > 0 else None
    return field, str(node)


def load_request(document: Any) -> TaskRequest:
    if not isinstance(document, dict):
        raise ParseError("A request must be a JSON object")
    if "command" not in document:
        raise ParseError("Missing data for required field", field="command")
    command = document["command"]
    if not isinstance(command, str) or command not in TaskRequestSchema.type_schemas:
        raise UnknownCommandError(f'Unknown command "{command}"', field="command")

    try:
        request = TaskRequestSchema().load(document)
    except ValidationError as e:
        field, message = first_error(e.messages)
        raise ParseError(message, field=field) from e

    if not isinstance(request, TaskRequest):
        raise ParseError("Could not read request")
    return request


def parse_request(text: str) -> TaskRequest:
    try:
        document = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(e.msg, line=e.lineno, column=e.colno) from e
    return load_request(document)
