# -*- coding: utf-8 -*-
# emacs: -*- mode: python; py-indent-offset: 4; indent-tabs-mode: nil -*-
# vi: set ft=python sts=4 ts=4 sw=4 et:

import json
from typing import Any

from ..constants import Constants
from ..errors import P1TorsorError, ParseError
from ..logging import logger
from ..model.request import TaskRequest, load_request
from .commands import task_commands
from .commands.base import TaskCommand

registry: dict[str, TaskCommand] = {command.name: command for command in task_commands}


def read_request(text: str, command: str, seed: int | None = None) -> TaskRequest:
    """
    Reads a full request or a bare payload for `command`; an explicit seed
    replaces the one in the document
    """
    if len(text.strip()) == 0:
        document: Any = dict()
    else:
        try:
            document = json.loads(text)
        except json.JSONDecodeError as e:
            raise ParseError(e.msg, line=e.lineno, column=e.colno) from e

    if isinstance(document, dict):
        if "command" not in document:
            document = dict(command=command, payload=document)
        elif document["command"] != command:
            raise ParseError(f'Request is for "{document["command"]}", not "{command}"', field="command")
        if seed is not None:
            document = {**document, "seed": seed}

    return load_request(document)


def diagnostic(error: P1TorsorError) -> dict[str, Any]:
    document: dict[str, Any] = dict(error=type(error).__name__, message=str(error.args[0]) if error.args else str(error))
    field = getattr(error, "field", None)
    if field is not None:
        document["field"] = field
    for key in ("line", "column"):
        value = getattr(error, key, None)
        if value is not None:
            document[key] = value
    return document


def error_exit_code(error: P1TorsorError) -> int:
    return 2 if isinstance(error, ParseError) else 1


def execute(request: TaskRequest, **options: Any) -> tuple[dict[str, Any], int]:
    """Runs a validated request, returning the result document and the exit code"""
    command = registry.get(request.command)
    if command is None:
        return diagnostic(ParseError(f'Unknown command "{request.command}"', field="command")), 2

    seed = request.seed if request.seed is not None else Constants.default_seed
    logger.debug(f'Executing "{request.command}" with seed {seed}')

    try:
        document = command.handle(request.payload, seed, **options)
    except P1TorsorError as e:
        logger.warning(f'Command "{request.command}" failed: {type(e).__name__}: {e}')
        return diagnostic(e), error_exit_code(e)

    return document, command.exit_code(document)
