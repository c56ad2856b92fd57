# -*- coding: utf-8 -*-
# emacs: -*- mode: python; py-indent-offset: 4; indent-tabs-mode: nil -*-
# vi: set ft=python sts=4 ts=4 sw=4 et:


class P1TorsorError(Exception): ...


class FieldMismatchError(P1TorsorError): ...


class DivisionByZeroError(P1TorsorError): ...


class DimensionMismatchError(P1TorsorError): ...


class NotAUnitError(P1TorsorError): ...


class NotABundleError(P1TorsorError): ...


class InternalSearchFailureError(P1TorsorError):
    """Raised when a factorization that must exist was not found or did not verify"""


class UnsupportedGroupError(P1TorsorError): ...


class CocharacterError(P1TorsorError): ...


class ParseError(P1TorsorError):
    def __init__(
        self,
        message: str,
        field: str | None = None,
        line: int | None = None,
        column: int | None = None,
    ) -> None:
        super().__init__(message)
        self.field = field
        self.line = line
        self.column = column

    def __str__(self) -> str:
        message = super().__str__()
        context: list[str] = list()
        if self.field is not None:
            context.append(f'field "{self.field}"')
        if self.line is not None:
            context.append(f"line {self.line}")
        if self.column is not None:
            context.append(f"column {self.column}")
        if len(context) == 0:
            return message
        return f"{message} ({', '.join(context)})"


class UnknownCommandError(ParseError): ...
