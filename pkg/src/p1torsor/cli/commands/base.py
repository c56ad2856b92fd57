# -*- coding: utf-8 -*-
# emacs: -*- mode: python; py-indent-offset: 4; indent-tabs-mode: nil -*-
# vi: set ft=python sts=4 ts=4 sw=4 et:

import sys
from abc import ABC, abstractmethod
from argparse import ArgumentParser, Namespace
from pathlib import Path
from typing import Any, Callable, ClassVar


class Command(ABC):
    @abstractmethod
    def setup(self, add_parser: Callable[[str], ArgumentParser]):
        raise NotImplementedError()

    @abstractmethod
    def run(self, arguments: Namespace):
        raise NotImplementedError()


class TaskCommand(Command):
    """A batch command that reads one JSON request and writes one JSON result"""

    name: ClassVar[str]
    help: ClassVar[str | None] = None

    def setup(self, add_parser: Callable[..., ArgumentParser]):
        argument_parser = add_parser(self.name, help=self.help)
        argument_parser.set_defaults(action=self.run)

        group = argument_parser.add_argument_group(title="io", description="define the input and output files")
        group.add_argument("--input", "-i", type=str, help="JSON request or bare payload, defaults to stdin")
        group.add_argument("--output", "-o", type=str, help="file to write the JSON result to, defaults to stdout")
        group.add_argument("--seed", type=int, help="seed for randomized commands")
        self.setup_arguments(argument_parser)

    def setup_arguments(self, argument_parser: ArgumentParser) -> None:
        pass

    def options(self, arguments: Namespace) -> dict[str, Any]:
        return dict()

    @abstractmethod
    def handle(self, payload: Any, seed: int, **options: Any) -> dict[str, Any]:
        raise NotImplementedError()

    def exit_code(self, document: dict[str, Any]) -> int:
        return 0

    def run(self, arguments: Namespace) -> int:
        from ...errors import P1TorsorError
        from ...utils.json import dump_json
        from ..execute import diagnostic, error_exit_code, execute, read_request

        input_path: str | None = getattr(arguments, "input", None)
        if input_path is not None:
            text = Path(input_path).read_text()
        else:
            text = sys.stdin.read()

        try:
            request = read_request(text, self.name, getattr(arguments, "seed", None))
        except P1TorsorError as e:
            document, code = diagnostic(e), error_exit_code(e)
        else:
            document, code = execute(request, **self.options(arguments))

        output = dump_json(document) + "\n"
        output_path: str | None = getattr(arguments, "output", None)
        if output_path is not None:
            Path(output_path).write_text(output)
        else:
            sys.stdout.write(output)
            sys.stdout.flush()
        return code
