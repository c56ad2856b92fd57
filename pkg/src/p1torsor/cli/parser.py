# -*- coding: utf-8 -*-
# emacs: -*- mode: python; py-indent-offset: 4; indent-tabs-mode: nil -*-
# vi: set ft=python sts=4 ts=4 sw=4 et:

from argparse import ArgumentParser, Namespace

from .. import __version__
from .commands import task_commands
from .commands.base import Command


def build_parser() -> ArgumentParser:
    parser = ArgumentParser(
        prog="p1torsor",
        description=f"p1torsor {__version__} classifies vector bundles and torsors on the projective line "
        "with exact arithmetic, emitting JSON results with verification witnesses.",
    )

    basegroup = parser.add_argument_group("base", "")
    basegroup.add_argument("--verbose", action="store_true", default=False, help="print debug messages")

    parser.add_argument(
        "-v",
        "--version",
        action="store_true",
        help="print the version number and exit",
        default=False,
    )

    debuggroup = parser.add_argument_group("debug", "")
    debuggroup.add_argument("--debug", action="store_true", default=False, help="re-raise unexpected exceptions")

    subparsers = parser.add_subparsers(dest="command")
    commands: list[Command] = [*task_commands]
    for command in commands:
        command.setup(subparsers.add_parser)

    return parser


def parse_args(argv: list[str] | None = None, namespace: Namespace | None = None) -> Namespace:
    parser = build_parser()
    opts = parser.parse_args(argv, namespace)

    if opts is None:
        raise RuntimeError("No options were parsed")

    if opts.version is True:
        import sys

        print(__version__)
        sys.exit(0)

    if getattr(opts, "action", None) is None:
        parser.print_usage()
        parser.exit(2, "p1torsor: error: a command is required\n")

    return opts
