# -*- coding: utf-8 -*-
# emacs: -*- mode: python; py-indent-offset: 4; indent-tabs-mode: nil -*-
# vi: set ft=python sts=4 ts=4 sw=4 et:

import logging
import time

import stackprinter

fmt = "[{asctime},{msecs:04.0f}] [{name:16}] [{levelname:9}] {message}"
datefmt = "%Y-%m-%d %H:%M:%S"

black, red, green, yellow, blue, magenta, cyan, white = range(8)
resetseq = "\x1b[0m"
fillseq = "\x1b[K"
colorseq = "\x1b[{:d};{:d}m"
colors = {
    "DEBUG": colorseq.format(30 + white, 100 + black),
    "INFO": colorseq.format(30 + white, 40 + blue),
    "WARNING": colorseq.format(30 + black, 40 + yellow),
    "ERROR": colorseq.format(30 + white, 40 + red),
    "CRITICAL": colorseq.format(30 + white, 40 + red),
}


class Formatter(logging.Formatter):
    def __init__(self) -> None:
        super().__init__(fmt=fmt, datefmt=datefmt, style="{")
        self.converter = time.localtime

    def formatException(self, ei) -> str:  # noqa: N802
        msg = stackprinter.format(ei)
        return "    " + "\n    ".join(msg.split("\n")).strip()

    def format(self, record: logging.LogRecord) -> str:
        formatted = super().format(record)

        lines = [line for line in formatted.splitlines(True) if line.strip("\r\n\t ")]

        if len(lines) <= 1:
            return formatted

        for i in range(1, len(lines) - 1):
            lines[i] = f"│ {lines[i]}"
        lines[-1] = f"└─{lines[-1]}".rstrip("\n")

        return "".join(lines)


class ColorFormatter(Formatter):
    def format(self, record: logging.LogRecord) -> str:
        formatted = super().format(record)

        color = colors.get(record.levelname)
        if color is None:
            return formatted

        lines = formatted.splitlines(True)
        for i, line in enumerate(lines):
            newline = ""
            if line.endswith("\n"):
                newline = "\n"
                line = line[:-1]
            lines[i] = f"{color}{line}{fillseq}{resetseq}{newline}"

        return "".join(lines)
