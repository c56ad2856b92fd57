# -*- coding: utf-8 -*-
# emacs: -*- mode: python; py-indent-offset: 4; indent-tabs-mode: nil -*-
# vi: set ft=python sts=4 ts=4 sw=4 et:

from argparse import ArgumentParser, Namespace
from multiprocessing import cpu_count
from typing import Any

from .base import TaskCommand


class SelftestCommand(TaskCommand):
    name = "selftest"
    help = "run the invariant suites and report pass/fail counts"

    def setup_arguments(self, argument_parser: ArgumentParser) -> None:
        argument_parser.add_argument(
            "--workers",
            type=int,
            default=1,
            help=f"number of worker processes to shard the suites across (up to {cpu_count()})",
        )

    def options(self, arguments: Namespace) -> dict[str, Any]:
        return dict(workers=max(1, getattr(arguments, "workers", 1) or 1))

    def handle(self, payload: dict, seed: int, **options: Any) -> dict[str, Any]:
        from ...selftest.runner import run_selftest

        report = run_selftest(
            names=payload.get("suites"),
            seed=seed,
            workers=options.get("workers", 1),
            trials=payload.get("trials"),
        )
        return dict(
            seed=report.seed,
            suites=[
                dict(name=result.name, passed=result.passed, failed=result.failed, failures=result.failures)
                for result in report.results
            ],
            passed=report.passed,
            failed=report.failed,
            ok=report.ok,
        )

    def exit_code(self, document: dict[str, Any]) -> int:
        return 0 if document.get("ok", False) else 1
