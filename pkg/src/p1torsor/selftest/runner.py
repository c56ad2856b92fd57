# -*- coding: utf-8 -*-
# emacs: -*- mode: python; py-indent-offset: 4; indent-tabs-mode: nil -*-
# vi: set ft=python sts=4 ts=4 sw=4 et:

from dataclasses import dataclass
from time import perf_counter
from typing import Sequence

import numpy as np
from inflect import engine
from more_itertools import divide
from tabulate import tabulate

from ..constants import Constants
from ..logging import logger
from ..utils.multiprocessing import IterationOrder, make_pool_or_null_context
from .suites import SuiteResult, suites

inflect_engine = engine()


@dataclass(frozen=True)
class Shard:
    suite: str
    index: int
    trials: int
    entropy: int
    spawn_key: tuple[int, ...]

    @property
    def seed_sequence(self) -> np.random.SeedSequence:
        return np.random.SeedSequence(self.entropy, spawn_key=self.spawn_key)


def make_shards(names: Sequence[str], seed: int, workers: int = 1, trials: int | None = None) -> list[Shard]:
    """Split each suite into at most `workers` shards with seeds spawned from the root seed"""
    root = np.random.SeedSequence(seed)
    suite_sequences = root.spawn(len(names))

    shards: list[Shard] = list()
    for name, suite_sequence in zip(names, suite_sequences):
        count = Constants.selftest_trials[name] if trials is None else trials
        parts = [len(list(part)) for part in divide(max(1, workers), range(count))]
        parts = [part for part in parts if part > 0] or [0]
        for index, (part, shard_sequence) in enumerate(zip(parts, suite_sequence.spawn(len(parts)))):
            shards.append(Shard(name, index, part, seed, tuple(shard_sequence.spawn_key)))
    return shards


def run_shard(shard: Shard) -> SuiteResult:
    result = SuiteResult(shard.suite)
    rng = np.random.default_rng(shard.seed_sequence)
    suites[shard.suite](result, rng, shard.trials, shard.index == 0)
    return result


@dataclass
class SelftestReport:
    seed: int
    results: list[SuiteResult]
    seconds: float

    @property
    def passed(self) -> int:
        return sum(result.passed for result in self.results)

    @property
    def failed(self) -> int:
        return sum(result.failed for result in self.results)

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def table(self) -> str:
        rows = [
            [result.name, result.passed, result.failed, "ok" if result.failed == 0 else "FAILED"] for result in self.results
        ]
        return tabulate(rows, headers=["suite", "passed", "failed", "status"])


def run_selftest(
    names: Sequence[str] | None = None,
    seed: int = Constants.default_seed,
    workers: int = 1,
    trials: int | None = None,
) -> SelftestReport:
    if names is None:
        names = list(suites)
    names = list(dict.fromkeys(names))
    unknown = [name for name in names if name not in suites]
    if len(unknown) > 0:
        raise ValueError(f"Unknown selftest {inflect_engine.plural('suite', len(unknown))} {', '.join(unknown)}")

    shards = make_shards(names, seed, workers, trials)
    logger.info(
        f"Running {inflect_engine.no('suite', len(names))} as "
        f"{inflect_engine.no('shard', len(shards))} with seed {seed}"
    )

    merged: dict[str, SuiteResult] = {name: SuiteResult(name) for name in names}
    start = perf_counter()
    cm, iterator = make_pool_or_null_context(shards, run_shard, num_threads=workers, iteration_order=IterationOrder.ORDERED)
    with cm:
        for result in iterator:
            merged[result.name].merge(result)
    report = SelftestReport(seed, list(merged.values()), perf_counter() - start)

    logger.info(f"Selftest summary after {report.seconds:.1f} seconds\n{report.table()}")
    for result in report.results:
        for failure in result.failures:
            logger.warning(f'Suite "{result.name}" failed: {failure}')
    return report
