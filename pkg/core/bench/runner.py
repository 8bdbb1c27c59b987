"""
Bench harness: every problem under every strategy, one CSV row each.

Rows are produced by a thread pool; each task owns a private BDD manager and
its own deadline. Rows reach the CSV file through a single lock-guarded
writer, in completion order.
"""

from __future__ import annotations

import csv
import threading
from collections.abc import Callable, Iterable, Sequence
from concurrent.futures import ThreadPoolExecutor, as_completed
from pathlib import Path
from typing import TextIO

from pydantic import BaseModel, ConfigDict, Field

from core.bench.problems import Problem
from core.boolfn import BddManager
from core.config import get_settings
from core.given import KnowledgeBase, StrategyOptions, StrategyReport, StrategyRegistry, run_strategy
from core.utils.budget import deadline_scope
from core.utils.exceptions import TimeoutExceededError
from core.utils.logging import LogContext, get_logger

logger = get_logger(__name__)

CSV_COLUMNS = (
    "problem",
    "strategy",
    "outcome",
    "states",
    "transitions",
    "ap",
    "sum_label_size",
    "si",
    "det",
    "time_ms",
    "timeout",
)

TIMEOUT_OUTCOME = "timeout"


class BenchRow(BaseModel):
    """One CSV row; size columns are empty for timed-out runs."""

    model_config = ConfigDict(frozen=True)

    problem: str
    strategy: str
    outcome: str = Field(..., description="Strategy outcome, or 'timeout'")
    states: int | None = None
    transitions: int | None = None
    ap: int | None = None
    sum_label_size: int | None = None
    si: str | None = Field(default=None, description="yes, no or unknown")
    det: str | None = Field(default=None, description="yes or no")
    time_ms: float
    timeout: bool = False

    @classmethod
    def from_report(cls, problem: str, report: StrategyReport) -> BenchRow:
        after = report.after
        return cls(
            problem=problem,
            strategy=report.strategy,
            outcome=report.outcome.value,
            states=after.states,
            transitions=after.transitions,
            ap=after.ap_count,
            sum_label_size=after.label_size_total,
            si=after.is_si.value,
            det="yes" if after.is_det else "no",
            time_ms=round(report.time_ms, 3),
        )

    @classmethod
    def timed_out(cls, problem: str, strategy: str, timeout_ms: int) -> BenchRow:
        return cls(problem=problem, strategy=strategy, outcome=TIMEOUT_OUTCOME, time_ms=float(timeout_ms), timeout=True)

    def to_csv(self) -> dict[str, str]:
        data = self.model_dump()
        out = {k: "" if data[k] is None else str(data[k]) for k in CSV_COLUMNS}
        out["timeout"] = "1" if self.timeout else "0"
        return out

    @classmethod
    def from_csv(cls, record: dict[str, str]) -> BenchRow:
        values: dict[str, object] = {k: (v if v != "" else None) for k, v in record.items() if k in CSV_COLUMNS}
        values["timeout"] = record.get("timeout") == "1"
        return cls(**values)


class CsvSink:
    """Serialized CSV writer shared by the bench workers."""

    def __init__(self, stream: TextIO) -> None:
        self._lock = threading.Lock()
        self._stream = stream
        self._writer = csv.DictWriter(stream, fieldnames=CSV_COLUMNS, lineterminator="\n")
        self._writer.writeheader()

    def write(self, row: BenchRow) -> None:
        with self._lock:
            self._writer.writerow(row.to_csv())
            self._stream.flush()


def read_rows(path: str | Path) -> list[BenchRow]:
    with Path(path).open(newline="", encoding="utf-8") as f:
        reader = csv.DictReader(f)
        if tuple(reader.fieldnames or ()) != CSV_COLUMNS:
            raise ValueError(f"unexpected CSV header: {reader.fieldnames}")
        return [BenchRow.from_csv(r) for r in reader]


def run_one(problem: Problem, strategy: str, timeout_ms: int, opts: StrategyOptions | None = None) -> BenchRow:
    """Run one strategy on one problem with a private manager and deadline."""
    with LogContext(problem=problem.name), deadline_scope(timeout_ms):
        try:
            kb = KnowledgeBase.from_formulas(problem.knowledge, BddManager(), source=problem.name)
            _, report = run_strategy(strategy, problem.phi, kb, opts)
        except TimeoutExceededError:
            logger.info("bench.timeout", strategy=strategy, timeout_ms=timeout_ms)
            return BenchRow.timed_out(problem.name, strategy, timeout_ms)
    return BenchRow.from_report(problem.name, report)


def run_bench(
    problems: Sequence[Problem],
    strategies: Iterable[str],
    timeout_ms: int | None = None,
    workers: int | None = None,
    sink: CsvSink | None = None,
    opts: StrategyOptions | None = None,
    on_row: Callable[[BenchRow], None] | None = None,
) -> list[BenchRow]:
    """Run every problem under every strategy.

    Returns rows in (problem, strategy) order regardless of completion order.

    Raises:
        UnknownStrategyError: Before any work starts, for an unknown name.
    """
    settings = get_settings()
    timeout = settings.bench_timeout_ms if timeout_ms is None else timeout_ms
    pool_size = max(1, settings.bench_workers if workers is None else workers)
    names = list(strategies)
    for name in names:
        StrategyRegistry.resolve(name)

    tasks = [(p, s) for p in problems for s in names]
    rows: dict[tuple[str, str], BenchRow] = {}
    logger.info("bench.start", problems=len(problems), strategies=len(names), workers=pool_size)
    with ThreadPoolExecutor(max_workers=pool_size) as pool:
        futures = {pool.submit(run_one, p, s, timeout, opts): (p.name, s) for p, s in tasks}
        for future in as_completed(futures):
            row = future.result()
            rows[futures[future]] = row
            if sink is not None:
                sink.write(row)
            if on_row is not None:
                on_row(row)
    logger.info("bench.done", rows=len(rows))
    return [rows[(p.name, s)] for p, s in tasks]
