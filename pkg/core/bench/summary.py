"""Aggregates of bench rows: outcome counts and mean sizes per strategy."""

from __future__ import annotations

from collections.abc import Iterable
from statistics import fmean

from pydantic import BaseModel, Field
from rich.console import Console
from rich.table import Table

from core.bench.runner import BenchRow, TIMEOUT_OUTCOME


class StrategySummary(BaseModel):
    strategy: str
    rows: int = Field(..., ge=0)
    empty: int = 0
    universal: int = 0
    timeouts: int = 0
    mean_states: float | None = None
    mean_transitions: float | None = None
    mean_ap: float | None = None
    mean_label_size: float | None = None
    si_fraction: float | None = None
    det_fraction: float | None = None
    mean_time_ms: float | None = None

    @property
    def solved(self) -> int:
        return self.empty + self.universal


def _mean(values: list[float]) -> float | None:
    return fmean(values) if values else None


def summarize(rows: Iterable[BenchRow]) -> list[StrategySummary]:
    """One summary per strategy, in first-seen order; means skip timed-out rows."""
    grouped: dict[str, list[BenchRow]] = {}
    for row in rows:
        grouped.setdefault(row.strategy, []).append(row)
    out = []
    for name, group in grouped.items():
        done = [r for r in group if not r.timeout]
        out.append(
            StrategySummary(
                strategy=name,
                rows=len(group),
                empty=sum(r.outcome == "empty" for r in group),
                universal=sum(r.outcome == "universal" for r in group),
                timeouts=sum(r.outcome == TIMEOUT_OUTCOME for r in group),
                mean_states=_mean([r.states for r in done if r.states is not None]),
                mean_transitions=_mean([r.transitions for r in done if r.transitions is not None]),
                mean_ap=_mean([r.ap for r in done if r.ap is not None]),
                mean_label_size=_mean([r.sum_label_size for r in done if r.sum_label_size is not None]),
                si_fraction=_mean([r.si == "yes" for r in done]),
                det_fraction=_mean([r.det == "yes" for r in done]),
                mean_time_ms=_mean([r.time_ms for r in done]),
            )
        )
    return out


def _fmt(value: float | None, digits: int = 2) -> str:
    return "-" if value is None else f"{value:.{digits}f}"


def render_summary(summaries: list[StrategySummary], console: Console) -> None:
    outcomes = Table(title="[bold cyan]Outcomes[/bold cyan]", show_header=True)
    for col in ("Strategy", "Rows", "Empty", "Universal", "Solved", "TO"):
        outcomes.add_column(col, justify="left" if col == "Strategy" else "right")
    for s in summaries:
        outcomes.add_row(s.strategy, str(s.rows), str(s.empty), str(s.universal), str(s.solved), str(s.timeouts))
    console.print(outcomes)

    sizes = Table(title="[bold cyan]Mean sizes[/bold cyan]", show_header=True)
    for col in ("Strategy", "States", "Transitions", "|AP|", "Σ|f|", "SI", "det", "Time (ms)"):
        sizes.add_column(col, justify="left" if col == "Strategy" else "right")
    for s in summaries:
        sizes.add_row(
            s.strategy,
            _fmt(s.mean_states),
            _fmt(s.mean_transitions),
            _fmt(s.mean_ap),
            _fmt(s.mean_label_size),
            _fmt(s.si_fraction),
            _fmt(s.det_fraction),
            _fmt(s.mean_time_ms, 1),
        )
    console.print(sizes)
