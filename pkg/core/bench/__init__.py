"""Bench harness: problem corpora, concurrent runs, CSV rows and summaries."""

from core.bench.generate import generate_problems, random_fact, random_formula
from core.bench.problems import Problem, load_problems, parse_problems, write_problems
from core.bench.runner import CSV_COLUMNS, BenchRow, CsvSink, read_rows, run_bench, run_one
from core.bench.summary import StrategySummary, render_summary, summarize

__all__ = [
    "CSV_COLUMNS",
    "BenchRow",
    "CsvSink",
    "Problem",
    "StrategySummary",
    "generate_problems",
    "load_problems",
    "parse_problems",
    "random_fact",
    "random_formula",
    "read_rows",
    "render_summary",
    "run_bench",
    "run_one",
    "summarize",
    "write_problems",
]
