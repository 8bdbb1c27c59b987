"""Direction of the size and SI figures on a generated corpus (slow)."""

from statistics import fmean

import pytest

from core.bench import generate_problems, run_bench

STRATEGIES = ["raw", "BM", "SIrelax"]


@pytest.mark.integration
@pytest.mark.slow
class TestTrend:
    def test_knowledge_shrinks_and_relaxes(self):
        """BM never grows the automaton on average, SIrelax never loses SI outputs."""
        # Given: 500 generated problems whose facts share atoms with the property
        problems = generate_problems(500, seed=1)

        # When: Benchmarking raw, BM and SIrelax
        rows = run_bench(problems, STRATEGIES, timeout_ms=10_000, workers=4)

        # Then: On the problems every strategy finished, the trend holds
        by_problem: dict[str, dict] = {}
        for r in rows:
            by_problem.setdefault(r.problem, {})[r.strategy] = r
        done = [v for v in by_problem.values() if not any(r.timeout for r in v.values())]
        assert done

        def mean(strategy, field):
            return fmean(getattr(v[strategy], field) for v in done)

        assert mean("BM", "states") <= mean("raw", "states")
        assert mean("BM", "transitions") <= mean("raw", "transitions")
        si_raw = sum(v["raw"].si == "yes" for v in done)
        si_relaxed = sum(v["SIrelax"].si == "yes" for v in done)
        assert si_relaxed >= si_raw
