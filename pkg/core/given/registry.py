from __future__ import annotations

from collections.abc import Callable
from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Any

from core.utils.exceptions import ExceptionFactory

if TYPE_CHECKING:
    from core.automaton import Tgba
    from core.given.context import StrategyContext

StageFn = Callable[["StrategyContext", "Tgba"], "Tgba"]

COMBINATOR = "+"


@dataclass
class StrategyMetadata:
    """Registered strategy stage.

    Attributes:
        name: Public name used on the command line and in reports.
        description: Human-readable description.
        kind: Family of the stage (basic, bounds, stutter).
        precise: True when all facts are conjoined before integration.
        function: Callable ``(context, automaton) -> automaton``.
        aliases: Alternative ASCII names.
    """

    name: str
    description: str
    kind: str
    function: StageFn | Any
    precise: bool = False
    aliases: list[str] = field(default_factory=list)


class StrategyRegistry:
    """Global registry of strategy stages (define-once source of truth)."""

    _stages: dict[str, StrategyMetadata] = {}
    _aliases: dict[str, str] = {}

    @classmethod
    def register(cls, meta: StrategyMetadata) -> None:
        if meta.name in cls._stages or meta.name in cls._aliases:
            raise ValueError(f"Strategy '{meta.name}' already registered")
        cls._stages[meta.name] = meta
        for alias in meta.aliases:
            cls._aliases[alias] = meta.name

    @classmethod
    def get(cls, name: str) -> StrategyMetadata | None:
        return cls._stages.get(cls._aliases.get(name, name))

    @classmethod
    def list_all(cls) -> list[StrategyMetadata]:
        return list(cls._stages.values())

    @classmethod
    def names(cls) -> list[str]:
        return list(cls._stages)

    @classmethod
    def by_kind(cls, kind: str) -> list[StrategyMetadata]:
        return [s for s in cls._stages.values() if s.kind == kind]

    @classmethod
    def resolve(cls, name: str) -> list[StrategyMetadata]:
        """Stages of ``name``; combined names ``A+B`` run left to right.

        Raises:
            UnknownStrategyError: If any part is not registered.
        """
        stages = []
        for part in name.split(COMBINATOR):
            meta = cls.get(part.strip())
            if meta is None:
                raise ExceptionFactory.unknown_strategy(name, cls.names())
            stages.append(meta)
        return stages

    @classmethod
    def snapshot(cls) -> tuple[dict[str, StrategyMetadata], dict[str, str]]:
        return dict(cls._stages), dict(cls._aliases)

    @classmethod
    def restore(cls, state: tuple[dict[str, StrategyMetadata], dict[str, str]]) -> None:
        cls._stages, cls._aliases = dict(state[0]), dict(state[1])

    @classmethod
    def clear(cls) -> None:
        cls._stages.clear()
        cls._aliases.clear()


def strategy(
    *,
    name: str,
    description: str,
    kind: str,
    precise: bool = False,
    aliases: list[str] | None = None,
):
    """Decorator registering a strategy stage.

    Usage:
        @strategy(name="BM", description="Boolean bounds, fact by fact", kind="bounds")
        def bounds_incremental(ctx: StrategyContext, a: Tgba) -> Tgba:
            ...
    """

    def _wrap(fn: StageFn) -> StageFn:
        meta = StrategyMetadata(
            name=name,
            description=description,
            kind=kind,
            function=fn,
            precise=precise,
            aliases=aliases or [],
        )
        fn._strategy_info = meta  # type: ignore[attr-defined]
        StrategyRegistry.register(meta)
        return fn

    return _wrap
