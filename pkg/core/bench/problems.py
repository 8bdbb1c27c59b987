"""
Bench problems: a property and the knowledge available about its system.

A problem file is YAML, either a single mapping::

    name: mutex
    formula: G(a -> F b)
    facts:
      - G !(a & b)
      - F G b

or a mapping with a ``problems:`` list of such mappings.
"""

from __future__ import annotations

from pathlib import Path

import yaml
from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator

from core.ltl import Formula, parse
from core.utils.exceptions import FactFileError, LtlSyntaxError
from core.utils.logging import get_logger

logger = get_logger(__name__)

PROBLEM_SUFFIXES = (".yaml", ".yml")


class Problem(BaseModel):
    """One bench problem; formulas are kept as text and validated on load."""

    model_config = ConfigDict(frozen=True)

    name: str = Field(..., min_length=1, description="Problem identifier used in reports")
    formula: str = Field(..., description="The property φ")
    facts: list[str] = Field(default_factory=list, description="Knowledge formulas, in order")

    @field_validator("formula")
    @classmethod
    def _formula_parses(cls, v: str) -> str:
        parse(v)
        return v

    @field_validator("facts")
    @classmethod
    def _facts_parse(cls, v: list[str]) -> list[str]:
        for text in v:
            parse(text)
        return v

    @property
    def phi(self) -> Formula:
        return parse(self.formula)

    @property
    def knowledge(self) -> list[Formula]:
        return [parse(f) for f in self.facts]

    def to_yaml(self) -> str:
        return yaml.safe_dump(self.model_dump(), sort_keys=False, allow_unicode=True)


def _entries(data: object, source: str) -> list[dict]:
    if isinstance(data, dict) and "problems" in data:
        data = data["problems"]
        if not isinstance(data, list):
            raise FactFileError(f"{source}: 'problems' must be a list", details={"source": source})
        return data
    if isinstance(data, dict):
        return [data]
    raise FactFileError(f"{source}: expected a mapping", details={"source": source})


def parse_problems(text: str, source: str = "<string>", default_name: str = "problem") -> list[Problem]:
    """Problems of one YAML document; unnamed entries are named after the source.

    Raises:
        FactFileError: On invalid YAML, missing fields or unparsable formulas.
    """
    try:
        data = yaml.safe_load(text)
    except yaml.YAMLError as exc:
        raise FactFileError(f"{source}: invalid YAML: {exc}", details={"source": source}) from exc
    entries = _entries(data, source)
    problems: list[Problem] = []
    for i, entry in enumerate(entries):
        if not isinstance(entry, dict):
            raise FactFileError(f"{source}: problem {i} is not a mapping", details={"source": source, "index": i})
        fallback = default_name if len(entries) == 1 else f"{default_name}-{i}"
        try:
            problems.append(Problem(**{"name": fallback, **entry}))
        except LtlSyntaxError as exc:
            raise FactFileError(f"{source}: problem {i}: {exc.message}", details={"source": source, "index": i}) from exc
        except ValidationError as exc:
            raise FactFileError(f"{source}: problem {i}: {exc.errors()[0]['msg']}", details={"source": source}) from exc
    return problems


def load_problems(path: str | Path) -> list[Problem]:
    """Problems of a YAML file, or of every YAML file of a directory in name order."""
    p = Path(path)
    files = sorted(f for f in p.iterdir() if f.suffix in PROBLEM_SUFFIXES) if p.is_dir() else [p]
    problems: list[Problem] = []
    for f in files:
        try:
            text = f.read_text(encoding="utf-8")
        except OSError as exc:
            raise FactFileError(f"cannot read {f}: {exc.strerror}", details={"source": str(f)}) from exc
        problems.extend(parse_problems(text, source=str(f), default_name=f.stem))
    names = [pr.name for pr in problems]
    if len(set(names)) != len(names):
        raise FactFileError("duplicate problem names", details={"source": str(p)})
    logger.debug("bench.problems_loaded", count=len(problems), source=str(p))
    return problems


def write_problems(problems: list[Problem], directory: str | Path) -> list[Path]:
    out = Path(directory)
    out.mkdir(parents=True, exist_ok=True)
    paths = []
    for pr in problems:
        target = out / f"{pr.name}.yaml"
        target.write_text(pr.to_yaml(), encoding="utf-8")
        paths.append(target)
    return paths
