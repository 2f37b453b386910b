"""Certificates: named facts plus a list of failed expectations."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


class PipelineError(AssertionError):
    """A computation disagreed with a value it must reproduce."""


@dataclass
class Certificate:
    name: str
    facts: dict[str, Any] = field(default_factory=dict)
    failures: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def record(self, key: str, value: Any) -> Any:
        self.facts[key] = value
        return value

    def expect(self, key: str, ok: bool, value: Any = None) -> bool:
        """Record ``value`` under ``key`` and register a failure unless ``ok``."""
        self.facts[key] = value if value is not None else bool(ok)
        if not ok:
            self.failures.append(key)
        return ok

    def as_dict(self) -> dict:
        return {"facts": _plain(self.facts), "failures": list(self.failures)}


def _plain(x):
    if isinstance(x, dict):
        return {str(k): _plain(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_plain(v) for v in x]
    if isinstance(x, (bool, int, str)) or x is None:
        return x
    return str(x)
