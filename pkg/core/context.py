"""
Execution Context
Carries the resolved run configuration to pipelines and property rules
"""
from dataclasses import dataclass
from typing import Any, Dict, Optional

from .errors import ConfigError


@dataclass(frozen=True)
class SearchBudget:
    """Limits of one bounded search; max_chords None means n + 2 of the input"""
    max_nodes: int = 100_000
    max_depth: int = 12
    max_chords: Optional[int] = None

    def __post_init__(self):
        for name in ("max_nodes", "max_depth", "max_chords"):
            value = getattr(self, name)
            if value is None and name == "max_chords":
                continue
            if isinstance(value, bool) or not isinstance(value, int) or value <= 0:
                raise ConfigError(f"budget field {name} must be a positive integer, got {value!r}",
                                  field=name)

    def chord_cap(self, n: int) -> int:
        return self.max_chords if self.max_chords is not None else n + 2

    def to_dict(self) -> Dict[str, Any]:
        return {
            "max_nodes": self.max_nodes,
            "max_depth": self.max_depth,
            "max_chords": self.max_chords,
        }


class ExecutionContext:
    """
    Runtime state shared by rules during a check run.
    Rules read conventions from here instead of importing Config.
    """

    def __init__(self,
                 alternation: str = "cyclic",
                 fplus_permissive: bool = False,
                 budget: Optional[SearchBudget] = None):
        self.alternation = alternation
        self.fplus_permissive = fplus_permissive
        self.budget = budget or SearchBudget()
        self.cache: Dict[str, Any] = {}
        self.metadata: Dict[str, Any] = {}
        self.strict_mode: bool = False

    def set(self, key: str, value: Any) -> None:
        self.cache[key] = value

    def get(self, key: str, default: Any = None) -> Any:
        return self.cache.get(key, default)

    def has(self, key: str) -> bool:
        return key in self.cache

    def memo(self, key: str, compute) -> Any:
        """Per-code computations shared between rules"""
        if key not in self.cache:
            self.cache[key] = compute()
        return self.cache[key]

    def clear_cache(self) -> None:
        self.cache.clear()

    def enable_strict_mode(self) -> None:
        self.strict_mode = True

    def __repr__(self) -> str:
        return (f"<ExecutionContext alternation={self.alternation} "
                f"fplus_permissive={self.fplus_permissive} strict={self.strict_mode}>")
