"""
Base Rule - Abstract Foundation
Every property law checked by the engine inherits from this
"""
from abc import ABC, abstractmethod
from typing import Dict, Optional

from core.gauss_code import GaussCode, reverse
from core.warping import degree_profile


class BaseRule(ABC):
    """
    Abstract base class for property rules.
    A rule inspects one code and returns a finding when the law fails.
    """

    # Rule metadata (override in subclasses)
    id: str = "BASE"
    suite: str = "base"
    severity: str = "CRITICAL"  # a failed law is an implementation bug
    description: str = "Base rule"
    category: str = "GENERAL"
    min_chords: int = 0
    max_chords: Optional[int] = None

    def applies_to(self, code: GaussCode) -> bool:
        if code.n < self.min_chords:
            return False
        return self.max_chords is None or code.n <= self.max_chords

    @abstractmethod
    def evaluate(self, code: GaussCode, context) -> Optional[Dict]:
        """
        Check the law on one code.

        Args:
            code: Valid Gauss code
            context: ExecutionContext (conventions, budget, per-code cache)

        Returns:
            Finding dict if the law fails, None if it holds
        """
        raise NotImplementedError("Subclasses must implement evaluate()")

    # Shared per-code computations, memoized in the context cache
    def _profile(self, code: GaussCode, context):
        return context.memo(f"profile:{code}", lambda: degree_profile(code))

    def _reverse_profile(self, code: GaussCode, context):
        return context.memo(f"profile-rev:{code}", lambda: degree_profile(reverse(code)))

    def _create_finding(self, message: str, details: Dict = None) -> Dict:
        finding = {
            "id": self.id,
            "suite": self.suite,
            "severity": self.severity,
            "message": message,
            "category": self.category,
            "rule": self.__class__.__name__,
        }
        if details:
            finding["details"] = details
        return finding

    def __repr__(self) -> str:
        return f"<{self.__class__.__name__} id={self.id} suite={self.suite}>"
