"""
Results
Data contracts for every analysis output; each has a stable to_dict()
"""
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Any, Dict, List, Optional, Tuple


def fraction_text(value: Optional[Fraction]) -> Optional[str]:
    return None if value is None else str(value)


@dataclass(frozen=True)
class InvariantReport:
    """Per-diagram bundle of warping data and unknotting bounds"""
    cr: int
    d_at: Tuple[int, ...]
    d_D: int
    d_reverse: int
    alternating: bool
    descending: bool
    warping_bound: int
    half_crossing_bound: Optional[Fraction]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "cr": self.cr,
            "d_at": list(self.d_at),
            "d": self.d_D,
            "d_rev": self.d_reverse,
            "alternating": self.alternating,
            "descending": self.descending,
            "bound_warping": self.warping_bound,
            "bound_half_cr": fraction_text(self.half_crossing_bound),
        }


class VerdictStatus(Enum):
    TRIVIAL = "Trivial"
    UNKNOWN = "Unknown"


@dataclass(frozen=True)
class SearchStats:
    discovered: int = 0
    expanded: int = 0
    depth: int = 0
    exhausted_budget: bool = False

    def to_dict(self) -> Dict[str, Any]:
        return {
            "discovered": self.discovered,
            "expanded": self.expanded,
            "depth": self.depth,
            "exhausted_budget": self.exhausted_budget,
        }


@dataclass(frozen=True)
class TrivialityVerdict:
    """Trivial carries a certificate ending at the empty code; Unknown asserts nothing"""
    status: VerdictStatus
    certificate: Optional[Any] = None
    stats: SearchStats = field(default_factory=SearchStats)

    @property
    def is_trivial(self) -> bool:
        return self.status is VerdictStatus.TRIVIAL

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {"status": self.status.value}
        if self.certificate is not None:
            data["certificate"] = self.certificate.to_dict()
        data["stats"] = self.stats.to_dict()
        return data


class OpKind(Enum):
    CHANGE = "change"
    VIRTUALIZE = "virtualize"


@dataclass(frozen=True)
class UnknotResult:
    """
    Certified upper bound for u(D) or u_v(D).
    Only upper_bound = 0 is exact; every smaller modification count below
    exhaustive_below was searched without success.
    """
    op_kind: OpKind
    upper_bound: int
    chords: Tuple[int, ...]
    certificate: Any
    exhaustive_below: int
    budget_used: Any
    status: str
    orientation: str = "forward"

    @property
    def exact(self) -> bool:
        return self.upper_bound == 0

    def to_dict(self) -> Dict[str, Any]:
        return {
            "op": self.op_kind.value,
            "upper_bound": self.upper_bound,
            "exact": self.exact,
            "status": self.status,
            "orientation": self.orientation,
            "chords": list(self.chords),
            "modifications": self.certificate.modification_count,
            "exhaustive_below": self.exhaustive_below,
            "budget": self.budget_used.to_dict() if self.budget_used is not None else None,
            "certificate": self.certificate.to_dict(),
        }


class CheckResult:
    """Outcome of running property rules over a corpus"""

    MAX_FINDINGS = 50

    def __init__(self, suite: str = "all"):
        self.suite = suite
        self.verdict: Optional[str] = None  # PASSED | FAILED
        self.codes_checked: int = 0
        self.rule_stats: Dict[str, Dict[str, int]] = {}
        self.findings: List[Dict] = []
        self.dropped_findings: int = 0

    def record(self, rule_id: str, violated: bool) -> None:
        stats = self.rule_stats.setdefault(rule_id, {"checked": 0, "violations": 0})
        stats["checked"] += 1
        if violated:
            stats["violations"] += 1

    def add_finding(self, finding: Dict) -> None:
        if len(self.findings) < self.MAX_FINDINGS:
            self.findings.append(finding)
        else:
            self.dropped_findings += 1

    @property
    def violations(self) -> int:
        return sum(s["violations"] for s in self.rule_stats.values())

    def to_dict(self) -> Dict:
        return {
            "suite": self.suite,
            "verdict": self.verdict,
            "codes_checked": self.codes_checked,
            "violations": self.violations,
            "rules": {rule: dict(stats) for rule, stats in sorted(self.rule_stats.items())},
            "findings": self.findings,
            "dropped_findings": self.dropped_findings,
        }

    def __repr__(self) -> str:
        return f"<CheckResult {self.suite} {self.verdict} violations={self.violations}>"
