"""
PROPERTY ENGINE
Runs property rules over a corpus of Gauss codes and aggregates the outcome.
Pure logic: no printing, progress goes to the logger.
"""
import logging
from typing import Iterable, List, Optional

from .context import ExecutionContext
from .gauss_code import GaussCode
from .result import CheckResult

logger = logging.getLogger(__name__)


class Engine:
    """
    Executes rules deterministically: codes in input order, rules in
    registry order. A rule that raises is recorded as a CRITICAL
    ENGINE-ERROR finding and counts as a violation.
    """

    VERSION = "1.0.0"

    def __init__(self, rules: List = None, context: Optional[ExecutionContext] = None):
        self.rules = rules or []
        self.context = context or ExecutionContext()
        logger.debug("engine initialized with %d rule(s)", len(self.rules))

    def run(self, codes: Iterable[GaussCode], suite: str = "all") -> CheckResult:
        result = CheckResult(suite)

        categories = {}
        for rule in self.rules:
            category = getattr(rule, 'category', 'GENERAL')
            categories[category] = categories.get(category, 0) + 1
        for category, count in sorted(categories.items()):
            logger.debug("%s: %d rule(s)", category, count)

        for code in codes:
            result.codes_checked += 1
            self.context.clear_cache()
            for rule in self.rules:
                if not rule.applies_to(code):
                    continue
                finding = self._evaluate(rule, code)
                result.record(rule.id, finding is not None)
                if finding:
                    finding["code"] = str(code)
                    result.add_finding(finding)
                    logger.warning("%s violated on %s: %s", rule.id, code, finding.get("message"))

        self._finalize(result)
        return result

    def _evaluate(self, rule, code: GaussCode) -> Optional[dict]:
        try:
            return rule.evaluate(code, self.context)
        except Exception as e:
            if self.context.strict_mode:
                raise
            return {
                "id": "ENGINE-ERROR",
                "severity": "CRITICAL",
                "rule": getattr(rule, 'id', str(rule)),
                "message": f"RULE EXECUTION FAILED: {e}",
            }

    def _finalize(self, result: CheckResult) -> None:
        result.verdict = "FAILED" if result.violations else "PASSED"
        logger.info("suite %s: %s (%d code(s), %d violation(s))",
                    result.suite, result.verdict, result.codes_checked, result.violations)

    def add_rule(self, rule) -> None:
        self.rules.append(rule)

    def __repr__(self) -> str:
        return f"<ENGINE v{self.VERSION} RULES={len(self.rules)}>"
