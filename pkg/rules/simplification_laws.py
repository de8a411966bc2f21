"""
Simplification Laws
Certificates produced by the trivialization pipelines must replay
"""
from typing import Dict, Optional

from core.certificate import verify_certificate
from core.errors import PlusweldError
from core.gauss_code import GaussCode
from core.simplify import bounded_trivialize, descending_certificate
from core.warping import descending_classes
from .base_rule import BaseRule


class SmallCodesTrivialRule(BaseRule):
    """Codes with at most two chords are descending in one orientation and trivialize at once"""

    id = "SL-001"
    suite = "prop41"
    description = "Every code with cr <= 2 is trivial"
    category = "SIMPLIFY"
    max_chords = 2

    def evaluate(self, code: GaussCode, context) -> Optional[Dict]:
        if min(self._profile(code, context)) and min(self._reverse_profile(code, context)):
            return self._create_finding(
                "neither orientation has a descending class",
                details={"profile": list(self._profile(code, context))},
            )
        verdict = bounded_trivialize(code, context.budget, context.fplus_permissive)
        if not verdict.is_trivial:
            return self._create_finding("bounded search returned Unknown",
                                        details={"stats": verdict.stats.to_dict()})
        if verdict.stats.depth != 0:
            return self._create_finding(f"trivialized only at depth {verdict.stats.depth}")
        report = verify_certificate(verdict.certificate)
        if report.final.passages or report.changes or report.virtualizations:
            return self._create_finding("certificate does not witness plus-welded triviality",
                                        details=report.to_dict())
        return None


class DescendingTrivialRule(BaseRule):
    """Every descending class yields a replayable certificate to the empty code"""

    id = "SL-002"
    suite = "thm31"
    description = "Descending codes trivialize within n(2n+1) steps"
    category = "SIMPLIFY"

    def evaluate(self, code: GaussCode, context) -> Optional[Dict]:
        bound = code.n * (2 * code.n + 1)
        for b in descending_classes(code):
            try:
                certificate = descending_certificate(code, b, context.fplus_permissive)
                report = verify_certificate(certificate)
            except PlusweldError as exc:
                return self._create_finding(f"class {b}: {exc.message}",
                                            details={"base": b, "error": exc.reason_code})
            if report.final.passages or len(certificate) > bound:
                return self._create_finding(
                    f"class {b}: {len(certificate)} step(s) ending at {report.final}",
                    details={"base": b, "steps": len(certificate), "bound": bound},
                )
        return None
