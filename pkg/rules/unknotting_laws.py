"""
Unknotting Laws
Warping witnesses for u and u_v, the half-crossing bound and monotone closures
"""
from typing import Dict, Optional

from core.certificate import verify_certificate
from core.gauss_code import GaussCode
from core.result import OpKind
from core.unknot import closure_unknot_data, warping_unknot_certificate
from .base_rule import BaseRule


class WarpingWitnessRule(BaseRule):
    """Both operations reach the trivial code after exactly min(d(D), d(-D)) modifications"""

    id = "UL-001"
    suite = "thm51"
    description = "u(D) and u_v(D) are bounded by the warping degree"
    category = "UNKNOT"

    def evaluate(self, code: GaussCode, context) -> Optional[Dict]:
        expected = min(min(self._profile(code, context)), min(self._reverse_profile(code, context)))
        for op in OpKind:
            result = warping_unknot_certificate(code, op, context.fplus_permissive)
            report = verify_certificate(result.certificate)
            count = report.changes if op is OpKind.CHANGE else report.virtualizations
            if result.upper_bound != expected or count != expected or report.final.passages:
                return self._create_finding(
                    f"{op.value}: bound {result.upper_bound}, {count} modification(s), "
                    f"final {report.final}, expected {expected}",
                    details={"op": op.value, "bound": result.upper_bound, "expected": expected},
                )
        return None


class HalfCrossingRule(BaseRule):
    """2 * min(d(D), d(-D)) <= cr(D) - 1"""

    id = "UL-002"
    suite = "cor52"
    description = "Warping bound never exceeds (cr - 1) / 2"
    category = "UNKNOT"
    min_chords = 3

    def evaluate(self, code: GaussCode, context) -> Optional[Dict]:
        bound = min(min(self._profile(code, context)), min(self._reverse_profile(code, context)))
        if 2 * bound > code.n - 1:
            return self._create_finding(f"warping bound {bound} exceeds ({code.n} - 1) / 2",
                                        details={"bound": bound, "cr": code.n})
        return None


class MonotoneClosureRule(BaseRule):
    """A descending knotoid closes to a monotone welded knot diagram"""

    id = "UL-003"
    suite = "cor55"
    description = "d(D) = 0 forces a monotone virtual closure"
    category = "UNKNOT"

    def evaluate(self, code: GaussCode, context) -> Optional[Dict]:
        if min(self._profile(code, context)) != 0:
            return None
        cyclic_d, monotone = closure_unknot_data(code)
        if not monotone:
            return self._create_finding(f"closure has cyclic warping degree {cyclic_d}",
                                        details={"cyclic_d": cyclic_d})
        return None
