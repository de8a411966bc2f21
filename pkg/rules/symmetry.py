"""
Symmetry Rules
Involutions and relabeling invariance of the code-level operations
"""
from typing import Dict, Optional

from core.certificate import verify_certificate, reverse_certificate
from core.gauss_code import GaussCode, canonical_key, mirror, relabel, reverse
from core.warping import reverse_class
from core.simplify import descending_witness
from .base_rule import BaseRule


class InvolutionRule(BaseRule):
    """reverse and mirror are involutions, and so is the induced map on base classes"""

    id = "SY-001"
    suite = "symmetry"
    description = "Orientation symmetries square to the identity"
    category = "SYMMETRY"

    def evaluate(self, code: GaussCode, context) -> Optional[Dict]:
        if reverse(reverse(code)) != code:
            return self._create_finding("reverse is not an involution")
        if mirror(mirror(code)) != code:
            return self._create_finding("mirror is not an involution")
        for b in range(len(code)):
            back = reverse_class(reverse(code), reverse_class(code, b))
            if back != b:
                return self._create_finding(f"class {b} maps back to {back}",
                                            details={"base": b})
        return None


class RelabelInvarianceRule(BaseRule):
    """Canonical keys ignore chord labels"""

    id = "SY-002"
    suite = "symmetry"
    description = "canonical_key is invariant under chord relabeling"
    category = "SYMMETRY"
    min_chords = 1

    def evaluate(self, code: GaussCode, context) -> Optional[Dict]:
        chords = code.chords()
        shuffled = relabel(code, {c: 100 + len(chords) - i for i, c in enumerate(chords)})
        if canonical_key(shuffled) != canonical_key(code):
            return self._create_finding(f"relabeled key {canonical_key(shuffled)} "
                                        f"differs from {canonical_key(code)}")
        return None


class ReverseTransportRule(BaseRule):
    """Trivializing certificates survive transport to the reversed code"""

    id = "SY-003"
    suite = "symmetry"
    description = "reverse_certificate maps verified certificates to verified certificates"
    category = "SYMMETRY"

    def evaluate(self, code: GaussCode, context) -> Optional[Dict]:
        certificate = descending_witness(code, context.fplus_permissive)
        if certificate is None:
            return None
        transported = reverse_certificate(certificate)
        report = verify_certificate(transported)
        if transported.start != reverse(code) or report.final.passages:
            return self._create_finding(f"transported certificate ends at {report.final}")
        return None
