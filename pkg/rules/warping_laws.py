"""
Warping Laws
Identities between warping degrees, cutting numbers and orientation
"""
from typing import Dict, Optional

from core.gauss_code import GaussCode, mirror, reverse
from core.warping import (cutting_number, is_alternating, reverse_class,
                          warping_crossings, warping_degree, warping_degree_at)
from .base_rule import BaseRule


class ReverseSumRule(BaseRule):
    """d(D_b) + d(-D_b) = cr(D) at every base class"""

    id = "WL-001"
    suite = "lemma41"
    description = "Warping degrees of the two orientations add up to the crossing number"
    category = "WARPING"

    def evaluate(self, code: GaussCode, context) -> Optional[Dict]:
        flipped = reverse(code)
        for b in range(len(self._profile(code, context))):
            forward = warping_degree_at(code, b)
            backward = warping_degree_at(flipped, reverse_class(code, b))
            if forward + backward != code.n:
                return self._create_finding(
                    f"d(D_{b}) + d(-D_{b}) = {forward + backward}, expected {code.n}",
                    details={"base": b, "forward": forward, "reverse": backward},
                )
        return None


class CuttingNumberRule(BaseRule):
    """A chord warps exactly when its cutting number is positive"""

    id = "WL-002"
    suite = "lemma42"
    description = "Cutting number sign decides warping status"
    category = "WARPING"

    def evaluate(self, code: GaussCode, context) -> Optional[Dict]:
        for b in range(len(self._profile(code, context))):
            warping = warping_crossings(code, b)
            for chord in code.chords():
                cut = cutting_number(code, b, chord)
                if cut % 2 == 0 or (cut > 0) != (chord in warping):
                    return self._create_finding(
                        f"chord {chord} at class {b}: cut {cut}, warping {chord in warping}",
                        details={"base": b, "chord": chord, "cut": cut},
                    )
        return None


class MirrorReverseRule(BaseRule):
    """d(D*) = d(-D)"""

    id = "WL-003"
    suite = "cor42"
    description = "Mirror image and reverse share the warping degree"
    category = "WARPING"

    def evaluate(self, code: GaussCode, context) -> Optional[Dict]:
        mirrored = warping_degree(mirror(code))
        reversed_ = min(self._reverse_profile(code, context))
        if mirrored != reversed_:
            return self._create_finding(
                f"d(D*) = {mirrored} but d(-D) = {reversed_}",
                details={"mirror": mirrored, "reverse": reversed_},
            )
        return None


class AdjacentClassRule(BaseRule):
    """Moving the base point across one passage changes the degree by exactly one"""

    id = "WL-004"
    suite = "lemma43"
    description = "+1 across an Over passage, -1 across an Under passage"
    category = "WARPING"
    min_chords = 1

    def evaluate(self, code: GaussCode, context) -> Optional[Dict]:
        length = len(code)
        for b in range(length):
            after = (b + 1) % length
            delta = warping_degree_at(code, after) - warping_degree_at(code, b)
            expected = 1 if code[b].is_over else -1
            if delta != expected:
                return self._create_finding(
                    f"classes {b} -> {after} across {code[b]}: delta {delta}, expected {expected}",
                    details={"base": b, "delta": delta},
                )
        return None


class AlternatingMinimumRule(BaseRule):
    """In an alternating code every class just before an Over passage is minimal"""

    id = "WL-005"
    suite = "lemma44"
    description = "Alternating codes attain d(D) before every Over passage"
    category = "WARPING"
    min_chords = 1

    def evaluate(self, code: GaussCode, context) -> Optional[Dict]:
        if not is_alternating(code, context.alternation):
            return None
        profile = self._profile(code, context)
        best = min(profile)
        for b, passage in enumerate(code):
            if passage.is_over and profile[b] != best:
                return self._create_finding(
                    f"class {b} precedes {passage} but has degree {profile[b]} > {best}",
                    details={"base": b, "degree": profile[b], "minimum": best},
                )
        return None


class CrossingBoundRule(BaseRule):
    """d(D) + d(-D) + 1 <= cr(D), with equality exactly for alternating codes"""

    id = "WL-006"
    suite = "thm41"
    description = "Warping degrees of both orientations bound the crossing number"
    category = "WARPING"
    min_chords = 3

    def evaluate(self, code: GaussCode, context) -> Optional[Dict]:
        total = min(self._profile(code, context)) + min(self._reverse_profile(code, context)) + 1
        alternating = is_alternating(code, context.alternation)
        if total > code.n or (total == code.n) != alternating:
            return self._create_finding(
                f"d(D) + d(-D) + 1 = {total}, cr = {code.n}, alternating = {alternating}",
                details={"sum": total, "cr": code.n, "alternating": alternating,
                         "convention": context.alternation},
            )
        return None


class ProfileSpreadRule(BaseRule):
    """max - min of the degree profile is at least 1, exactly 1 iff alternating"""

    id = "WL-007"
    suite = "thm41"
    description = "Degree profile spread detects alternation"
    category = "WARPING"
    min_chords = 1

    def evaluate(self, code: GaussCode, context) -> Optional[Dict]:
        profile = self._profile(code, context)
        spread = max(profile) - min(profile)
        alternating = is_alternating(code, context.alternation)
        if spread < 1 or (spread == 1) != alternating:
            return self._create_finding(
                f"profile spread {spread} with alternating = {alternating}",
                details={"profile": list(profile)},
            )
        return None
