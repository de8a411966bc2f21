"""
Warping Degree
Base-point traversals, warping crossings, cutting numbers and the
diagram-level unknotting bounds.

Base class b is the gap just before passage index b (0-based). The gap after
the last passage is the same class as b = 0: the traversal runs from the
base point to the head, jumps to the tail and returns, so both gaps see the
same order. A code with n chords therefore has 2n classes (one when n = 0).
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, FrozenSet, List, Optional, Tuple

from .errors import BaseOutOfRange
from .gauss_code import CyclicGaussCode, GaussCode, Passage, reverse
from .result import InvariantReport

logger = logging.getLogger(__name__)

CYCLIC = "cyclic"
LINEAR = "linear"
ALTERNATION_CONVENTIONS = (CYCLIC, LINEAR)


@dataclass(frozen=True)
class Traversal:
    """Passages in the order met from a base point"""
    base: int
    indices: Tuple[int, ...]
    order: Tuple[Passage, ...]
    break_at: int  # number of passages met before the head->tail jump

    def tokens(self) -> List[str]:
        return [p.token() for p in self.order]


@dataclass(frozen=True)
class ArcLabeling:
    """Arc number of every passage (1-based position); an Under passage
    carries the number of the arc it ends"""
    base: int
    labels: Dict[int, int]
    arc_count: int


def base_class_count(code: GaussCode) -> int:
    return len(code) or 1


def check_base(code: GaussCode, b: int) -> None:
    count = base_class_count(code)
    if not 0 <= b < count:
        raise BaseOutOfRange(f"base class {b} outside [0, {count - 1}]", base=b)


def traversal(code: GaussCode, b: int) -> Traversal:
    check_base(code, b)
    length = len(code)
    indices = tuple(range(b, length)) + tuple(range(0, b))
    return Traversal(
        base=b,
        indices=indices,
        order=tuple(code[i] for i in indices),
        break_at=length - b,
    )


def _first_under(passages) -> FrozenSet[int]:
    seen = set()
    warping = set()
    for p in passages:
        if p.chord in seen:
            continue
        seen.add(p.chord)
        if not p.is_over:
            warping.add(p.chord)
    return frozenset(warping)


def warping_crossings(code: GaussCode, b: int) -> FrozenSet[int]:
    """Chords first met at their Under passage from base class b"""
    return _first_under(traversal(code, b).order)


def warping_degree_at(code: GaussCode, b: int) -> int:
    return len(warping_crossings(code, b))


def degree_profile(code: GaussCode) -> Tuple[int, ...]:
    """
    d(D_b) for every class b.

    Only class 0 is scanned; the rest follow by base-point transport:
    crossing an Over passage adds a warping crossing, crossing an Under
    passage removes one.
    """
    if not code.passages:
        return (0,)
    current = warping_degree_at(code, 0)
    profile = [current]
    for p in code.passages[:-1]:
        current += 1 if p.is_over else -1
        profile.append(current)
    return tuple(profile)


def warping_degree(code: GaussCode) -> int:
    """d(D): minimum over all base classes"""
    return min(degree_profile(code))


def descending_classes(code: GaussCode) -> List[int]:
    return [b for b, degree in enumerate(degree_profile(code)) if degree == 0]


def reverse_class(code: GaussCode, b: int) -> int:
    """Class of -D sitting at the same physical gap as class b of D"""
    check_base(code, b)
    return (len(code) - b) % len(code) if code.passages else 0


def arc_labels(code: GaussCode, b: int) -> ArcLabeling:
    """Cut at the base point, at every Under passage and at the head->tail jump"""
    trav = traversal(code, b)
    label = 1
    labels: Dict[int, int] = {}
    for k, (index, passage) in enumerate(zip(trav.indices, trav.order)):
        if k == trav.break_at:
            label += 1
        labels[index + 1] = label
        if not passage.is_over:
            label += 1
    if trav.break_at == len(code):
        label += 1
    return ArcLabeling(base=b, labels=labels, arc_count=label)


def cutting_number(code: GaussCode, b: int, chord: int) -> int:
    """2*alpha - beta - gamma; positive exactly for warping crossings"""
    over, under = code.over_index(chord), code.under_index(chord)
    labels = arc_labels(code, b).labels
    alpha = labels[over + 1]
    beta = labels[under + 1]
    gamma = beta + 1
    return 2 * alpha - beta - gamma


def is_alternating(code: GaussCode, convention: str = CYCLIC) -> bool:
    if convention not in ALTERNATION_CONVENTIONS:
        raise ValueError(f"unknown alternation convention {convention!r}")
    roles = [p.role for p in code.passages]
    if not roles:
        return True
    pairs = list(zip(roles, roles[1:]))
    if convention == CYCLIC:
        pairs.append((roles[-1], roles[0]))
    return all(left is not right for left, right in pairs)


def is_descending(code: GaussCode) -> bool:
    """Monotone: some base class has no warping crossing"""
    return warping_degree(code) == 0


def oriented_degree(code: GaussCode) -> int:
    """min(d(D), d(-D)), the diagram-level stand-in for d(K)"""
    return min(warping_degree(code), warping_degree(reverse(code)))


def unknotting_upper_bounds(code: GaussCode) -> Tuple[int, Optional[Fraction]]:
    """Bounds for both u and u_v: the warping bound and (cr - 1)/2 (None when cr = 0)"""
    half = Fraction(code.n - 1, 2) if code.n >= 1 else None
    return oriented_degree(code), half


def report(code: GaussCode, convention: str = CYCLIC) -> InvariantReport:
    profile = degree_profile(code)
    d_reverse = warping_degree(reverse(code))
    warping_bound, half = unknotting_upper_bounds(code)
    result = InvariantReport(
        cr=code.n,
        d_at=profile,
        d_D=min(profile),
        d_reverse=d_reverse,
        alternating=is_alternating(code, convention),
        descending=min(profile) == 0,
        warping_bound=warping_bound,
        half_crossing_bound=half,
    )
    logger.debug("report %s: %s", code, result)
    return result


def cyclic_warping_degree(ccode: CyclicGaussCode) -> int:
    """Minimum over the 2n cyclic gaps; there is no head->tail break"""
    if not ccode.passages:
        return 0
    return min(len(_first_under(ccode.rotation(g))) for g in range(len(ccode)))
