"""
Unknotting
Certified upper bounds for the unknotting number u(D) (crossing changes)
and the virtualization unknotting number u_v(D) (crossing virtualizations).

Only an upper bound of 0 is exact; every other value is witnessed by a
certificate but never claimed minimal.
"""
import logging
from itertools import combinations
from typing import Optional, Sequence, Tuple

from .certificate import CertificateBuilder, reverse_certificate
from .context import SearchBudget
from .gauss_code import GaussCode, reverse, virtual_closure
from .moves import MoveKind, chord_move
from .result import OpKind, UnknotResult
from .simplify import bounded_trivialize, descending_certificate, induced_base
from .warping import cyclic_warping_degree, degree_profile, warping_crossings

logger = logging.getLogger(__name__)

EXACT = "exact"
SEARCH = "search"
WARPING = "warping"

_MOVE_OF = {
    OpKind.CHANGE: MoveKind.CROSSING_CHANGE,
    OpKind.VIRTUALIZE: MoveKind.VIRTUALIZE,
}


def _modify(builder: CertificateBuilder, op_kind: OpKind, chords: Sequence[int],
            base: Optional[int] = None) -> Optional[int]:
    """Apply op_kind to each chord in turn, tracking base class through deletions"""
    kind = _MOVE_OF[op_kind]
    for chord in chords:
        move = chord_move(builder.current, kind, chord)
        builder.apply(move)
        if base is not None and kind is MoveKind.VIRTUALIZE:
            base = induced_base(base, (p - 1 for p in move.positions), len(builder.current))
    return base


def warping_unknot_certificate(code: GaussCode, op_kind: OpKind,
                               fplus_permissive: bool = False) -> UnknotResult:
    """
    Modify exactly the warping crossings at a best base class, then
    trivialize the now descending code.

    The orientation with the smaller warping degree wins (forward on ties),
    then the smallest class attaining it. A reverse witness is built on
    reverse(code) and transported back.
    """
    forward, backward = degree_profile(code), degree_profile(reverse(code))
    use_reverse = min(backward) < min(forward)
    work, profile = (reverse(code), backward) if use_reverse else (code, forward)
    base = profile.index(min(profile))
    chords = tuple(sorted(warping_crossings(work, base)))

    builder = CertificateBuilder(work, fplus_permissive)
    base = _modify(builder, op_kind, chords, base)
    builder.splice(descending_certificate(builder.current, base, fplus_permissive))
    certificate = builder.build()
    if use_reverse:
        certificate = reverse_certificate(certificate)

    logger.debug("%s witness for %s: chords %s", op_kind.value, code, chords)
    return UnknotResult(
        op_kind=op_kind,
        upper_bound=len(chords),
        chords=chords,
        certificate=certificate,
        exhaustive_below=0,
        budget_used=None,
        status=EXACT if not chords else WARPING,
        orientation="reverse" if use_reverse else "forward",
    )


def unknot_search(code: GaussCode, op_kind: OpKind, max_k: int = 2,
                  budget: Optional[SearchBudget] = None,
                  fplus_permissive: bool = False) -> UnknotResult:
    """
    Try every k-subset of chords (k ascending, subsets lexicographic) below
    the warping bound, modify it up front and run bounded_trivialize.
    The first success wins; otherwise the warping witness is returned.
    """
    budget = budget or SearchBudget()
    seed = warping_unknot_certificate(code, op_kind, fplus_permissive)
    limit = min(max_k, seed.upper_bound - 1)

    for k in range(0, limit + 1):
        for subset in combinations(code.chords(), k):
            builder = CertificateBuilder(code, fplus_permissive)
            _modify(builder, op_kind, subset)
            verdict = bounded_trivialize(builder.current, budget, fplus_permissive)
            if not verdict.is_trivial:
                continue
            builder.splice(verdict.certificate)
            logger.info("%s: %s bound %d via chords %s", code, op_kind.value, k, subset)
            return UnknotResult(
                op_kind=op_kind,
                upper_bound=k,
                chords=tuple(subset),
                certificate=builder.build(),
                exhaustive_below=k,
                budget_used=budget,
                status=EXACT if k == 0 else SEARCH,
            )
        logger.debug("%s: no %d-subset trivializes within budget", code, k)

    return UnknotResult(
        op_kind=op_kind,
        upper_bound=seed.upper_bound,
        chords=seed.chords,
        certificate=seed.certificate,
        exhaustive_below=max(0, limit + 1),
        budget_used=budget,
        status=seed.status,
        orientation=seed.orientation,
    )


def closure_unknot_data(code: GaussCode) -> Tuple[int, bool]:
    """
    Warping degree of the virtual closure and whether it is monotone.
    A monotone closure is a diagram of the trivial welded knot, so both the
    unknotting number and the welded unknotting number of the closure are 0.
    """
    cyclic_d = cyclic_warping_degree(virtual_closure(code))
    return cyclic_d, cyclic_d == 0
