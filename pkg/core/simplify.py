"""
Simplification
Constructive trivialization of descending codes and a bounded,
canonicalized breadth-first search for everything else.
"""
import logging
from typing import Dict, Iterable, List, Optional, Tuple

from .certificate import Certificate, CertificateBuilder, reverse_certificate
from .context import SearchBudget
from .errors import NotDescending, PreconditionFailed
from .gauss_code import GaussCode, canonical_key, reverse
from .moves import (EQUIVALENCE_KINDS, Move, MoveKind, apply_move, chord_move,
                    legal_moves, swap_move)
from .result import SearchStats, TrivialityVerdict, VerdictStatus
from .warping import check_base, descending_classes, traversal, warping_degree_at

logger = logging.getLogger(__name__)

__all__ = [
    "SearchBudget",
    "induced_base",
    "lemma32_eliminate",
    "descending_certificate",
    "descending_witness",
    "bounded_trivialize",
]


def induced_base(b: int, deleted: Iterable[int], new_length: int) -> int:
    """Base class after deleting 0-based indices that never straddle gap b"""
    shifted = b - sum(1 for i in deleted if i < b)
    return shifted % new_length if new_length else 0


def _gap_inside(b: int, lo: int, hi: int) -> bool:
    """Whether base gap b lies on the path strictly between indices lo < hi"""
    return lo < b <= hi


def _contract(code: GaussCode, start: int, stop: int) -> List[Move]:
    """FOverSwaps carrying the passage at `start` to `stop` through Over passages"""
    moves = []
    step = 1 if stop > start else -1
    current = code
    for here in range(start, stop, step):
        move = swap_move(current, min(here, here + step))
        current = apply_move(current, move)
        moves.append(move)
    return moves


def lemma32_eliminate(code: GaussCode, x: int, b: int,
                      fplus_permissive: bool = False) -> Certificate:
    """
    Remove chord x when one of the two paths between its passages holds
    only Over passages.

    The closed path (between the passages) ends with an R1 removal after
    contracting O_x onto U_x; the open path (through the endpoints) ends with
    an FPlus removal after contracting O_x to the endpoint it meets. The path
    that avoids base gap b is tried first.

    Raises:
        PreconditionFailed: both paths carry an Under passage
    """
    check_base(code, b)
    over, under = code.over_index(x), code.under_index(x)
    lo, hi = min(over, under), max(over, under)
    length = len(code)

    closed_ok = all(code[i].is_over for i in range(lo + 1, hi))
    open_ok = all(code[i].is_over for i in list(range(0, lo)) + list(range(hi + 1, length)))
    order = ("open", "closed") if _gap_inside(b, lo, hi) else ("closed", "open")

    builder = CertificateBuilder(code, fplus_permissive)
    for path in order:
        if path == "closed" and closed_ok:
            target = under - 1 if over < under else under + 1
            builder.extend(_contract(code, over, target))
            builder.apply(chord_move(builder.current, MoveKind.R1_REMOVE, x))
            break
        if path == "open" and open_ok:
            target = 0 if over == lo else length - 1
            builder.extend(_contract(code, over, target))
            builder.apply(chord_move(builder.current, MoveKind.F_PLUS_REMOVE, x))
            break
    else:
        raise PreconditionFailed(
            f"chord {x} of {code}: both paths between its passages contain an Under passage",
            chord=x, base=b,
        )
    certificate = builder.build()
    logger.debug("eliminated chord %d of %s in %d step(s)", x, code, len(certificate))
    return certificate


def descending_certificate(code: GaussCode, b: int,
                           fplus_permissive: bool = False) -> Certificate:
    """
    Certificate from a code that is descending at class b to the empty code.

    The chord met first at an Under passage from the base point is removed
    until nothing is left; at most n(2n+1) steps.

    Raises:
        NotDescending: class b has a warping crossing
    """
    if warping_degree_at(code, b) != 0:
        raise NotDescending(f"{code} has warping crossings at class {b}", base=b)

    builder = CertificateBuilder(code, fplus_permissive)
    base = b
    while builder.current.passages:
        current = builder.current
        x = next(p.chord for p in traversal(current, base).order if not p.is_over)
        step = lemma32_eliminate(current, x, base, fplus_permissive)
        removal = step.steps[-1].move
        builder.splice(step)
        base = induced_base(base, (p - 1 for p in removal.positions), len(builder.current))
    return builder.build()


def descending_witness(code: GaussCode, fplus_permissive: bool = False) -> Optional[Certificate]:
    """
    Trivializing certificate when code or reverse(code) has a descending
    class (smallest class first, forward orientation first), else None.
    """
    classes = descending_classes(code)
    if classes:
        return descending_certificate(code, classes[0], fplus_permissive)
    flipped = reverse(code)
    classes = descending_classes(flipped)
    if classes:
        return reverse_certificate(descending_certificate(flipped, classes[0], fplus_permissive))
    return None


def _path_to(parents: Dict[str, Tuple[Optional[str], Optional[Move]]], key: str) -> List[Move]:
    moves: List[Move] = []
    while True:
        parent, move = parents[key]
        if parent is None:
            break
        moves.append(move)
        key = parent
    moves.reverse()
    return moves


def bounded_trivialize(code: GaussCode,
                       budget: Optional[SearchBudget] = None,
                       fplus_permissive: bool = False) -> TrivialityVerdict:
    """
    Layer-synchronous breadth-first search over the equivalence moves.

    Layers are expanded in canonical-key order and every reached code is
    memoized by its key. A reached code whose forward or reversed reading
    has a descending class ends the search. Unknown means the node or depth
    budget ran out; it asserts nothing about knottedness.
    """
    budget = budget or SearchBudget()
    cap = budget.chord_cap(code.n)

    witness = descending_witness(code, fplus_permissive)
    if witness is not None:
        return TrivialityVerdict(VerdictStatus.TRIVIAL, witness, SearchStats(discovered=1))

    root = canonical_key(code)
    parents: Dict[str, Tuple[Optional[str], Optional[Move]]] = {root: (None, None)}
    layer: List[Tuple[str, GaussCode]] = [(root, code)]
    expanded = 0
    depth = 0

    while layer and depth < budget.max_depth:
        next_layer: List[Tuple[str, GaussCode]] = []
        for key, node in layer:
            expanded += 1
            for move in legal_moves(node, EQUIVALENCE_KINDS, cap, fplus_permissive):
                child = apply_move(node, move, fplus_permissive)
                child_key = canonical_key(child)
                if child_key in parents:
                    continue
                parents[child_key] = (key, move)

                witness = descending_witness(child, fplus_permissive)
                if witness is not None:
                    builder = CertificateBuilder(code, fplus_permissive)
                    builder.extend(_path_to(parents, child_key))
                    builder.splice(witness)
                    stats = SearchStats(len(parents), expanded, depth + 1, False)
                    logger.debug("trivialized %s at depth %d (%d nodes)", code, depth + 1, len(parents))
                    return TrivialityVerdict(VerdictStatus.TRIVIAL, builder.build(), stats)

                if len(parents) >= budget.max_nodes:
                    logger.info("node budget %d exhausted on %s", budget.max_nodes, code)
                    return TrivialityVerdict(
                        VerdictStatus.UNKNOWN,
                        stats=SearchStats(len(parents), expanded, depth + 1, True),
                    )
                next_layer.append((child_key, child))
        next_layer.sort(key=lambda item: item[0])
        layer = next_layer
        depth += 1
        logger.debug("layer %d: %d new code(s)", depth, len(layer))

    exhausted = bool(layer)
    if exhausted:
        logger.info("depth budget %d exhausted on %s", budget.max_depth, code)
    return TrivialityVerdict(
        VerdictStatus.UNKNOWN,
        stats=SearchStats(len(parents), expanded, depth, exhausted),
    )
