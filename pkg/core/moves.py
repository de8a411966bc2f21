"""
Moves
Gauss-code rewrites for the moves of plus-welded equivalence, plus crossing
change and crossing virtualization.

Every move is stored as (kind, positions, passages): 1-based ascending
positions and the passages found at them. Removals, swaps, R3, changes and
virtualizations index the source code; additions index the result code.
An addition is legal exactly when its labels are fresh and the matching
removal is legal on the result, so inverting a removal/addition only flips
the kind. Adjacency never wraps across the head->tail break.
"""
import logging
from dataclasses import dataclass
from enum import Enum
from typing import Any, Dict, Iterable, Iterator, List, Optional, Sequence, Set, Tuple

from .errors import IllegalMove, MoveReason, NotInvertible
from .gauss_code import GaussCode, Passage, Role, parse_passage

logger = logging.getLogger(__name__)


class MoveKind(Enum):
    R1_ADD = "R1Add"
    R1_REMOVE = "R1Remove"
    R2_ADD = "R2Add"
    R2_REMOVE = "R2Remove"
    R3 = "R3"
    F_OVER_SWAP = "FOverSwap"
    F_PLUS_ADD = "FPlusAdd"
    F_PLUS_REMOVE = "FPlusRemove"
    CROSSING_CHANGE = "CrossingChange"
    VIRTUALIZE = "Virtualize"

    @property
    def is_equivalence(self) -> bool:
        return self not in (MoveKind.CROSSING_CHANGE, MoveKind.VIRTUALIZE)

    @property
    def is_addition(self) -> bool:
        return self in _ADDITION_OF.values()

    @property
    def arity(self) -> int:
        return _ARITY[self]


_ADDITION_OF = {
    MoveKind.R1_REMOVE: MoveKind.R1_ADD,
    MoveKind.R2_REMOVE: MoveKind.R2_ADD,
    MoveKind.F_PLUS_REMOVE: MoveKind.F_PLUS_ADD,
}
_REMOVAL_OF = {add: remove for remove, add in _ADDITION_OF.items()}

_ARITY = {
    MoveKind.R1_ADD: 2, MoveKind.R1_REMOVE: 2,
    MoveKind.R2_ADD: 4, MoveKind.R2_REMOVE: 4,
    MoveKind.R3: 6, MoveKind.F_OVER_SWAP: 2,
    MoveKind.F_PLUS_ADD: 2, MoveKind.F_PLUS_REMOVE: 2,
    MoveKind.CROSSING_CHANGE: 2, MoveKind.VIRTUALIZE: 2,
}

EQUIVALENCE_KINDS = frozenset(k for k in MoveKind if k.is_equivalence)


@dataclass(frozen=True)
class Move:
    kind: MoveKind
    positions: Tuple[int, ...]
    passages: Tuple[Passage, ...]

    def chords(self) -> Tuple[int, ...]:
        return tuple(sorted({p.chord for p in self.passages}))

    def describe(self) -> str:
        where = ",".join(str(p) for p in self.positions)
        what = ",".join(p.token() for p in self.passages)
        return f"{self.kind.value}@({where})[{what}]"

    def to_dict(self) -> Dict[str, Any]:
        return {
            "kind": self.kind.value,
            "positions": list(self.positions),
            "passages": [p.token() for p in self.passages],
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "Move":
        """Raises ValueError, KeyError or CodeError on malformed input"""
        kind = MoveKind(data["kind"])
        positions = tuple(data["positions"])
        if not all(isinstance(p, int) and not isinstance(p, bool) for p in positions):
            raise ValueError("move positions must be integers")
        passages = tuple(parse_passage(token) for token in data["passages"])
        return cls(kind, positions, passages)

    def __str__(self) -> str:
        return self.describe()


def _illegal(move: Move, reason: MoveReason, message: str) -> IllegalMove:
    return IllegalMove(f"{move.describe()}: {message}", reason, move=move.describe())


# ---------------------------------------------------------------------------
# Pattern checks
# ---------------------------------------------------------------------------

def _check_shape(move: Move) -> None:
    if not isinstance(move.kind, MoveKind):
        raise IllegalMove(f"unknown move kind {move.kind!r}", MoveReason.UNKNOWN_KIND)
    arity = move.kind.arity
    if len(move.positions) != arity or len(move.passages) != arity:
        raise _illegal(move, MoveReason.ARITY, f"expected {arity} positions and passages")
    if any(b <= a for a, b in zip(move.positions, move.positions[1:])):
        raise _illegal(move, MoveReason.ARITY, "positions must be strictly ascending")


def _check_placement(code: GaussCode, move: Move) -> None:
    for position, passage in zip(move.positions, move.passages):
        if not 1 <= position <= len(code):
            raise _illegal(move, MoveReason.POSITION_OUT_OF_RANGE,
                           f"position {position} outside [1, {len(code)}]")
        if code[position - 1] != passage:
            raise _illegal(move, MoveReason.PASSAGE_MISMATCH,
                           f"position {position} holds {code[position - 1]}, not {passage}")


def _check_one_chord(move: Move, passages: Sequence[Passage]) -> None:
    first, second = passages
    if first.chord != second.chord:
        raise _illegal(move, MoveReason.NOT_ONE_CHORD, "passages belong to different chords")
    if first.role is second.role:
        raise _illegal(move, MoveReason.ROLE_PATTERN, "a chord needs one Over and one Under passage")
    if first.sign != second.sign:
        raise _illegal(move, MoveReason.SIGN_PATTERN, "passages of one chord carry different signs")


def _check_adjacent(move: Move, left: int, right: int) -> None:
    if right != left + 1:
        raise _illegal(move, MoveReason.NOT_ADJACENT, f"positions {left} and {right} are not adjacent")


def _at_endpoint(code: GaussCode, over_position: int, permissive: bool) -> bool:
    if over_position in (1, len(code)):
        return True
    if not permissive:
        return False
    before = code.passages[:over_position - 1]
    after = code.passages[over_position:]
    return all(not p.is_over for p in before) or all(not p.is_over for p in after)


def _check_r1(code: GaussCode, move: Move, permissive: bool) -> None:
    _check_one_chord(move, move.passages)
    _check_adjacent(move, *move.positions)


def _check_fplus(code: GaussCode, move: Move, permissive: bool) -> None:
    _check_one_chord(move, move.passages)
    over_position = next(pos for pos, p in zip(move.positions, move.passages) if p.is_over)
    if not _at_endpoint(code, over_position, permissive):
        raise _illegal(move, MoveReason.NOT_AT_ENDPOINT,
                       f"Over passage at {over_position} is not next to an endpoint")


def _check_r2(code: GaussCode, move: Move, permissive: bool) -> None:
    by_chord: Dict[int, List[Passage]] = {}
    for p in move.passages:
        by_chord.setdefault(p.chord, []).append(p)
    if len(by_chord) != 2 or any(len(ps) != 2 for ps in by_chord.values()):
        raise _illegal(move, MoveReason.NOT_ONE_CHORD, "an R2 site pair needs two complete chords")
    for ps in by_chord.values():
        _check_one_chord(move, ps)
    c, d = (ps[0].sign for ps in by_chord.values())
    if c != -d:
        raise _illegal(move, MoveReason.SIGN_PATTERN, "R2 chords must carry opposite signs")
    overs = [pos for pos, p in zip(move.positions, move.passages) if p.is_over]
    unders = [pos for pos, p in zip(move.positions, move.passages) if not p.is_over]
    _check_adjacent(move, *overs)
    _check_adjacent(move, *unders)


def _tile_sites(move: Move) -> List[Tuple[Passage, Passage]]:
    pos, ps = move.positions, move.passages
    for k in (0, 2, 4):
        _check_adjacent(move, pos[k], pos[k + 1])
    return [(ps[0], ps[1]), (ps[2], ps[3]), (ps[4], ps[5])]


def _check_r3(code: GaussCode, move: Move, permissive: bool) -> None:
    """
    Sites T = {O_a, O_b}, M = {U_a, O_c}, B = {U_b, U_c}; x_* = +1 when the
    site lists a before b, a before c, b before c. Legal iff
    s_a = e * x_T * x_M and s_b = e * x_T * x_B with e = s_a * s_b * s_c.
    """
    sites = _tile_sites(move)
    by_overs = {}
    for site in sites:
        if site[0].chord == site[1].chord:
            raise _illegal(move, MoveReason.TILE_MISMATCH, "an R3 site holds one chord twice")
        by_overs.setdefault(sum(p.is_over for p in site), []).append(site)
    if sorted(by_overs) != [0, 1, 2] or any(len(v) != 1 for v in by_overs.values()):
        raise _illegal(move, MoveReason.ROLE_PATTERN, "R3 needs an over-over, a mixed and an under-under site")
    top, middle, bottom = by_overs[2][0], by_overs[1][0], by_overs[0][0]

    a = next(p.chord for p in middle if not p.is_over)
    c = next(p.chord for p in middle if p.is_over)
    top_chords = {p.chord for p in top}
    if a not in top_chords:
        raise _illegal(move, MoveReason.TILE_MISMATCH, "middle strand's under chord is not on the top strand")
    b = next(iter(top_chords - {a}))
    if {p.chord for p in bottom} != {b, c}:
        raise _illegal(move, MoveReason.TILE_MISMATCH, "bottom strand does not cross the other two")

    signs: Dict[int, int] = {}
    for p in move.passages:
        if signs.setdefault(p.chord, p.sign) != p.sign:
            raise _illegal(move, MoveReason.SIGN_PATTERN, f"chord {p.chord} carries two signs")
    x_top = 1 if top[0].chord == a else -1
    x_middle = 1 if middle[0].chord == a else -1
    x_bottom = 1 if bottom[0].chord == b else -1
    e = signs[a] * signs[b] * signs[c]
    if signs[a] != e * x_top * x_middle or signs[b] != e * x_top * x_bottom:
        raise _illegal(move, MoveReason.SIGN_PATTERN, "signs do not match an oriented R3 tile")


def _check_swap(code: GaussCode, move: Move, permissive: bool) -> None:
    _check_adjacent(move, *move.positions)
    if not all(p.is_over for p in move.passages):
        raise _illegal(move, MoveReason.ROLE_PATTERN, "only adjacent Over passages may swap")


def _check_whole_chord(code: GaussCode, move: Move, permissive: bool) -> None:
    _check_one_chord(move, move.passages)


_REMOVAL_CHECKS = {
    MoveKind.R1_REMOVE: _check_r1,
    MoveKind.R2_REMOVE: _check_r2,
    MoveKind.F_PLUS_REMOVE: _check_fplus,
}

_IN_PLACE_CHECKS = {
    MoveKind.R3: _check_r3,
    MoveKind.F_OVER_SWAP: _check_swap,
    MoveKind.CROSSING_CHANGE: _check_whole_chord,
    MoveKind.VIRTUALIZE: _check_whole_chord,
}


# ---------------------------------------------------------------------------
# Application
# ---------------------------------------------------------------------------

def _delete(code: GaussCode, positions: Iterable[int]) -> GaussCode:
    drop = set(positions)
    return GaussCode(tuple(p for i, p in enumerate(code.passages, 1) if i not in drop))


def _insert(code: GaussCode, move: Move) -> GaussCode:
    length = len(code) + len(move.positions)
    placed = dict(zip(move.positions, move.passages))
    if any(not 1 <= pos <= length for pos in placed):
        raise _illegal(move, MoveReason.POSITION_OUT_OF_RANGE,
                       f"insert positions must lie in [1, {length}]")
    rest = iter(code.passages)
    return GaussCode(tuple(placed[i] if i in placed else next(rest) for i in range(1, length + 1)))


def _replace(code: GaussCode, updates: Dict[int, Passage]) -> GaussCode:
    return GaussCode(tuple(updates.get(i, p) for i, p in enumerate(code.passages, 1)))


def _swapped_sites(move: Move) -> Tuple[Passage, ...]:
    ps = move.passages
    out: List[Passage] = []
    for k in range(0, len(ps), 2):
        out.extend((ps[k + 1], ps[k]))
    return tuple(out)


def apply_move(code: GaussCode, move: Move, fplus_permissive: bool = False) -> GaussCode:
    """
    Apply one move with full legality checking.

    Raises:
        IllegalMove: with a MoveReason naming the violated condition
    """
    _check_shape(move)
    kind = move.kind

    if kind.is_addition:
        fresh = {p.chord for p in move.passages}
        taken = sorted(ch for ch in fresh if code.has_chord(ch))
        if taken:
            raise _illegal(move, MoveReason.LABEL_NOT_FRESH, f"labels {taken} already in use")
        result = _insert(code, move)
        _REMOVAL_CHECKS[_REMOVAL_OF[kind]](result, move, fplus_permissive)
        return result

    _check_placement(code, move)
    if kind in _REMOVAL_CHECKS:
        _REMOVAL_CHECKS[kind](code, move, fplus_permissive)
        return _delete(code, move.positions)

    _IN_PLACE_CHECKS[kind](code, move, fplus_permissive)
    if kind is MoveKind.VIRTUALIZE:
        # the welded crossing left behind has no trace in the code
        return _delete(code, move.positions)
    if kind is MoveKind.CROSSING_CHANGE:
        return _replace(code, {pos: p.flipped() for pos, p in zip(move.positions, move.passages)})
    return _replace(code, dict(zip(move.positions, _swapped_sites(move))))


def is_legal(code: GaussCode, move: Move, fplus_permissive: bool = False) -> bool:
    try:
        apply_move(code, move, fplus_permissive)
    except IllegalMove:
        return False
    return True


# ---------------------------------------------------------------------------
# Constructors used by pipelines
# ---------------------------------------------------------------------------

def _at(code: GaussCode, kind: MoveKind, indices: Iterable[int]) -> Move:
    ordered = sorted(indices)
    return Move(kind, tuple(i + 1 for i in ordered), tuple(code[i] for i in ordered))


def chord_move(code: GaussCode, kind: MoveKind, chord: int) -> Move:
    """Move acting on both passages of one chord (removals, change, virtualize)"""
    return _at(code, kind, code.indices_of(chord))


def swap_move(code: GaussCode, index: int) -> Move:
    """FOverSwap of 0-based indices (index, index + 1)"""
    return _at(code, MoveKind.F_OVER_SWAP, (index, index + 1))


# ---------------------------------------------------------------------------
# Generation
# ---------------------------------------------------------------------------

def _gen_r1_remove(code: GaussCode, permissive: bool) -> Iterator[Move]:
    for i in range(len(code) - 1):
        if code[i].chord == code[i + 1].chord:
            yield _at(code, MoveKind.R1_REMOVE, (i, i + 1))


def _gen_swap(code: GaussCode, permissive: bool) -> Iterator[Move]:
    for i in range(len(code) - 1):
        if code[i].is_over and code[i + 1].is_over:
            yield swap_move(code, i)


def _gen_fplus_remove(code: GaussCode, permissive: bool) -> Iterator[Move]:
    if not code.passages:
        return
    overs = [i for i, p in enumerate(code.passages) if p.is_over]
    if permissive:
        candidates = [overs[0], overs[-1]]
    else:
        candidates = [i for i in (0, len(code) - 1) if code[i].is_over]
    seen: Set[int] = set()
    for i in candidates:
        chord = code[i].chord
        if chord not in seen:
            seen.add(chord)
            yield chord_move(code, MoveKind.F_PLUS_REMOVE, chord)


def _gen_r2_remove(code: GaussCode, permissive: bool) -> Iterator[Move]:
    for i in range(len(code) - 1):
        first, second = code[i], code[i + 1]
        if not (first.is_over and second.is_over) or first.sign != -second.sign:
            continue
        u1, u2 = code.under_index(first.chord), code.under_index(second.chord)
        if abs(u1 - u2) == 1:
            yield _at(code, MoveKind.R2_REMOVE, (i, i + 1, u1, u2))


def _gen_r3(code: GaussCode, permissive: bool) -> Iterator[Move]:
    seen: Set[Tuple[int, ...]] = set()
    length = len(code)
    for i in range(length - 1):
        if not (code[i].is_over and code[i + 1].is_over):
            continue
        for a, b in ((code[i].chord, code[i + 1].chord), (code[i + 1].chord, code[i].chord)):
            ua = code.under_index(a)
            for m in (ua - 1, ua + 1):
                if not 0 <= m < length or not code[m].is_over or code[m].chord in (a, b):
                    continue
                c = code[m].chord
                ub, uc = code.under_index(b), code.under_index(c)
                if abs(ub - uc) != 1:
                    continue
                move = _at(code, MoveKind.R3, (i, i + 1, ua, m, ub, uc))
                if move.positions in seen:
                    continue
                try:
                    _tile_sites(move)
                    _check_r3(code, move, permissive)
                except IllegalMove:
                    continue
                seen.add(move.positions)
                yield move


def _gen_whole_chord(kind: MoveKind):
    def generate(code: GaussCode, permissive: bool) -> Iterator[Move]:
        for chord in code.chords():
            yield chord_move(code, kind, chord)
    return generate


def _gen_r1_add(code: GaussCode, label: int) -> Iterator[Move]:
    for i in range(1, len(code) + 2):
        for roles in ((Role.OVER, Role.UNDER), (Role.UNDER, Role.OVER)):
            for sign in (1, -1):
                yield Move(MoveKind.R1_ADD, (i, i + 1),
                           (Passage(label, roles[0], sign), Passage(label, roles[1], sign)))


def _gen_fplus_add(code: GaussCode, label: int) -> Iterator[Move]:
    length = len(code) + 2
    for over_pos in (1, length):
        for under_pos in range(1, length + 1):
            if under_pos == over_pos:
                continue
            for sign in (1, -1):
                placed = {over_pos: Passage(label, Role.OVER, sign),
                          under_pos: Passage(label, Role.UNDER, sign)}
                order = sorted(placed)
                yield Move(MoveKind.F_PLUS_ADD, tuple(order), tuple(placed[k] for k in order))


def _gen_r2_add(code: GaussCode, label: int) -> Iterator[Move]:
    length = len(code) + 4
    c, d = label, label + 1
    for i in range(1, length):
        for j in range(1, length):
            if abs(i - j) < 2:
                continue
            for parallel in (True, False):
                for sign in (1, -1):
                    placed = {
                        i: Passage(c, Role.OVER, sign),
                        i + 1: Passage(d, Role.OVER, -sign),
                        j: Passage(c if parallel else d, Role.UNDER, sign if parallel else -sign),
                        j + 1: Passage(d if parallel else c, Role.UNDER, -sign if parallel else sign),
                    }
                    order = sorted(placed)
                    yield Move(MoveKind.R2_ADD, tuple(order), tuple(placed[k] for k in order))


_GENERATORS = {
    MoveKind.R1_REMOVE: _gen_r1_remove,
    MoveKind.R2_REMOVE: _gen_r2_remove,
    MoveKind.R3: _gen_r3,
    MoveKind.F_OVER_SWAP: _gen_swap,
    MoveKind.F_PLUS_REMOVE: _gen_fplus_remove,
    MoveKind.CROSSING_CHANGE: _gen_whole_chord(MoveKind.CROSSING_CHANGE),
    MoveKind.VIRTUALIZE: _gen_whole_chord(MoveKind.VIRTUALIZE),
}

_ADD_GENERATORS = {
    MoveKind.R1_ADD: (1, _gen_r1_add),
    MoveKind.F_PLUS_ADD: (1, _gen_fplus_add),
    MoveKind.R2_ADD: (2, _gen_r2_add),
}


def legal_moves(code: GaussCode,
                kinds: Iterable[MoveKind],
                max_chords: Optional[int] = None,
                fplus_permissive: bool = False) -> List[Move]:
    """
    Every legal instance of the requested kinds, in MoveKind order and then
    position order. Additions are generated only while the result stays
    within max_chords, with fresh labels max label + 1 (and + 2).
    """
    wanted = set(kinds)
    moves: List[Move] = []
    for kind in MoveKind:
        if kind not in wanted:
            continue
        if kind in _ADD_GENERATORS:
            added, generate = _ADD_GENERATORS[kind]
            if max_chords is None or code.n + added > max_chords:
                continue
            moves.extend(generate(code, code.max_label() + 1))
        else:
            moves.extend(_GENERATORS[kind](code, fplus_permissive))
    return moves


# ---------------------------------------------------------------------------
# Inverses and reversal
# ---------------------------------------------------------------------------

def invert_move(move: Move) -> Move:
    """
    Raises:
        NotInvertible: for crossing virtualization
    """
    kind = move.kind
    if kind is MoveKind.VIRTUALIZE:
        raise NotInvertible(f"{move.describe()}: a virtualized crossing cannot be restored")
    if kind in _ADDITION_OF:
        return Move(_ADDITION_OF[kind], move.positions, move.passages)
    if kind in _REMOVAL_OF:
        return Move(_REMOVAL_OF[kind], move.positions, move.passages)
    if kind is MoveKind.CROSSING_CHANGE:
        return Move(kind, move.positions, tuple(p.flipped() for p in move.passages))
    return Move(kind, move.positions, _swapped_sites(move))


def indexed_length(move: Move, source_length: int) -> int:
    """Length of the code that the move's positions refer to"""
    return source_length + len(move.positions) if move.kind.is_addition else source_length


def reverse_move(move: Move, source_length: int) -> Move:
    """The same move seen on the reversed code (position p becomes L + 1 - p)"""
    length = indexed_length(move, source_length)
    return Move(
        move.kind,
        tuple(length + 1 - p for p in reversed(move.positions)),
        tuple(reversed(move.passages)),
    )
