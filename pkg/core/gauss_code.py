"""
Gauss Codes
Data model, validation, text/JSON forms and the global diagram symmetries.

A plus-welded knotoid diagram is determined by its Gauss code up to virtual
moves: welded crossings never appear here, only the 2n signed passages of
the classical crossings, read from tail to head.
"""
import re
from collections import Counter
from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Any, Dict, Iterator, List, Mapping, Optional, Tuple

from .errors import CodeError, CodeReason, UnknownChord


class Role(Enum):
    """Which strand of a crossing a passage lies on"""
    OVER = "O"
    UNDER = "U"

    @property
    def flipped(self) -> "Role":
        return Role.UNDER if self is Role.OVER else Role.OVER


@dataclass(frozen=True)
class Passage:
    """One of the 2n marked points on the Gauss diagram's arc"""
    chord: int
    role: Role
    sign: int

    @property
    def is_over(self) -> bool:
        return self.role is Role.OVER

    def flipped(self) -> "Passage":
        """Crossing change seen from one passage: swap role, negate sign"""
        return Passage(self.chord, self.role.flipped, -self.sign)

    def relabeled(self, chord: int) -> "Passage":
        return Passage(chord, self.role, self.sign)

    def token(self) -> str:
        return f"{self.role.value}{self.chord}{'+' if self.sign > 0 else '-'}"

    def to_dict(self) -> Dict[str, Any]:
        return {"chord": self.chord, "role": self.role.value, "sign": self.sign}

    def __str__(self) -> str:
        return self.token()


@dataclass(frozen=True)
class GaussCode:
    """
    Linear sequence of passages, index 0 next to the tail.
    Instances are not validated on construction; parse_code and
    code_from_json are the validating entry points.
    """
    passages: Tuple[Passage, ...] = ()

    def __len__(self) -> int:
        return len(self.passages)

    def __iter__(self) -> Iterator[Passage]:
        return iter(self.passages)

    def __getitem__(self, index: int) -> Passage:
        return self.passages[index]

    def __str__(self) -> str:
        return serialize_code(self)

    def __repr__(self) -> str:
        return f"GaussCode({serialize_code(self)!r})"

    @property
    def n(self) -> int:
        """Number of chords (classical crossings)"""
        return len(self.passages) // 2

    @cached_property
    def _index(self) -> Dict[int, Tuple[int, ...]]:
        where: Dict[int, List[int]] = {}
        for i, passage in enumerate(self.passages):
            where.setdefault(passage.chord, []).append(i)
        return {chord: tuple(indices) for chord, indices in where.items()}

    def chords(self) -> List[int]:
        return sorted(self._index)

    def has_chord(self, chord: int) -> bool:
        return chord in self._index

    def indices_of(self, chord: int) -> Tuple[int, ...]:
        """0-based indices of the chord's passages, ascending"""
        if chord not in self._index:
            raise UnknownChord(f"chord {chord} does not occur in {self}", chord=chord)
        return self._index[chord]

    def over_index(self, chord: int) -> int:
        return next(i for i in self.indices_of(chord) if self.passages[i].is_over)

    def under_index(self, chord: int) -> int:
        return next(i for i in self.indices_of(chord) if not self.passages[i].is_over)

    def sign_of(self, chord: int) -> int:
        return self.passages[self.indices_of(chord)[0]].sign

    def max_label(self) -> int:
        return max(self._index, default=0)


@dataclass(frozen=True)
class CyclicGaussCode:
    """The same passages read cyclically: the welded knot obtained by closure"""
    passages: Tuple[Passage, ...] = ()

    def __len__(self) -> int:
        return len(self.passages)

    def __iter__(self) -> Iterator[Passage]:
        return iter(self.passages)

    def __str__(self) -> str:
        return "(" + ",".join(p.token() for p in self.passages) + ")"

    @property
    def n(self) -> int:
        return len(self.passages) // 2

    def rotation(self, gap: int) -> Tuple[Passage, ...]:
        """Passages read starting right after cyclic gap `gap`"""
        return self.passages[gap:] + self.passages[:gap]

    def canonical_key(self) -> str:
        """First-appearance key minimized over all starting points"""
        if not self.passages:
            return ""
        return min(_first_appearance_key(self.rotation(g)) for g in range(len(self.passages)))


# ---------------------------------------------------------------------------
# Text and JSON forms
# ---------------------------------------------------------------------------

_TOKEN = re.compile(r"([OU])([0-9]+)([+-])")
_JSON_SIGNS = {1: 1, -1: -1, "+": 1, "-": -1}


def parse_code(text: str) -> GaussCode:
    """
    Parse concatenated or space-separated "(O|U)<id>(+|-)" tokens, tail first.

    Raises:
        CodeError: MalformedToken, ChordArity or SignMismatch
    """
    text = text.strip()
    passages = []
    pos = 0
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        match = _TOKEN.match(text, pos)
        if not match:
            raise CodeError(
                f"malformed token at offset {pos}: {text[pos:pos + 8]!r}",
                CodeReason.MALFORMED_TOKEN, offset=pos,
            )
        chord = int(match.group(2))
        if chord <= 0:
            raise CodeError(
                f"chord labels must be positive, got {chord} at offset {pos}",
                CodeReason.MALFORMED_TOKEN, offset=pos,
            )
        sign = 1 if match.group(3) == "+" else -1
        passages.append(Passage(chord, Role(match.group(1)), sign))
        pos = match.end()

    code = GaussCode(tuple(passages))
    validate(code)
    return code


def parse_passage(token: str) -> Passage:
    """Single "(O|U)<id>(+|-)" token"""
    match = _TOKEN.fullmatch(token.strip()) if isinstance(token, str) else None
    if not match or int(match.group(2)) <= 0:
        raise CodeError(f"malformed passage token {token!r}", CodeReason.MALFORMED_TOKEN)
    sign = 1 if match.group(3) == "+" else -1
    return Passage(int(match.group(2)), Role(match.group(1)), sign)


def serialize_code(code: GaussCode) -> str:
    """Inverse of parse_code; chord labels are emitted as given"""
    return "".join(p.token() for p in code.passages)


def code_from_json(obj: Any) -> GaussCode:
    """Accept a code string or {"passages": [{"chord", "role", "sign"}, ...]}"""
    if isinstance(obj, str):
        return parse_code(obj)
    if not isinstance(obj, Mapping) or not isinstance(obj.get("passages"), list):
        raise CodeError("expected a code string or an object with a 'passages' list",
                        CodeReason.MALFORMED_JSON)

    passages = []
    for i, item in enumerate(obj["passages"]):
        try:
            chord = item["chord"]
            role = Role(item["role"])
            raw_sign = item["sign"]
        except (KeyError, TypeError, ValueError) as exc:
            raise CodeError(f"malformed passage object at index {i}",
                            CodeReason.MALFORMED_JSON, index=i) from exc
        sign = _JSON_SIGNS.get(raw_sign) if type(raw_sign) in (int, str) else None
        if sign is None:
            raise CodeError(f"sign at index {i} must be 1, -1, '+' or '-', got {raw_sign!r}",
                            CodeReason.MALFORMED_JSON, index=i)
        if isinstance(chord, bool) or not isinstance(chord, int) or chord <= 0:
            raise CodeError(f"chord label at index {i} must be a positive integer",
                            CodeReason.MALFORMED_JSON, index=i)
        passages.append(Passage(chord, role, sign))

    code = GaussCode(tuple(passages))
    validate(code)
    return code


def code_to_json(code: GaussCode) -> Dict[str, Any]:
    return {"passages": [p.to_dict() for p in code.passages]}


# ---------------------------------------------------------------------------
# Validation
# ---------------------------------------------------------------------------

def find_violation(code: GaussCode) -> Optional[CodeError]:
    """Return the first structural violation of the code, or None"""
    counts = Counter(p.chord for p in code.passages)
    for chord in sorted(counts):
        if counts[chord] != 2:
            return CodeError(
                f"chord {chord} occurs {counts[chord]} time(s), expected 2",
                CodeReason.CHORD_ARITY, chord=chord,
            )

    for chord in sorted(counts):
        first, second = (code.passages[i] for i in code.indices_of(chord))
        if first.role is second.role:
            return CodeError(
                f"chord {chord} has two {first.role.name} passages",
                CodeReason.CHORD_ARITY, chord=chord,
            )
        if first.sign != second.sign:
            return CodeError(
                f"chord {chord} carries signs {first.sign:+d} and {second.sign:+d}",
                CodeReason.SIGN_MISMATCH, chord=chord,
            )
    return None


def validate(code: GaussCode) -> None:
    """Raise the first violation of the GaussCode invariants"""
    violation = find_violation(code)
    if violation is not None:
        raise violation


# ---------------------------------------------------------------------------
# Symmetries
# ---------------------------------------------------------------------------

def reverse(code: GaussCode) -> GaussCode:
    """-D: tail and head swap, roles and signs stay"""
    return GaussCode(tuple(reversed(code.passages)))


def mirror(code: GaussCode) -> GaussCode:
    """D*: every crossing changes, order stays"""
    return GaussCode(tuple(p.flipped() for p in code.passages))


def virtual_closure(code: GaussCode) -> CyclicGaussCode:
    # shortcut crossings are virtual, so the closure adds no chords
    return CyclicGaussCode(code.passages)


def cut_open(ccode: CyclicGaussCode, gap: int = 0) -> GaussCode:
    """Knotoid obtained by cutting the closure at a cyclic gap"""
    if ccode.passages and not 0 <= gap < len(ccode):
        raise ValueError(f"gap {gap} outside [0, {len(ccode) - 1}]")
    return GaussCode(ccode.rotation(gap) if ccode.passages else ())


# ---------------------------------------------------------------------------
# Labels
# ---------------------------------------------------------------------------

def _first_appearance_key(passages: Tuple[Passage, ...]) -> str:
    labels: Dict[int, int] = {}
    tokens = []
    for p in passages:
        label = labels.setdefault(p.chord, len(labels) + 1)
        tokens.append(f"{p.role.value}{label}{'+' if p.sign > 0 else '-'}")
    return "".join(tokens)


def canonical_key(code: GaussCode) -> str:
    """Serialization after relabeling chords by order of first appearance"""
    return _first_appearance_key(code.passages)


def relabel(code: GaussCode, mapping: Mapping[int, int]) -> GaussCode:
    """Apply a bijective chord relabeling"""
    return GaussCode(tuple(p.relabeled(mapping[p.chord]) for p in code.passages))


def normalize_labels(code: GaussCode) -> GaussCode:
    """Code whose labels are 1..n in first-appearance order"""
    labels: Dict[int, int] = {}
    for p in code.passages:
        labels.setdefault(p.chord, len(labels) + 1)
    return relabel(code, labels)
