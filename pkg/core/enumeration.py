"""
Enumeration
Exhaustive and seeded random Gauss codes for the property corpus.

Exhaustive order: chord pairings of the 2n slots (the first empty slot is
paired with each later empty slot in turn), then role orders, then signs,
each chord varying slowest-first. Random codes shuffle the slot list with
random.Random(seed).shuffle (Fisher-Yates), pair consecutive slots, then
draw one role bit and one sign bit per chord.
"""
import logging
import random
from dataclasses import dataclass
from itertools import product
from typing import Iterator, List, Optional, Tuple

from .errors import CeilingExceeded
from .gauss_code import GaussCode, Passage, Role, canonical_key, normalize_labels

logger = logging.getLogger(__name__)

DEFAULT_CEILING = 3
EXHAUSTIVE = "exhaustive"
RANDOM = "random"


@dataclass(frozen=True)
class CorpusSpec:
    """
    Exhaustive(n) covers exactly the codes with n chords; min_chords widens
    it to every count in [min_chords, n]. Random draws a chord count
    uniformly from the same range for every code.
    """
    mode: str
    n: int
    count: int = 0
    seed: int = 0
    dedupe: bool = False
    min_chords: Optional[int] = None
    ceiling: int = DEFAULT_CEILING

    @classmethod
    def exhaustive(cls, n: int, dedupe: bool = False, min_chords: Optional[int] = None,
                   ceiling: int = DEFAULT_CEILING) -> "CorpusSpec":
        return cls(EXHAUSTIVE, n, dedupe=dedupe, min_chords=min_chords, ceiling=ceiling)

    @classmethod
    def random(cls, n: int, count: int, seed: int, dedupe: bool = False,
               min_chords: Optional[int] = None) -> "CorpusSpec":
        return cls(RANDOM, n, count=count, seed=seed, dedupe=dedupe, min_chords=min_chords)

    @property
    def chord_range(self) -> range:
        low = self.n if self.min_chords is None else self.min_chords
        return range(low, self.n + 1)


def double_factorial(k: int) -> int:
    result = 1
    while k > 1:
        result *= k
        k -= 2
    return result


def exhaustive_count(n: int) -> int:
    """(2n-1)!! pairings times 2^n role orders times 2^n signs"""
    return double_factorial(2 * n - 1) * 4 ** n


def _pairings(slots: List[int]) -> Iterator[List[Tuple[int, int]]]:
    if not slots:
        yield []
        return
    first, rest = slots[0], slots[1:]
    for k, partner in enumerate(rest):
        for tail in _pairings(rest[:k] + rest[k + 1:]):
            yield [(first, partner)] + tail


def _build(length: int, pairs, over_first, signs) -> GaussCode:
    passages: List[Optional[Passage]] = [None] * length
    for label, ((a, b), first_over, sign) in enumerate(zip(pairs, over_first, signs), 1):
        over, under = (a, b) if first_over else (b, a)
        passages[over] = Passage(label, Role.OVER, sign)
        passages[under] = Passage(label, Role.UNDER, sign)
    return GaussCode(tuple(passages))


def all_codes(n: int, ceiling: int = DEFAULT_CEILING) -> Iterator[GaussCode]:
    """
    Every valid code with chords 1..n in first-appearance order, once each.

    Raises:
        CeilingExceeded: n above the configured ceiling
    """
    if n < 0:
        raise ValueError(f"chord count must be non-negative, got {n}")
    if n > ceiling:
        raise CeilingExceeded(f"exhaustive enumeration of {n} chords exceeds ceiling {ceiling}",
                              n=n, ceiling=ceiling)
    for pairs in _pairings(list(range(2 * n))):
        for over_first in product((True, False), repeat=n):
            for signs in product((1, -1), repeat=n):
                yield _build(2 * n, pairs, over_first, signs)


def random_code(n: int, seed: int) -> GaussCode:
    """Uniform over pairings, role orders and signs; labels in first-appearance order"""
    if n < 0:
        raise ValueError(f"chord count must be non-negative, got {n}")
    rng = random.Random(seed)
    slots = list(range(2 * n))
    rng.shuffle(slots)
    pairs = [(slots[2 * k], slots[2 * k + 1]) for k in range(n)]
    over_first = [bool(rng.getrandbits(1)) for _ in range(n)]
    signs = [1 if rng.getrandbits(1) else -1 for _ in range(n)]
    return normalize_labels(_build(2 * n, pairs, over_first, signs))


def corpus(spec: CorpusSpec) -> Iterator[GaussCode]:
    seen = set()

    def fresh(code: GaussCode) -> bool:
        if not spec.dedupe:
            return True
        key = canonical_key(code)
        if key in seen:
            return False
        seen.add(key)
        return True

    if spec.mode == EXHAUSTIVE:
        for m in spec.chord_range:
            logger.debug("enumerating %d code(s) with %d chord(s)", exhaustive_count(m), m)
            yield from (code for code in all_codes(m, spec.ceiling) if fresh(code))
    elif spec.mode == RANDOM:
        rng = random.Random(spec.seed)
        for _ in range(spec.count):
            m = rng.choice(spec.chord_range)
            code = random_code(m, rng.getrandbits(32))
            if fresh(code):
                yield code
    else:
        raise ValueError(f"unknown corpus mode {spec.mode!r}")
