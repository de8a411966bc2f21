"""
Certificates
Machine-checkable move sequences and their independent verifier.

A certificate is a start code plus (move, canonical key of the result)
steps. The verifier replays every step with full legality checking; it
shares apply_move with the search code but nothing else.
"""
import logging
from dataclasses import dataclass, field, replace
from typing import Any, Dict, Iterable, List, Optional, Tuple

from .errors import CertificateError, CertificateReason, CodeError, IllegalMove
from .gauss_code import GaussCode, canonical_key, code_from_json, find_violation, reverse, serialize_code
from .moves import Move, MoveKind, apply_move, reverse_move

logger = logging.getLogger(__name__)

PLUS_WELDED = "plus_welded"


@dataclass(frozen=True)
class CertificateFlags:
    uses_crossing_change: bool = False
    uses_virtualization: bool = False
    fplus_permissive: bool = False

    def to_dict(self) -> Dict[str, bool]:
        return {
            "uses_crossing_change": self.uses_crossing_change,
            "uses_virtualization": self.uses_virtualization,
            "fplus_permissive": self.fplus_permissive,
        }


@dataclass(frozen=True)
class Step:
    move: Move
    key: str

    def to_dict(self) -> Dict[str, Any]:
        return {"move": self.move.to_dict(), "key": self.key}


@dataclass(frozen=True)
class Certificate:
    start: GaussCode
    steps: Tuple[Step, ...] = ()
    flags: CertificateFlags = field(default_factory=CertificateFlags)

    def __len__(self) -> int:
        return len(self.steps)

    @property
    def moves(self) -> List[Move]:
        return [step.move for step in self.steps]

    @property
    def changes(self) -> int:
        return sum(1 for s in self.steps if s.move.kind is MoveKind.CROSSING_CHANGE)

    @property
    def virtualizations(self) -> int:
        return sum(1 for s in self.steps if s.move.kind is MoveKind.VIRTUALIZE)

    @property
    def modification_count(self) -> int:
        return self.changes + self.virtualizations

    @property
    def final_key(self) -> str:
        return self.steps[-1].key if self.steps else canonical_key(self.start)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "start": serialize_code(self.start),
            "steps": [step.to_dict() for step in self.steps],
            "flags": self.flags.to_dict(),
        }

    @classmethod
    def from_dict(cls, data: Any) -> "Certificate":
        """
        Raises:
            CertificateError: Malformed, with the offending step index when known
        """
        if not isinstance(data, dict):
            raise CertificateError("certificate must be a JSON object", CertificateReason.MALFORMED)
        try:
            start = code_from_json(data.get("start", ""))
        except CodeError as exc:
            raise CertificateError(f"bad start code: {exc}", CertificateReason.MALFORMED) from exc

        raw_flags = data.get("flags") or {}
        if not isinstance(raw_flags, dict):
            raise CertificateError("flags must be an object", CertificateReason.MALFORMED)
        flags = CertificateFlags(
            uses_crossing_change=bool(raw_flags.get("uses_crossing_change", False)),
            uses_virtualization=bool(raw_flags.get("uses_virtualization", False)),
            fplus_permissive=bool(raw_flags.get("fplus_permissive", False)),
        )

        steps = []
        raw_steps = data.get("steps", [])
        if not isinstance(raw_steps, list):
            raise CertificateError("steps must be a list", CertificateReason.MALFORMED)
        for index, raw in enumerate(raw_steps):
            try:
                move = Move.from_dict(raw["move"])
                key = raw["key"]
                if not isinstance(key, str):
                    raise ValueError("key must be a string")
            except (KeyError, TypeError, ValueError, CodeError) as exc:
                raise CertificateError(f"step {index} is malformed: {exc}",
                                       CertificateReason.MALFORMED, index=index) from exc
            steps.append(Step(move, key))
        return cls(start, tuple(steps), flags)


@dataclass(frozen=True)
class VerificationReport:
    final: GaussCode
    relation: str
    changes: int
    virtualizations: int
    steps: int

    def to_dict(self) -> Dict[str, Any]:
        return {
            "final": serialize_code(self.final),
            "relation": self.relation,
            "changes": self.changes,
            "virtualizations": self.virtualizations,
            "steps": self.steps,
        }


def relation_name(changes: int, virtualizations: int) -> str:
    if not changes and not virtualizations:
        return PLUS_WELDED
    parts = []
    if changes:
        parts.append(f"{changes}_changes")
    if virtualizations:
        parts.append(f"{virtualizations}_virtualizations")
    return PLUS_WELDED + "_after_" + "_and_".join(parts)


class CertificateBuilder:
    """Applies moves to a running code and records the resulting keys"""

    def __init__(self, start: GaussCode, fplus_permissive: bool = False):
        self.start = start
        self.current = start
        self.fplus_permissive = fplus_permissive
        self._steps: List[Step] = []

    def apply(self, move: Move) -> GaussCode:
        self.current = apply_move(self.current, move, self.fplus_permissive)
        self._steps.append(Step(move, canonical_key(self.current)))
        return self.current

    def extend(self, moves: Iterable[Move]) -> GaussCode:
        for move in moves:
            self.apply(move)
        return self.current

    def splice(self, certificate: Certificate) -> GaussCode:
        """Append another certificate that starts where this one stands"""
        if certificate.start != self.current:
            raise ValueError(f"cannot splice: certificate starts at {certificate.start}, "
                             f"builder stands at {self.current}")
        return self.extend(certificate.moves)

    def build(self) -> Certificate:
        kinds = {step.move.kind for step in self._steps}
        flags = CertificateFlags(
            uses_crossing_change=MoveKind.CROSSING_CHANGE in kinds,
            uses_virtualization=MoveKind.VIRTUALIZE in kinds,
            fplus_permissive=self.fplus_permissive,
        )
        return Certificate(self.start, tuple(self._steps), flags)


def verify_certificate(cert: Certificate) -> VerificationReport:
    """
    Replay every step from the start code with full legality checking.

    Raises:
        CertificateError: StepIllegal / KeyMismatch at the failing step index,
            FlagMismatch when the flags disagree with the steps, Malformed for
            an invalid start code
    """
    violation = find_violation(cert.start)
    if violation is not None:
        raise CertificateError(f"start code is invalid: {violation.message}",
                               CertificateReason.MALFORMED)

    code = cert.start
    permissive = cert.flags.fplus_permissive
    for index, step in enumerate(cert.steps):
        try:
            code = apply_move(code, step.move, permissive)
        except IllegalMove as exc:
            raise CertificateError(
                f"step {index} is illegal: {exc.message}",
                CertificateReason.STEP_ILLEGAL, index=index, move_reason=exc.reason_code,
            ) from exc
        key = canonical_key(code)
        if key != step.key:
            raise CertificateError(
                f"step {index} key mismatch: expected {step.key!r}, got {key!r}",
                CertificateReason.KEY_MISMATCH, index=index,
            )

    changes, virtualizations = cert.changes, cert.virtualizations
    if (changes > 0) != cert.flags.uses_crossing_change or \
            (virtualizations > 0) != cert.flags.uses_virtualization:
        raise CertificateError(
            f"flags {cert.flags.to_dict()} disagree with {changes} change(s) "
            f"and {virtualizations} virtualization(s)",
            CertificateReason.FLAG_MISMATCH,
        )

    logger.debug("verified %d step(s) from %s to %s", len(cert.steps), cert.start, code)
    return VerificationReport(
        final=code,
        relation=relation_name(changes, virtualizations),
        changes=changes,
        virtualizations=virtualizations,
        steps=len(cert.steps),
    )


def reverse_certificate(cert: Certificate) -> Certificate:
    """
    Certificate for reverse(start) performing the mirrored moves.
    The move set is closed under reversal, so the result verifies whenever
    cert does; keys are recomputed because canonical keys depend on direction.
    """
    builder = CertificateBuilder(reverse(cert.start), cert.flags.fplus_permissive)
    for step in cert.steps:
        builder.apply(reverse_move(step.move, len(builder.current)))
    return builder.build()


def tampered(cert: Certificate, index: int, *, key: Optional[str] = None,
             move: Optional[Move] = None) -> Certificate:
    """Copy of cert with one step's key or move replaced"""
    steps = list(cert.steps)
    step = steps[index]
    steps[index] = Step(move if move is not None else step.move,
                        key if key is not None else step.key)
    return replace(cert, steps=tuple(steps))
