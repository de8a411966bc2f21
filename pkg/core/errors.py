"""
Error Hierarchy
Every failure carries a machine-readable reason so callers can branch on it
"""
from enum import Enum
from typing import Any, Dict, Optional


class CodeReason(Enum):
    """Why a Gauss code was rejected"""
    MALFORMED_TOKEN = "MalformedToken"
    CHORD_ARITY = "ChordArity"
    SIGN_MISMATCH = "SignMismatch"
    MALFORMED_JSON = "MalformedJson"


class MoveReason(Enum):
    """Why a move instance is not legal on a code"""
    UNKNOWN_KIND = "unknown_kind"
    ARITY = "arity"
    POSITION_OUT_OF_RANGE = "position_out_of_range"
    PASSAGE_MISMATCH = "passage_mismatch"
    NOT_ADJACENT = "not_adjacent"
    NOT_ONE_CHORD = "not_one_chord"
    ROLE_PATTERN = "role_pattern"
    SIGN_PATTERN = "sign_pattern"
    NOT_AT_ENDPOINT = "not_at_endpoint"
    LABEL_NOT_FRESH = "label_not_fresh"
    TILE_MISMATCH = "tile_mismatch"


class CertificateReason(Enum):
    """Why a certificate failed to verify"""
    STEP_ILLEGAL = "StepIllegal"
    KEY_MISMATCH = "KeyMismatch"
    FLAG_MISMATCH = "FlagMismatch"
    MALFORMED = "Malformed"


class PlusweldError(Exception):
    """Root of all engine errors"""

    reason: Optional[Enum] = None

    def __init__(self, message: str, reason: Optional[Enum] = None, **details: Any):
        super().__init__(message)
        self.message = message
        if reason is not None:
            self.reason = reason
        self.details = details

    @property
    def reason_code(self) -> str:
        if self.reason is None:
            return self.__class__.__name__
        return self.reason.value

    def to_dict(self) -> Dict[str, Any]:
        data = {"error": self.reason_code, "message": self.message}
        if self.details:
            data["details"] = self.details
        return data


class CodeError(PlusweldError):
    """Invalid Gauss code text or structure"""


class BaseOutOfRange(PlusweldError):
    """Base class index outside [0, 2n-1]"""


class UnknownChord(PlusweldError):
    """Chord label not present in the code"""


class IllegalMove(PlusweldError):
    """Move pattern does not match the code"""

    def __init__(self, message: str, reason: MoveReason, **details: Any):
        super().__init__(message, reason, **details)


class NotInvertible(PlusweldError):
    """Move kind has no inverse (crossing virtualization)"""


class CertificateError(PlusweldError):
    """Certificate replay failed"""

    def __init__(self, message: str, reason: CertificateReason,
                 index: Optional[int] = None, **details: Any):
        super().__init__(message, reason, **details)
        self.index = index

    def to_dict(self) -> Dict[str, Any]:
        data = super().to_dict()
        data["index"] = self.index
        return data


class PreconditionFailed(PlusweldError):
    """Neither smoothing path of a chord is free of under passages"""


class NotDescending(PlusweldError):
    """Base class has nonzero warping degree"""


class CeilingExceeded(PlusweldError):
    """Exhaustive enumeration requested above the configured ceiling"""


class ConfigError(PlusweldError):
    """Malformed configuration or search budget"""
