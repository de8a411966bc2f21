"""
Validation Service
Turns raw input records into validated Gauss codes with per-record errors
"""
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Tuple

from core.errors import CodeError
from core.gauss_code import GaussCode, code_from_json, serialize_code
from .loader import RawRecord


@dataclass(frozen=True)
class CheckedRecord:
    index: int
    code: Optional[GaussCode] = None
    error: Optional[CodeError] = None

    @property
    def ok(self) -> bool:
        return self.error is None

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {"record": self.index, "ok": self.ok}
        if self.ok:
            data["code"] = serialize_code(self.code)
        else:
            data.update(self.error.to_dict())
        return data


class Validator:
    """
    Per-record validation before any pipeline runs.
    Invalid records never stop the batch; callers decide the exit status.
    """

    @staticmethod
    def check_record(record: RawRecord) -> CheckedRecord:
        try:
            return CheckedRecord(record.index, code=code_from_json(record.value))
        except CodeError as exc:
            return CheckedRecord(record.index, error=exc)

    @staticmethod
    def check_all(records: List[RawRecord]) -> List[CheckedRecord]:
        return [Validator.check_record(record) for record in records]

    @staticmethod
    def quick_validate(text: str) -> Tuple[bool, str]:
        """
        Validate a single code string.

        Returns:
            (is_valid, message)
        """
        checked = Validator.check_record(RawRecord(1, text))
        if checked.ok:
            return True, f"valid code with {checked.code.n} chord(s)"
        return False, f"{checked.error.reason_code}: {checked.error.message}"
