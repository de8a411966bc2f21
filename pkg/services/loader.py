"""
Data Loader Service
Reads Gauss codes and certificates from files and command-line strings
"""
import json
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Dict, Iterable, List


@dataclass(frozen=True)
class RawRecord:
    """One unparsed input record; index is the 1-based line or array position"""
    index: int
    value: Any


class DataLoader:
    """
    Loads code records from:
      - text files, one code per line (blank lines and '#' comments skipped)
      - JSON files holding an array of code strings or passage objects
      - repeated --code arguments
    """

    @staticmethod
    def _read(filepath: str) -> str:
        path = Path(filepath)

        if not path.exists():
            raise FileNotFoundError(f"File not found: {filepath}")

        if not path.is_file():
            raise ValueError(f"Not a file: {filepath}")

        return path.read_text(encoding='utf-8')

    @staticmethod
    def load_records(filepath: str) -> List[RawRecord]:
        """
        Raises:
            FileNotFoundError: If file doesn't exist
            ValueError: If a JSON file does not hold an array (json.JSONDecodeError included)
        """
        text = DataLoader._read(filepath)
        if text.lstrip().startswith('['):
            return DataLoader.load_from_string(text)

        records = []
        for number, line in enumerate(text.splitlines(), 1):
            stripped = line.strip()
            if stripped and not stripped.startswith('#'):
                records.append(RawRecord(number, stripped))
        return records

    @staticmethod
    def load_from_string(json_string: str) -> List[RawRecord]:
        data = json.loads(json_string)
        if not isinstance(data, list):
            raise ValueError(f"JSON input must be an array, got {type(data).__name__}")
        return [RawRecord(i, item) for i, item in enumerate(data, 1)]

    @staticmethod
    def load_from_codes(codes: Iterable[str]) -> List[RawRecord]:
        return [RawRecord(i, code) for i, code in enumerate(codes, 1)]

    @staticmethod
    def load_certificate(filepath: str) -> Dict[str, Any]:
        """
        Raises:
            FileNotFoundError: If file doesn't exist
            json.JSONDecodeError: If file contains invalid JSON
        """
        return json.loads(DataLoader._read(filepath))
