"""
JSON Exporter
Line-oriented JSON for every command and the certificate file format.
Outputs carry no run ids or timestamps: identical runs are byte-identical.
"""

import json
from dataclasses import asdict, is_dataclass
from enum import Enum
from fractions import Fraction
from pathlib import Path
from typing import Any, Iterable


class JSONExporter:
    """
    Serializes results to JSON, one compact object per line by default.
    """

    # -----------------------------
    # INTERNAL SAFE SERIALIZER
    # -----------------------------
    @staticmethod
    def _safe(obj: Any) -> Any:
        """
        Convert any object into JSON-safe form.
        """
        if obj is None:
            return None
        if isinstance(obj, (str, int, float, bool)):
            return obj
        if isinstance(obj, Enum):
            return obj.value
        if isinstance(obj, Fraction):
            return str(obj)
        if hasattr(obj, "to_dict"):
            return JSONExporter._safe(obj.to_dict())
        if is_dataclass(obj) and not isinstance(obj, type):
            return JSONExporter._safe(asdict(obj))
        if isinstance(obj, dict):
            return {str(k): JSONExporter._safe(v) for k, v in obj.items()}
        if isinstance(obj, (list, tuple)):
            return [JSONExporter._safe(v) for v in obj]
        return str(obj)

    # -----------------------------
    # STRING EXPORT
    # -----------------------------
    @staticmethod
    def export_to_string(payload: Any, pretty: bool = False) -> str:
        safe = JSONExporter._safe(payload)
        if pretty:
            return json.dumps(safe, indent=2, ensure_ascii=False)
        return json.dumps(safe, ensure_ascii=False, separators=(",", ":"))

    @staticmethod
    def export_lines(payloads: Iterable[Any]) -> str:
        return "".join(JSONExporter.export_to_string(p) + "\n" for p in payloads)

    # -----------------------------
    # FILE EXPORT
    # -----------------------------
    @staticmethod
    def export(payload: Any, filepath: str, pretty: bool = True) -> None:
        path = Path(filepath)
        path.parent.mkdir(parents=True, exist_ok=True)
        with open(path, "w", encoding="utf-8") as f:
            f.write(JSONExporter.export_to_string(payload, pretty))
            f.write("\n")

    @staticmethod
    def export_certificates(certificates: Iterable[Any], filepath: str) -> None:
        """
        A single certificate is written as one JSON object; several are
        written as an array in input order.
        """
        items = [JSONExporter._safe(c) for c in certificates]
        JSONExporter.export(items[0] if len(items) == 1 else items, filepath)
