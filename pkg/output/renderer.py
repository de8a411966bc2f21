"""
CLI Renderer
Human-readable tables behind --pretty
NO LOGIC. ONLY DISPLAY.
"""
from typing import Dict, List, Optional

from core.result import CheckResult


class CLIRenderer:
    """
    Formats records and check results as terminal tables.
    Every method returns the text; the CLI decides where it goes.
    """

    # Color codes for terminal output
    COLORS = {
        "RESET": "\033[0m",
        "BOLD": "\033[1m",
        "RED": "\033[91m",
        "GREEN": "\033[92m",
        "YELLOW": "\033[93m",
        "CYAN": "\033[96m",
        "GRAY": "\033[90m"
    }

    STATUS_COLORS = {
        "PASSED": "GREEN",
        "Trivial": "GREEN",
        "exact": "GREEN",
        "ok": "GREEN",
        "FAILED": "RED",
        "error": "RED",
        "Unknown": "YELLOW",
        "search": "YELLOW",
        "warping": "YELLOW",
    }

    def __init__(self, use_colors: bool = True):
        self.palette = dict(self.COLORS) if use_colors else {k: "" for k in self.COLORS}

    def _paint(self, text: str, status: Optional[str] = None, bold: bool = False) -> str:
        color = self.palette.get(self.STATUS_COLORS.get(status or text, ""), "")
        weight = self.palette["BOLD"] if bold else ""
        return f"{weight}{color}{text}{self.palette['RESET']}" if (color or weight) else text

    def header(self, title: str) -> str:
        bold, cyan, reset = self.palette["BOLD"], self.palette["CYAN"], self.palette["RESET"]
        return f"{bold}{cyan}{title}{reset}\n" + "=" * 64

    def render_table(self, title: str, rows: List[Dict], columns: List[str]) -> str:
        """Fixed-width table of the given columns; missing cells print as '-'"""
        cells = [[self._cell(row.get(col)) for col in columns] for row in rows]
        widths = [max([len(col)] + [len(r[i]) for r in cells]) for i, col in enumerate(columns)]
        lines = [self.header(title)]
        lines.append("  ".join(col.upper().ljust(w) for col, w in zip(columns, widths)))
        lines.append("-" * 64)
        for r in cells:
            padded = [cell.ljust(w) for cell, w in zip(r, widths)]
            lines.append("  ".join(self._paint(p, p.strip()) for p in padded).rstrip())
        return "\n".join(lines)

    @staticmethod
    def _cell(value) -> str:
        if value is None:
            return "-"
        if isinstance(value, bool):
            return "yes" if value else "no"
        if isinstance(value, (list, tuple)):
            return ",".join(str(v) for v in value)
        return str(value)

    def render_check(self, result: CheckResult) -> str:
        """Per-rule pass/fail table followed by the first findings"""
        rows = []
        for rule_id, stats in sorted(result.rule_stats.items()):
            rows.append({
                "rule": rule_id,
                "checked": stats["checked"],
                "violations": stats["violations"],
                "status": "FAILED" if stats["violations"] else "PASSED",
            })
        text = [self.render_table(f"SUITE {result.suite}", rows,
                                  ["rule", "checked", "violations", "status"])]
        text.append("")
        text.append(f"Codes checked : {result.codes_checked}")
        text.append(f"Verdict       : {self._paint(result.verdict or '-', bold=True)}")
        gray, reset = self.palette["GRAY"], self.palette["RESET"]
        for i, finding in enumerate(result.findings, 1):
            text.append(f"  {i}. [{finding.get('id')}] {finding.get('code', '')}: "
                        f"{finding.get('message')}")
            if finding.get("details"):
                text.append(f"     {gray}{finding['details']}{reset}")
        if result.dropped_findings:
            text.append(f"  ... {result.dropped_findings} more finding(s)")
        return "\n".join(text)


class CompactRenderer:
    """Minimal one-line renderer for CI/CD"""

    @staticmethod
    def render(result: CheckResult) -> str:
        status = "PASS" if result.verdict == "PASSED" else "FAIL"
        return (f"{status} | suite {result.suite} | codes: {result.codes_checked} | "
                f"violations: {result.violations}")
