"""
Command-Line Interface
Batch front door for Plusweld: every subcommand reads codes, writes one
JSON object per record on stdout and branches its exit status on the outcome.
"""

import argparse
import logging
import sys
from enum import IntEnum
from typing import Any, Dict, Iterable, List, Optional

from config import Config, RunConfig
from core.certificate import Certificate, verify_certificate
from core.engine import Engine
from core.enumeration import CorpusSpec, corpus
from core.errors import CertificateError, CertificateReason, ConfigError, PlusweldError
from core.gauss_code import serialize_code, virtual_closure
from core.result import OpKind
from core.simplify import bounded_trivialize, descending_certificate
from core.unknot import closure_unknot_data, unknot_search, warping_unknot_certificate
from core.warping import report
from output.json_exporter import JSONExporter
from output.renderer import CLIRenderer, CompactRenderer
from rules import INVARIANT_SUITES, SUITE_NAMES, rules_for
from services.loader import DataLoader, RawRecord
from services.validator import CheckedRecord, Validator

logger = logging.getLogger("plusweld")


class ExitStatus(IntEnum):
    SUCCESS = 0
    INVALID_INPUT = 1
    INCONCLUSIVE = 2
    CONFIG_ERROR = 3


class CLI:
    """
    Command-line interface for Plusweld.
    Strictly argparse-based (no interactive loops).
    """

    def __init__(self, stdout=None, env=None):
        self.parser = self._create_parser()
        self._stdout = stdout
        self.env = env
        self.config: Optional[RunConfig] = None
        self.renderer = CLIRenderer()

    @property
    def stdout(self):
        return self._stdout if self._stdout is not None else sys.stdout

    def _create_parser(self) -> argparse.ArgumentParser:
        parser = argparse.ArgumentParser(
            prog="plusweld",
            description=f"{Config.ENGINE_NAME} - Gauss-code engine for plus-welded knotoids",
            formatter_class=argparse.RawDescriptionHelpFormatter,
            epilog="""
Examples:
  plusweld validate codes.txt
  plusweld invariants --code O1+U2+O3+U1+O2+U3+ --check
  plusweld simplify --code U1+O1+ --cert-out cert.json
  plusweld verify-cert cert.json
  plusweld unknot --code O1+U2+O3+U1+O2+U3+ --op change --max-k 2
  plusweld enumerate --chords 2
  plusweld check --suite lemma41 --chords 3
            """
        )

        common = argparse.ArgumentParser(add_help=False)
        common.add_argument("--config", help="JSON config file")
        common.add_argument("--pretty", action="store_true", default=None, help="Human-readable tables")
        common.add_argument("--no-color", action="store_true")
        common.add_argument("--verbose", action="store_true", help="Log at DEBUG on stderr")
        common.add_argument("--alternation", choices=Config.CHOICES["alternation"])
        common.add_argument("--fplus", choices=Config.CHOICES["fplus_mode"], dest="fplus_mode")

        inputs = argparse.ArgumentParser(add_help=False)
        inputs.add_argument("file", nargs="?", help="One code per line, or a JSON array")
        inputs.add_argument("--code", action="append", default=[], help="Code text (repeatable)")

        budget = argparse.ArgumentParser(add_help=False)
        budget.add_argument("--max-nodes", type=int)
        budget.add_argument("--max-depth", type=int)
        budget.add_argument("--max-chords", type=int)

        subparsers = parser.add_subparsers(dest="command", required=True)

        subparsers.add_parser("validate", parents=[common, inputs], help="Validate codes")

        invariants = subparsers.add_parser("invariants", parents=[common, inputs],
                                           help="Warping invariants per code")
        invariants.add_argument("--check", action="store_true",
                                help="Also assert the warping identities on every code")

        simplify = subparsers.add_parser("simplify", parents=[common, inputs, budget],
                                         help="Trivialize codes with a certificate")
        simplify.add_argument("--base", type=int, help="Use the descending class B directly")
        simplify.add_argument("--cert-out", help="Write certificates to this file")

        unknot = subparsers.add_parser("unknot", parents=[common, inputs, budget],
                                       help="Unknotting number upper bounds")
        unknot.add_argument("--op", choices=[op.value for op in OpKind], default=OpKind.CHANGE.value)
        unknot.add_argument("--max-k", type=int, default=2)
        unknot.add_argument("--warping-only", action="store_true",
                            help="Report the warping witness without searching")
        unknot.add_argument("--cert-out", help="Write witness certificates to this file")

        subparsers.add_parser("closure", parents=[common, inputs], help="Virtual closure data")

        enumerate_ = subparsers.add_parser("enumerate", parents=[common], help="Generate codes")
        enumerate_.add_argument("--chords", type=int, required=True)
        enumerate_.add_argument("--min-chords", type=int)
        enumerate_.add_argument("--random", type=int, metavar="COUNT")
        enumerate_.add_argument("--seed", type=int, default=0)
        enumerate_.add_argument("--dedupe", action="store_true")

        verify = subparsers.add_parser("verify-cert", parents=[common], help="Replay certificates")
        verify.add_argument("file", help="Certificate JSON (object or array)")

        check = subparsers.add_parser("check", parents=[common, inputs, budget],
                                      help="Run a property suite over a corpus")
        check.add_argument("--suite", choices=SUITE_NAMES, default="all")
        check.add_argument("--chords", type=int, default=3, help="Largest chord count of the corpus")
        check.add_argument("--random", type=int, metavar="COUNT")
        check.add_argument("--seed", type=int, default=0)
        check.add_argument("--strict", action="store_true", help="Let rule exceptions propagate")

        subparsers.add_parser("version", help="Show engine version")

        return parser

    def run(self, argv=None) -> int:
        args = self.parser.parse_args(argv)

        if args.command == "version":
            return self._version()

        try:
            self.config = self._resolve_config(args)
        except ConfigError as e:
            self._emit_error(e)
            return ExitStatus.CONFIG_ERROR
        self._configure_logging(args)
        self.renderer = CLIRenderer(use_colors=self.config.use_colors and not args.no_color)

        handlers = {
            "validate": self._validate,
            "invariants": self._invariants,
            "simplify": self._simplify,
            "unknot": self._unknot,
            "closure": self._closure,
            "enumerate": self._enumerate,
            "verify-cert": self._verify_cert,
            "check": self._check,
        }
        try:
            return int(handlers[args.command](args))
        except ConfigError as e:
            self._emit_error(e)
            return ExitStatus.CONFIG_ERROR

    # -------------------- SETUP --------------------

    def _resolve_config(self, args) -> RunConfig:
        overrides = {
            "alternation": args.alternation,
            "fplus_mode": args.fplus_mode,
            "pretty_json": args.pretty,
            "max_nodes": getattr(args, "max_nodes", None),
            "max_depth": getattr(args, "max_depth", None),
            "max_chords": getattr(args, "max_chords", None),
            "log_level": "DEBUG" if args.verbose else None,
        }
        return Config.resolve(args.config, self.env, overrides)

    def _configure_logging(self, args) -> None:
        logging.basicConfig(
            stream=sys.stderr,
            level=getattr(logging, self.config.log_level),
            format="%(levelname)s %(name)s: %(message)s",
            force=True,
        )

    # -------------------- OUTPUT --------------------

    def _print(self, text: str) -> None:
        print(text, file=self.stdout)

    def _emit(self, rows: List[Dict[str, Any]], title: str, columns: List[str]) -> None:
        if self.config.pretty_json:
            self._print(self.renderer.render_table(title, rows, columns))
        else:
            self.stdout.write(JSONExporter.export_lines(rows))

    def _emit_error(self, error: PlusweldError) -> None:
        self._print(JSONExporter.export_to_string(error.to_dict()))
        logger.error("%s", error.message)

    def _load(self, args) -> Optional[List[CheckedRecord]]:
        """Validated records in input order; None when the input cannot be read"""
        try:
            records = DataLoader.load_records(args.file) if args.file else []
        except (OSError, ValueError) as e:
            self._print(JSONExporter.export_to_string({"error": "InputError", "message": str(e)}))
            logger.error("cannot read %s: %s", args.file, e)
            return None
        offset = len(records)
        records += [RawRecord(offset + r.index, r.value) for r in DataLoader.load_from_codes(args.code)]
        if not args.file and not args.code:
            self._print(JSONExporter.export_to_string(
                {"error": "InputError", "message": "no input: give a file or --code"}))
            return None
        return Validator.check_all(records)

    @staticmethod
    def _status(invalid: bool, inconclusive: bool = False) -> ExitStatus:
        if invalid:
            return ExitStatus.INVALID_INPUT
        return ExitStatus.INCONCLUSIVE if inconclusive else ExitStatus.SUCCESS

    # -------------------- COMMAND HANDLERS --------------------

    def _validate(self, args) -> int:
        checked = self._load(args)
        if checked is None:
            return ExitStatus.INVALID_INPUT
        self._emit([c.to_dict() for c in checked], "VALIDATE", ["record", "ok", "code", "error"])
        return self._status(any(not c.ok for c in checked))

    def _invariants(self, args) -> int:
        checked = self._load(args)
        if checked is None:
            return ExitStatus.INVALID_INPUT

        rows = []
        for c in checked:
            if not c.ok:
                rows.append(c.to_dict())
                continue
            rows.append({"record": c.index, "code": serialize_code(c.code),
                         **report(c.code, self.config.alternation).to_dict()})
        self._emit(rows, "INVARIANTS",
                   ["record", "code", "cr", "d", "d_rev", "alternating", "descending",
                    "bound_warping", "bound_half_cr"])

        violated = False
        if args.check:
            codes = [c.code for c in checked if c.ok]
            rules = [rule for suite in INVARIANT_SUITES for rule in rules_for(suite)]
            result = Engine(rules, self.config.context()).run(codes, "invariants")
            self._emit_check(result)
            violated = result.verdict == "FAILED"
        return self._status(any(not c.ok for c in checked), violated)

    def _simplify(self, args) -> int:
        checked = self._load(args)
        if checked is None:
            return ExitStatus.INVALID_INPUT

        budget = self.config.budget()
        permissive = self.config.fplus_permissive
        rows, certificates = [], []
        invalid = unknown = False
        for c in checked:
            if not c.ok:
                rows.append(c.to_dict())
                invalid = True
                continue
            row: Dict[str, Any] = {"record": c.index, "code": serialize_code(c.code)}
            if args.base is not None:
                try:
                    certificate = descending_certificate(c.code, args.base, permissive)
                except PlusweldError as e:
                    rows.append({**row, **e.to_dict()})
                    invalid = True
                    continue
                row.update({"status": "Trivial", "certificate": certificate.to_dict()})
                certificates.append(certificate)
            else:
                verdict = bounded_trivialize(c.code, budget, permissive)
                row.update(verdict.to_dict())
                if verdict.is_trivial:
                    certificates.append(verdict.certificate)
                else:
                    unknown = True
            rows.append(row)

        self._emit(rows, "SIMPLIFY", ["record", "code", "status", "error"])
        self._write_certificates(args.cert_out, certificates)
        return self._status(invalid, unknown)

    def _unknot(self, args) -> int:
        checked = self._load(args)
        if checked is None:
            return ExitStatus.INVALID_INPUT
        if args.max_k < 0:
            raise ConfigError(f"--max-k must be non-negative, got {args.max_k}", key="max_k")

        op = OpKind(args.op)
        rows, certificates = [], []
        for c in checked:
            if not c.ok:
                rows.append(c.to_dict())
                continue
            if args.warping_only:
                result = warping_unknot_certificate(c.code, op, self.config.fplus_permissive)
            else:
                result = unknot_search(c.code, op, args.max_k, self.config.budget(),
                                       self.config.fplus_permissive)
            rows.append({"record": c.index, "code": serialize_code(c.code), **result.to_dict()})
            certificates.append(result.certificate)

        self._emit(rows, "UNKNOT", ["record", "code", "op", "upper_bound", "exact", "status", "chords"])
        self._write_certificates(args.cert_out, certificates)
        return self._status(any(not c.ok for c in checked))

    def _closure(self, args) -> int:
        checked = self._load(args)
        if checked is None:
            return ExitStatus.INVALID_INPUT

        rows = []
        for c in checked:
            if not c.ok:
                rows.append(c.to_dict())
                continue
            closed = virtual_closure(c.code)
            cyclic_d, monotone = closure_unknot_data(c.code)
            rows.append({
                "record": c.index,
                "code": serialize_code(c.code),
                "closure": str(closed),
                "closure_key": closed.canonical_key(),
                "cyclic_d": cyclic_d,
                "monotone_closure": monotone,
            })
        self._emit(rows, "CLOSURE", ["record", "code", "cyclic_d", "monotone_closure"])
        return self._status(any(not c.ok for c in checked))

    def _enumerate(self, args) -> int:
        if args.random is not None:
            spec = CorpusSpec.random(args.chords, args.random, args.seed, args.dedupe, args.min_chords)
        else:
            spec = CorpusSpec.exhaustive(args.chords, args.dedupe, args.min_chords,
                                         self.config.enumeration_ceiling)
        try:
            for code in corpus(spec):
                self._print(serialize_code(code))
        except PlusweldError as e:
            self._emit_error(e)
            return ExitStatus.CONFIG_ERROR
        except ValueError as e:
            self._print(JSONExporter.export_to_string({"error": "InputError", "message": str(e)}))
            return ExitStatus.INVALID_INPUT
        return ExitStatus.SUCCESS

    def _verify_cert(self, args) -> int:
        try:
            data = DataLoader.load_certificate(args.file)
        except (OSError, ValueError) as e:
            self._print(JSONExporter.export_to_string({"error": "InputError", "message": str(e)}))
            return ExitStatus.INVALID_INPUT

        items = data if isinstance(data, list) else [data]
        rows = []
        malformed = rejected = False
        for i, item in enumerate(items, 1):
            try:
                certificate = Certificate.from_dict(item)
                rows.append({"record": i, "ok": True, **verify_certificate(certificate).to_dict()})
            except CertificateError as e:
                rows.append({"record": i, "ok": False, **e.to_dict()})
                if e.reason is CertificateReason.MALFORMED:
                    malformed = True
                else:
                    rejected = True
        self._emit(rows, "VERIFY", ["record", "ok", "final", "relation", "error", "index"])
        return self._status(malformed, rejected)

    def _check(self, args) -> int:
        if args.file or args.code:
            checked = self._load(args)
            if checked is None:
                return ExitStatus.INVALID_INPUT
            invalid = [c for c in checked if not c.ok]
            if invalid:
                self._emit([c.to_dict() for c in invalid], "INVALID", ["record", "error"])
                return ExitStatus.INVALID_INPUT
            codes: Iterable = [c.code for c in checked]
        elif args.random is not None:
            codes = corpus(CorpusSpec.random(args.chords, args.random, args.seed, min_chords=1))
        else:
            codes = corpus(CorpusSpec.exhaustive(args.chords, min_chords=1,
                                                 ceiling=self.config.enumeration_ceiling))

        engine = Engine(rules_for(args.suite), self.config.context())
        if args.strict:
            engine.context.enable_strict_mode()
        try:
            result = engine.run(codes, args.suite)
        except PlusweldError as e:
            self._emit_error(e)
            return ExitStatus.CONFIG_ERROR
        self._emit_check(result)
        return ExitStatus.INCONCLUSIVE if result.verdict == "FAILED" else ExitStatus.SUCCESS

    def _emit_check(self, result) -> None:
        if self.config.pretty_json:
            self._print(self.renderer.render_check(result))
            self._print(CompactRenderer.render(result))
        else:
            self._print(JSONExporter.export_to_string(result.to_dict()))

    def _write_certificates(self, path: Optional[str], certificates: List[Certificate]) -> None:
        if path and certificates:
            JSONExporter.export_certificates(certificates, path)
            logger.info("wrote %d certificate(s) to %s", len(certificates), path)

    def _version(self) -> int:
        self._print(f"{Config.ENGINE_NAME} v{Config.ENGINE_VERSION}")
        self._print("Gauss-code engine for plus-welded knotoids\n")
        rules = rules_for("all")
        self._print(f"Rules Loaded: {len(rules)}")

        categories = {}
        for rule in rules:
            categories[rule.category] = categories.get(rule.category, 0) + 1

        for cat, count in sorted(categories.items()):
            self._print(f"  {cat}: {count}")

        return ExitStatus.SUCCESS


def main():
    cli = CLI()
    exit_code = cli.run()
    sys.exit(exit_code)


if __name__ == "__main__":
    main()
