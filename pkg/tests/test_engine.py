"""
Unit Tests for the Plusweld property engine
"""
import unittest
import sys
from pathlib import Path

# Add parent directory to path
sys.path.insert(0, str(Path(__file__).parent.parent))

from core.engine import Engine
from core.result import CheckResult
from core.context import ExecutionContext, SearchBudget
from core.enumeration import CorpusSpec, corpus
from core.gauss_code import parse_code
from rules import DEFAULT_RULES, INVARIANT_SUITES, RULE_CLASSES, SUITE_NAMES, rules_for
from rules.base_rule import BaseRule
from rules.warping_laws import CrossingBoundRule, ReverseSumRule

E3 = parse_code("O1+U2+O3+U1+O2+U3+")


class AlwaysFailsRule(BaseRule):
    id = "TEST-FAIL"
    suite = "test"

    def evaluate(self, code, context):
        return self._create_finding("always fails", details={"n": code.n})


class BrokenRule(BaseRule):
    id = "TEST-BROKEN"
    suite = "test"

    def evaluate(self, code, context):
        raise RuntimeError("boom")


class TestCheckResult(unittest.TestCase):
    """Test CheckResult class"""

    def test_initialization(self):
        """Test result initialization"""
        result = CheckResult("lemma41")
        self.assertEqual(result.suite, "lemma41")
        self.assertIsNone(result.verdict)
        self.assertEqual(result.violations, 0)

    def test_record(self):
        """Test per-rule statistics"""
        result = CheckResult()
        result.record("WL-001", False)
        result.record("WL-001", True)
        self.assertEqual(result.rule_stats["WL-001"], {"checked": 2, "violations": 1})
        self.assertEqual(result.violations, 1)

    def test_findings_capped(self):
        """Test findings past the cap are only counted"""
        result = CheckResult()
        for i in range(CheckResult.MAX_FINDINGS + 3):
            result.add_finding({"id": "TEST", "message": str(i)})
        self.assertEqual(len(result.findings), CheckResult.MAX_FINDINGS)
        self.assertEqual(result.dropped_findings, 3)

    def test_to_dict(self):
        """Test dictionary export"""
        result = CheckResult("thm41")
        result.verdict = "PASSED"
        data = result.to_dict()
        self.assertIsInstance(data, dict)
        self.assertEqual(data["suite"], "thm41")
        self.assertEqual(data["verdict"], "PASSED")


class TestExecutionContext(unittest.TestCase):
    """Test ExecutionContext class"""

    def test_initialization(self):
        """Test context initialization"""
        context = ExecutionContext()
        self.assertEqual(context.alternation, "cyclic")
        self.assertIsInstance(context.budget, SearchBudget)
        self.assertFalse(context.strict_mode)

    def test_set_get(self):
        """Test storing and retrieving values"""
        context = ExecutionContext()
        context.set("test_key", "test_value")
        self.assertEqual(context.get("test_key"), "test_value")

    def test_memo(self):
        """Test memo computes once per key"""
        context = ExecutionContext()
        calls = []
        for _ in range(3):
            context.memo("k", lambda: calls.append(1) or len(calls))
        self.assertEqual(calls, [1])
        context.clear_cache()
        self.assertFalse(context.has("k"))


class TestEngine(unittest.TestCase):
    """Test Engine class"""

    def test_engine_initialization(self):
        """Test engine initialization"""
        engine = Engine(rules=[ReverseSumRule()])
        self.assertEqual(len(engine.rules), 1)
        engine.add_rule(CrossingBoundRule())
        self.assertIn("RULES=2", repr(engine))

    def test_passing_run(self):
        """Test a true law passes"""
        result = Engine([ReverseSumRule()]).run([E3, parse_code("O1+U1+")], "lemma41")
        self.assertEqual(result.verdict, "PASSED")
        self.assertEqual(result.codes_checked, 2)
        self.assertEqual(result.rule_stats["WL-001"]["checked"], 2)

    def test_applies_to(self):
        """Test rules skip codes outside their chord range"""
        result = Engine([CrossingBoundRule()]).run([parse_code("O1+U1+"), E3])
        self.assertEqual(result.rule_stats["WL-006"]["checked"], 1)

    def test_failing_rule(self):
        """Test findings carry the offending code"""
        result = Engine([AlwaysFailsRule()]).run([E3])
        self.assertEqual(result.verdict, "FAILED")
        self.assertEqual(result.findings[0]["code"], str(E3))
        self.assertEqual(result.findings[0]["details"], {"n": 3})

    def test_broken_rule(self):
        """Test a raising rule becomes an ENGINE-ERROR finding"""
        result = Engine([BrokenRule()]).run([E3])
        self.assertEqual(result.verdict, "FAILED")
        self.assertEqual(result.findings[0]["id"], "ENGINE-ERROR")
        self.assertIn("boom", result.findings[0]["message"])

    def test_strict_mode(self):
        """Test strict mode lets rule exceptions propagate"""
        context = ExecutionContext()
        context.enable_strict_mode()
        with self.assertRaises(RuntimeError):
            Engine([BrokenRule()], context).run([E3])


class TestRegistry(unittest.TestCase):
    """Test the rule registry"""

    def test_suites(self):
        """Test every rule belongs to a named suite"""
        self.assertEqual(len(DEFAULT_RULES), len(RULE_CLASSES))
        self.assertEqual(SUITE_NAMES[-1], "all")
        for suite in INVARIANT_SUITES:
            self.assertIn(suite, SUITE_NAMES)

    def test_unknown_suite(self):
        """Test an unknown suite name"""
        with self.assertRaises(KeyError):
            rules_for("nope")

    def test_ids_unique(self):
        """Test rule ids are unique"""
        ids = [rule.id for rule in DEFAULT_RULES]
        self.assertEqual(len(ids), len(set(ids)))


class TestIntegration(unittest.TestCase):
    """Integration tests over small corpora"""

    def test_every_rule_small_corpus(self):
        """Test all suites pass on every code up to two chords"""
        codes = corpus(CorpusSpec.exhaustive(2, min_chords=0))
        result = Engine(rules_for("all")).run(codes, "all")
        self.assertEqual(result.verdict, "PASSED", result.findings)
        self.assertEqual(result.codes_checked, 53)

    def test_every_rule_three_chords(self):
        """Test every suite finds nothing on every code up to three chords"""
        codes = corpus(CorpusSpec.exhaustive(3, min_chords=1))
        result = Engine(rules_for("all")).run(codes, "all")
        self.assertEqual(result.verdict, "PASSED", result.findings)
        self.assertEqual(result.codes_checked, 1012)
        self.assertEqual(result.findings, [])
        self.assertEqual(result.violations, 0)

    def test_warping_suites_three_chords(self):
        """Test the warping identities on every three-chord code"""
        rules = [rule for suite in INVARIANT_SUITES for rule in rules_for(suite)]
        result = Engine(rules).run(corpus(CorpusSpec.exhaustive(3)), "invariants")
        self.assertEqual(result.verdict, "PASSED", result.findings)
        self.assertEqual(result.codes_checked, 960)

    def test_random_corpus(self):
        """Test the warping identities on 1000 seeded random codes up to eight chords"""
        rules = [rule for suite in INVARIANT_SUITES for rule in rules_for(suite)]
        spec = CorpusSpec.random(8, count=1000, seed=7, min_chords=1)
        result = Engine(rules).run(corpus(spec), "invariants")
        self.assertEqual(result.verdict, "PASSED", result.findings)
        self.assertEqual(result.codes_checked, 1000)


def run_tests():
    """Run all tests"""
    loader = unittest.TestLoader()
    suite = loader.loadTestsFromModule(sys.modules[__name__])
    runner = unittest.TextTestRunner(verbosity=2)
    result = runner.run(suite)
    return result.wasSuccessful()


if __name__ == "__main__":
    success = run_tests()
    sys.exit(0 if success else 1)
