"""
Unit Tests for layered configuration
"""
import json
import tempfile
import unittest
import sys
from pathlib import Path

# Add parent directory to path
sys.path.insert(0, str(Path(__file__).parent.parent))

from config import Config
from core.context import SearchBudget
from core.errors import ConfigError


class TestDefaults(unittest.TestCase):
    """Test class defaults"""

    def test_defaults(self):
        """Test an empty environment gives the class defaults"""
        config = Config.resolve(env={})
        self.assertEqual(config.max_nodes, 100_000)
        self.assertEqual(config.max_depth, 12)
        self.assertIsNone(config.max_chords)
        self.assertEqual(config.alternation, "cyclic")
        self.assertFalse(config.fplus_permissive)

    def test_budget(self):
        """Test the budget built from a config"""
        budget = Config.resolve(env={}).budget()
        self.assertEqual(budget, SearchBudget())
        self.assertEqual(budget.chord_cap(3), 5)

    def test_to_dict(self):
        """Test the grouped configuration dictionary"""
        data = Config.to_dict()
        self.assertEqual(data["engine"]["name"], "Plusweld")
        self.assertEqual(data["budget"]["max_depth"], 12)


class TestLayers(unittest.TestCase):
    """Test file, environment and flag layers"""

    def setUp(self):
        self.tmp = tempfile.TemporaryDirectory()
        self.path = Path(self.tmp.name) / "plusweld.json"

    def tearDown(self):
        self.tmp.cleanup()

    def test_environment(self):
        """Test PLUSWELD_* variables"""
        config = Config.resolve(env={"PLUSWELD_MAX_NODES": "50", "PLUSWELD_FPLUS": "permissive"})
        self.assertEqual(config.max_nodes, 50)
        self.assertTrue(config.fplus_permissive)

    def test_flags_win(self):
        """Test flags override file and environment"""
        self.path.write_text(json.dumps({"max_depth": 3, "alternation": "linear"}))
        config = Config.resolve(str(self.path), env={"PLUSWELD_MAX_DEPTH": "4"},
                                overrides={"max_depth": 5, "alternation": None})
        self.assertEqual(config.max_depth, 5)
        self.assertEqual(config.alternation, "linear")

    def test_env_beats_file(self):
        """Test the environment overrides the config file"""
        self.path.write_text(json.dumps({"MAX_DEPTH": 3}))
        config = Config.resolve(str(self.path), env={"PLUSWELD_MAX_DEPTH": "4"})
        self.assertEqual(config.max_depth, 4)

    def test_max_chords_none(self):
        """Test max_chords may be reset to n + 2"""
        config = Config.resolve(env={"PLUSWELD_MAX_CHORDS": "none"})
        self.assertIsNone(config.max_chords)


class TestErrors(unittest.TestCase):
    """Test rejected configurations"""

    def test_zero_budget(self):
        """Test a zero node budget"""
        with self.assertRaises(ConfigError):
            Config.resolve(env={"PLUSWELD_MAX_NODES": "0"})

    def test_not_an_integer(self):
        """Test a non-numeric depth"""
        with self.assertRaises(ConfigError):
            Config.resolve(env={"PLUSWELD_MAX_DEPTH": "deep"})

    def test_bad_choice(self):
        """Test an unknown alternation convention"""
        with self.assertRaises(ConfigError):
            Config.resolve(env={}, overrides={"alternation": "spiral"})

    def test_unknown_key(self):
        """Test an unknown key in the config file"""
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp) / "bad.json"
            path.write_text(json.dumps({"max_width": 3}))
            with self.assertRaises(ConfigError):
                Config.resolve(str(path), env={})

    def test_missing_file(self):
        """Test an unreadable config file"""
        with self.assertRaises(ConfigError):
            Config.resolve("/nonexistent/plusweld.json", env={})

    def test_budget_direct(self):
        """Test SearchBudget validates its fields"""
        with self.assertRaises(ConfigError):
            SearchBudget(max_depth=-1)


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
