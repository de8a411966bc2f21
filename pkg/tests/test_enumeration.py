"""
Unit Tests for exhaustive and random code generation
"""
import unittest
import sys
from pathlib import Path

# Add parent directory to path
sys.path.insert(0, str(Path(__file__).parent.parent))

from core.enumeration import (CorpusSpec, all_codes, corpus, double_factorial,
                              exhaustive_count, random_code)
from core.errors import CeilingExceeded
from core.gauss_code import canonical_key, find_violation


class TestExhaustive(unittest.TestCase):
    """Test all_codes"""

    def test_counts(self):
        """Test (2n-1)!! * 4^n codes per chord count"""
        for n, expected in ((0, 1), (1, 4), (2, 48), (3, 960)):
            self.assertEqual(exhaustive_count(n), expected)
            self.assertEqual(sum(1 for _ in all_codes(n)), expected)

    def test_double_factorial(self):
        """Test small double factorials"""
        self.assertEqual(double_factorial(-1), 1)
        self.assertEqual(double_factorial(5), 15)

    def test_distinct_and_valid(self):
        """Test codes are valid and pairwise distinct"""
        codes = list(all_codes(2))
        self.assertEqual(len({str(c) for c in codes}), len(codes))
        for code in codes:
            self.assertIsNone(find_violation(code))
            self.assertEqual(str(code), canonical_key(code))

    def test_one_chord_codes(self):
        """Test the four one-chord codes in order"""
        self.assertEqual([str(c) for c in all_codes(1)], ["O1+U1+", "O1-U1-", "U1+O1+", "U1-O1-"])

    def test_ceiling(self):
        """Test exhaustive runs above the ceiling are refused"""
        with self.assertRaises(CeilingExceeded):
            next(all_codes(4))
        self.assertEqual(sum(1 for _ in all_codes(1, ceiling=1)), 4)

    def test_negative(self):
        """Test a negative chord count"""
        with self.assertRaises(ValueError):
            next(all_codes(-1))


class TestRandom(unittest.TestCase):
    """Test random_code"""

    def test_reproducible(self):
        """Test one seed gives one code"""
        self.assertEqual(random_code(6, 42), random_code(6, 42))

    def test_valid_and_normalized(self):
        """Test random codes are valid with first-appearance labels"""
        for seed in range(20):
            code = random_code(5, seed)
            self.assertEqual(code.n, 5)
            self.assertIsNone(find_violation(code))
            self.assertEqual(str(code), canonical_key(code))

    def test_zero_chords(self):
        """Test the empty random code"""
        self.assertEqual(len(random_code(0, 7)), 0)


class TestCorpus(unittest.TestCase):
    """Test corpus specifications"""

    def test_exhaustive_range(self):
        """Test chord ranges add up"""
        self.assertEqual(sum(1 for _ in corpus(CorpusSpec.exhaustive(2, min_chords=1))), 52)
        self.assertEqual(sum(1 for _ in corpus(CorpusSpec.exhaustive(3, min_chords=1))), 1012)

    def test_dedupe(self):
        """Test dedupe keeps the exhaustive corpus, which is already canonical"""
        spec = CorpusSpec.exhaustive(2, dedupe=True)
        self.assertEqual(sum(1 for _ in corpus(spec)), 48)

    def test_random_corpus(self):
        """Test random corpora are reproducible and in range"""
        spec = CorpusSpec.random(8, count=25, seed=3, min_chords=1)
        first = list(corpus(spec))
        self.assertEqual(first, list(corpus(spec)))
        self.assertEqual(len(first), 25)
        self.assertTrue(all(1 <= code.n <= 8 for code in first))

    def test_unknown_mode(self):
        """Test an unknown corpus mode"""
        with self.assertRaises(ValueError):
            list(corpus(CorpusSpec("sorted", 2)))


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
