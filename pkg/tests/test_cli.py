"""
Integration Tests for the command-line front door
"""
import io
import json
import tempfile
import unittest
import sys
from pathlib import Path

# Add parent directory to path
sys.path.insert(0, str(Path(__file__).parent.parent))

from cli.cli import CLI, ExitStatus

E3 = "O1+U2+O3+U1+O2+U3+"


class CLITestCase(unittest.TestCase):
    """Runs the CLI against a captured stdout and an empty environment"""

    def setUp(self):
        self.tmp = tempfile.TemporaryDirectory()
        self.dir = Path(self.tmp.name)

    def tearDown(self):
        self.tmp.cleanup()

    def run_cli(self, *argv, env=None):
        out = io.StringIO()
        status = CLI(stdout=out, env=env or {}).run(list(argv))
        return status, out.getvalue()

    def lines(self, output):
        return [json.loads(line) for line in output.splitlines() if line.strip()]

    def write(self, name, text):
        path = self.dir / name
        path.write_text(text, encoding="utf-8")
        return str(path)


class TestValidate(CLITestCase):
    """Test the validate subcommand"""

    def test_valid_file(self):
        """Test a file of valid codes"""
        status, out = self.run_cli("validate", self.write("ok.txt", "O1+U1+\n"))
        self.assertEqual(status, ExitStatus.SUCCESS)
        self.assertTrue(self.lines(out)[0]["ok"])

    def test_invalid_line(self):
        """Test an invalid line is reported and fails the run"""
        status, out = self.run_cli("validate", self.write("bad.txt", "O1+O1+\n"))
        self.assertEqual(status, ExitStatus.INVALID_INPUT)
        record = self.lines(out)[0]
        self.assertEqual(record["record"], 1)
        self.assertEqual(record["error"], "ChordArity")

    def test_empty_file(self):
        """Test an empty file has zero records"""
        status, out = self.run_cli("validate", self.write("empty.txt", ""))
        self.assertEqual(status, ExitStatus.SUCCESS)
        self.assertEqual(out, "")

    def test_json_array(self):
        """Test a JSON array of strings and passage objects"""
        payload = json.dumps(["U1+O1+", {"passages": [
            {"chord": 1, "role": "O", "sign": 1}, {"chord": 1, "role": "U", "sign": 1}]}])
        status, out = self.run_cli("validate", self.write("codes.json", payload))
        self.assertEqual(status, ExitStatus.SUCCESS)
        self.assertEqual([r["code"] for r in self.lines(out)], ["U1+O1+", "O1+U1+"])

    def test_no_input(self):
        """Test a run without a file or --code"""
        status, _ = self.run_cli("validate")
        self.assertEqual(status, ExitStatus.INVALID_INPUT)

    def test_missing_file(self):
        """Test an unreadable input file"""
        status, out = self.run_cli("validate", str(self.dir / "missing.txt"))
        self.assertEqual(status, ExitStatus.INVALID_INPUT)
        self.assertEqual(self.lines(out)[0]["error"], "InputError")


class TestInvariants(CLITestCase):
    """Test the invariants subcommand"""

    def test_report(self):
        """Test the report of E3"""
        status, out = self.run_cli("invariants", "--code", E3)
        self.assertEqual(status, ExitStatus.SUCCESS)
        row = self.lines(out)[0]
        self.assertEqual((row["cr"], row["d"], row["alternating"]), (3, 1, True))

    def test_check(self):
        """Test --check adds a passing property summary"""
        status, out = self.run_cli("invariants", "--code", E3, "--code", "O1+O2+U1+U2+", "--check")
        self.assertEqual(status, ExitStatus.SUCCESS)
        summary = self.lines(out)[-1]
        self.assertEqual(summary["verdict"], "PASSED")
        self.assertEqual(summary["codes_checked"], 2)


class TestSimplify(CLITestCase):
    """Test simplify and verify-cert"""

    def test_certificate_round_trip(self):
        """Test a written certificate verifies from its file"""
        cert_path = str(self.dir / "cert.json")
        status, out = self.run_cli("simplify", "--code", "U1+O1+", "--cert-out", cert_path)
        self.assertEqual(status, ExitStatus.SUCCESS)
        self.assertEqual(self.lines(out)[0]["status"], "Trivial")

        status, out = self.run_cli("verify-cert", cert_path)
        self.assertEqual(status, ExitStatus.SUCCESS)
        row = self.lines(out)[0]
        self.assertTrue(row["ok"])
        self.assertEqual(row["final"], "")

    def test_unknown_verdict(self):
        """Test an exhausted budget exits inconclusive"""
        status, out = self.run_cli("simplify", "--code", E3, "--max-nodes", "1")
        self.assertEqual(status, ExitStatus.INCONCLUSIVE)
        self.assertEqual(self.lines(out)[0]["status"], "Unknown")

    def test_base_not_descending(self):
        """Test --base on a class with warping crossings"""
        status, out = self.run_cli("simplify", "--code", E3, "--base", "0")
        self.assertEqual(status, ExitStatus.INVALID_INPUT)
        self.assertEqual(self.lines(out)[0]["error"], "NotDescending")

    def test_tampered_certificate(self):
        """Test verify-cert rejects a changed key"""
        cert_path = str(self.dir / "cert.json")
        self.run_cli("simplify", "--code", "O1+O2+U1+U2+", "--cert-out", cert_path)
        data = json.loads(Path(cert_path).read_text())
        data["steps"][1]["key"] = "O1-U1-"
        Path(cert_path).write_text(json.dumps(data))

        status, out = self.run_cli("verify-cert", cert_path)
        self.assertEqual(status, ExitStatus.INCONCLUSIVE)
        row = self.lines(out)[0]
        self.assertEqual((row["error"], row["index"]), ("KeyMismatch", 1))

    def test_deterministic_output(self):
        """Test two identical runs print identical bytes"""
        first = self.run_cli("simplify", "--code", E3)
        second = self.run_cli("simplify", "--code", E3)
        self.assertEqual(first, second)


class TestUnknot(CLITestCase):
    """Test unknot and closure"""

    def test_search(self):
        """Test E3 needs no crossing change"""
        status, out = self.run_cli("unknot", "--code", E3, "--op", "change", "--max-k", "2")
        self.assertEqual(status, ExitStatus.SUCCESS)
        self.assertEqual(self.lines(out)[0]["upper_bound"], 0)

    def test_warping_only(self):
        """Test the warping witness bound of E3"""
        status, out = self.run_cli("unknot", "--code", E3, "--op", "virtualize", "--warping-only")
        self.assertEqual(status, ExitStatus.SUCCESS)
        row = self.lines(out)[0]
        self.assertEqual((row["upper_bound"], row["chords"]), (1, [2]))
        self.assertEqual(row["modifications"], 1)

    def test_unknot_deterministic(self):
        """Test two identical unknot runs print identical bytes"""
        for extra in ([], ["--warping-only"]):
            first = self.run_cli("unknot", "--code", E3, "--op", "change", *extra)
            second = self.run_cli("unknot", "--code", E3, "--op", "change", *extra)
            self.assertEqual(first, second)

    def test_negative_max_k(self):
        """Test a negative --max-k is a configuration error"""
        status, _ = self.run_cli("unknot", "--code", E3, "--max-k", "-1")
        self.assertEqual(status, ExitStatus.CONFIG_ERROR)

    def test_closure(self):
        """Test closure data of E3"""
        status, out = self.run_cli("closure", "--code", E3)
        self.assertEqual(status, ExitStatus.SUCCESS)
        row = self.lines(out)[0]
        self.assertEqual((row["cyclic_d"], row["monotone_closure"]), (1, False))


class TestEnumerateAndCheck(CLITestCase):
    """Test enumerate, check and configuration failures"""

    def test_enumerate(self):
        """Test the one-chord codes"""
        status, out = self.run_cli("enumerate", "--chords", "1")
        self.assertEqual(status, ExitStatus.SUCCESS)
        self.assertEqual(out.split(), ["O1+U1+", "O1-U1-", "U1+O1+", "U1-O1-"])

    def test_enumerate_ceiling(self):
        """Test exhaustive enumeration above the ceiling"""
        status, out = self.run_cli("enumerate", "--chords", "4")
        self.assertEqual(status, ExitStatus.CONFIG_ERROR)
        self.assertEqual(self.lines(out)[0]["error"], "CeilingExceeded")

    def test_enumerate_random(self):
        """Test seeded random enumeration is reproducible"""
        first = self.run_cli("enumerate", "--chords", "6", "--random", "5", "--seed", "9")
        second = self.run_cli("enumerate", "--chords", "6", "--random", "5", "--seed", "9")
        self.assertEqual(first, second)
        self.assertEqual(len(first[1].split()), 5)

    def test_check_suite(self):
        """Test the reverse-sum suite over every code up to three chords"""
        status, out = self.run_cli("check", "--suite", "lemma41", "--chords", "3")
        self.assertEqual(status, ExitStatus.SUCCESS)
        result = self.lines(out)[0]
        self.assertEqual(result["verdict"], "PASSED")
        self.assertEqual(result["codes_checked"], 1012)

    def test_bad_environment(self):
        """Test a malformed environment budget"""
        status, out = self.run_cli("simplify", "--code", E3, env={"PLUSWELD_MAX_NODES": "0"})
        self.assertEqual(status, ExitStatus.CONFIG_ERROR)
        self.assertEqual(self.lines(out)[0]["error"], "ConfigError")

    def test_version(self):
        """Test the version banner"""
        status, out = self.run_cli("version")
        self.assertEqual(status, ExitStatus.SUCCESS)
        self.assertIn("Plusweld", out)


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
