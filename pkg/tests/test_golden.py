import unittest
from pathlib import Path

from motivicpv.golden import matches, run_golden

GOLDEN = Path(__file__).resolve().parent.parent / "spec" / "motivicpv_golden_v0.1.json"


class TestGolden(unittest.TestCase):

    def test_golden_vectors(self):
        failures, report = run_golden(str(GOLDEN))
        failing = [r["test_id"] for r in report["results"] if r["status"] != "PASS"]
        self.assertEqual(failing, [])
        self.assertEqual(failures, 0)
        self.assertEqual(report["total"], 23)

    def test_subset_matching(self):
        self.assertTrue(matches({"a": 1}, {"a": 1, "b": 2}))
        self.assertFalse(matches({"a": [1]}, {"a": [1, 2]}))
        self.assertTrue(matches({"pv": {"num": []}}, {"pv": {"q": 1, "num": [], "den": [[0, 1]]}}))
        self.assertFalse(matches({"c": 1}, {"a": 1}))


if __name__ == "__main__":
    unittest.main()
