import json
import tempfile
import unittest
from pathlib import Path

from sympy import Rational

from motivicpv.errors import ParseError
from motivicpv.loaders import load_job, load_json, load_options, parse_rational
from motivicpv.models import Command


def job(**extra):
    doc = {"command": "pv", "ambient_dim": 2, "hyperplanes": [[1, 0], [0, 1], [1, 1]], "exponents": ["1/2", "1/4", "1/4"]}
    doc.update(extra)
    return doc


class TestParseRational(unittest.TestCase):

    def test_forms(self):
        self.assertEqual(parse_rational("2/4"), Rational(1, 2))
        self.assertEqual(parse_rational(" -3 "), Rational(-3))
        self.assertEqual(parse_rational("−1/3"), Rational(-1, 3))
        self.assertEqual(parse_rational(5), Rational(5))

    def test_rejects(self):
        for bad in ("1/0", "abc", "1.5", "", True, 0.5, None):
            with self.assertRaises(ParseError):
                parse_rational(bad)
        with self.assertRaisesRegex(ParseError, "zero denominator"):
            parse_rational("3/0")


class TestLoadJob(unittest.TestCase):

    def test_basic(self):
        spec = load_job(job())
        self.assertEqual(spec.command, Command.PV)
        self.assertEqual(spec.hyperplanes, ((1, 0), (0, 1), (1, 1)))
        self.assertEqual(spec.exponents.a, (Rational(1, 2), Rational(1, 4), Rational(1, 4)))
        self.assertEqual(spec.options.seed, 0)

    def test_command_argument_wins(self):
        spec = load_job(job(), command="formal")
        self.assertEqual(spec.command, Command.FORMAL)

    def test_missing_fields(self):
        doc = job()
        del doc["command"]
        with self.assertRaisesRegex(ParseError, "command"):
            load_job(doc)
        with self.assertRaisesRegex(ParseError, "needs exponents"):
            load_job(job(exponents=None))
        with self.assertRaisesRegex(ParseError, "needs multiplicities"):
            load_job(job(command="ndpole"))
        with self.assertRaises(ParseError):
            load_job({"command": "edges", "hyperplanes": [[1]]})

    def test_bad_values(self):
        with self.assertRaises(ParseError):
            load_job(job(command="integrate"))
        with self.assertRaises(ParseError):
            load_job(job(hyperplanes=[[1, 0.5]]))
        with self.assertRaises(ParseError):
            load_job(job(command="ndpole", multiplicities=[1, 0, 1]))

    def test_corpus_check_without_arrangement(self):
        spec = load_job({"command": "check", "options": {"corpus": "product"}})
        self.assertIsNone(spec.hyperplanes)
        self.assertEqual(spec.options.corpus, "product")
        options = {"samples": 20, "seed": 0, "bound": 3, "corpus": "product"}
        self.assertEqual(spec.to_json(), {"command": "check", "options": options})
        spec = load_job({"options": {"samples": 2}}, command="check", overrides={"corpus": "generic"})
        self.assertEqual(spec.options.corpus, "generic")
        with self.assertRaisesRegex(ParseError, "Missing required fields"):
            load_job({"command": "edges", "options": {"corpus": "product"}})
        with self.assertRaisesRegex(ParseError, "Missing required fields"):
            load_job({"command": "check"})

    def test_from_path_and_string(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp) / "job.json"
            path.write_text(json.dumps(job()), encoding="utf-8")
            self.assertEqual(load_job(path), load_job(str(path)))
        self.assertEqual(load_job(json.dumps(job())).command, Command.PV)
        with self.assertRaises(ParseError):
            load_json("/nonexistent/job.json")
        with self.assertRaises(ParseError):
            load_json("[1, 2]")


class TestOptions(unittest.TestCase):

    def test_overrides(self):
        opts = load_options({"seed": 3, "samples": 4}, {"seed": 9, "samples": None})
        self.assertEqual(opts.seed, 9)
        self.assertEqual(opts.samples, 4)
        self.assertEqual(opts.bound, 3)
        self.assertIsNone(opts.truncation)

    def test_delta(self):
        self.assertEqual(load_options({"delta": "1/100"}).delta, Rational(1, 100))
        with self.assertRaises(ParseError):
            load_options({"delta": "-1/2"})

    def test_corpus(self):
        self.assertIsNone(load_options({}).corpus)
        self.assertEqual(load_options({"corpus": "all"}).corpus, "all")
        with self.assertRaisesRegex(ParseError, "unknown corpus"):
            load_options({"corpus": "everything"})

    def test_invalid(self):
        with self.assertRaises(ParseError):
            load_options({"samples": 0})
        with self.assertRaises(ParseError):
            load_options({"bound": "3"})
        with self.assertRaises(ParseError):
            load_options([1])


if __name__ == "__main__":
    unittest.main()
