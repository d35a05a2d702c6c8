import unittest

from motivicpv.arrangement import parse_arrangement
from motivicpv.conformance.corpus import (
    CORPORA,
    CorpusEntry,
    boolean,
    corpus_by_name,
    default_corpus,
    generic_corpus,
    indecomposable_corpus,
    non_essential_corpus,
    pencil,
    product_corpus,
    tags_for,
)
from motivicpv.conformance.suite import run_arrangement_checks, run_identity_checks, run_theorem_suite
from motivicpv.models import CORPUS_NAMES


def entry(name, arrangement):
    return CorpusEntry(name=name, arrangement=arrangement, tags=tags_for(arrangement))


class TestCorpus(unittest.TestCase):

    def test_sizes(self):
        self.assertEqual(len(product_corpus()), 10)
        self.assertEqual(len(non_essential_corpus()), 6)
        self.assertEqual(len(indecomposable_corpus()), 6)
        self.assertEqual(len(default_corpus()), 22)
        names = [e.name for e in generic_corpus((1,), (3, 4))]
        self.assertEqual(names, ["generic-2-3", "generic-2-4"])

    def test_tags(self):
        for e in product_corpus():
            self.assertIn("decomposable", e.tags, e.name)
        for e in non_essential_corpus():
            self.assertIn("non-essential", e.tags, e.name)
        for e in indecomposable_corpus():
            self.assertIn("indecomposable", e.tags, e.name)
        self.assertEqual(tags_for(pencil(3)), ("generic", "indecomposable"))
        self.assertEqual(tags_for(boolean(2)), ("generic", "decomposable"))

    def test_named_corpora(self):
        self.assertEqual(set(CORPORA), set(CORPUS_NAMES))
        self.assertEqual([e.name for e in corpus_by_name("product")], [e.name for e in product_corpus()])
        generic = [e.name for e in corpus_by_name("generic")]
        self.assertEqual(len(generic), 18)
        self.assertIn("generic-4-7", generic)
        self.assertEqual(len(corpus_by_name("all")), 22 + 18)

    def test_pencil_shape(self):
        self.assertEqual(pencil(4).normals, ((0, 1), (1, 0), (1, 1), (1, 2)))


class TestSuite(unittest.TestCase):

    def assertAllPass(self, records):
        failed = [r for r in records if r["status"] != "PASS"]
        self.assertEqual(failed, [])

    def test_indecomposable_entry(self):
        records = run_arrangement_checks(entry("pencil-3", pencil(3)), samples=3, primes=(11,))
        self.assertAllPass(records)
        checks = {r["check"] for r in records}
        for name in ("resolution-class", "point-count", "formal-nonzero", "positive-witness", "pole-witness",
                     "generic-equivalence", "generic-nonvanishing"):
            self.assertIn(name, checks)

    def test_decomposable_entry(self):
        records = run_arrangement_checks(entry("boolean-2", boolean(2)), samples=3, primes=(11,))
        self.assertAllPass(records)
        checks = {r["check"] for r in records}
        self.assertIn("decomposable-formal-vanishing", checks)
        self.assertIn("generic-vanishing", checks)

    def test_non_essential_entry(self):
        records = run_arrangement_checks(entry("line", parse_arrangement(2, [[1, 0]])), samples=3, primes=(11,))
        self.assertAllPass(records)
        self.assertIn("non-essential-pv-vanishing", {r["check"] for r in records})

    def test_product_entry(self):
        product = next(e for e in product_corpus() if e.name == "pencil-3 x C")
        self.assertEqual(product.split, 2)
        records = run_arrangement_checks(product, samples=2, primes=(11,))
        self.assertAllPass(records)
        checks = {r["check"] for r in records}
        for name in ("concentrated-vanishing", "closed-strata-superchains", "stratum-factorization",
                     "pole-reduction", "pole-substitution"):
            self.assertIn(name, checks)

    def test_strata_checks_on_indecomposable_entries(self):
        for e in [c for c in indecomposable_corpus() if c.name in ("pencil-4", "generic-3-4")]:
            records = [
                r for r in run_arrangement_checks(e, samples=1, primes=(11,))
                if r["check"] in ("closed-strata-superchains", "stratum-factorization", "pole-substitution")
            ]
            self.assertEqual(len(records), 3, e.name)
            self.assertAllPass(records)

    def test_identities(self):
        records = run_identity_checks(n_max=3, d_max=5)
        self.assertEqual([r["check"] for r in records], ["g-identity", "f-recurrence"])
        self.assertAllPass(records)

    def test_report(self):
        failures, report = run_theorem_suite([entry("pencil-3", pencil(3))], samples=2, primes=(11,), identities=False)
        self.assertEqual(failures, 0)
        self.assertEqual(report["cases"], [{"name": "pencil-3", "tags": ["generic", "indecomposable"]}])
        self.assertEqual(report["total"], len(report["results"]))


if __name__ == "__main__":
    unittest.main()
