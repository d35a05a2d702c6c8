import random
import unittest

from sympy import Rational

from motivicpv.arrangement import b_coefficient, edge_lattice, parse_arrangement
from motivicpv.conformance.corpus import boolean, pencil
from motivicpv.errors import Decomposable, DimensionMismatch, InvalidExponent, NotEssential
from motivicpv.formal import formal_pv, specialize
from motivicpv.models import ExponentVector
from motivicpv.puiseux import T, PuiseuxRational
from motivicpv.zeta import (
    genericity_witness_search,
    make_multiplicities,
    nd_pole_check,
    numerically_generic_locus,
    residue_exponents,
)

THREE_LINES = pencil(3)


class TestResidueExponents(unittest.TestCase):

    def test_three_lines(self):
        alpha = residue_exponents(THREE_LINES, make_multiplicities([1, 1, 1]))
        lattice = edge_lattice(THREE_LINES)
        for w in lattice.S:
            self.assertEqual(alpha[w], Rational(1, 3))
        self.assertEqual(alpha[lattice.origin], 0)

    def test_length_mismatch(self):
        with self.assertRaises(DimensionMismatch):
            residue_exponents(THREE_LINES, make_multiplicities([1, 1]))

    def test_make_multiplicities(self):
        self.assertEqual(make_multiplicities([3, 1]).m, (3, 1))
        for bad in ([1, 0], [True, 1], ["2", 1], [1.5]):
            with self.assertRaises(InvalidExponent):
                make_multiplicities(bad)

    def test_b_agrees_with_alpha(self):
        m = make_multiplicities([3, 1, 2, 5])
        a4 = pencil(4)
        ratio = Rational(a4.ambient_dim, sum(m.m))
        a = [1 - ratio * x for x in m.m]
        alpha = residue_exponents(a4, m)
        for w in edge_lattice(a4).S:
            self.assertEqual(b_coefficient(a4, w, a), alpha[w])


class TestPoleCertificate(unittest.TestCase):

    def test_generic_multiplicities(self):
        cert = nd_pole_check(THREE_LINES, make_multiplicities([1, 1, 1]))
        self.assertTrue(cert.generic)
        self.assertEqual(cert.candidate_pole, Rational(-2, 3))
        self.assertEqual(cert.residue, PuiseuxRational(3, (1 + T) ** 3 / T ** 3))
        self.assertIs(cert.is_pole, True)
        self.assertEqual(cert.to_json()["candidate_pole"], "-2/3")

    def test_degenerate_multiplicities(self):
        cert = nd_pole_check(THREE_LINES, make_multiplicities([2, 1, 1]))
        self.assertFalse(cert.generic)
        self.assertIsNone(cert.is_pole)
        self.assertIsNone(cert.residue)
        self.assertEqual([w.containing for w in cert.degenerate_edges], [(0,)])
        self.assertEqual(cert.to_json()["is_pole"], "indeterminate")

    def test_residue_is_specialized_formal_value(self):
        m = make_multiplicities([2, 3, 2, 1])
        a4 = pencil(4)
        cert = nd_pole_check(a4, m)
        self.assertTrue(cert.generic)
        ratio = Rational(a4.ambient_dim, sum(m.m))
        a = ExponentVector(a=tuple(1 - ratio * x for x in m.m))
        expected = specialize(formal_pv(a4), a) / PuiseuxRational.lpower(a4.n)
        self.assertEqual(cert.residue, expected)

    def test_hypotheses(self):
        with self.assertRaises(Decomposable):
            nd_pole_check(boolean(2), make_multiplicities([1, 1]))
        with self.assertRaises(NotEssential):
            nd_pole_check(parse_arrangement(3, [[0, 1, 0], [0, 0, 1], [0, 1, 1]]), make_multiplicities([1, 1, 1]))


class TestWitnessSearch(unittest.TestCase):

    def test_exhaustive_three_lines(self):
        report = genericity_witness_search(THREE_LINES, 3)
        self.assertTrue(report.exhaustive)
        self.assertEqual(report.scanned, 27)
        self.assertEqual(report.non_generic, 9)
        self.assertEqual(report.non_generic_fraction, Rational(1, 3))
        self.assertLessEqual(len(report.witnesses), 18)
        self.assertIn((1, 1, 1), [m.m for m in report.witnesses])

    def test_witnesses_are_certified(self):
        report = genericity_witness_search(pencil(4), 2)
        self.assertEqual(report.scanned, 16)
        for m in report.witnesses:
            cert = nd_pole_check(pencil(4), m)
            self.assertTrue(cert.generic)
            self.assertTrue(cert.is_pole)

    def test_sampled_when_box_is_large(self):
        report = genericity_witness_search(pencil(4), 9, rng=random.Random(7), samples=5)
        self.assertFalse(report.exhaustive)
        self.assertEqual(report.scanned, 5)
        again = genericity_witness_search(pencil(4), 9, rng=random.Random(7), samples=5)
        self.assertEqual(report.to_json(), again.to_json())

    def test_locus_forms(self):
        forms = dict((w.containing, c) for w, c in numerically_generic_locus(THREE_LINES))
        self.assertEqual(forms[(0,)], (-1, 1, 1))
        m = (2, 1, 1)
        self.assertEqual(sum(x * y for x, y in zip(forms[(0,)], m)), 0)


if __name__ == "__main__":
    unittest.main()
