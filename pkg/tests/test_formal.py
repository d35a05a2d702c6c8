import random
import unittest

from sympy import Matrix

from motivicpv.arrangement import edge_lattice, generic_arrangement, parse_arrangement, product_arrangement
from motivicpv.classes import stratum_class
from motivicpv.conformance.corpus import boolean, pencil
from motivicpv.errors import IntegerDirection, LogarithmicPole, MotivicPVError, NotAChain
from motivicpv.formal import (
    formal_is_zero,
    formal_pv,
    is_pole,
    melem_for_edge,
    multiplicity,
    numerator_vanishes_along,
    poles,
    reduce_formal,
    specialize,
)
from motivicpv.laurent import LaurentMulti, MElem, binomial, coordinate_change, divide_binomial
from motivicpv.puiseux import T, PuiseuxRational
from motivicpv.pv import make_exponents, pv_integral, random_exponents
from motivicpv.tools.linalg import unimodular_completion

THREE_LINES = parse_arrangement(2, [[1, 0], [0, 1], [1, 1]])
LINE = parse_arrangement(2, [[1, 0]])


def edge_on(arrangement, containing):
    return next(e for e in edge_lattice(arrangement).S if e.containing == tuple(containing))


class TestMElem(unittest.TestCase):

    def test_hyperplane_directions(self):
        self.assertEqual(melem_for_edge(THREE_LINES, edge_on(THREE_LINES, (0,))).coeffs, (1, 1, 0))
        # 1 + s_2 == -1 - s_1 modulo 2 + s_1 + s_2
        self.assertEqual(melem_for_edge(boolean(2), edge_on(boolean(2), (1,))).coeffs, (-1, -1))

    def test_kernel_direction_is_integral(self):
        c = melem_for_edge(LINE, edge_lattice(LINE).S[0])
        self.assertTrue(c.is_integer())
        self.assertEqual(c.coeffs, (-1,))

    def test_evaluate(self):
        c = melem_for_edge(THREE_LINES, edge_on(THREE_LINES, (2,)))
        a = make_exponents(["1/2", "1/4", "1/4"])
        self.assertEqual(c.evaluate(a.a), a.a[2])


class TestLaurent(unittest.TestCase):

    def test_unimodular_completion(self):
        for v in ((1, 1, 0), (-1, -1, -1), (3, 5), (2, -3, 7)):
            u = unimodular_completion(v)
            self.assertIn(u.det(), (1, -1))
            image = u * Matrix(v)
            self.assertEqual(list(image), [1] + [0] * (len(v) - 1))
        with self.assertRaises(MotivicPVError):
            unimodular_completion((2, 4))

    def test_integer_direction_has_no_change(self):
        with self.assertRaises(IntegerDirection):
            coordinate_change(MElem(coeffs=(2, 0, 0)))

    def test_divide_binomial(self):
        c1, c2 = MElem(coeffs=(1, 1, 0)), MElem(coeffs=(-1, -1, -1))
        g = binomial(c1) * binomial(c2)
        self.assertEqual(divide_binomial(g, c1), binomial(c2))
        self.assertIsNone(divide_binomial(binomial(c2), c1))

    def test_divide_by_integer_binomial(self):
        g = binomial(MElem(coeffs=(2, 0)))
        self.assertEqual(divide_binomial(g, MElem(coeffs=(2, 0))), LaurentMulti.one(2))
        self.assertEqual(divide_binomial(g, MElem(coeffs=(-2, 0))), LaurentMulti.monomial((2, 0), -1))
        self.assertIsNone(divide_binomial(LaurentMulti.monomial((1, 1)), MElem(coeffs=(1, 0))))

    def test_laurent_offsets(self):
        x = LaurentMulti.monomial((-1, 2)) + LaurentMulti.monomial((3, -1))
        self.assertEqual(x.terms(), {(-1, 2): 1, (3, -1): 1})
        self.assertTrue((x - x).is_zero())


class TestFormal(unittest.TestCase):

    def test_vanishing(self):
        self.assertTrue(formal_is_zero(formal_pv(boolean(2))))
        self.assertTrue(formal_is_zero(formal_pv(LINE)))
        self.assertTrue(formal_is_zero(formal_pv(product_arrangement(pencil(3), boolean(1)))))
        self.assertFalse(formal_is_zero(formal_pv(THREE_LINES)))

    def test_poles(self):
        f = formal_pv(THREE_LINES)
        v1 = edge_on(THREE_LINES, (0,))
        self.assertEqual(multiplicity(f, v1), 1)
        self.assertTrue(is_pole(f, v1))
        self.assertIn(v1, poles(f))
        self.assertIsNone(reduce_formal(f))

    def test_no_poles_when_zero(self):
        f = formal_pv(product_arrangement(pencil(3), boolean(1)))
        self.assertEqual(poles(f), [])
        self.assertTrue(reduce_formal(f).is_zero())
        self.assertEqual(poles(formal_pv(boolean(2))), [])

    def test_kappa_counts_opposite_directions(self):
        f = formal_pv(boolean(2))
        for w in edge_lattice(boolean(2)).S:
            self.assertEqual(multiplicity(f, w), 2)

    def test_edge_outside_s(self):
        f = formal_pv(THREE_LINES)
        with self.assertRaises(NotAChain):
            multiplicity(f, edge_lattice(THREE_LINES).top)

    def test_specialize(self):
        f = formal_pv(THREE_LINES)
        value = specialize(f, make_exponents(["1/2", "1/4", "1/4"]))
        self.assertEqual(value, PuiseuxRational(4, (T**2 + T + 1) ** 2))
        with self.assertRaises(LogarithmicPole):
            specialize(f, make_exponents([0, "1/2", "1/2"]))
        self.assertTrue(specialize(formal_pv(boolean(2)), make_exponents(["1/2", "-1/2"])).is_zero())

    def test_specialize_matches_pv(self):
        rng = random.Random(2)
        scale = PuiseuxRational.lpower(1)
        for a in (THREE_LINES, pencil(4)):
            f = formal_pv(a)
            for u in random_exponents(a, rng, 3):
                self.assertEqual(specialize(f, u), pv_integral(a, u) * scale)

    def test_numerator_is_the_chain_sum(self):
        pencil_times_line = product_arrangement(pencil(3), boolean(1))
        for a in (THREE_LINES, pencil(4), boolean(3), generic_arrangement(3, 4), pencil_times_line):
            lattice = edge_lattice(a)
            d = a.d
            l_minus_one = LaurentMulti.monomial((1,) + (0,) * (d - 1)) - LaurentMulti.one(d)
            expected = LaurentMulti.zero(d)
            for chain in lattice.chains():
                term = LaurentMulti.from_lpoly(stratum_class(a, chain), d)
                for _ in chain:
                    term = term * l_minus_one
                for w in lattice.S:
                    if w not in chain:
                        term = term * binomial(melem_for_edge(a, w))
                expected = expected + term
            self.assertEqual(formal_pv(a).numerator, expected, a)

    def test_simple_poles_match_substitution(self):
        for a in (THREE_LINES, pencil(4), generic_arrangement(3, 4), product_arrangement(pencil(3), boolean(1))):
            f = formal_pv(a)
            for w, c in f.denominator:
                if c.is_integer() or multiplicity(f, w) != 1:
                    continue
                self.assertNotEqual(is_pole(f, w), numerator_vanishes_along(f, w), w)


if __name__ == "__main__":
    unittest.main()
