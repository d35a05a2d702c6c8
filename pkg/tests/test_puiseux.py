import unittest

from sympy import Rational

from motivicpv.errors import NegativeExponentDetected, NonIntegralCoefficient, ParseError
from motivicpv.puiseux import T, TFIELD, PuiseuxRational, common_root_order


def L(exponent=1):
    return PuiseuxRational.lpower(Rational(exponent))


class TestArithmetic(unittest.TestCase):

    def test_root_order_is_minimal(self):
        x = PuiseuxRational(4, T**2 + 1)
        self.assertEqual(x.q, 2)
        self.assertEqual(L("1/2") * L("1/2"), L(1))
        self.assertEqual((L("1/2") * L("1/2")).q, 1)

    def test_binomial_quotient(self):
        self.assertEqual((L() - 1) / (L("1/2") - 1), L("1/2") + 1)
        self.assertEqual((L() - 1) / (L("1/4") - 1), L("3/4") + L("1/2") + L("1/4") + 1)

    def test_refine(self):
        x = L("1/2") + 3
        self.assertEqual(x.refine(4), T**2 + 3)
        with self.assertRaises(ValueError):
            x.refine(3)

    def test_integers_and_zero(self):
        self.assertEqual(PuiseuxRational.from_int(3), 3)
        self.assertTrue((L("1/3") - L("1/3")).is_zero())
        self.assertEqual(PuiseuxRational.zero().q, 1)
        self.assertEqual(2 - L(), -(L() - 2))
        with self.assertRaises(ZeroDivisionError):
            L() / PuiseuxRational.zero()

    def test_powers(self):
        self.assertEqual((L("1/3") + 1) ** 2, L("2/3") + 2 * L("1/3") + 1)
        self.assertEqual(L("1/2") ** -2, L(-1))

    def test_unhashable(self):
        with self.assertRaises(TypeError):
            hash(L())

    def test_common_root_order(self):
        self.assertEqual(common_root_order(["1/2", "1/3", 2]), 6)


class TestSeries(unittest.TestCase):

    def test_geometric(self):
        x = PuiseuxRational(1, TFIELD.one / (1 - T))
        self.assertEqual(x.series(4), [1, 1, 1, 1])

    def test_polynomial(self):
        x = (L("1/2") + 1) ** 2
        self.assertEqual(x.q, 2)
        self.assertEqual(x.series(5), [1, 2, 1, 0, 0])

    def test_zero(self):
        self.assertEqual(PuiseuxRational.zero().series(3), [0, 0, 0])

    def test_valuation(self):
        self.assertEqual((L(2) + L(3)).valuation(), 2)

    def test_negative_exponent(self):
        with self.assertRaises(NegativeExponentDetected):
            L(-1).series(3)

    def test_non_integral(self):
        with self.assertRaises(NonIntegralCoefficient):
            PuiseuxRational(1, TFIELD.one / (2 - T)).series(2)


class TestJson(unittest.TestCase):

    def test_layout(self):
        doc = (L("1/4") + 1).to_json()
        self.assertEqual(doc["q"], 4)
        self.assertEqual(doc["num"], [[0, 1], [1, 1]])
        self.assertEqual(doc["den"], [[0, 1]])
        self.assertIn("L^(1/4)", doc["pretty"])

    def test_reparse(self):
        x = (L("1/2") + 1) / (L("1/3") - 1)
        self.assertEqual(PuiseuxRational.from_json(x.to_json()), x)

    def test_malformed(self):
        with self.assertRaises(ParseError):
            PuiseuxRational.from_json({"q": 1, "num": [[0, 1]]})
        with self.assertRaises(ParseError):
            PuiseuxRational.from_json({"q": 1, "num": [[0, 1]], "den": []})


if __name__ == "__main__":
    unittest.main()
