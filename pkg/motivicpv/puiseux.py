"""
Exact elements of Q(t) with t = L^(1/q).

A value is stored as a reduced sympy rational function in t together with the
root order q, always deflated to the smallest q that can carry it, so two
values are equal exactly when their (q, numerator, denominator) agree.
"""
from __future__ import annotations

from functools import reduce
from typing import Any, Dict, List, Tuple, Union

from sympy import Rational, igcd, ilcm
from sympy.polys.domains import ZZ
from sympy.polys.fields import FracElement, field

from .errors import NegativeExponentDetected, NonIntegralCoefficient, ParseError

TFIELD, T = field("t", ZZ)
TRING = TFIELD.ring

Operand = Union["PuiseuxRational", int]


def _exponent_gcd(*polys) -> int:
    g = 0
    for p in polys:
        for (e,) in p.itermonoms():
            g = igcd(g, int(e))
    return g


def _scale_exponents(poly, num: int, den: int):
    out = TRING.zero
    for (e,), c in poly.iterterms():
        out[((int(e) * num) // den,)] = c
    return out


class PuiseuxRational:
    __slots__ = ("q", "value")

    def __init__(self, q: int, value: FracElement):
        q = int(q)
        if q < 1:
            raise ValueError("root order must be positive")
        numer, denom = value.numer, value.denom
        if not numer:
            q, value = 1, TFIELD.zero
        else:
            g = igcd(q, _exponent_gcd(numer, denom))
            if g > 1:
                numer = _scale_exponents(numer, 1, g)
                denom = _scale_exponents(denom, 1, g)
                value = TFIELD.new(numer, denom)
                q //= g
        self.q = q
        self.value = value

    # -------------------------
    # constructors
    # -------------------------
    @classmethod
    def zero(cls) -> "PuiseuxRational":
        return cls(1, TFIELD.zero)

    @classmethod
    def one(cls) -> "PuiseuxRational":
        return cls(1, TFIELD.one)

    @classmethod
    def from_int(cls, n: int) -> "PuiseuxRational":
        return cls(1, TFIELD.ground_new(int(n)))

    @classmethod
    def from_lpoly(cls, p) -> "PuiseuxRational":
        """Embed an integer polynomial in L (q = 1, so t = L)."""
        numer = TRING.zero
        for (e,), c in p.iterterms():
            numer[(int(e),)] = c
        return cls(1, TFIELD.new(numer, TRING.one))

    @classmethod
    def lpower(cls, exponent: Rational) -> "PuiseuxRational":
        """L^exponent for a rational exponent."""
        exponent = Rational(exponent)
        return cls(int(exponent.q), T ** int(exponent.p))

    # -------------------------
    # arithmetic
    # -------------------------
    def refine(self, q: int) -> FracElement:
        """The same value as a function of t' = L^(1/q); q must be a multiple of self.q."""
        if q % self.q:
            raise ValueError(f"{q} is not a multiple of {self.q}")
        k = q // self.q
        if k == 1:
            return self.value
        return TFIELD.raw_new(self.value.numer.inflate((k,)), self.value.denom.inflate((k,)))

    @staticmethod
    def _coerce(other: Operand) -> "PuiseuxRational":
        if isinstance(other, PuiseuxRational):
            return other
        if isinstance(other, int):
            return PuiseuxRational.from_int(other)
        return NotImplemented

    def _unify(self, other: "PuiseuxRational") -> Tuple[int, FracElement, FracElement]:
        q = int(ilcm(self.q, other.q))
        return q, self.refine(q), other.refine(q)

    def __add__(self, other: Operand) -> "PuiseuxRational":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        q, a, b = self._unify(other)
        return PuiseuxRational(q, a + b)

    __radd__ = __add__

    def __neg__(self) -> "PuiseuxRational":
        return PuiseuxRational(self.q, -self.value)

    def __sub__(self, other: Operand) -> "PuiseuxRational":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Operand) -> "PuiseuxRational":
        return (-self) + other

    def __mul__(self, other: Operand) -> "PuiseuxRational":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        q, a, b = self._unify(other)
        return PuiseuxRational(q, a * b)

    __rmul__ = __mul__

    def __truediv__(self, other: Operand) -> "PuiseuxRational":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        q, a, b = self._unify(other)
        return PuiseuxRational(q, a / b)

    def __pow__(self, n: int) -> "PuiseuxRational":
        return PuiseuxRational(self.q, self.value ** int(n))

    def __eq__(self, other: Any) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        q, a, b = self._unify(other)
        return a == b

    __hash__ = None  # type: ignore[assignment]

    def __bool__(self) -> bool:
        return not self.is_zero()

    def is_zero(self) -> bool:
        return not self.value.numer

    def __repr__(self) -> str:
        return f"PuiseuxRational(q={self.q}, {self.value})"

    # -------------------------
    # series view
    # -------------------------
    def valuation(self) -> int:
        """Order at t = 0 (in units of 1/q); zero has no valuation."""
        if self.is_zero():
            raise ValueError("zero has no valuation")
        return int(self.value.numer.tail_degree()) - int(self.value.denom.tail_degree())

    def series(self, order: int) -> List[int]:
        """
        Coefficients of t^0, ..., t^(order-1) of the expansion at t = 0.
        Negative exponents and non-integral coefficients are rejected.
        """
        order = max(1, int(order))
        if self.is_zero():
            return [0] * order
        v = self.valuation()
        if v < 0:
            raise NegativeExponentDetected(
                "expansion has a negative power of t", {"valuation": v, "q": self.q, "value": self.pretty()}
            )
        shift_n = int(self.value.numer.tail_degree())
        shift_d = int(self.value.denom.tail_degree())
        num = {int(e) - shift_n: int(c) for (e,), c in self.value.numer.iterterms()}
        den = {int(e) - shift_d: int(c) for (e,), c in self.value.denom.iterterms()}
        lead = den[0]

        unit: List[Rational] = []
        for k in range(order - v):
            acc = Rational(num.get(k, 0))
            for j in range(1, k + 1):
                if j in den:
                    acc -= den[j] * unit[k - j]
            unit.append(acc / lead)

        out = [0] * v + [c for c in unit]
        for k, c in enumerate(out[:order]):
            if Rational(c).q != 1:
                raise NonIntegralCoefficient(
                    "expansion has a non-integral coefficient", {"exponent": k, "coefficient": str(c), "q": self.q}
                )
        return [int(c) for c in out[:order]]

    # -------------------------
    # serialization
    # -------------------------
    def pretty(self) -> str:
        expr = self.value.as_expr()
        if self.q == 1:
            return str(expr).replace("t", "L")
        return f"{expr}  (t = L^(1/{self.q}))"

    def to_json(self) -> Dict[str, Any]:
        return {
            "q": self.q,
            "num": _terms_json(self.value.numer),
            "den": _terms_json(self.value.denom),
            "pretty": self.pretty(),
        }

    @classmethod
    def from_json(cls, doc: Dict[str, Any]) -> "PuiseuxRational":
        try:
            q = int(doc["q"])
            numer = _terms_poly(doc["num"])
            denom = _terms_poly(doc["den"])
        except (KeyError, TypeError, ValueError) as e:
            raise ParseError(f"malformed rational function: {e}") from e
        if not denom:
            raise ParseError("rational function with zero denominator")
        return cls(q, TFIELD.new(numer, denom))


def _terms_json(poly) -> List[List[int]]:
    return [[int(e), int(c)] for (e,), c in sorted(poly.iterterms())]


def _terms_poly(pairs) -> Any:
    out = TRING.zero
    for e, c in pairs:
        out += int(c) * TRING.gens[0] ** int(e)
    return out


def common_root_order(exponents) -> int:
    return int(reduce(ilcm, [Rational(x).q for x in exponents], 1))
