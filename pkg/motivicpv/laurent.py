"""
Laurent polynomials over the exponent group M = (Z + sum Z s_i) / Z (n+1+sum s_i).

M is identified with Z^d through the basis 1, s_1, ..., s_{d-1} (s_d is
eliminated), so L^m becomes the monomial u^m_0 v_1^m_1 ... v_{d-1}^m_{d-1}.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache, reduce
from typing import Any, Dict, Iterable, Sequence, Tuple

from sympy import Matrix, Rational, ilcm
from sympy.polys.domains import ZZ
from sympy.polys.polyerrors import ExactQuotientFailed
from sympy.polys.rings import PolyRing, ring

from .errors import IntegerDirection
from .puiseux import TFIELD, TRING, PuiseuxRational
from .tools.linalg import unimodular_completion

Monom = Tuple[int, ...]


@dataclass(frozen=True)
class MElem:
    """
    lambda_0 + lambda_1 s_1 + ... + lambda_{d-1} s_{d-1} in M, i.e. with the
    coefficient of s_d already eliminated. `coeffs` has length d.
    """

    coeffs: Tuple[int, ...]

    @classmethod
    def canonical(cls, constant: int, linear: Sequence[int], n: int) -> "MElem":
        """Reduce constant + sum linear_i s_i modulo n+1+sum s_i."""
        last = int(linear[-1])
        head = [int(constant) - last * (n + 1)] + [int(x) - last for x in linear[:-1]]
        return cls(coeffs=tuple(head))

    @property
    def d(self) -> int:
        return len(self.coeffs)

    def is_integer(self) -> bool:
        return all(x == 0 for x in self.coeffs[1:])

    def __neg__(self) -> "MElem":
        return MElem(coeffs=tuple(-x for x in self.coeffs))

    def evaluate(self, a: Sequence[Rational]) -> Rational:
        """Value under s_i -> a_i - 1 (a satisfying the degree condition)."""
        return Rational(self.coeffs[0]) + sum(
            (Rational(c) * (Rational(a[i]) - 1) for i, c in enumerate(self.coeffs[1:])), Rational(0)
        )

    def to_json(self) -> Dict[str, Any]:
        terms = [str(self.coeffs[0])] + [f"{c}*s{i + 1}" for i, c in enumerate(self.coeffs[1:]) if c]
        return {"coeffs": list(self.coeffs), "pretty": " + ".join(terms).replace("+ -", "- ")}


@lru_cache(maxsize=32)
def laurent_ring(d: int) -> PolyRing:
    names = ["u"] + [f"v{i}" for i in range(1, d)]
    return ring(",".join(names), ZZ)[0]


class LaurentMulti:
    """
    poly * monomial(offset), with poly an ordinary polynomial and the offset
    pulled out so that poly has no monomial factor.
    """

    __slots__ = ("ring", "poly", "offset")

    def __init__(self, ring_: PolyRing, poly, offset: Monom = None):
        nvars = ring_.ngens
        offset = tuple(offset) if offset is not None else (0,) * nvars
        if not poly:
            offset = (0,) * nvars
        else:
            tails = poly.tail_degrees()
            if any(tails):
                shifted = ring_.zero
                for m, c in poly.iterterms():
                    shifted[tuple(a - b for a, b in zip(m, tails))] = c
                poly = shifted
                offset = tuple(a + b for a, b in zip(offset, tails))
        self.ring = ring_
        self.poly = poly
        self.offset = tuple(int(x) for x in offset)

    @classmethod
    def zero(cls, d: int) -> "LaurentMulti":
        r = laurent_ring(d)
        return cls(r, r.zero)

    @classmethod
    def one(cls, d: int) -> "LaurentMulti":
        r = laurent_ring(d)
        return cls(r, r.one)

    @classmethod
    def monomial(cls, exponent: Sequence[int], coeff: int = 1) -> "LaurentMulti":
        r = laurent_ring(len(exponent))
        return cls(r, r.ground_new(coeff), tuple(exponent))

    @classmethod
    def from_terms(cls, d: int, terms: Iterable[Tuple[Monom, int]]) -> "LaurentMulti":
        r = laurent_ring(d)
        items = [(tuple(int(x) for x in m), int(c)) for m, c in terms]
        if not items:
            return cls(r, r.zero)
        low = tuple(min(m[i] for m, _ in items) for i in range(d))
        poly = r.zero
        for m, c in items:
            key = tuple(a - b for a, b in zip(m, low))
            poly[key] = poly.get(key, ZZ(0)) + ZZ(c)
            if not poly[key]:
                del poly[key]
        return cls(r, poly, low)

    @classmethod
    def from_lpoly(cls, p, d: int) -> "LaurentMulti":
        """An integer polynomial in L, with L -> u."""
        return cls.from_terms(d, [((int(e),) + (0,) * (d - 1), int(c)) for (e,), c in p.iterterms()])

    def terms(self) -> Dict[Monom, int]:
        return {tuple(a + b for a, b in zip(m, self.offset)): int(c) for m, c in self.poly.iterterms()}

    def is_zero(self) -> bool:
        return not self.poly

    def __bool__(self) -> bool:
        return bool(self.poly)

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, LaurentMulti):
            return NotImplemented
        return self.terms() == other.terms()

    __hash__ = None  # type: ignore[assignment]

    def _align(self, other: "LaurentMulti"):
        low = tuple(min(a, b) for a, b in zip(self.offset, other.offset))

        def lift(x: "LaurentMulti"):
            shift = tuple(a - b for a, b in zip(x.offset, low))
            return x.poly * self.ring.from_dict({shift: 1}) if any(shift) else x.poly

        return lift(self), lift(other), low

    def __add__(self, other: "LaurentMulti") -> "LaurentMulti":
        p, q, low = self._align(other)
        return LaurentMulti(self.ring, p + q, low)

    def __neg__(self) -> "LaurentMulti":
        return LaurentMulti(self.ring, -self.poly, self.offset)

    def __sub__(self, other: "LaurentMulti") -> "LaurentMulti":
        return self + (-other)

    def __mul__(self, other: Any) -> "LaurentMulti":
        if isinstance(other, int):
            return LaurentMulti(self.ring, self.poly * other, self.offset)
        offset = tuple(a + b for a, b in zip(self.offset, other.offset))
        return LaurentMulti(self.ring, self.poly * other.poly, offset)

    __rmul__ = __mul__

    def transform(self, matrix: Matrix) -> "LaurentMulti":
        """Apply the exponent change e -> matrix * e to every monomial."""
        d = self.ring.ngens
        rows = [[int(matrix[i, j]) for j in range(d)] for i in range(d)]
        out = []
        for m, c in self.terms().items():
            image = tuple(sum(r[j] * m[j] for j in range(d)) for r in rows)
            out.append((image, c))
        return LaurentMulti.from_terms(d, out)

    def vanishes_at_one(self, index: int = 0) -> bool:
        """True iff the polynomial vanishes after setting the given variable to 1."""
        return not self.poly.subs(self.ring.gens[index], 1)

    def exquo_first(self, power: int = 1) -> "LaurentMulti":
        """Exact division by (x_0^power - 1); raises ExactQuotientFailed."""
        g = self.ring.gens[0]
        return LaurentMulti(self.ring, self.poly.exquo(g ** power - 1), self.offset)

    def specialize(self, values: Sequence[Rational]) -> PuiseuxRational:
        """
        L^(e_0 + sum e_i values_i) per monomial, summed as an element of Q(L^(1/q)).
        `values` has one entry per v-variable.
        """
        terms = self.terms()
        if not terms:
            return PuiseuxRational.zero()
        exps = {}
        for m, c in terms.items():
            e = Rational(m[0]) + sum((Rational(x) * values[i] for i, x in enumerate(m[1:])), Rational(0))
            exps[e] = exps.get(e, 0) + c
        q = int(reduce(ilcm, [e.q for e in exps], 1))
        low = min(int(e * q) for e in exps)
        numer = TRING.zero
        for e, c in exps.items():
            key = (int(e * q) - low,)
            numer[key] = numer.get(key, ZZ(0)) + ZZ(c)
            if not numer[key]:
                del numer[key]
        denom = TRING.gens[0] ** (-low) if low < 0 else TRING.one
        if low > 0:
            numer = numer * TRING.gens[0] ** low
        return PuiseuxRational(q, TFIELD.new(numer, denom))

    def pretty(self) -> str:
        if not self.poly:
            return "0"
        names = self.ring.symbols
        parts = []
        for m, c in sorted(self.terms().items(), reverse=True):
            mon = "*".join(f"{names[i]}^{e}" if e != 1 else f"{names[i]}" for i, e in enumerate(m) if e)
            parts.append(f"{c}*{mon}" if mon else str(c))
        return " + ".join(parts).replace("+ -", "- ")

    def to_json(self) -> Dict[str, Any]:
        return {
            "terms": [[list(m), c] for m, c in sorted(self.terms().items())],
            "pretty": self.pretty(),
        }


def binomial(c: MElem) -> LaurentMulti:
    """L^c - 1."""
    return LaurentMulti.monomial(c.coeffs) - LaurentMulti.one(c.d)


def coordinate_change(c: MElem) -> Matrix:
    """
    Unimodular U with U * c = e_1, so that L^c becomes the first variable.
    Integral directions have no such change in general and take the u-only path.
    """
    if c.is_integer():
        raise IntegerDirection("integral direction has no coordinate change", {"c": c.to_json()})
    return unimodular_completion(c.coeffs)


def divide_binomial(g: LaurentMulti, c: MElem):
    """Exact quotient of g by (L^c - 1), or None when it does not exist."""
    if g.is_zero():
        return g
    if c.is_integer():
        k = c.coeffs[0]
        if k == 0:
            return None
        try:
            quotient = g.exquo_first(abs(k))
        except ExactQuotientFailed:
            return None
        # L^-k - 1 = -L^-k (L^k - 1)
        if k < 0:
            quotient = quotient * LaurentMulti.monomial((abs(k),) + (0,) * (c.d - 1), -1)
        return quotient
    u = coordinate_change(c)
    moved = g.transform(u)
    if not moved.vanishes_at_one(0):
        return None
    quotient = moved.exquo_first(1)
    return quotient.transform(u.inv())
