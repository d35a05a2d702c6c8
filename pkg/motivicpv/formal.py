from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Tuple

from .arrangement import edge_lattice
from .classes import segment_class
from .errors import LogarithmicPole, NotAChain
from .laurent import LaurentMulti, MElem, binomial, coordinate_change, divide_binomial
from .models import Arrangement, Edge, ExponentVector
from .puiseux import PuiseuxRational
from .pv import check_degree

LOGGER = logging.getLogger(__name__)


@dataclass(frozen=True)
class FormalFraction:
    """F_S = numerator / prod over S of (L^c_W - 1)."""

    arrangement: Arrangement
    numerator: LaurentMulti
    denominator: Tuple[Tuple[Edge, MElem], ...]

    def to_json(self) -> Dict[str, Any]:
        return {
            "numerator": self.numerator.to_json(),
            "denominator": [{"edge": w.to_json(), "c": c.to_json()} for w, c in self.denominator],
            "is_zero": self.numerator.is_zero(),
        }


def melem_for_edge(arrangement: Arrangement, edge: Edge) -> MElem:
    """c_W = codim W + sum over hyperplanes containing W of s_i."""
    linear = [1 if i in edge.containing else 0 for i in range(arrangement.d)]
    return MElem.canonical(edge.codim, linear, arrangement.n)


def formal_pv(arrangement: Arrangement) -> FormalFraction:
    """
    G_S = sum over chains I of [E_I open] (L - 1)^|I| prod_{W not in I} (L^c_W - 1),
    the numerator of F_S over the full product of binomials.

    Edges are visited by increasing dimension. `open_chains` maps the top edge of
    a partial chain to the sum of its terms so far; each visited binomial is
    multiplied into every entry, and a chain whose top edge has nothing left
    above it is closed off into `done`, so shared factors are multiplied once.
    """
    lattice = edge_lattice(arrangement)
    d = arrangement.d
    c = {w: melem_for_edge(arrangement, w) for w in lattice.S}
    l_minus_one = LaurentMulti.monomial((1,) + (0,) * (d - 1)) - LaurentMulti.one(d)

    def seg(low: Edge, high: Edge) -> LaurentMulti:
        return LaurentMulti.from_lpoly(segment_class(arrangement, low, high), d)

    order = sorted(lattice.S, key=lambda e: e.dim)
    open_chains: Dict[Edge, LaurentMulti] = {lattice.origin: LaurentMulti.one(d)}
    done = LaurentMulti.zero(d)
    widest = 1
    for j, w in enumerate(order):
        entering = LaurentMulti.zero(d)
        for top, g in open_chains.items():
            if lattice.lt(top, w):
                entering = entering + g * seg(top, w)
        b = binomial(c[w])
        open_chains = {top: g * b for top, g in open_chains.items()}
        done = done * b
        open_chains[w] = entering * l_minus_one

        later = order[j + 1:]
        for top in [t for t in open_chains if not any(lattice.lt(t, v) for v in later)]:
            done = done + open_chains.pop(top) * seg(top, lattice.top)
        widest = max(widest, len(open_chains))

    LOGGER.debug(
        "formal numerator over |S|=%d (at most %d open chain tops) has %d terms",
        len(lattice.S), widest, len(done.terms()),
    )
    return FormalFraction(
        arrangement=arrangement,
        numerator=done,
        denominator=tuple((w, c[w]) for w in lattice.S),
    )


def formal_is_zero(f: FormalFraction) -> bool:
    return f.numerator.is_zero()


def _member(f: FormalFraction, edge: Edge) -> MElem:
    for w, c in f.denominator:
        if w == edge:
            return c
    raise NotAChain("edge is not in S", {"edge": edge.to_json()["basis"]})


def multiplicity(f: FormalFraction, edge: Edge) -> int:
    """kappa_W: edges whose c equals +-c_W."""
    c = _member(f, edge)
    return sum(1 for _, other in f.denominator if other == c or other == -c)


def is_pole(f: FormalFraction, edge: Edge) -> bool:
    """c_W is a pole iff G_S is not divisible by (L^c_W - 1)^kappa_W."""
    c = _member(f, edge)
    kappa = multiplicity(f, edge)
    g: Optional[LaurentMulti] = f.numerator
    for _ in range(kappa):
        g = divide_binomial(g, c)
        if g is None:
            return True
    return False


def poles(f: FormalFraction) -> List[Edge]:
    return [w for w, _ in f.denominator if is_pole(f, w)]


def numerator_vanishes_along(f: FormalFraction, edge: Edge) -> bool:
    """G_S becomes 0 under L^c_W -> 1 (c_W must not be integral)."""
    u = coordinate_change(_member(f, edge))
    return f.numerator.transform(u).vanishes_at_one(0)


def reduce_formal(f: FormalFraction) -> Optional[LaurentMulti]:
    """
    Exact quotient of G_S by the whole product of binomials, or None when some
    factor does not divide. With no pole the quotient is a polynomial in L alone.
    """
    g: Optional[LaurentMulti] = f.numerator
    for _, c in f.denominator:
        g = divide_binomial(g, c)
        if g is None:
            return None
    return g


def specialize(f: FormalFraction, a: ExponentVector) -> PuiseuxRational:
    """Substitute s_i -> a_i - 1; equals L^n * PV of the form with exponents a."""
    arrangement = f.arrangement
    check_degree(arrangement, a)
    denom = PuiseuxRational.one()
    for w, c in f.denominator:
        value = c.evaluate(a.a)
        if value == 0:
            raise LogarithmicPole(
                "specialization hits a logarithmic pole",
                {"edge": w.to_json()["basis"], "codim": w.codim},
            )
        denom = denom * (PuiseuxRational.lpower(value) - 1)
    shifts = [x - 1 for x in a.a[:-1]]
    return f.numerator.specialize(shifts) / denom
