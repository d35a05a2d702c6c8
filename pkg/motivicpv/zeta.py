"""
Residues of the motivic zeta function of g = f_1^m_1 ... f_d^m_d along the
exceptional divisor of the origin blowup, and the candidate pole -N / sum(m).
"""
from __future__ import annotations

import itertools
import logging
import random
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence, Tuple

from sympy import Rational

from .arrangement import edge_lattice, is_essential, is_indecomposable
from .errors import Decomposable, DimensionMismatch, InvalidExponent, NotEssential
from .models import Arrangement, Edge, ExponentVector, MultiplicityVector
from .puiseux import PuiseuxRational
from .pv import pv_integral

LOGGER = logging.getLogger(__name__)

EXHAUSTIVE_LIMIT = 4096


@dataclass
class PoleCertificate:
    multiplicities: MultiplicityVector
    candidate_pole: Rational
    generic: bool
    residue: Optional[PuiseuxRational] = None
    is_pole: Optional[bool] = None
    degenerate_edges: List[Edge] = field(default_factory=list)

    def to_json(self) -> Dict[str, Any]:
        return {
            "multiplicities": self.multiplicities.to_json(),
            "candidate_pole": str(self.candidate_pole),
            "generic": self.generic,
            "residue": self.residue.to_json() if self.residue is not None else None,
            "is_pole": "indeterminate" if self.is_pole is None else self.is_pole,
            "degenerate_edges": [w.to_json() for w in self.degenerate_edges],
        }


@dataclass
class WitnessReport:
    bound: int
    exhaustive: bool
    scanned: int
    non_generic: int
    witnesses: List[MultiplicityVector]

    @property
    def non_generic_fraction(self) -> Rational:
        return Rational(self.non_generic, self.scanned) if self.scanned else Rational(0)

    def to_json(self) -> Dict[str, Any]:
        return {
            "bound": self.bound,
            "exhaustive": self.exhaustive,
            "scanned": self.scanned,
            "non_generic": self.non_generic,
            "non_generic_fraction": str(self.non_generic_fraction),
            "witnesses": [m.to_json() for m in self.witnesses],
        }


def make_multiplicities(values: Sequence[int]) -> MultiplicityVector:
    out = []
    for i, x in enumerate(values):
        if isinstance(x, bool) or not isinstance(x, int) or x < 1:
            raise InvalidExponent("multiplicities must be positive integers", {"index": i, "value": x})
        out.append(x)
    return MultiplicityVector(m=tuple(out))


def _check_length(arrangement: Arrangement, m: MultiplicityVector) -> None:
    if len(m.m) != arrangement.d:
        raise DimensionMismatch(
            "multiplicity vector length differs from the number of hyperplanes",
            {"d": arrangement.d, "len": len(m.m)},
        )


def residue_exponents(arrangement: Arrangement, m: MultiplicityVector) -> Dict[Edge, Rational]:
    """alpha_W = codim W - (N / N_0) N_W for W in S and for the origin (where it is 0)."""
    _check_length(arrangement, m)
    lattice = edge_lattice(arrangement)
    ratio = Rational(arrangement.ambient_dim, sum(m.m))
    out: Dict[Edge, Rational] = {}
    for w in lattice.S + (lattice.origin,):
        n_w = sum(m.m[i] for i in w.containing)
        out[w] = Rational(w.codim) - ratio * n_w
    return out


def _require_hypotheses(arrangement: Arrangement) -> None:
    if not is_essential(arrangement):
        raise NotEssential("arrangement is not essential", {"ambient_dim": arrangement.ambient_dim})
    if not is_indecomposable(arrangement):
        raise Decomposable("arrangement is decomposable (projective complement has chi = 0)")


def _certify(arrangement: Arrangement, m: MultiplicityVector) -> PoleCertificate:
    alpha = residue_exponents(arrangement, m)
    lattice = edge_lattice(arrangement)
    degenerate = [w for w in lattice.S if alpha[w] == 0]
    cert = PoleCertificate(
        multiplicities=m,
        candidate_pole=Rational(-arrangement.ambient_dim, sum(m.m)),
        generic=not degenerate,
        degenerate_edges=degenerate,
    )
    if degenerate:
        return cert
    ratio = Rational(arrangement.ambient_dim, sum(m.m))
    a = ExponentVector(a=tuple(1 - ratio * x for x in m.m))
    cert.residue = pv_integral(arrangement, a)
    cert.is_pole = not cert.residue.is_zero()
    return cert


def nd_pole_check(arrangement: Arrangement, m: MultiplicityVector) -> PoleCertificate:
    _require_hypotheses(arrangement)
    return _certify(arrangement, m)


def genericity_witness_search(
    arrangement: Arrangement,
    bound: int,
    rng: Optional[random.Random] = None,
    samples: int = 20,
) -> WitnessReport:
    """
    Scan m in {1..bound}^d (a seeded sample when that box is large) and keep
    the vectors whose residue certifies -N/sum(m) as a pole.
    """
    _require_hypotheses(arrangement)
    d = arrangement.d
    exhaustive = bound ** d <= EXHAUSTIVE_LIMIT
    if exhaustive:
        candidates = itertools.product(range(1, bound + 1), repeat=d)
    else:
        rng = rng or random.Random(0)
        candidates = (tuple(rng.randint(1, bound) for _ in range(d)) for _ in range(samples))

    witnesses: List[MultiplicityVector] = []
    scanned = non_generic = 0
    for raw in candidates:
        scanned += 1
        cert = _certify(arrangement, MultiplicityVector(m=tuple(raw)))
        if not cert.generic:
            non_generic += 1
        elif cert.is_pole:
            witnesses.append(cert.multiplicities)
    LOGGER.info("witness search: %d scanned, %d non-generic, %d witnesses", scanned, non_generic, len(witnesses))
    return WitnessReport(
        bound=bound,
        exhaustive=exhaustive,
        scanned=scanned,
        non_generic=non_generic,
        witnesses=witnesses,
    )


def numerically_generic_locus(arrangement: Arrangement) -> List[Tuple[Edge, Tuple[int, ...]]]:
    """
    One integer linear form per W in S, nu_W * sum(m) - N * N_W(m), as its
    coefficient vector; m is numerically generic iff no form vanishes at m.
    """
    lattice = edge_lattice(arrangement)
    n_amb = arrangement.ambient_dim
    out = []
    for w in lattice.S:
        coeffs = tuple(w.codim - (n_amb if i in w.containing else 0) for i in range(arrangement.d))
        out.append((w, coeffs))
    return out
