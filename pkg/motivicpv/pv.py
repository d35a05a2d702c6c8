"""
Motivic principal value integrals of multivalued forms on the canonical log
resolution of a projective arrangement, as exact elements of Q(L^(1/q)).
"""
from __future__ import annotations

import logging
import random
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from sympy import Matrix, Rational, factorial, ff

from .arrangement import b_coefficient, edge_lattice, is_essential, is_indecomposable
from .classes import segment_class
from .errors import (
    Decomposable,
    DegreeCondition,
    DimensionMismatch,
    InvalidExponent,
    LogarithmicPole,
    NotEssential,
    WitnessSearchFailed,
)
from .models import Arrangement, Edge, ExponentVector
from .puiseux import PuiseuxRational

LOGGER = logging.getLogger(__name__)


def make_exponents(values: Sequence) -> ExponentVector:
    return ExponentVector(a=tuple(Rational(x) for x in values))


def check_degree(arrangement: Arrangement, a: ExponentVector) -> None:
    if len(a) != arrangement.d:
        raise DimensionMismatch(
            "exponent vector length differs from the number of hyperplanes",
            {"d": arrangement.d, "len": len(a)},
        )
    expected = arrangement.d - arrangement.n - 1
    total = sum(a.a, Rational(0))
    if total != expected:
        raise DegreeCondition(
            f"exponents sum to {total}, expected d - n - 1 = {expected}",
            {"sum": str(total), "expected": expected},
        )


def b_values(arrangement: Arrangement, a: ExponentVector) -> Dict[Edge, Rational]:
    return {w: b_coefficient(arrangement, w, a.a) for w in edge_lattice(arrangement).S}


def _require_no_log_poles(b: Dict[Edge, Rational]) -> None:
    for w, value in b.items():
        if value == 0:
            raise LogarithmicPole(
                "form has a logarithmic pole along an exceptional divisor",
                {"edge": w.to_json()["basis"], "codim": w.codim},
            )


def _binomial_weight(b: Rational) -> PuiseuxRational:
    """(L - 1) / (L^b - 1)."""
    return (PuiseuxRational.lpower(1) - 1) / (PuiseuxRational.lpower(b) - 1)


def _chain_sum(arrangement: Arrangement, weights: Dict[Edge, PuiseuxRational], closed: bool) -> PuiseuxRational:
    """
    Sum over chains I in S (empty chain included) of [E_I] * prod_{W in I} weight(W),
    with [E_I] open or closed. Evaluated as tail sums from the top down, which
    visits each pair W < W' once instead of every chain.
    """
    lattice = edge_lattice(arrangement)

    def seg(low: Edge, high: Edge) -> PuiseuxRational:
        return PuiseuxRational.from_lpoly(segment_class(arrangement, low, high, closed))

    tail: Dict[Edge, PuiseuxRational] = {}
    for w in lattice.S:
        acc = seg(w, lattice.top)
        for above in lattice.above(w):
            acc = acc + seg(w, above) * weights[above] * tail[above]
        tail[w] = acc

    total = seg(lattice.origin, lattice.top)
    for w in lattice.S:
        total = total + seg(lattice.origin, w) * weights[w] * tail[w]
    return total


# -------------------------
# integrals
# -------------------------
def pv_integral(arrangement: Arrangement, a: ExponentVector) -> PuiseuxRational:
    check_degree(arrangement, a)
    b = b_values(arrangement, a)
    _require_no_log_poles(b)
    weights = {w: _binomial_weight(v) for w, v in b.items()}
    value = _chain_sum(arrangement, weights, closed=False) * PuiseuxRational.lpower(-arrangement.n)
    LOGGER.debug("pv_integral d=%d n=%d q=%d -> %s", arrangement.d, arrangement.n, value.q, value.pretty())
    return value


def pv_integral_closed_form_check(arrangement: Arrangement, a: ExponentVector) -> PuiseuxRational:
    """The same integral summed over closed strata [E_I] with weights shifted by -1."""
    check_degree(arrangement, a)
    b = b_values(arrangement, a)
    _require_no_log_poles(b)
    weights = {w: _binomial_weight(v) - 1 for w, v in b.items()}
    return _chain_sum(arrangement, weights, closed=True) * PuiseuxRational.lpower(-arrangement.n)


def default_truncation(arrangement: Arrangement, a: ExponentVector) -> int:
    return max(1, 4 * arrangement.n * a.q)


def series_expansion(value: PuiseuxRational, order: int) -> List[int]:
    return value.series(order)


def series_constant_term(arrangement: Arrangement, a: ExponentVector, truncation: Optional[int] = None) -> int:
    """Constant term of L^n * PV as a power series in L^(1/q), checked up to `truncation`."""
    scaled = pv_integral(arrangement, a) * PuiseuxRational.lpower(arrangement.n)
    order = truncation if truncation is not None else default_truncation(arrangement, a)
    return series_expansion(scaled, order)[0]


def delta_chain_count(arrangement: Arrangement, a: ExponentVector) -> int:
    """1 + sum over nonempty chains with every b_W < 0 of (-1)^(length of chain)."""
    check_degree(arrangement, a)
    b = b_values(arrangement, a)
    _require_no_log_poles(b)
    lattice = edge_lattice(arrangement)
    negative = [w for w in lattice.S if b[w] < 0]
    total = 1
    for chain in lattice.chains(negative):
        if chain:
            total += (-1) ** len(chain)
    return total


# -------------------------
# generic arrangements
# -------------------------
def choose(top: int, k: int) -> int:
    """Binomial with integer (possibly negative) upper argument; zero for k < 0."""
    if k < 0:
        return 0
    return int(ff(top, k) / factorial(k))


def _elementary_symmetric(values: Sequence[PuiseuxRational]) -> List[PuiseuxRational]:
    out = [PuiseuxRational.one()] + [PuiseuxRational.zero() for _ in values]
    for x in values:
        for j in range(len(out) - 1, 0, -1):
            out[j] = out[j] + out[j - 1] * x
    return out


def generic_closed_form(n: int, a: ExponentVector) -> PuiseuxRational:
    """
    PV over P^n for d generic hyperplanes:
    L^-n / prod(L^a_i - 1) * sum_r (-1)^(n+r) S_{d-r} sum_i C(d-1-r, i) C(r-1, n-i) L^(n-i),
    S_j the elementary symmetric polynomials in L^a_1, ..., L^a_d.
    """
    d = len(a)
    total = sum(a.a, Rational(0))
    if total != d - n - 1:
        raise DegreeCondition(
            f"exponents sum to {total}, expected d - n - 1 = {d - n - 1}",
            {"sum": str(total), "expected": d - n - 1},
        )
    for i, x in enumerate(a.a):
        if x in (0, 1):
            raise InvalidExponent("exponents must avoid 0 and 1", {"index": i, "value": str(x)})

    powers = [PuiseuxRational.lpower(x) for x in a.a]
    sym = _elementary_symmetric(powers)
    acc = PuiseuxRational.zero()
    for r in range(d + 1):
        inner = PuiseuxRational.zero()
        for i in range(n + 1):
            c = choose(d - 1 - r, i) * choose(r - 1, n - i)
            if c:
                inner = inner + c * PuiseuxRational.lpower(n - i)
        acc = acc + (-1) ** (n + r) * sym[d - r] * inner
    denom = PuiseuxRational.one()
    for p in powers:
        denom = denom * (p - 1)
    return acc / denom * PuiseuxRational.lpower(-n)


def g_identity(n: int, m: int, d: int, r: int) -> Tuple[int, int]:
    brute = 0
    for i in range(n + 1):
        for k in range(m + 1):
            brute += (-1) ** (n + i - m) * choose(r, i) * choose(i, m - k) * choose(d - 1 - i, n - i - k)
    closed = (-1) ** n * choose(d - 1 - r, n - m) * choose(r - 1, m)
    return brute, closed


def f_sum(n: int, m: int, d: int, i: int) -> int:
    return sum(choose(i, m - k) * choose(d - 1 - i, n - i - k) for k in range(m + 1))


def f_recurrence(n: int, m: int, d: int, i: int) -> Tuple[int, int]:
    """(F(n,m,d,i), F(n-1,m,d-1,i-1) + F(n-1,m-1,d-1,i-1)) for n, m, d, i >= 1."""
    return f_sum(n, m, d, i), f_sum(n - 1, m, d - 1, i - 1) + f_sum(n - 1, m - 1, d - 1, i - 1)


# -------------------------
# positive exponents
# -------------------------
@dataclass(frozen=True)
class _Cover:
    coordinates: Tuple[int, ...]
    extra: Tuple[int, ...]
    supports: Tuple[Tuple[int, ...], ...]
    zeta: Tuple[int, ...]


def _coordinate_cover(arrangement: Arrangement) -> _Cover:
    """
    Choose n+1 independent normals as coordinates, then extra hyperplanes
    C_1, ..., C_r whose supports overlap the running union and extend it,
    until every coordinate is covered.
    """
    chosen: List[int] = []
    for i, normal in enumerate(arrangement.normals):
        if Matrix([arrangement.normals[j] for j in chosen] + [normal]).rank() == len(chosen) + 1:
            chosen.append(i)
        if len(chosen) == arrangement.ambient_dim:
            break
    base_inv = Matrix([arrangement.normals[j] for j in chosen]).inv()
    rest = [i for i in range(arrangement.d) if i not in chosen]
    support = {}
    for i in rest:
        z = Matrix([arrangement.normals[i]]) * base_inv
        support[i] = tuple(j for j in range(arrangement.ambient_dim) if z[0, j] != 0)

    everything = set(range(arrangement.ambient_dim))
    picked: List[int] = []
    zeta: List[int] = []
    covered = set()
    pending = list(rest)
    if pending:
        first = pending.pop(0)
        picked.append(first)
        zeta.append(len(support[first]))
        covered |= set(support[first])
    while covered != everything:
        nxt = next(
            (i for i in pending if set(support[i]) & covered and set(support[i]) - covered),
            None,
        )
        if nxt is None:
            raise WitnessSearchFailed(
                "no hyperplane extends the covered coordinates",
                {"covered": sorted(covered)},
            )
        pending.remove(nxt)
        picked.append(nxt)
        zeta.append(len(set(support[nxt]) - covered))
        covered |= set(support[nxt])
    return _Cover(
        coordinates=tuple(chosen),
        extra=tuple(picked),
        supports=tuple(support[i] for i in picked),
        zeta=tuple(zeta),
    )


def construct_positive_a(arrangement: Arrangement, delta: Optional[Rational] = None, rounds: int = 20) -> ExponentVector:
    """
    An exponent vector with every b_W > 0, for an essential indecomposable
    arrangement. The search runs coarse to fine: for k = 2, 4, 8, ... it tries
    delta = delta0 * 2 / k and epsilon = delta / k, and returns the first
    vector that passes the direct check on all edges, so q stays small.
    """
    if not is_essential(arrangement):
        raise NotEssential("arrangement is not essential", {"ambient_dim": arrangement.ambient_dim})
    if not is_indecomposable(arrangement):
        raise Decomposable("arrangement is decomposable (projective complement has chi = 0)")
    lattice = edge_lattice(arrangement)
    d, n = arrangement.d, arrangement.n
    if not lattice.S:
        return ExponentVector(a=tuple(Rational(0) for _ in range(d)))

    cover = _coordinate_cover(arrangement)
    r = len(cover.extra)
    d_rest = d - n - 1 - r
    r_rest = n + 1 + r
    n_cov = [sum(1 for s in cover.supports if j in s) for j in range(n + 1)]
    m_cov = [len(s) for s in cover.supports]

    delta0 = Rational(delta) if delta is not None else Rational(1, 2 * (n + 2))
    for attempt in range(rounds):
        k = 2 ** (attempt + 1)
        step = delta0 * 2 / k
        eps = step / k
        shifts: List[Rational] = [Rational(0)] * d
        for j, idx in enumerate(cover.coordinates):
            shifts[idx] = Rational(-(n + 1), n + 2) + n_cov[j] * step - d_rest * eps
        for j, idx in enumerate(cover.extra):
            shifts[idx] = Rational(-cover.zeta[j], n + 2) - m_cov[j] * step - d_rest * eps
        for idx in range(d):
            if idx not in cover.coordinates and idx not in cover.extra:
                shifts[idx] = r_rest * eps
        a = ExponentVector(a=tuple(1 + s for s in shifts))
        if all(v > 0 for v in b_values(arrangement, a).values()):
            LOGGER.debug("positive exponents found at k=%d (delta=%s, q=%d)", k, step, a.q)
            return a
    raise WitnessSearchFailed("delta/epsilon schedule exhausted", {"rounds": rounds})


def random_exponents(
    arrangement: Arrangement,
    rng: random.Random,
    samples: int,
    exact_support: bool = False,
    max_tries: int = 200,
) -> List[ExponentVector]:
    """
    Seeded draws with sum d - n - 1 and every b_W != 0 (and != 1 when
    exact_support). Numerators lie in [-2q, 2q] for a common q in {2, 3, 4}.
    """
    d = arrangement.d
    target = d - arrangement.n - 1
    out: List[ExponentVector] = []
    tries = 0
    while len(out) < samples:
        tries += 1
        if tries > max_tries * max(1, samples):
            raise WitnessSearchFailed("could not draw admissible exponents", {"samples": samples})
        q = rng.choice((2, 3, 4))
        head = [Rational(rng.randint(-2 * q, 2 * q), q) for _ in range(d - 1)]
        a = ExponentVector(a=tuple(head + [target - sum(head, Rational(0))]))
        b = b_values(arrangement, a).values()
        if any(v == 0 for v in b):
            continue
        if exact_support and any(v == 1 for v in b):
            continue
        out.append(a)
    return out
