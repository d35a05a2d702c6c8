"""
Theorem suite: exact identity checks over an arrangement corpus.

Every check yields one record {"case", "check", "status", "detail"} with
status PASS or FAIL; the report counts failures the way the golden runner does.
"""
from __future__ import annotations

import logging
import random
from typing import Any, Callable, Dict, Iterable, List, Optional, Sequence, Tuple

from sympy import Matrix

from ..arrangement import edge_lattice, is_essential, is_generic, is_indecomposable
from ..classes import (
    affine_complement_class,
    arrangement_union_class,
    chain_stratum_class,
    concentrated_sum,
    point_count_complement,
    projective_complement_class,
    projective_space_class,
    relative_stratum_class,
    resolution_class,
    stratum_class,
    superchain_sum,
)
from ..errors import MotivicPVError
from ..formal import (
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
from ..models import Arrangement, Edge, ExponentVector
from ..puiseux import PuiseuxRational
from ..pv import (
    b_values,
    construct_positive_a,
    default_truncation,
    delta_chain_count,
    f_recurrence,
    g_identity,
    generic_closed_form,
    pv_integral,
    pv_integral_closed_form_check,
    random_exponents,
    series_constant_term,
    series_expansion,
)
from ..zeta import genericity_witness_search
from .corpus import CorpusEntry, default_corpus

LOGGER = logging.getLogger(__name__)

Record = Dict[str, Any]

# pole tests on a nonzero numerator get expensive quickly; bigger lattices skip them
POLE_CHECK_MAX_S = 24
# the superchain and factorization checks are quadratic in the chain count
STRATA_CHECK_MAX_CHAINS = 600


def _ok(condition: bool) -> str:
    return "PASS" if condition else "FAIL"


def _record(case: str, check: str, passed: bool, **detail: Any) -> Record:
    LOGGER.info("%s | %s: %s", case, check, _ok(passed))
    return {"case": case, "check": check, "status": _ok(passed), "detail": detail}


def _over_draws(
    case: str,
    check: str,
    draws: Sequence[ExponentVector],
    predicate: Callable[[ExponentVector], bool],
) -> Record:
    failed: List[ExponentVector] = []
    errors: List[Dict[str, Any]] = []
    for a in draws:
        try:
            if not predicate(a):
                failed.append(a)
        except MotivicPVError as e:
            failed.append(a)
            errors.append(e.to_dict())
    detail: Dict[str, Any] = {"draws": len(draws), "failed": len(failed)}
    if failed:
        detail["first_failure"] = failed[0].to_json()
    if errors:
        detail["first_error"] = errors[0]
    return _record(case, check, not failed, **detail)


def _evaluate_at(poly, p: int) -> int:
    return sum(int(c) * p ** int(m[0]) for m, c in poly.terms())


def _constant_coefficient(poly) -> int:
    return int(dict(poly.terms()).get((0,), 0))


# -------------------------
# per-arrangement checks
# -------------------------
def _class_checks(case: str, arrangement: Arrangement, primes: Sequence[int]) -> List[Record]:
    out: List[Record] = []
    res = resolution_class(arrangement)
    passed = _constant_coefficient(res) == 1
    if arrangement.ambient_dim == 2:
        passed = passed and res == projective_space_class(1)
    out.append(_record(case, "resolution-class", passed, value=str(res.as_expr())))

    union = arrangement_union_class(arrangement)
    complement = projective_complement_class(arrangement)
    out.append(
        _record(
            case,
            "union-complement",
            projective_space_class(arrangement.n) - union == complement,
            union=str(union.as_expr()),
        )
    )

    if arrangement.ambient_dim <= 3 and arrangement.d <= 5:
        affine = affine_complement_class(arrangement)
        counts = {p: (_evaluate_at(affine, p), point_count_complement(arrangement, p)) for p in primes}
        out.append(
            _record(
                case,
                "point-count",
                all(a == b for a, b in counts.values()),
                counts={str(p): list(v) for p, v in counts.items()},
            )
        )
    return out


def _independence_check(case: str, arrangement: Arrangement) -> Record:
    lattice = edge_lattice(arrangement)
    bad = []
    for w in lattice.S:
        for above in lattice.above(w):
            c1 = melem_for_edge(arrangement, w)
            c2 = melem_for_edge(arrangement, above)
            if Matrix([list(c1.coeffs), list(c2.coeffs)]).rank() < 2:
                bad.append([w.to_json()["basis"], above.to_json()["basis"]])
    return _record(case, "nested-directions-independent", not bad, dependent=bad[:1])


def _formal_checks(case: str, arrangement: Arrangement, formal, draws: Sequence[ExponentVector]) -> List[Record]:
    out: List[Record] = []
    out.append(
        _over_draws(
            case,
            "specialization",
            draws,
            lambda a: specialize(formal, a) == pv_integral(arrangement, a) * PuiseuxRational.lpower(arrangement.n),
        )
    )
    if len(edge_lattice(arrangement).S) > POLE_CHECK_MAX_S and not formal_is_zero(formal):
        return out
    found = poles(formal)
    if found:
        out.append(_record(case, "pole-reduction", True, poles=len(found)))
    else:
        quotient = reduce_formal(formal)
        passed = quotient is not None and all(not any(m[1:]) for m in quotient.terms())
        out.append(_record(case, "pole-reduction", passed, poles=0))
    # kappa = 1: divisibility is the same as vanishing under L^c_W -> 1
    simple = [w for w, c in formal.denominator if not c.is_integer() and multiplicity(formal, w) == 1]
    disagree = [
        w.to_json()["basis"] for w in simple if is_pole(formal, w) == numerator_vanishes_along(formal, w)
    ]
    out.append(_record(case, "pole-substitution", not disagree, edges=len(simple), disagree=disagree[:1]))
    return out


def _strata_checks(case: str, arrangement: Arrangement) -> List[Record]:
    lattice = edge_lattice(arrangement)
    chains = list(lattice.chains())
    if len(chains) > STRATA_CHECK_MAX_CHAINS:
        return []
    closed_bad = [
        [e.to_json()["basis"] for e in chain]
        for chain in chains
        if superchain_sum(arrangement, chain) != stratum_class(arrangement, chain, closed=True)
    ]
    factor_bad = []
    for w in lattice.S:
        for chain in lattice.chains(lattice.below(w)):
            if relative_stratum_class(arrangement, w, chain) != chain_stratum_class(arrangement, chain + (w,)):
                factor_bad.append([e.to_json()["basis"] for e in chain + (w,)])
    return [
        _record(case, "closed-strata-superchains", not closed_bad, chains=len(chains), failing=closed_bad[:1]),
        _record(case, "stratum-factorization", not factor_bad, failing=factor_bad[:1]),
    ]


def _is_factor_edge(edge: Edge, arrangement: Arrangement, split: int) -> bool:
    """Every hyperplane through the edge comes from the same factor of the product."""
    normals = [arrangement.normals[i] for i in edge.containing]
    return all(not any(v[split:]) for v in normals) or all(not any(v[:split]) for v in normals)


def _concentrated_checks(case: str, arrangement: Arrangement, split: int) -> List[Record]:
    edges = [w for w in edge_lattice(arrangement).S if _is_factor_edge(w, arrangement, split)]
    bad = [w.to_json()["basis"] for w in edges if concentrated_sum(arrangement, w)]
    return [_record(case, "concentrated-vanishing", not bad, edges=len(edges), failing=bad[:1])]


def _pv_checks(
    case: str,
    arrangement: Arrangement,
    draws: Sequence[ExponentVector],
    truncation: Optional[int],
) -> List[Record]:
    n = arrangement.n
    scale = PuiseuxRational.lpower(n)

    def ring_member(a: ExponentVector) -> bool:
        order = truncation if truncation is not None else default_truncation(arrangement, a)
        series_expansion(pv_integral(arrangement, a) * scale, order)
        return True

    return [
        _over_draws(
            case,
            "open-closed-agreement",
            draws,
            lambda a: pv_integral(arrangement, a) == pv_integral_closed_form_check(arrangement, a),
        ),
        _over_draws(case, "ring-membership", draws, ring_member),
        _over_draws(
            case,
            "constant-term",
            draws,
            lambda a: series_constant_term(arrangement, a, truncation) == delta_chain_count(arrangement, a),
        ),
    ]


def _vanishing_checks(case: str, arrangement: Arrangement, formal, draws: Sequence[ExponentVector]) -> List[Record]:
    label = "non-essential" if not is_essential(arrangement) else "decomposable"
    return [
        _record(case, f"{label}-formal-vanishing", formal_is_zero(formal)),
        _over_draws(case, f"{label}-pv-vanishing", draws, lambda a: pv_integral(arrangement, a).is_zero()),
    ]


def _generic_checks(case: str, arrangement: Arrangement, draws: Sequence[ExponentVector]) -> List[Record]:
    n, d = arrangement.n, arrangement.d
    out = [
        _over_draws(
            case,
            "generic-equivalence",
            draws,
            lambda a: pv_integral(arrangement, a) == generic_closed_form(n, a),
        )
    ]
    values = [pv_integral(arrangement, a) for a in draws]
    nonzero = sum(1 for v in values if not v.is_zero())
    if d <= n + 1:
        out.append(_record(case, "generic-vanishing", nonzero == 0, nonzero=nonzero, draws=len(draws)))
    else:
        passed = nonzero >= 1 and 100 * nonzero >= 95 * len(draws)
        out.append(_record(case, "generic-nonvanishing", passed, nonzero=nonzero, draws=len(draws)))
    return out


def _indecomposable_checks(
    case: str,
    arrangement: Arrangement,
    formal,
    rng: random.Random,
    samples: int,
    bound: int,
) -> List[Record]:
    out: List[Record] = []
    if arrangement.d >= 2 and edge_lattice(arrangement).S:
        out.append(_record(case, "formal-nonzero", not formal_is_zero(formal)))
    try:
        a = construct_positive_a(arrangement)
        positive = all(v > 0 for v in b_values(arrangement, a).values())
        passed = positive and delta_chain_count(arrangement, a) == 1 and not pv_integral(arrangement, a).is_zero()
        out.append(_record(case, "positive-witness", passed, exponents=a.to_json()))
    except MotivicPVError as e:
        out.append(_record(case, "positive-witness", False, error=e.to_dict()))
    report = genericity_witness_search(arrangement, bound, rng=rng, samples=samples)
    out.append(
        _record(
            case,
            "pole-witness",
            bool(report.witnesses),
            witnesses=len(report.witnesses),
            non_generic_fraction=str(report.non_generic_fraction),
        )
    )
    return out


def run_arrangement_checks(
    entry: CorpusEntry,
    samples: int = 20,
    seed: int = 0,
    bound: int = 3,
    truncation: Optional[int] = None,
    primes: Sequence[int] = (101, 103),
) -> List[Record]:
    arrangement = entry.arrangement
    case = entry.name
    rng = random.Random(seed)
    draws = random_exponents(arrangement, rng, samples)
    formal = formal_pv(arrangement)

    results: List[Record] = []
    results.extend(_class_checks(case, arrangement, primes))
    results.extend(_strata_checks(case, arrangement))
    results.append(_independence_check(case, arrangement))
    results.extend(_pv_checks(case, arrangement, draws, truncation))
    results.extend(_formal_checks(case, arrangement, formal, draws))

    essential = is_essential(arrangement)
    if not essential or not is_indecomposable(arrangement):
        results.extend(_vanishing_checks(case, arrangement, formal, draws))
    else:
        results.extend(_indecomposable_checks(case, arrangement, formal, rng, samples, bound))
    if entry.split is not None:
        results.extend(_concentrated_checks(case, arrangement, entry.split))
    if is_generic(arrangement):
        exact = random_exponents(arrangement, rng, samples, exact_support=True)
        results.extend(_generic_checks(case, arrangement, exact))
    return results


# -------------------------
# combinatorial identities
# -------------------------
def run_identity_checks(n_max: int = 5, d_max: int = 8) -> List[Record]:
    g_bad: List[Tuple[int, int, int, int]] = []
    g_total = 0
    for n in range(n_max + 1):
        for m in range(n + 1):
            for d in range(1, d_max + 1):
                for r in range(d + 1):
                    g_total += 1
                    brute, closed = g_identity(n, m, d, r)
                    if brute != closed:
                        g_bad.append((n, m, d, r))

    f_bad: List[Tuple[int, int, int, int]] = []
    f_total = 0
    for n in range(1, n_max + 1):
        for m in range(1, n + 1):
            for d in range(1, d_max + 1):
                for i in range(1, d + 1):
                    f_total += 1
                    left, right = f_recurrence(n, m, d, i)
                    if left != right:
                        f_bad.append((n, m, d, i))
    return [
        _record("identities", "g-identity", not g_bad, tuples=g_total, failing=[list(t) for t in g_bad[:5]]),
        _record("identities", "f-recurrence", not f_bad, tuples=f_total, failing=[list(t) for t in f_bad[:5]]),
    ]


def run_theorem_suite(
    corpus: Optional[Iterable[CorpusEntry]] = None,
    samples: int = 20,
    seed: int = 0,
    bound: int = 3,
    truncation: Optional[int] = None,
    primes: Sequence[int] = (101, 103),
    identities: bool = True,
) -> Tuple[int, Dict[str, Any]]:
    entries = list(default_corpus() if corpus is None else corpus)
    results: List[Record] = []
    for entry in entries:
        results.extend(run_arrangement_checks(entry, samples, seed, bound, truncation, primes))
    if identities:
        results.extend(run_identity_checks())
    failures = sum(1 for r in results if r["status"] == "FAIL")
    report = {
        "cases": [{"name": e.name, "tags": list(e.tags)} for e in entries],
        "total": len(results),
        "failures": failures,
        "results": results,
    }
    LOGGER.info("theorem suite: %d checks, %d failures", len(results), failures)
    return failures, report
