"""
Grothendieck-ring classes as integer polynomials in L (the class of the line).

Every class needed here is a product of projective-complement classes of
quotient arrangements, so one sympy polynomial ring over ZZ is enough.
"""
from __future__ import annotations

import itertools
import logging
from functools import lru_cache
from typing import Any, Dict, List, Sequence

from sympy import Rational
from sympy.polys.domains import ZZ
from sympy.polys.polyerrors import ExactQuotientFailed
from sympy.polys.rings import PolyElement, ring

from .arrangement import (
    edge_lattice,
    quotient_arrangement,
    restrict_edge,
    restricted_arrangement,
)
from .errors import NonDivisible, NotAChain, NotIntersectionClosed
from .models import Arrangement, Edge
from .tools.linalg import nullspace_basis, rank, row_space_basis

LOGGER = logging.getLogger(__name__)

LRING, L = ring("L", ZZ)

LPoly = PolyElement


def projective_space_class(dim: int) -> LPoly:
    """[P^dim]; the empty set for dim < 0."""
    return sum((L ** k for k in range(dim + 1)), LRING.zero)


def euler_characteristic(p: LPoly) -> int:
    return int(sum(p.coeffs(), 0))


def lpoly_to_json(p: LPoly) -> Dict[str, Any]:
    terms = sorted((int(m[0]), int(c)) for m, c in p.terms())
    return {"terms": [[e, c] for e, c in terms], "pretty": str(p.as_expr()) if p else "0"}


# -------------------------
# complements
# -------------------------
def affine_complement_class(arrangement: Arrangement) -> LPoly:
    lattice = edge_lattice(arrangement)
    mu = lattice.mobius
    out = LRING.zero
    for x in (lattice.top,) + lattice.edges:
        out += mu[x.basis] * L ** x.dim
    return out


@lru_cache(maxsize=1024)
def projective_complement_class(arrangement: Arrangement) -> LPoly:
    """[U(S)]: the affine complement is a C*-bundle over it."""
    if arrangement.d == 0:
        return projective_space_class(arrangement.ambient_dim - 1)
    affine = affine_complement_class(arrangement)
    try:
        return affine.exquo(L - 1)
    except ExactQuotientFailed as e:
        raise NonDivisible(
            "affine complement class is not divisible by L - 1",
            {"class": lpoly_to_json(affine)},
        ) from e


def point_count_complement(arrangement: Arrangement, p: int) -> int:
    """Points of F_p^N on no hyperplane (brute force)."""
    count = 0
    for x in itertools.product(range(p), repeat=arrangement.ambient_dim):
        if all(sum(a * b for a, b in zip(normal, x)) % p for normal in arrangement.normals):
            count += 1
    return count


# -------------------------
# resolution strata
# -------------------------
def _check_chain(arrangement: Arrangement, chain: Sequence[Edge]) -> None:
    if not edge_lattice(arrangement).is_chain(chain):
        raise NotAChain(
            "edges do not form a strictly increasing chain in S",
            {"chain": [e.to_json()["basis"] for e in chain]},
        )


@lru_cache(maxsize=4096)
def segment_class(arrangement: Arrangement, low: Edge, high: Edge, closed: bool = False) -> LPoly:
    """One factor of a stratum class: the (resolved or open) quotient between consecutive chain members."""
    piece = quotient_arrangement(arrangement, low, high)
    return resolution_class(piece) if closed else projective_complement_class(piece)


def stratum_class(arrangement: Arrangement, chain: Sequence[Edge], closed: bool = False) -> LPoly:
    """Unchecked product over 0 = W_0 < W_1 < ... < W_r < W_{r+1} = V."""
    lattice = edge_lattice(arrangement)
    points = [lattice.origin] + list(chain) + [lattice.top]
    out = LRING.one
    for lo, hi in zip(points, points[1:]):
        out *= segment_class(arrangement, lo, hi, closed)
    return out


def chain_stratum_class(arrangement: Arrangement, chain: Sequence[Edge], closed: bool = False) -> LPoly:
    """[E_I] (closed) or [E_I open] for the chain I = W_1 < ... < W_r."""
    _check_chain(arrangement, chain)
    return stratum_class(arrangement, chain, closed)


def superchain_sum(arrangement: Arrangement, chain: Sequence[Edge]) -> LPoly:
    """Sum of [E_J open] over the chains J containing I; E_I is their disjoint union."""
    _check_chain(arrangement, chain)
    wanted = set(chain)
    out = LRING.zero
    for other in edge_lattice(arrangement).chains():
        if wanted <= set(other):
            out += stratum_class(arrangement, other)
    return out


@lru_cache(maxsize=1024)
def resolution_class(arrangement: Arrangement) -> LPoly:
    """[P(V)^S]: the sum of the open strata over all chains in S."""
    lattice = edge_lattice(arrangement)
    out = LRING.zero
    count = 0
    for chain in lattice.chains():
        out += stratum_class(arrangement, chain)
        count += 1
    LOGGER.debug("resolution class over %d chains: %s", count, out)
    return out


def concentrated_sum(arrangement: Arrangement, edge: Edge) -> LPoly:
    """Sum over chains I in S^W + {W} of [E_I open] (1 - L)^|I|."""
    lattice = edge_lattice(arrangement)
    _check_chain(arrangement, [edge])
    members = lattice.below(edge) + (edge,)
    out = LRING.zero
    for chain in lattice.chains(members):
        out += stratum_class(arrangement, chain) * (1 - L) ** len(chain)
    return out


def relative_stratum_class(arrangement: Arrangement, edge: Edge, chain: Sequence[Edge]) -> LPoly:
    """
    [E_I open] computed inside the resolution of P(W)'s own arrangement, times
    [U(S_W^V)]. Equals chain_stratum_class(A, I + (W,)).
    """
    lattice = edge_lattice(arrangement)
    _check_chain(arrangement, list(chain) + [edge])
    inner = restricted_arrangement(arrangement, edge)
    mapped = [restrict_edge(edge, w, inner) for w in chain]
    left = chain_stratum_class(inner, mapped)
    right = projective_complement_class(quotient_arrangement(arrangement, edge, lattice.top))
    return left * right


# -------------------------
# unions of linear subspaces
# -------------------------
def _intersect(b1, b2, ncols):
    ann = list(nullspace_basis(b1, ncols)) + list(nullspace_basis(b2, ncols))
    return nullspace_basis(ann, ncols) if ann else row_space_basis(b1, ncols)


def union_class(subspaces: Sequence[Sequence[Sequence[int]]]) -> LPoly:
    """
    Class of a union of projective linear subspaces, each given by spanning
    vectors of its cone, via sum over chains C_0 < ... < C_r of (-1)^r [C_0].
    """
    if not subspaces:
        return LRING.zero
    ncols = len(subspaces[0][0])
    members: List = []
    for rows in subspaces:
        basis = row_space_basis([[Rational(x) for x in r] for r in rows], ncols)
        if basis and basis not in members:
            members.append(basis)
    for b1, b2 in itertools.combinations(members, 2):
        meet = _intersect(b1, b2, ncols)
        if meet and meet not in members:
            raise NotIntersectionClosed(
                "family is not closed under intersection",
                {"missing": [[str(x) for x in r] for r in meet]},
            )
    members.sort(key=lambda b: (len(b), b))

    def inside(small, big):
        return len(small) < len(big) and rank(list(small) + list(big)) == len(big)

    def walk(prefix):
        yield prefix
        for nxt in members:
            if inside(prefix[-1], nxt):
                yield from walk(prefix + [nxt])

    out = LRING.zero
    for start in members:
        for chain in walk([start]):
            out += (-1) ** (len(chain) - 1) * projective_space_class(len(chain[0]) - 1)
    return out


def arrangement_union_class(arrangement: Arrangement) -> LPoly:
    """[P(A)] as the union of the projectivized edges in S."""
    lattice = edge_lattice(arrangement)
    return union_class([[list(row) for row in e.basis] for e in lattice.S])
