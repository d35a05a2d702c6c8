from __future__ import annotations

import logging
from functools import cached_property, lru_cache
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

from sympy import Rational

from .errors import DimensionMismatch, DuplicateHyperplane, MotivicPVError, NotNested, ParseError
from .models import Arrangement, Edge, Vector
from .tools.linalg import (
    canonical_normal,
    coordinates,
    nullspace_basis,
    primitive_integer_vector,
    rank,
    row_space_basis,
)

LOGGER = logging.getLogger(__name__)

Chain = Tuple[Edge, ...]


# -------------------------
# construction
# -------------------------
def parse_arrangement(ambient_dim: int, raw_normals: Sequence[Sequence[int]]) -> Arrangement:
    """
    Build a validated central arrangement. Normals are made primitive with a
    positive leading entry; a hyperplane listed twice (up to scaling) is rejected.
    """
    if isinstance(ambient_dim, bool) or not isinstance(ambient_dim, int) or ambient_dim < 1:
        raise DimensionMismatch("ambient_dim must be a positive integer", {"ambient_dim": ambient_dim})
    if not raw_normals:
        raise ParseError("an arrangement needs at least one hyperplane")

    normals: List[Vector] = []
    seen: Dict[Vector, int] = {}
    for i, raw in enumerate(raw_normals):
        if len(raw) != ambient_dim:
            raise DimensionMismatch(
                f"normal {i} has length {len(raw)}, expected {ambient_dim}",
                {"index": i, "normal": list(raw)},
            )
        v = canonical_normal(raw)
        if v in seen:
            raise DuplicateHyperplane(
                f"hyperplanes {seen[v]} and {i} coincide",
                {"indices": [seen[v], i], "normal": list(v)},
            )
        seen[v] = i
        normals.append(v)
    return Arrangement(ambient_dim=ambient_dim, normals=tuple(normals))


def _make_arrangement(ambient_dim: int, normals: Iterable[Vector]) -> Arrangement:
    # quotients may legitimately carry no hyperplane at all
    out: List[Vector] = []
    for v in normals:
        if v not in out:
            out.append(v)
    return Arrangement(ambient_dim=ambient_dim, normals=tuple(out))


def product_arrangement(first: Arrangement, second: Arrangement) -> Arrangement:
    """The arrangement f'(x) f''(y) = 0 in C^(N'+N'')."""
    pad1 = (0,) * second.ambient_dim
    pad2 = (0,) * first.ambient_dim
    normals = [tuple(v) + pad1 for v in first.normals] + [pad2 + tuple(v) for v in second.normals]
    return Arrangement(ambient_dim=first.ambient_dim + second.ambient_dim, normals=tuple(normals))


def generic_arrangement(ambient_dim: int, d: int) -> Arrangement:
    """
    Coordinate hyperplanes followed by Vandermonde rows (1, x, x^2, ...) with
    nodes x = 1, 2, 3, ...; every square minor of that system is nonzero.
    """
    normals: List[Vector] = []
    for i in range(min(d, ambient_dim)):
        normals.append(tuple(1 if j == i else 0 for j in range(ambient_dim)))
    for node in range(1, d - ambient_dim + 1):
        normals.append(tuple(node ** j for j in range(ambient_dim)))
    arrangement = parse_arrangement(ambient_dim, normals)
    if not is_generic(arrangement):
        raise MotivicPVError("generated arrangement is not generic", {"ambient_dim": ambient_dim, "d": d})
    return arrangement


# -------------------------
# lattice
# -------------------------
def _dot(normal: Sequence[int], row: Sequence[Rational]) -> Rational:
    return sum((Rational(a) * b for a, b in zip(normal, row)), Rational(0))


def _edge_from_basis(arrangement: Arrangement, basis: Tuple[Tuple[Rational, ...], ...]) -> Edge:
    containing = tuple(
        i for i, normal in enumerate(arrangement.normals) if all(_dot(normal, row) == 0 for row in basis)
    )
    return Edge(basis=basis, codim=arrangement.ambient_dim - len(basis), containing=containing)


class EdgeLattice:
    """
    Intersection poset of a central arrangement.

    `edges` holds every intersection of a nonempty set of hyperplanes, sorted by
    (codim, basis); `top` is the ambient space and `origin` the zero subspace
    (the same object as the last edge when the arrangement is essential).
    """

    def __init__(self, arrangement: Arrangement):
        self.arrangement = arrangement
        n_amb = arrangement.ambient_dim
        found: Dict[Tuple, Edge] = {}
        frontier: List[Edge] = []
        for i in range(arrangement.d):
            edge = _edge_from_basis(arrangement, nullspace_basis([arrangement.normals[i]], n_amb))
            if edge.basis not in found:
                found[edge.basis] = edge
                frontier.append(edge)
        while frontier:
            nxt: List[Edge] = []
            for edge in frontier:
                for j in range(arrangement.d):
                    if j in edge.containing:
                        continue
                    normals = [arrangement.normals[i] for i in edge.containing] + [arrangement.normals[j]]
                    cut = _edge_from_basis(arrangement, nullspace_basis(normals, n_amb))
                    if cut.basis not in found:
                        found[cut.basis] = cut
                        nxt.append(cut)
            frontier = nxt

        self.edges: Tuple[Edge, ...] = tuple(sorted(found.values(), key=Edge.sort_key))
        self.top = Edge(basis=nullspace_basis([], n_amb), codim=0, containing=())
        self.origin = found.get((), Edge(basis=(), codim=n_amb, containing=tuple(range(arrangement.d))))
        self.S: Tuple[Edge, ...] = tuple(e for e in self.edges if e.dim > 0)
        self._index = dict(found)
        LOGGER.debug("edge lattice: N=%d d=%d |edges|=%d |S|=%d", n_amb, arrangement.d, len(self.edges), len(self.S))

    def find(self, basis: Tuple[Tuple[Rational, ...], ...]) -> Optional[Edge]:
        if basis == self.top.basis:
            return self.top
        if basis == ():
            return self.origin
        return self._index.get(basis)

    @property
    def kernel(self) -> Edge:
        """Intersection of all hyperplanes (the origin iff essential)."""
        return self.edges[-1] if self.edges else self.top

    def leq(self, small: Edge, big: Edge) -> bool:
        """small is contained in big; both must be lattice members, `top` or `origin`."""
        if big.codim == 0:
            return True
        if small.dim == 0:
            return True
        if small.codim == 0 or big.dim == 0:
            return False
        if small.dim > big.dim:
            return False
        return set(big.containing) <= set(small.containing)

    def lt(self, small: Edge, big: Edge) -> bool:
        return small != big and self.leq(small, big)

    def below(self, edge: Edge) -> Tuple[Edge, ...]:
        return tuple(e for e in self.S if self.lt(e, edge))

    def above(self, edge: Edge) -> Tuple[Edge, ...]:
        return tuple(e for e in self.S if self.lt(edge, e))

    @cached_property
    def mobius(self) -> Dict[Tuple, int]:
        """mu(V, x) keyed by edge basis, for x = V and every edge."""
        values: Dict[Tuple, int] = {self.top.basis: 1}
        members = [self.top]
        for x in self.edges:
            values[x.basis] = -sum(values[y.basis] for y in members if self.lt(x, y))
            members.append(x)
        return values

    def chains(self, members: Optional[Sequence[Edge]] = None) -> Iterator[Chain]:
        """
        Strictly increasing chains W_1 < ... < W_r drawn from `members` (default S),
        smallest edge first, the empty chain included. Order is deterministic.
        """
        pool = list(self.S if members is None else members)
        pool.sort(key=lambda e: (-e.codim, e.basis))
        up = {e.basis: [f for f in pool if self.lt(e, f)] for e in pool}

        def extend(prefix: Chain) -> Iterator[Chain]:
            yield prefix
            for nxt in up[prefix[-1].basis]:
                yield from extend(prefix + (nxt,))

        yield ()
        for start in pool:
            yield from extend((start,))

    def is_chain(self, chain: Sequence[Edge]) -> bool:
        if any(e.basis not in self._index or e.dim == 0 for e in chain):
            return False
        return all(self.lt(a, b) for a, b in zip(chain, chain[1:]))


@lru_cache(maxsize=256)
def edge_lattice(arrangement: Arrangement) -> EdgeLattice:
    return EdgeLattice(arrangement)


# -------------------------
# quotients and predicates
# -------------------------
def _is_subspace(small: Edge, big: Edge) -> bool:
    if small.dim == 0:
        return True
    return rank(list(small.basis) + list(big.basis)) == big.dim


def quotient_arrangement(arrangement: Arrangement, low: Edge, high: Edge) -> Arrangement:
    """
    Arrangement induced in high/low: the distinct images of the V_i that
    contain `low` but not `high`, in coordinates of a complement of `low`.
    """
    if low.dim >= high.dim or not _is_subspace(low, high):
        raise NotNested(
            "lower subspace is not strictly contained in the upper one",
            {"low": low.to_json()["basis"], "high": high.to_json()["basis"]},
        )
    # coordinates of low inside high, then the annihilator of low in high's dual
    low_coords = [coordinates(high.basis, row) for row in low.basis]
    ann = nullspace_basis(low_coords, high.dim)

    normals: List[Vector] = []
    for normal in arrangement.normals:
        if any(_dot(normal, row) != 0 for row in low.basis):
            continue
        restricted = [_dot(normal, row) for row in high.basis]
        if all(x == 0 for x in restricted):
            continue
        normals.append(primitive_integer_vector(coordinates(ann, restricted)))
    return _make_arrangement(high.dim - low.dim, normals)


def restricted_arrangement(arrangement: Arrangement, edge: Edge) -> Arrangement:
    return quotient_arrangement(arrangement, edge_lattice(arrangement).origin, edge)


def restrict_edge(outer: Edge, inner: Edge, restricted: Arrangement) -> Edge:
    """The edge of restricted_arrangement(A, outer) that corresponds to inner <= outer."""
    coords = [coordinates(outer.basis, row) for row in inner.basis]
    basis = row_space_basis(coords, outer.dim)
    found = edge_lattice(restricted).find(basis)
    if found is None:
        raise NotNested("edge is not an edge of the restricted arrangement", {"edge": inner.to_json()["basis"]})
    return found


def is_essential(arrangement: Arrangement) -> bool:
    return rank(arrangement.normals) == arrangement.ambient_dim


def is_indecomposable(arrangement: Arrangement) -> bool:
    from .classes import euler_characteristic, projective_complement_class

    return euler_characteristic(projective_complement_class(arrangement)) != 0


def is_dense_edge(arrangement: Arrangement, edge: Edge) -> bool:
    lattice = edge_lattice(arrangement)
    return is_indecomposable(quotient_arrangement(arrangement, edge, lattice.top))


def is_generic(arrangement: Arrangement) -> bool:
    """Every edge of codimension k < N lies on exactly k hyperplanes."""
    return all(len(e.containing) == e.codim for e in edge_lattice(arrangement).S)


def b_coefficient(arrangement: Arrangement, edge: Edge, a: Sequence[Rational]) -> Rational:
    if len(a) != arrangement.d:
        raise DimensionMismatch("exponent vector length differs from d", {"d": arrangement.d, "len": len(a)})
    return Rational(edge.codim) + sum((Rational(a[i]) - 1 for i in edge.containing), Rational(0))
