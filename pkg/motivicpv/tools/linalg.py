from __future__ import annotations

from functools import reduce
from typing import List, Sequence, Tuple

from sympy import Matrix, Rational, igcd, ilcm

from ..errors import MotivicPVError, ZeroNormal

RationalRow = Tuple[Rational, ...]


def canonical_normal(raw: Sequence[int]) -> Tuple[int, ...]:
    """Divide out the content and make the first nonzero entry positive."""
    v = [int(x) for x in raw]
    g = reduce(igcd, [abs(x) for x in v], 0)
    if g == 0:
        raise ZeroNormal("normal vector is zero", {"normal": list(v)})
    v = [x // g for x in v]
    lead = next(x for x in v if x != 0)
    if lead < 0:
        v = [-x for x in v]
    return tuple(v)


def primitive_integer_vector(row: Sequence[Rational]) -> Tuple[int, ...]:
    den = reduce(ilcm, [Rational(x).q for x in row], 1)
    return canonical_normal([int(Rational(x) * den) for x in row])


def _rows(m: Matrix) -> Tuple[RationalRow, ...]:
    return tuple(tuple(Rational(x) for x in m.row(i)) for i in range(m.rows))


def row_space_basis(rows: Sequence[Sequence[Rational]], ncols: int) -> Tuple[RationalRow, ...]:
    """Reduced row echelon basis of the span of `rows` (zero rows dropped)."""
    if not rows:
        return ()
    reduced, pivots = Matrix(rows).rref()
    return _rows(reduced[: len(pivots), :]) if pivots else ()


def nullspace_basis(normals: Sequence[Sequence[int]], ncols: int) -> Tuple[RationalRow, ...]:
    """RREF basis of the common kernel of `normals` inside Q^ncols."""
    if not normals:
        return _rows(Matrix.eye(ncols))
    kernel = Matrix(normals).nullspace()
    return row_space_basis([list(v) for v in kernel], ncols)


def pivot_columns(basis: Sequence[Sequence[Rational]]) -> List[int]:
    return [next(j for j, x in enumerate(row) if x != 0) for row in basis]


def coordinates(basis: Sequence[Sequence[Rational]], x: Sequence[Rational]) -> List[Rational]:
    """Coordinates of x (assumed in the row span) with respect to an RREF basis."""
    return [Rational(x[j]) for j in pivot_columns(basis)]


def rank(rows: Sequence[Sequence[Rational]]) -> int:
    if not rows:
        return 0
    return Matrix(rows).rank()


def unimodular_completion(vector: Sequence[int]) -> Matrix:
    """
    Return an integer matrix U with det U = +-1 and U * v = e_1.

    Euclid on the entries of v, recording the row operations on an identity
    matrix (the left transform of a Smith reduction of a single column).
    """
    w = [int(x) for x in vector]
    size = len(w)
    left = Matrix.eye(size)
    while sum(1 for x in w if x != 0) > 1:
        p = min((i for i in range(size) if w[i] != 0), key=lambda i: abs(w[i]))
        for i in range(size):
            if i == p or w[i] == 0:
                continue
            q = w[i] // w[p]
            w[i] -= q * w[p]
            left.row_op(i, lambda val, col: val - q * left[p, col])
    nonzero = [i for i in range(size) if w[i] != 0]
    if not nonzero or abs(w[nonzero[0]]) != 1:
        raise MotivicPVError("vector is not primitive", {"vector": list(vector)})
    p = nonzero[0]
    if p != 0:
        left.row_swap(0, p)
        w[0], w[p] = w[p], w[0]
    if w[0] < 0:
        left.row_op(0, lambda val, col: -val)
    return left
