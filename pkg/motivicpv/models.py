from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from functools import reduce
from typing import Any, Dict, Optional, Tuple

from sympy import Rational, ilcm

Vector = Tuple[int, ...]
RationalRow = Tuple[Rational, ...]


class Command(str, Enum):
    EDGES = "edges"
    CLASSES = "classes"
    PV = "pv"
    DELTA = "delta"
    GENERIC_CLOSED_FORM = "generic-closed-form"
    FORMAL = "formal"
    POLES = "poles"
    NDPOLE = "ndpole"
    WITNESS_SEARCH = "witness-search"
    CHECK = "check"


# corpora the check command can run in place of (or next to) the job's arrangement
CORPUS_NAMES = ("default", "product", "non-essential", "indecomposable", "generic", "all")


@dataclass(frozen=True)
class Arrangement:
    """
    Central arrangement in C^N given by canonical (primitive, sign-fixed)
    integer normals. N = ambient_dim is the n+1 of the projective picture.
    """

    ambient_dim: int
    normals: Tuple[Vector, ...]

    @property
    def d(self) -> int:
        return len(self.normals)

    @property
    def n(self) -> int:
        return self.ambient_dim - 1


@dataclass(frozen=True)
class Edge:
    """
    Linear subspace W of C^N. `basis` is the reduced row echelon form of a
    spanning set and is the identity of the edge.
    """

    basis: Tuple[RationalRow, ...]
    codim: int
    containing: Tuple[int, ...]

    @property
    def dim(self) -> int:
        return len(self.basis)

    def sort_key(self) -> Tuple[int, Tuple[RationalRow, ...]]:
        return (self.codim, self.basis)

    def to_json(self) -> Dict[str, Any]:
        return {
            "basis": [[str(x) for x in row] for row in self.basis],
            "codim": self.codim,
            "containing": list(self.containing),
        }


@dataclass(frozen=True)
class ExponentVector:
    """Exponents a_i of the form: div = sum (a_i - 1) P(V_i)."""

    a: Tuple[Rational, ...]

    @property
    def q(self) -> int:
        return int(reduce(ilcm, [x.q for x in self.a], 1))

    def __len__(self) -> int:
        return len(self.a)

    def to_json(self):
        return [str(x) for x in self.a]


@dataclass(frozen=True)
class MultiplicityVector:
    m: Tuple[int, ...]

    def to_json(self):
        return list(self.m)


@dataclass(frozen=True)
class JobOptions:
    truncation: Optional[int] = None
    samples: int = 20
    seed: int = 0
    bound: int = 3
    delta: Optional[Rational] = None
    corpus: Optional[str] = None

    def to_json(self) -> Dict[str, Any]:
        out: Dict[str, Any] = {"samples": self.samples, "seed": self.seed, "bound": self.bound}
        if self.truncation is not None:
            out["truncation"] = self.truncation
        if self.delta is not None:
            out["delta"] = str(self.delta)
        if self.corpus is not None:
            out["corpus"] = self.corpus
        return out


@dataclass(frozen=True)
class JobSpec:
    """A check job that names a corpus may leave ambient_dim and hyperplanes out."""

    command: Command
    ambient_dim: Optional[int]
    hyperplanes: Optional[Tuple[Vector, ...]]
    exponents: Optional[ExponentVector] = None
    multiplicities: Optional[MultiplicityVector] = None
    options: JobOptions = field(default_factory=JobOptions)

    def to_json(self) -> Dict[str, Any]:
        out: Dict[str, Any] = {"command": self.command.value, "options": self.options.to_json()}
        if self.hyperplanes is not None:
            out["ambient_dim"] = self.ambient_dim
            out["hyperplanes"] = [list(h) for h in self.hyperplanes]
        if self.exponents is not None:
            out["exponents"] = self.exponents.to_json()
        if self.multiplicities is not None:
            out["multiplicities"] = self.multiplicities.to_json()
        return out


@dataclass
class ResultDoc:
    job: Dict[str, Any]
    result: Optional[Dict[str, Any]]
    provenance: Dict[str, Any]
    error: Optional[Dict[str, Any]] = None
    exit_code: int = 0

    def to_dict(self) -> Dict[str, Any]:
        out: Dict[str, Any] = {"job": self.job, "provenance": self.provenance}
        if self.error is not None:
            out["error"] = self.error
        else:
            out["result"] = self.result
        return out
