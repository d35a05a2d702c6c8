"""
Named arrangements used by the theorem suite and the golden vectors.

Tags: "generic", "decomposable", "non-essential", "indecomposable"
(the last one means essential and indecomposable).
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Tuple

from ..arrangement import (
    generic_arrangement,
    is_essential,
    is_generic,
    is_indecomposable,
    parse_arrangement,
    product_arrangement,
)
from ..models import Arrangement


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    arrangement: Arrangement
    tags: Tuple[str, ...]
    # ambient dimension of the first factor, for entries built as products
    split: Optional[int] = None


def boolean(ambient_dim: int) -> Arrangement:
    rows = [[1 if j == i else 0 for j in range(ambient_dim)] for i in range(ambient_dim)]
    return parse_arrangement(ambient_dim, rows)


def pencil(k: int) -> Arrangement:
    """k lines through the origin of C^2: y = 0 and x + j y = 0 for j = 0..k-2."""
    rows = [[0, 1]] + [[1, j] for j in range(k - 1)]
    return parse_arrangement(2, rows)


def braid(ambient_dim: int) -> Arrangement:
    """x_i - x_j = 0 in C^N; never essential (the diagonal is in every hyperplane)."""
    rows = []
    for i in range(ambient_dim):
        for j in range(i + 1, ambient_dim):
            rows.append([1 if k == i else (-1 if k == j else 0) for k in range(ambient_dim)])
    return parse_arrangement(ambient_dim, rows)


def essential_braid() -> Arrangement:
    """The braid arrangement of C^4 after dividing out the diagonal (six planes in C^3)."""
    return parse_arrangement(
        3,
        [[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, -1, 0], [1, 0, -1], [0, 1, -1]],
    )


def lifted(arrangement: Arrangement, extra: int) -> Arrangement:
    """Same hyperplanes in C^(N+extra); the new directions lie in every hyperplane."""
    return product_arrangement(arrangement, Arrangement(ambient_dim=extra, normals=()))


def tags_for(arrangement: Arrangement) -> Tuple[str, ...]:
    tags: List[str] = []
    essential = is_essential(arrangement)
    if is_generic(arrangement):
        tags.append("generic")
    if not essential:
        tags.append("non-essential")
    if not is_indecomposable(arrangement):
        tags.append("decomposable")
    elif essential:
        tags.append("indecomposable")
    return tuple(tags)


def _entry(name: str, arrangement: Arrangement) -> CorpusEntry:
    return CorpusEntry(name=name, arrangement=arrangement, tags=tags_for(arrangement))


def _product_entry(name: str, first: Arrangement, second: Arrangement) -> CorpusEntry:
    arrangement = product_arrangement(first, second)
    return CorpusEntry(name=name, arrangement=arrangement, tags=tags_for(arrangement), split=first.ambient_dim)


def product_corpus() -> List[CorpusEntry]:
    return [
        _product_entry("boolean-2", boolean(1), boolean(1)),
        _product_entry("boolean-3", boolean(1), boolean(2)),
        _product_entry("boolean-4", boolean(2), boolean(2)),
        _product_entry("pencil-3 x C", pencil(3), boolean(1)),
        _product_entry("C x pencil-3", boolean(1), pencil(3)),
        _product_entry("pencil-4 x C", pencil(4), boolean(1)),
        _product_entry("pencil-5 x C", pencil(5), boolean(1)),
        _product_entry("pencil-3 x boolean-2", pencil(3), boolean(2)),
        _product_entry("pencil-3 x pencil-3", pencil(3), pencil(3)),
        _product_entry("generic-3-4 x C", generic_arrangement(3, 4), boolean(1)),
    ]


def non_essential_corpus() -> List[CorpusEntry]:
    return [
        _entry("line in C^2", parse_arrangement(2, [[1, 0]])),
        _entry("two planes in C^3", parse_arrangement(3, [[1, 0, 0], [0, 1, 0]])),
        _entry("pencil-3 in C^3", lifted(pencil(3), 1)),
        _entry("pencil-4 in C^3", lifted(pencil(4), 1)),
        _entry("braid-3", braid(3)),
        _entry("boolean-3 in C^4", lifted(boolean(3), 1)),
    ]


def indecomposable_corpus() -> List[CorpusEntry]:
    return [
        _entry("pencil-3", pencil(3)),
        _entry("pencil-4", pencil(4)),
        _entry("pencil-5", pencil(5)),
        _entry("generic-3-4", generic_arrangement(3, 4)),
        _entry("generic-3-5", generic_arrangement(3, 5)),
        _entry("braid-4-essential", essential_braid()),
    ]


def generic_corpus(n_values=(1, 2, 3), d_values=range(2, 8)) -> List[CorpusEntry]:
    """generic_arrangement(n+1, d) for every (n, d) pair."""
    return [
        _entry(f"generic-{n + 1}-{d}", generic_arrangement(n + 1, d))
        for n in n_values
        for d in d_values
    ]


def default_corpus() -> List[CorpusEntry]:
    return product_corpus() + non_essential_corpus() + indecomposable_corpus()


def all_corpora() -> List[CorpusEntry]:
    return default_corpus() + generic_corpus()


CORPORA: Dict[str, Callable[[], List[CorpusEntry]]] = {
    "default": default_corpus,
    "product": product_corpus,
    "non-essential": non_essential_corpus,
    "indecomposable": indecomposable_corpus,
    "generic": generic_corpus,
    "all": all_corpora,
}


def corpus_by_name(name: str) -> List[CorpusEntry]:
    return CORPORA[name]()
