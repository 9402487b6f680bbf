"""Elementary collapses: free-pair detection and greedy dimension reduction.

A free pair is a facet F together with a codimension-1 face M whose only
containing facet is F.  Removing both faces is a homotopy equivalence, so
reduced Betti numbers are preserved.  Collapse order matters; everything
here is deterministic: pairs are ordered by descending facet cardinality,
then ascending (facet, free face) mask order.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple

from .complexes import SimplicialComplex
from .universe import pitch_classes


class FreePair(NamedTuple):
    facet: int
    free_face: int


@dataclass(frozen=True)
class CollapseResult:
    complex: SimplicialComplex
    log: tuple[FreePair, ...]
    completed: bool


def _containing_facets(facets: Iterable[int], face: int) -> list[int]:
    return [g for g in facets if face & g == face]


def find_free_pairs(complex_: SimplicialComplex) -> list[FreePair]:
    """All free pairs, ordered by descending facet size then mask order.

    Because M has codimension 1 in F, "F is the only facet containing M"
    already implies that F is M's only proper superface in the complex.
    """
    facets = complex_.facets()
    pairs = []
    for facet in facets:
        for p in pitch_classes(facet):
            candidate = facet & ~(1 << p)
            if len(_containing_facets(facets, candidate)) == 1:
                pairs.append(FreePair(facet, candidate))
    pairs.sort(key=lambda pair: (-pair.facet.bit_count(), pair.facet, pair.free_face))
    return pairs


def _is_free(complex_: SimplicialComplex, pair: FreePair) -> bool:
    facet, face = pair
    if face & facet != face or facet.bit_count() != face.bit_count() + 1:
        return False
    facets = complex_.facets()
    if facet not in facets:
        return False
    return len(_containing_facets(facets, face)) == 1


def collapse_pair(complex_: SimplicialComplex, pair: FreePair) -> SimplicialComplex:
    """Remove a currently-free pair; raises if the pair has gone stale."""
    if not _is_free(complex_, pair):
        raise ValueError(
            f"({sorted(pitch_classes(pair.facet))}, {sorted(pitch_classes(pair.free_face))}) "
            "is not a free pair of this complex"
        )
    return complex_.without_faces(pair)


def is_collapsible_facet(complex_: SimplicialComplex, facet: int) -> bool:
    """True iff some codimension-1 face forms a free pair with the facet."""
    facets = complex_.facets()
    if facet not in facets:
        raise ValueError(f"{sorted(pitch_classes(facet))} is not a facet")
    for p in pitch_classes(facet):
        candidate = facet & ~(1 << p)
        if len(_containing_facets(facets, candidate)) == 1:
            return True
    return False


def collapse_above_dim(complex_: SimplicialComplex, d: int) -> CollapseResult:
    """Greedily collapse away all faces above dimension ``d``.

    Each step picks the first free pair whose facet exceeds the target
    dimension (largest facet first).  ``completed`` is False when oversized
    faces survive with no available collapse.
    """
    if d < 0:
        raise ValueError("target dimension must be >= 0")
    current = complex_
    log: list[FreePair] = []
    while True:
        candidates = [
            pair for pair in find_free_pairs(current)
            if pair.facet.bit_count() > d + 1
        ]
        if not candidates:
            break
        pair = candidates[0]
        current = current.without_faces(pair)
        log.append(pair)
    completed = current.dim <= d
    return CollapseResult(current, tuple(log), completed)


def collapse_log_json(log: Iterable[FreePair]) -> list[dict]:
    return [
        {
            "facet": list(pitch_classes(pair.facet)),
            "free_face": list(pitch_classes(pair.free_face)),
        }
        for pair in log
    ]
