"""Facet classification by interval sequence, and the structural checks
behind the seven-sequence case analysis.

Maximal non-chromatic scales never contain an interval of four or more
semitones, and any interval of three must be flanked by semitones on both
cyclic sides; together these pin the facet interval sequences down to
seven classes at twelve pitches.  Class names are musical conventions and
are attached only in the default universe.
"""

from __future__ import annotations

from dataclasses import dataclass

from .complexes import SimplicialComplex
from .universe import (
    DEFAULT_UNIVERSE,
    PitchUniverse,
    canonical_rotation,
    interval_sequence,
    is_non_chromatic,
    pitch_classes,
)

UNNAMED = "unnamed"

# Display rotations follow musical convention (root on the left).
_DEFAULT_CLASS_NAMES: tuple[tuple[tuple[int, ...], str], ...] = (
    ((2, 1, 2, 1, 2, 1, 2, 1), "diminished"),
    ((2, 2, 1, 2, 2, 2, 1), "major"),
    ((2, 1, 2, 2, 2, 2, 1), "melodic minor"),
    ((2, 1, 2, 2, 1, 3, 1), "harmonic minor"),
    ((2, 2, 1, 2, 1, 3, 1), "harmonic major"),
    ((2, 2, 2, 2, 2, 2), "whole tone"),
    ((1, 3, 1, 3, 1, 3), "augmented"),
)

_CANONICAL_TO_NAMED = {
    canonical_rotation(display): (name, display)
    for display, name in _DEFAULT_CLASS_NAMES
}


def sequence_class_name(
    sequence: tuple[int, ...], universe: PitchUniverse = DEFAULT_UNIVERSE
) -> str:
    """Conventional name of an interval-sequence class, if it has one."""
    if (universe.n_pitches, universe.run_limit) != (12, 3):
        return UNNAMED
    named = _CANONICAL_TO_NAMED.get(canonical_rotation(sequence))
    return named[0] if named else UNNAMED


@dataclass(frozen=True)
class FacetClass:
    """One interval-sequence class of facets."""

    cardinality: int
    canonical_sequence: tuple[int, ...]
    display_sequence: tuple[int, ...]
    scale_count: int
    name: str


def classify_facets(
    complex_: SimplicialComplex, universe: PitchUniverse = DEFAULT_UNIVERSE
) -> list[FacetClass]:
    """Group the facets by canonical interval sequence.

    Classes are sorted by descending cardinality, then canonical sequence.
    """
    groups: dict[tuple[int, ...], int] = {}
    for facet in complex_.facets():
        key = canonical_rotation(interval_sequence(facet, universe))
        groups[key] = groups.get(key, 0) + 1
    named = (
        _CANONICAL_TO_NAMED
        if (universe.n_pitches, universe.run_limit) == (12, 3)
        else {}
    )
    classes = []
    for key, count in groups.items():
        name, display = named.get(key, (UNNAMED, key))
        classes.append(
            FacetClass(
                cardinality=len(key),
                canonical_sequence=key,
                display_sequence=display,
                scale_count=count,
                name=name,
            )
        )
    classes.sort(key=lambda c: (-c.cardinality, c.canonical_sequence))
    return classes


def _midpoint_insertions_stay_non_chromatic(
    complex_: SimplicialComplex, universe: PitchUniverse
) -> bool:
    """Every face with a gap of four or more accepts its midpoint pitch."""
    n = universe.n_pitches
    for face in complex_.faces:
        members = pitch_classes(face)
        if not members:
            continue
        gaps = interval_sequence(face, universe)
        for i, gap in enumerate(gaps):
            if gap >= 4:
                midpoint = (members[i] + gap // 2) % n
                if not is_non_chromatic(face | (1 << midpoint), universe):
                    return False
    return True


def check_no_wide_intervals(
    complex_: SimplicialComplex, universe: PitchUniverse = DEFAULT_UNIVERSE
) -> bool:
    """No facet interval reaches four semitones.

    Also verifies the reason constructively: any face with a wider gap can
    absorb the gap's midpoint and stay non-chromatic, so it cannot be
    maximal.
    """
    for facet in complex_.facets():
        if facet and max(interval_sequence(facet, universe)) >= 4:
            return False
    return _midpoint_insertions_stay_non_chromatic(complex_, universe)


def _three_gaps_extend(complex_: SimplicialComplex, universe: PitchUniverse) -> bool:
    """Every face with a 3-gap not flanked by semitones extends into that gap."""
    for face in complex_.faces:
        if face.bit_count() < 2:
            continue
        members = pitch_classes(face)
        gaps = interval_sequence(face, universe)
        k = len(gaps)
        for i, gap in enumerate(gaps):
            if gap != 3:
                continue
            if gaps[(i + 1) % k] == 1 and gaps[(i - 1) % k] == 1:
                continue
            start = members[i]
            if not any(
                is_non_chromatic(face | (1 << ((start + offset) % universe.n_pitches)), universe)
                for offset in (1, 2)
            ):
                return False
    return True


def check_threes_flanked_by_semitones(
    complex_: SimplicialComplex, universe: PitchUniverse = DEFAULT_UNIVERSE
) -> bool:
    """In every facet, each interval of three has semitone neighbors on both
    cyclic sides.

    The constructive converse is verified too: a face with a 3-gap missing
    a semitone neighbor always extends non-chromatically inside the gap.
    """
    for facet in complex_.facets():
        gaps = interval_sequence(facet, universe) if facet else ()
        k = len(gaps)
        for i, gap in enumerate(gaps):
            if gap == 3 and not (gaps[(i + 1) % k] == 1 and gaps[(i - 1) % k] == 1):
                return False
    return _three_gaps_extend(complex_, universe)


def _compositions(total: int, max_part: int):
    if total == 0:
        yield ()
        return
    for first in range(1, min(total, max_part) + 1):
        for rest in _compositions(total - first, max_part):
            yield (first,) + rest


def _has_cyclic_run_of_ones(sequence: tuple[int, ...], length: int) -> bool:
    k = len(sequence)
    if all(step == 1 for step in sequence):
        return k >= length
    return any(
        all(sequence[(i + j) % k] == 1 for j in range(length)) for i in range(k)
    )


def _some_insertion_stays_non_chromatic(
    sequence: tuple[int, ...], run_limit: int
) -> bool:
    for i, gap in enumerate(sequence):
        for left in range(1, gap):
            split = sequence[:i] + (left, gap - left) + sequence[i + 1:]
            if not _has_cyclic_run_of_ones(split, run_limit - 1):
                return True
    return False


def enumerate_maximal_sequences(
    universe: PitchUniverse = DEFAULT_UNIVERSE,
) -> list[tuple[int, ...]]:
    """Canonical interval sequences of maximal non-chromatic scales, found by
    direct search over cyclic compositions.

    A composition of the universe size qualifies when it has no cyclic run
    of ``run_limit - 1`` semitones and no single gap split avoids creating
    one.  This route never touches the face enumeration, so it
    cross-validates the facet classification.
    """
    found = set()
    for composition in _compositions(universe.n_pitches, universe.n_pitches):
        if _has_cyclic_run_of_ones(composition, universe.run_limit - 1):
            continue
        if _some_insertion_stays_non_chromatic(composition, universe.run_limit):
            continue
        found.add(canonical_rotation(composition))
    return sorted(found, key=lambda seq: (-len(seq), seq))
