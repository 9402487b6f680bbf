"""Simplicial complexes of scales: construction, face queries, f-vectors.

Faces are stored explicitly (a frozenset of bit masks, always including the
empty face 0).  The deterministic face order used everywhere is ascending
mask value.
"""

from __future__ import annotations

import os
from typing import Iterable, Mapping

from .universe import (
    PitchUniverse,
    check_pitch,
    is_non_chromatic,
    pitch_classes,
    scale_of,
)

DEFAULT_MAX_PITCHES = 24
MAX_PITCHES_ENV_VAR = "SCALE_COMPLEX_MAX_PITCHES"


class CapacityError(Exception):
    """Raised when exhaustive subset enumeration would be too large."""


def enumeration_limit() -> int:
    """Largest universe size accepted for exhaustive construction."""
    raw = os.environ.get(MAX_PITCHES_ENV_VAR)
    if raw is None:
        return DEFAULT_MAX_PITCHES
    try:
        return int(raw)
    except ValueError as exc:
        raise ValueError(f"{MAX_PITCHES_ENV_VAR} must be an integer, got {raw!r}") from exc


class SimplicialComplex:
    """Downward-closed family of faces over ground set {0, ..., n-1}.

    The constructor trusts its caller to pass a downward-closed family;
    the classmethod constructors guarantee it.  Instances are immutable
    value objects.
    """

    __slots__ = ("ground_set_size", "_faces", "_by_card", "_facets")

    def __init__(self, ground_set_size: int, faces: Iterable[int]):
        if ground_set_size < 1:
            raise ValueError("ground set must be non-empty")
        face_set = frozenset(faces)
        if 0 not in face_set:
            raise ValueError("every complex contains the empty face")
        self.ground_set_size = ground_set_size
        self._faces = face_set
        self._by_card: dict[int, list[int]] | None = None
        self._facets: tuple[int, ...] | None = None

    # -- constructors -------------------------------------------------

    @classmethod
    def from_facets(cls, ground_set_size: int, facets: Iterable[int]) -> "SimplicialComplex":
        """Downward closure of the given generating faces.

        Generators contained in other generators are dropped.
        """
        limit = (1 << ground_set_size) - 1
        generators = set()
        for facet in facets:
            if facet < 0 or facet > limit:
                raise ValueError(
                    f"facet mask {facet:#x} has members outside the ground set of size {ground_set_size}"
                )
            generators.add(facet)
        faces = {0}
        for g in generators:
            sub = g
            while sub:
                faces.add(sub)
                sub = (sub - 1) & g
        return cls(ground_set_size, faces)

    # -- queries ------------------------------------------------------

    @property
    def faces(self) -> frozenset[int]:
        return self._faces

    def __contains__(self, face: int) -> bool:
        return face in self._faces

    def __len__(self) -> int:
        return len(self._faces)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return (
            self.ground_set_size == other.ground_set_size
            and self._faces == other._faces
        )

    def __hash__(self) -> int:
        return hash((self.ground_set_size, self._faces))

    def __repr__(self) -> str:
        return (
            f"SimplicialComplex(ground_set_size={self.ground_set_size}, "
            f"faces={len(self._faces)}, facets={len(self.facets())})"
        )

    def _cardinality_index(self) -> dict[int, list[int]]:
        if self._by_card is None:
            index: dict[int, list[int]] = {}
            for face in self._faces:
                index.setdefault(face.bit_count(), []).append(face)
            for bucket in index.values():
                bucket.sort()
            self._by_card = index
        return self._by_card

    @property
    def dim(self) -> int:
        """Dimension of the largest face; -1 for the trivial complex."""
        return max(self._cardinality_index()) - 1

    def f_vector(self) -> tuple[int, ...]:
        """Face counts by cardinality, starting at 1 for the empty face."""
        index = self._cardinality_index()
        return tuple(len(index.get(card, ())) for card in range(self.dim + 2))

    def faces_of_dim(self, d: int) -> list[int]:
        """All faces of dimension ``d`` (cardinality d+1) in ascending mask order."""
        return list(self._cardinality_index().get(d + 1, ()))

    def facets(self) -> list[int]:
        """Maximal faces in ascending mask order."""
        if self._facets is None:
            found = []
            for face in self._faces:
                for p in range(self.ground_set_size):
                    extension = face | (1 << p)
                    if extension != face and extension in self._faces:
                        break
                else:
                    found.append(face)
            self._facets = tuple(sorted(found))
        return list(self._facets)

    def is_pure(self) -> bool:
        """True iff all facets have the same cardinality."""
        cards = {f.bit_count() for f in self.facets()}
        return len(cards) == 1

    def is_downward_closed(self) -> bool:
        """Exhaustive closure check (test helper; O(faces * ground set))."""
        for face in self._faces:
            for p in pitch_classes(face):
                if face & ~(1 << p) not in self._faces:
                    return False
        return True

    def without_faces(self, removed: Iterable[int]) -> "SimplicialComplex":
        """Copy with the given faces removed; caller preserves closure."""
        return SimplicialComplex(self.ground_set_size, self._faces - set(removed))

    # -- JSON ---------------------------------------------------------

    def to_json_dict(self) -> dict:
        return {
            "ground_set_size": self.ground_set_size,
            "facets": [list(pitch_classes(f)) for f in self.facets()],
            "f_vector": list(self.f_vector()),
        }

    @classmethod
    def from_json_dict(cls, data: Mapping) -> "SimplicialComplex":
        try:
            ground = int(data["ground_set_size"])
            facet_lists = data["facets"]
        except (KeyError, TypeError) as exc:
            raise ValueError(f"complex JSON needs ground_set_size and facets: {exc}") from exc
        masks = []
        for members in facet_lists:
            mask = 0
            for p in members:
                p = int(p)
                if not 0 <= p < ground:
                    raise ValueError(f"facet member {p} outside ground set of size {ground}")
                mask |= 1 << p
            masks.append(mask)
        complex_ = cls.from_facets(ground, masks)
        declared = data.get("f_vector")
        if declared is not None and list(complex_.f_vector()) != [int(x) for x in declared]:
            raise ValueError("declared f_vector does not match the facet closure")
        return complex_


def build_non_chromatic_complex(universe: PitchUniverse) -> SimplicialComplex:
    """All non-chromatic scales of the universe, by exhaustive enumeration.

    Rejects universes larger than the configured limit (default 24 pitch
    classes, overridable via SCALE_COMPLEX_MAX_PITCHES) instead of running
    for hours.
    """
    limit = enumeration_limit()
    if universe.n_pitches > limit:
        raise CapacityError(
            f"exhaustive enumeration capped at {limit} pitch classes "
            f"(requested {universe.n_pitches}); raise {MAX_PITCHES_ENV_VAR} to override"
        )
    faces = [
        scale for scale in range(1 << universe.n_pitches)
        if is_non_chromatic(scale, universe)
    ]
    return SimplicialComplex(universe.n_pitches, faces)


def parse_face(members: Iterable[int], universe: PitchUniverse) -> int:
    """Bit mask of an explicit member list, validated against the universe."""
    return scale_of((check_pitch(int(p), universe) for p in members), universe)
