"""Messiaen nine-note scales and the 5-sphere subcomplexes they generate.

Each of the four augmented triads, when deleted from the 12 pitch classes,
leaves a nine-note scale.  Its 27 non-chromatic hexatonic subsets generate
a subcomplex that is certified here as a homology 5-sphere and a closed
pseudomanifold; the four fundamental cycles span a rank-3 subspace of the
fifth homology of the full non-chromatic complex (any three of them are
independent).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import gcd

from .complexes import SimplicialComplex
from .homology import Chain, cycle_space_basis, homology_rank_of_cycles, reduced_betti
from .universe import (
    DEFAULT_UNIVERSE,
    PitchUniverse,
    is_non_chromatic,
    pitch_classes,
    scale_of,
)


@dataclass(frozen=True)
class MessiaenScale:
    """Nine-note complement of an augmented triad (masks over 12 pitches)."""

    omitted_triad: int
    members: int


def augmented_triads(universe: PitchUniverse = DEFAULT_UNIVERSE) -> list[int]:
    """The four triads spaced 4-4-4; they partition the 12 pitch classes."""
    if universe.n_pitches != 12:
        raise ValueError("augmented triads are defined for the 12-pitch universe only")
    return [scale_of([root, root + 4, root + 8], universe) for root in range(4)]


def messiaen_scales(universe: PitchUniverse = DEFAULT_UNIVERSE) -> list[MessiaenScale]:
    """The four nine-note scales obtained by omitting an augmented triad."""
    full = universe.full_mask
    return [MessiaenScale(triad, full ^ triad) for triad in augmented_triads(universe)]


def sphere_hexatonics(
    scale: MessiaenScale, universe: PitchUniverse = DEFAULT_UNIVERSE
) -> list[int]:
    """The 27 non-chromatic hexatonic subsets of a Messiaen scale.

    Constructed by choosing two pitch classes from each of the three
    semitone triples left between the omitted triad's notes, then
    cross-checked against direct enumeration of all 6-element subsets.
    """
    root = min(pitch_classes(scale.omitted_triad))
    triples = [
        [(root + offset + step) % 12 for step in (1, 2, 3)]
        for offset in (0, 4, 8)
    ]
    constructed = set()
    for a in combinations(triples[0], 2):
        for b in combinations(triples[1], 2):
            for c in combinations(triples[2], 2):
                constructed.add(scale_of(a + b + c, universe))
    enumerated = {
        scale_of(subset, universe)
        for subset in combinations(pitch_classes(scale.members), 6)
        if is_non_chromatic(scale_of(subset, universe), universe)
    }
    if constructed != enumerated:
        raise RuntimeError(
            "two-of-three construction disagrees with hexatonic enumeration"
        )
    return sorted(constructed)


def sphere_subcomplex(
    scale: MessiaenScale, universe: PitchUniverse = DEFAULT_UNIVERSE
) -> SimplicialComplex:
    """Subcomplex generated by the 27 hexatonics (all their subscales)."""
    return SimplicialComplex.from_facets(
        universe.n_pitches, sphere_hexatonics(scale, universe)
    )


@dataclass(frozen=True)
class SphereCertificate:
    """Verifiable stand-in for "is a d-sphere": homology of S^d, plus a
    connected closed-pseudomanifold check on the top-dimensional faces."""

    dimension: int
    betti_matches_sphere: bool
    closed_pseudomanifold: bool
    top_faces_connected: bool

    @property
    def passed(self) -> bool:
        return (
            self.betti_matches_sphere
            and self.closed_pseudomanifold
            and self.top_faces_connected
        )


def verify_homology_sphere(complex_: SimplicialComplex, d: int) -> SphereCertificate:
    """Certify homology-sphere structure in dimension ``d``.

    The input must be pure of dimension ``d``.  Checks: reduced Betti
    vector equals that of the d-sphere; every (d-1)-face lies in exactly
    two d-faces; the d-face adjacency graph is connected.
    """
    top = complex_.faces_of_dim(d)
    if not top or not complex_.is_pure() or complex_.dim != d:
        raise ValueError(f"complex is not pure of dimension {d}")

    betti = reduced_betti(complex_)
    expected = tuple(1 if i == d + 1 else 0 for i in range(d + 2))
    betti_ok = betti == expected

    ridge_count: dict[int, int] = {}
    for face in top:
        for p in pitch_classes(face):
            ridge = face & ~(1 << p)
            ridge_count[ridge] = ridge_count.get(ridge, 0) + 1
    pseudo_ok = all(count == 2 for count in ridge_count.values()) and set(
        ridge_count
    ) == set(complex_.faces_of_dim(d - 1))

    adjacency: dict[int, set[int]] = {face: set() for face in top}
    for a, b in combinations(top, 2):
        if (a & b).bit_count() == d:
            adjacency[a].add(b)
            adjacency[b].add(a)
    seen = {top[0]}
    stack = [top[0]]
    while stack:
        face = stack.pop()
        for neighbor in adjacency[face]:
            if neighbor not in seen:
                seen.add(neighbor)
                stack.append(neighbor)
    connected_ok = len(seen) == len(top)

    return SphereCertificate(d, betti_ok, pseudo_ok, connected_ok)


def fundamental_cycle(complex_: SimplicialComplex, d: int) -> Chain:
    """The +-1 top-dimensional cycle spanning the one-dimensional cycle space.

    Sign-normalized so the first d-face in mask order carries +1.  Raises
    when the cycle space is not one-dimensional or the primitive kernel
    vector is not supported on every d-face with unit coefficients.
    """
    basis = cycle_space_basis(complex_, d)
    if len(basis) != 1:
        raise ValueError(
            f"cycle space has dimension {len(basis)}, expected 1"
        )
    coeffs = basis[0].coeffs
    scale = 1
    for value in coeffs.values():
        scale = scale * value.denominator // gcd(scale, value.denominator)
    integers = {face: int(value * scale) for face, value in coeffs.items()}
    g = 0
    for value in integers.values():
        g = gcd(g, value)
    integers = {face: value // g for face, value in integers.items()}

    top = complex_.faces_of_dim(d)
    if sorted(integers) != top or any(abs(v) != 1 for v in integers.values()):
        raise ValueError("kernel vector is not a unit-coefficient cycle on all top faces")
    if integers[top[0]] < 0:
        integers = {face: -value for face, value in integers.items()}
    return Chain(d, {face: Fraction(value) for face, value in integers.items()})


def pairwise_intersection(m1: MessiaenScale, m2: MessiaenScale) -> int:
    """Six-note intersection of two distinct Messiaen scales (a hexatonic
    facet of the non-chromatic complex)."""
    if m1 == m2:
        raise ValueError("pairwise intersection needs two distinct scales")
    return m1.members & m2.members


def triple_intersection(m1: MessiaenScale, m2: MessiaenScale, m3: MessiaenScale) -> int:
    """Common augmented triad of three distinct Messiaen scales."""
    if len({m1, m2, m3}) != 3:
        raise ValueError("triple intersection needs three distinct scales")
    return m1.members & m2.members & m3.members


@dataclass(frozen=True)
class BasisReport:
    """Ranks in fifth homology spanned by the four fundamental sphere cycles."""

    single_ranks: tuple[int, ...]
    triple_ranks: tuple[tuple[tuple[int, ...], int], ...]
    full_rank: int

    @property
    def passed(self) -> bool:
        return (
            all(rank == 1 for rank in self.single_ranks)
            and all(rank == 3 for _, rank in self.triple_ranks)
            and self.full_rank == 3
        )


def basis_report(
    complex_: SimplicialComplex, universe: PitchUniverse = DEFAULT_UNIVERSE
) -> BasisReport:
    """Homology ranks of all sphere-cycle subsets inside the given complex.

    Every three-element subset must have rank 3, as must all four cycles
    together: the four sphere classes span exactly the three holes.
    """
    cycles = [
        fundamental_cycle(sphere_subcomplex(scale, universe), 5)
        for scale in messiaen_scales(universe)
    ]
    singles = tuple(
        homology_rank_of_cycles([cycle], complex_, 5) for cycle in cycles
    )
    triples = tuple(
        (combo, homology_rank_of_cycles([cycles[i] for i in combo], complex_, 5))
        for combo in combinations(range(4), 3)
    )
    full = homology_rank_of_cycles(cycles, complex_, 5)
    return BasisReport(singles, triples, full)
