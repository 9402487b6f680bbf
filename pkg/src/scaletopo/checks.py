"""Self-contained verification suite behind the ``verify`` subcommand.

Each check recomputes one published fact about the non-chromatic scale
complex and reports pass/fail.  Where a fact has an independent route
(brute-force recount, composition search), the check runs both routes and
compares.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Callable

from .classify import classify_facets, enumerate_maximal_sequences
from .collapse import collapse_above_dim, find_free_pairs, is_collapsible_facet
from .complexes import SimplicialComplex, build_non_chromatic_complex
from .homology import Chain, apply_boundary, reduced_betti
from .spheres import (
    basis_report,
    messiaen_scales,
    pairwise_intersection,
    sphere_hexatonics,
    sphere_subcomplex,
    triple_intersection,
    verify_homology_sphere,
)
from .universe import (
    DEFAULT_UNIVERSE,
    canonical_rotation,
    format_intervals,
    is_non_chromatic,
    pitch_classes,
    scale_of,
)

PUBLISHED_F_VECTOR = (1, 12, 66, 208, 399, 456, 282, 72, 3)
PUBLISHED_BETTI = (0, 0, 0, 0, 0, 0, 3, 0, 0)
# Rows follow the classification order: descending size, then canonical sequence.
PUBLISHED_CLASS_TABLE = (
    (8, "2-1-2-1-2-1-2-1", 3, "diminished"),
    (7, "2-1-2-2-1-3-1", 12, "harmonic minor"),
    (7, "2-1-2-2-2-2-1", 12, "melodic minor"),
    (7, "2-2-1-2-1-3-1", 12, "harmonic major"),
    (7, "2-2-1-2-2-2-1", 12, "major"),
    (6, "1-3-1-3-1-3", 4, "augmented"),
    (6, "2-2-2-2-2-2", 2, "whole tone"),
)

C_MAJOR = scale_of([0, 2, 4, 5, 7, 9, 11])
DIMINISHED_FROM_C = scale_of([0, 2, 3, 5, 6, 8, 9, 11])


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str


def _naive_face_counts() -> list[int]:
    """Independent recount: scan index runs directly, no bit tricks."""
    counts = [0] * 13
    for subset in range(1 << 12):
        members = [p for p in range(12) if subset >> p & 1]
        member_set = set(members)
        chromatic = any(
            {(start + j) % 12 for j in range(3)} <= member_set for start in range(12)
        )
        if not chromatic:
            counts[len(members)] += 1
    return counts


def _fixtures() -> dict[str, SimplicialComplex]:
    return {
        "two-piece complex": SimplicialComplex.from_facets(3, [0b011, 0b100]),
        "hollow triangle": SimplicialComplex.from_facets(3, [0b011, 0b110, 0b101]),
        "filled triangle": SimplicialComplex.from_facets(3, [0b111]),
        "tetrahedron edge skeleton": SimplicialComplex.from_facets(
            4, [scale_of(pair, DEFAULT_UNIVERSE) for pair in combinations(range(4), 2)]
        ),
    }


def check_f_vector(knc: SimplicialComplex) -> CheckResult:
    computed = knc.f_vector()
    recount = tuple(_naive_face_counts()[:9])
    ok = computed == PUBLISHED_F_VECTOR and recount == PUBLISHED_F_VECTOR
    return CheckResult(
        "f-vector",
        ok,
        f"computed {computed}, brute-force recount {recount}",
    )


def check_facet_classification(knc: SimplicialComplex) -> CheckResult:
    facets = knc.facets()
    table = tuple(
        (c.cardinality, format_intervals(c.display_sequence), c.scale_count, c.name)
        for c in classify_facets(knc)
    )
    ok = len(facets) == 57 and table == PUBLISHED_CLASS_TABLE
    return CheckResult(
        "facet classification",
        ok,
        f"{len(facets)} facets in {len(table)} interval classes",
    )


def check_maximal_sequences(knc: SimplicialComplex) -> CheckResult:
    searched = enumerate_maximal_sequences()
    from_facets = sorted(
        {c.canonical_sequence for c in classify_facets(knc)},
        key=lambda seq: (-len(seq), seq),
    )
    expected = sorted(
        (canonical_rotation(tuple(int(x) for x in row[1].split("-"))) for row in PUBLISHED_CLASS_TABLE),
        key=lambda seq: (-len(seq), seq),
    )
    ok = searched == from_facets == expected
    return CheckResult(
        "maximal interval sequences",
        ok,
        f"composition search found {len(searched)}, facet classification found {len(from_facets)}",
    )


def check_homology(knc: SimplicialComplex) -> CheckResult:
    betti = reduced_betti(knc)
    return CheckResult(
        "scale-complex homology",
        betti == PUBLISHED_BETTI,
        f"reduced Betti numbers (dims -1..7): {' '.join(str(b) for b in betti)}",
    )


def check_fixture_homology(_: SimplicialComplex) -> CheckResult:
    expected = {
        "two-piece complex": (0, 1, 0),
        "hollow triangle": (0, 0, 1),
        "filled triangle": (0, 0, 0, 0),
        "tetrahedron edge skeleton": (0, 0, 3),
    }
    results = {name: reduced_betti(k) for name, k in _fixtures().items()}
    ok = results == expected
    return CheckResult(
        "fixture homologies",
        ok,
        "; ".join(f"{name}: {value}" for name, value in sorted(results.items())),
    )


def check_boundary_squares_to_zero(knc: SimplicialComplex) -> CheckResult:
    complexes = dict(_fixtures())
    complexes["non-chromatic complex"] = knc
    checked = 0
    for complex_ in complexes.values():
        for face in complex_.faces:
            if face.bit_count() < 2:
                continue
            unit = Chain(face.bit_count() - 1, {face: Fraction(1)})
            if not apply_boundary(apply_boundary(unit, complex_), complex_).is_zero():
                return CheckResult(
                    "boundary of boundary vanishes",
                    False,
                    f"failed on face {sorted(pitch_classes(face))}",
                )
            checked += 1
    return CheckResult(
        "boundary of boundary vanishes",
        True,
        f"checked on {checked} faces across {len(complexes)} complexes",
    )


def check_collapse_to_dim_five(knc: SimplicialComplex) -> CheckResult:
    result = collapse_above_dim(knc, 5)
    f_after = result.complex.f_vector()
    betti_ok = reduced_betti(result.complex) == tuple(PUBLISHED_BETTI[: result.complex.dim + 2])
    ok = (
        result.completed
        and result.complex.dim <= 5
        and len(f_after) == 7
        and betti_ok
        and len(result.log) * 2 == len(knc) - len(result.complex)
    )
    return CheckResult(
        "collapse to dimension five",
        ok,
        f"{len(result.log)} collapses, f-vector after {f_after}, Betti preserved {betti_ok}",
    )


def check_two_triangle_collapses(_: SimplicialComplex) -> CheckResult:
    # Two triangles sharing an edge, only the right one filled.
    fixture = SimplicialComplex.from_facets(4, [0b0011, 0b0101, 0b1110])
    pairs = find_free_pairs(fixture)
    only_filled = all(pair.facet == 0b1110 for pair in pairs) and len(pairs) == 3

    shared = fixture.without_faces((0b1110, 0b0110))
    blocked = not find_free_pairs(shared)

    outer = fixture.without_faces((0b1110, 0b1010))
    outer_pairs = find_free_pairs(outer)
    one_more = len(outer_pairs) == 1
    none_after = one_more and not find_free_pairs(outer.without_faces(outer_pairs[0]))

    ok = only_filled and blocked and none_after
    return CheckResult(
        "two-triangle collapse behavior",
        ok,
        "shared-edge collapse blocks further collapses; "
        "outer-edge collapse allows exactly one more",
    )


def check_collapsibility_witnesses(knc: SimplicialComplex) -> CheckResult:
    facets = set(knc.facets())
    major_minus_d = C_MAJOR & ~(1 << 2)
    major_ok = [g for g in facets if g & major_minus_d == major_minus_d] == [C_MAJOR]
    diminished_minus_c = DIMINISHED_FROM_C & ~1
    diminished_ok = [
        g for g in facets if g & diminished_minus_c == diminished_minus_c
    ] == [DIMINISHED_FROM_C]
    hexatonics = [f for f in facets if f.bit_count() == 6]
    hexatonic_ok = len(hexatonics) == 6 and not any(
        is_collapsible_facet(knc, f) for f in hexatonics
    )
    ok = (
        major_ok
        and diminished_ok
        and hexatonic_ok
        and is_collapsible_facet(knc, C_MAJOR)
        and is_collapsible_facet(knc, DIMINISHED_FROM_C)
    )
    return CheckResult(
        "collapsibility witnesses",
        ok,
        "major facet collapses by dropping D; the eight-note facet through C "
        "collapses by dropping C; no hexatonic facet collapses",
    )


def check_messiaen_spheres(knc: SimplicialComplex) -> CheckResult:
    scales = messiaen_scales()
    if len(scales) != 4:
        return CheckResult("nine-note sphere suite", False, "expected 4 nine-note scales")
    hex_ok = True
    seven_ok = True
    cert_ok = True
    for scale in scales:
        hexatonics = sphere_hexatonics(scale)
        hex_ok = hex_ok and len(hexatonics) == 27
        members = pitch_classes(scale.members)
        seven_ok = seven_ok and not any(
            is_non_chromatic(scale_of(sub, DEFAULT_UNIVERSE), DEFAULT_UNIVERSE)
            for sub in combinations(members, 7)
        )
        cert_ok = cert_ok and verify_homology_sphere(sphere_subcomplex(scale), 5).passed
    hexatonic_facets = sorted(f for f in knc.facets() if f.bit_count() == 6)
    pairwise = sorted(
        pairwise_intersection(a, b) for a, b in combinations(scales, 2)
    )
    triples = sorted(
        triple_intersection(a, b, c) for a, b, c in combinations(scales, 3)
    )
    triads = sorted(scale.omitted_triad for scale in scales)
    intersections_ok = pairwise == hexatonic_facets and triples == triads
    ok = hex_ok and seven_ok and cert_ok and intersections_ok
    return CheckResult(
        "nine-note sphere suite",
        ok,
        "4 scales, 27 hexatonics each, no seven-note subscales, "
        f"sphere certificates passed {cert_ok}, intersections match {intersections_ok}",
    )


def check_basis_ranks(knc: SimplicialComplex) -> CheckResult:
    report = basis_report(knc)
    return CheckResult(
        "sphere-cycle basis ranks",
        report.passed,
        f"single ranks {report.single_ranks}, triple ranks "
        f"{tuple(rank for _, rank in report.triple_ranks)}, all four {report.full_rank}",
    )


def check_seven_note_split(knc: SimplicialComplex) -> CheckResult:
    sevens = knc.faces_of_dim(6)
    facets = set(knc.facets())
    eights = [f for f in facets if f.bit_count() == 8]
    maximal = [f for f in sevens if f in facets]
    contained = [
        f for f in sevens if f not in facets and any(f & g == f for g in eights)
    ]
    ok = (
        len(sevens) == 72
        and len(maximal) == 48
        and len(contained) == 24
        and len(maximal) + len(contained) == len(sevens)
    )
    return CheckResult(
        "seven-note face split",
        ok,
        f"{len(sevens)} seven-note faces = {len(maximal)} facets + "
        f"{len(contained)} inside eight-note facets",
    )


ALL_CHECKS: tuple[tuple[str, Callable[[SimplicialComplex], CheckResult]], ...] = (
    ("f-vector", check_f_vector),
    ("facet classification", check_facet_classification),
    ("maximal interval sequences", check_maximal_sequences),
    ("scale-complex homology", check_homology),
    ("fixture homologies", check_fixture_homology),
    ("boundary of boundary vanishes", check_boundary_squares_to_zero),
    ("collapse to dimension five", check_collapse_to_dim_five),
    ("two-triangle collapse behavior", check_two_triangle_collapses),
    ("collapsibility witnesses", check_collapsibility_witnesses),
    ("nine-note sphere suite", check_messiaen_spheres),
    ("sphere-cycle basis ranks", check_basis_ranks),
    ("seven-note face split", check_seven_note_split),
)


def run_verification() -> list[CheckResult]:
    """Run every published-fact check against a freshly built complex."""
    knc = build_non_chromatic_complex(DEFAULT_UNIVERSE)
    return [check(knc) for _, check in ALL_CHECKS]
