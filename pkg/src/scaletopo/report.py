"""Report bundle: delimited summaries plus rendered figures.

Writes CSV files for the face counts, facet classification, homology and
sphere analysis into an output directory, with matplotlib figures saved
alongside them.
"""

from __future__ import annotations

import csv
import math
from itertools import combinations
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .classify import classify_facets, sequence_class_name
from .collapse import collapse_above_dim
from .complexes import SimplicialComplex
from .homology import reduced_betti
from .spheres import (
    messiaen_scales,
    pairwise_intersection,
    sphere_hexatonics,
    sphere_subcomplex,
    verify_homology_sphere,
)
from .universe import (
    DEFAULT_UNIVERSE,
    PitchUniverse,
    canonical_rotation,
    format_intervals,
    format_scale,
    interval_sequence,
    pitch_classes,
)


def _write_csv(path: Path, header: list[str], rows: list[list]) -> None:
    with path.open("w", newline="", encoding="utf-8") as handle:
        writer = csv.writer(handle)
        writer.writerow(header)
        writer.writerows(rows)


def _circle_positions(n: int) -> list[tuple[float, float]]:
    # Pitch class 0 at twelve o'clock, clockwise.
    return [
        (math.sin(2 * math.pi * i / n), math.cos(2 * math.pi * i / n))
        for i in range(n)
    ]


def _draw_scale_circle(ax, scale: int, universe: PitchUniverse, title: str) -> None:
    n = universe.n_pitches
    positions = _circle_positions(n)
    members = pitch_classes(scale)
    ax.add_patch(plt.Circle((0, 0), 1.0, fill=False, color="0.8", linewidth=0.8))
    for i, (x, y) in enumerate(positions):
        selected = i in members
        ax.plot(
            [x], [y],
            marker="o",
            markersize=9 if selected else 5,
            color="#2a7e43" if selected else "0.75",
            zorder=3,
        )
        ax.annotate(
            format_scale(1 << i, universe),
            (1.22 * x, 1.22 * y),
            ha="center", va="center", fontsize=8,
        )
    for a, b in zip(members, members[1:] + members[:1]):
        xa, ya = positions[a]
        xb, yb = positions[b]
        ax.plot([xa, xb], [ya, yb], color="#2a7e43", linewidth=1.2, zorder=2)
    ax.set_title(title, fontsize=9)
    ax.set_xlim(-1.45, 1.45)
    ax.set_ylim(-1.45, 1.45)
    ax.set_aspect("equal")
    ax.axis("off")


def _figure_f_vector(path: Path, complex_: SimplicialComplex) -> None:
    counts = complex_.f_vector()
    dims = list(range(-1, len(counts) - 1))
    fig, ax = plt.subplots(figsize=(6, 3.5))
    ax.bar(dims, counts, color="#31688e")
    for d, c in zip(dims, counts):
        ax.annotate(str(c), (d, c), ha="center", va="bottom", fontsize=8)
    ax.set_xlabel("dimension")
    ax.set_ylabel("number of faces")
    ax.set_title("faces of the non-chromatic scale complex")
    ax.set_xticks(dims)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def _figure_facet_classes(
    path: Path, complex_: SimplicialComplex, universe: PitchUniverse
) -> None:
    classes = classify_facets(complex_, universe)
    by_key: dict[tuple[int, ...], list[int]] = {}
    for facet in complex_.facets():
        seq = interval_sequence(facet, universe)
        by_key.setdefault(canonical_rotation(seq), []).append(facet)
    cols = 4
    rows = math.ceil(len(classes) / cols)
    fig, axes = plt.subplots(rows, cols, figsize=(3 * cols, 3.2 * rows))
    flat = axes.ravel() if hasattr(axes, "ravel") else [axes]
    for ax in flat[len(classes):]:
        ax.axis("off")
    for ax, facet_class in zip(flat, classes):
        representative = min(by_key[facet_class.canonical_sequence])
        title = (
            f"{facet_class.name}\n{format_intervals(facet_class.display_sequence)}"
            f"  (x{facet_class.scale_count})"
        )
        _draw_scale_circle(ax, representative, universe, title)
    fig.suptitle("maximal non-chromatic scales by interval class")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def _figure_collapse(path: Path, before: tuple[int, ...], after: tuple[int, ...]) -> None:
    dims = list(range(-1, len(before) - 1))
    padded_after = list(after) + [0] * (len(before) - len(after))
    width = 0.4
    fig, ax = plt.subplots(figsize=(6, 3.5))
    ax.bar([d - width / 2 for d in dims], before, width, label="before", color="#31688e")
    ax.bar([d + width / 2 for d in dims], padded_after, width, label="after", color="#9ecae1")
    ax.set_xlabel("dimension")
    ax.set_ylabel("number of faces")
    ax.set_title("face counts before/after collapsing above dimension 5")
    ax.set_xticks(dims)
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def _figure_sphere_intersections(path: Path, universe: PitchUniverse) -> None:
    scales = messiaen_scales(universe)
    n = len(scales)
    grid = [
        [
            (scales[i].members & scales[j].members).bit_count() if i != j else 9
            for j in range(n)
        ]
        for i in range(n)
    ]
    fig, ax = plt.subplots(figsize=(5.5, 4.5))
    image = ax.imshow(grid, cmap="YlGnBu", vmin=0, vmax=9)
    labels = [format_scale(s.omitted_triad, universe) for s in scales]
    ax.set_xticks(range(n), [f"omit {l}" for l in labels], fontsize=8)
    ax.set_yticks(range(n), [f"omit {l}" for l in labels], fontsize=8)
    for i in range(n):
        for j in range(n):
            if i == j:
                text = "9 notes"
            else:
                inter = scales[i].members & scales[j].members
                name = sequence_class_name(interval_sequence(inter, universe), universe)
                text = f"{grid[i][j]}\n{name}"
            ax.annotate(text, (j, i), ha="center", va="center", fontsize=7)
    ax.set_title("pairwise intersections of the four nine-note scales")
    fig.colorbar(image, ax=ax, label="common pitch classes")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def write_report(
    out_dir: str | Path,
    complex_: SimplicialComplex,
    universe: PitchUniverse = DEFAULT_UNIVERSE,
) -> list[Path]:
    """Write the CSV/figure bundle for a universe; returns the paths written."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    written: list[Path] = []

    counts = complex_.f_vector()
    path = out / "f_vector.csv"
    _write_csv(
        path,
        ["dimension", "cardinality", "face_count"],
        [[card - 1, card, count] for card, count in enumerate(counts)],
    )
    written.append(path)

    path = out / "facet_classes.csv"
    _write_csv(
        path,
        ["pitch_classes", "interval_sequence", "scale_count", "name"],
        [
            [c.cardinality, format_intervals(c.display_sequence), c.scale_count, c.name]
            for c in classify_facets(complex_, universe)
        ],
    )
    written.append(path)

    path = out / "facets.csv"
    _write_csv(
        path,
        ["facet", "cardinality", "interval_sequence"],
        [
            [
                format_scale(f, universe),
                f.bit_count(),
                format_intervals(interval_sequence(f, universe)),
            ]
            for f in complex_.facets()
        ],
    )
    written.append(path)

    betti = reduced_betti(complex_)
    path = out / "reduced_betti.csv"
    _write_csv(
        path,
        ["dimension", "reduced_betti"],
        [[d - 1, b] for d, b in enumerate(betti)],
    )
    written.append(path)

    collapse = collapse_above_dim(complex_, 5) if complex_.dim > 5 else None

    figure = out / "f_vector.png"
    _figure_f_vector(figure, complex_)
    written.append(figure)
    figure = out / "facet_classes.png"
    _figure_facet_classes(figure, complex_, universe)
    written.append(figure)
    if collapse is not None:
        figure = out / "collapse_profile.png"
        _figure_collapse(figure, counts, collapse.complex.f_vector())
        written.append(figure)

    if (universe.n_pitches, universe.run_limit) == (12, 3):
        scales = messiaen_scales(universe)
        path = out / "spheres.csv"
        rows = []
        for scale in scales:
            certificate = verify_homology_sphere(sphere_subcomplex(scale, universe), 5)
            rows.append(
                [
                    format_scale(scale.omitted_triad, universe),
                    format_scale(scale.members, universe),
                    len(sphere_hexatonics(scale, universe)),
                    certificate.betti_matches_sphere,
                    certificate.closed_pseudomanifold,
                    certificate.top_faces_connected,
                ]
            )
        _write_csv(
            path,
            [
                "omitted_triad",
                "members",
                "hexatonic_count",
                "betti_matches_sphere",
                "closed_pseudomanifold",
                "top_faces_connected",
            ],
            rows,
        )
        written.append(path)

        path = out / "intersections.csv"
        _write_csv(
            path,
            ["omitted_a", "omitted_b", "intersection", "class"],
            [
                [
                    format_scale(a.omitted_triad, universe),
                    format_scale(b.omitted_triad, universe),
                    format_scale(pairwise_intersection(a, b), universe),
                    sequence_class_name(
                        interval_sequence(pairwise_intersection(a, b), universe), universe
                    ),
                ]
                for a, b in combinations(scales, 2)
            ],
        )
        written.append(path)

        figure = out / "sphere_intersections.png"
        _figure_sphere_intersections(figure, universe)
        written.append(figure)

    return written
