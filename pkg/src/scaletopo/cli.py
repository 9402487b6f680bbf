"""Command-line interface.

One binary, subcommand style.  Exit codes: 0 success, 1 verification
failure, 2 usage/input error, 3 capacity error.  Output is deterministic:
identical invocations print identical bytes.
"""

from __future__ import annotations

import argparse
import json
import sys
from itertools import combinations
from pathlib import Path

from .checks import run_verification
from .classify import classify_facets, sequence_class_name
from .collapse import collapse_above_dim, collapse_log_json
from .complexes import CapacityError, SimplicialComplex, build_non_chromatic_complex
from .homology import reduced_betti
from .spheres import (
    basis_report,
    fundamental_cycle,
    messiaen_scales,
    pairwise_intersection,
    sphere_hexatonics,
    sphere_subcomplex,
    triple_intersection,
    verify_homology_sphere,
)
from .universe import (
    PitchUniverse,
    format_intervals,
    format_scale,
    interval_sequence,
    pitch_classes,
)


def _universe(args: argparse.Namespace) -> PitchUniverse:
    return PitchUniverse(args.pitches, args.run_limit)


def _complex_for(args: argparse.Namespace) -> SimplicialComplex:
    facets_file = getattr(args, "facets_file", None)
    if facets_file:
        with open(facets_file, "r", encoding="utf-8") as handle:
            data = json.load(handle)
        return SimplicialComplex.from_json_dict(data)
    return build_non_chromatic_complex(_universe(args))


def _emit_json(payload: dict) -> int:
    print(json.dumps(payload, indent=2))
    return 0


def cmd_fvector(args: argparse.Namespace) -> int:
    complex_ = build_non_chromatic_complex(_universe(args))
    counts = complex_.f_vector()
    if args.format == "json":
        return _emit_json({"f_vector": list(counts)})
    print(" ".join(str(c) for c in counts))
    return 0


def cmd_facets(args: argparse.Namespace) -> int:
    universe = _universe(args)
    complex_ = build_non_chromatic_complex(universe)
    if args.format == "json":
        return _emit_json(complex_.to_json_dict())
    for facet in complex_.facets():
        print(format_scale(facet, universe))
    return 0


def cmd_classify(args: argparse.Namespace) -> int:
    universe = _universe(args)
    complex_ = build_non_chromatic_complex(universe)
    classes = classify_facets(complex_, universe)
    if args.format == "json":
        return _emit_json(
            {
                "classes": [
                    {
                        "pitch_classes": c.cardinality,
                        "interval_sequence": format_intervals(c.display_sequence),
                        "scale_count": c.scale_count,
                        "name": c.name,
                    }
                    for c in classes
                ]
            }
        )
    width = max(len(format_intervals(c.display_sequence)) for c in classes)
    for c in classes:
        sequence = format_intervals(c.display_sequence)
        print(f"{c.cardinality:>2}  {sequence:<{width}}  {c.scale_count:>3}  {c.name}")
    return 0


def cmd_homology(args: argparse.Namespace) -> int:
    complex_ = _complex_for(args)
    betti = reduced_betti(complex_)
    top = complex_.dim
    if args.format == "json":
        return _emit_json(
            {"dimensions": list(range(-1, top + 1)), "reduced_betti": list(betti)}
        )
    print(f"reduced Betti numbers, dimensions -1..{top}:")
    print(" ".join(str(b) for b in betti))
    return 0


def cmd_collapse(args: argparse.Namespace) -> int:
    universe = _universe(args)
    complex_ = _complex_for(args)
    result = collapse_above_dim(complex_, args.to_dim)
    before = complex_.f_vector()
    after = result.complex.f_vector()
    if args.format == "json":
        return _emit_json(
            {
                "to_dim": args.to_dim,
                "completed": result.completed,
                "f_vector_before": list(before),
                "f_vector_after": list(after),
                "collapse_count": len(result.log),
                "collapses": collapse_log_json(result.log),
            }
        )
    print(f"f-vector before: {' '.join(str(c) for c in before)}")
    print(f"f-vector after:  {' '.join(str(c) for c in after)}")
    print(f"collapses performed: {len(result.log)}")
    print(f"completed: {'yes' if result.completed else 'no'}")
    for pair in result.log:
        facet = format_scale(pair.facet, universe)
        free = format_scale(pair.free_face, universe)
        print(f"  {facet}  |  {free}")
    return 0


def cmd_spheres(args: argparse.Namespace) -> int:
    universe = _universe(args)
    complex_ = build_non_chromatic_complex(universe)
    scales = messiaen_scales(universe)
    report = basis_report(complex_, universe)

    sphere_payload = []
    for scale in scales:
        subcomplex = sphere_subcomplex(scale, universe)
        certificate = verify_homology_sphere(subcomplex, 5)
        cycle = fundamental_cycle(subcomplex, 5)
        sphere_payload.append(
            {
                "omitted_triad": list(pitch_classes(scale.omitted_triad)),
                "members": list(pitch_classes(scale.members)),
                "hexatonics": [
                    list(pitch_classes(h)) for h in sphere_hexatonics(scale, universe)
                ],
                "certificate": {
                    "betti_matches_sphere": certificate.betti_matches_sphere,
                    "closed_pseudomanifold": certificate.closed_pseudomanifold,
                    "top_faces_connected": certificate.top_faces_connected,
                    "passed": certificate.passed,
                },
                "fundamental_cycle_support": len(cycle.coeffs),
            }
        )
    pairwise_payload = [
        {
            "scales": [i, j],
            "intersection": list(pitch_classes(pairwise_intersection(scales[i], scales[j]))),
            "class": sequence_class_name(
                interval_sequence(pairwise_intersection(scales[i], scales[j]), universe),
                universe,
            ),
        }
        for i, j in combinations(range(4), 2)
    ]
    triple_payload = [
        {
            "scales": [i, j, k],
            "intersection": list(
                pitch_classes(triple_intersection(scales[i], scales[j], scales[k]))
            ),
        }
        for i, j, k in combinations(range(4), 3)
    ]
    ranks_payload = {
        "singles": list(report.single_ranks),
        "triples": [
            {"cycles": list(combo), "rank": rank} for combo, rank in report.triple_ranks
        ],
        "all_four": report.full_rank,
    }

    if args.format == "json":
        return _emit_json(
            {
                "spheres": sphere_payload,
                "pairwise_intersections": pairwise_payload,
                "triple_intersections": triple_payload,
                "basis_ranks": ranks_payload,
            }
        )

    for entry in sphere_payload:
        triad = format_scale(sum(1 << p for p in entry["omitted_triad"]), universe)
        members = format_scale(sum(1 << p for p in entry["members"]), universe)
        passed = "pass" if entry["certificate"]["passed"] else "FAIL"
        print(f"omit {triad}: {members}")
        print(
            f"  hexatonics: {len(entry['hexatonics'])}, sphere certificate: {passed}, "
            f"cycle support: {entry['fundamental_cycle_support']}"
        )
    for entry in pairwise_payload:
        inter = format_scale(sum(1 << p for p in entry["intersection"]), universe)
        print(f"intersection {entry['scales']}: {inter}  ({entry['class']})")
    for entry in triple_payload:
        inter = format_scale(sum(1 << p for p in entry["intersection"]), universe)
        print(f"triple intersection {entry['scales']}: {inter}")
    print(
        f"basis ranks: singles {ranks_payload['singles']}, "
        f"triples {[t['rank'] for t in ranks_payload['triples']]}, "
        f"all four {ranks_payload['all_four']}"
    )
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    results = run_verification()
    failed = [r for r in results if not r.passed]
    if args.format == "json":
        _emit_json(
            {
                "checks": [
                    {"name": r.name, "passed": r.passed, "detail": r.detail}
                    for r in results
                ],
                "passed": len(results) - len(failed),
                "failed": len(failed),
            }
        )
    else:
        for result in results:
            status = "PASS" if result.passed else "FAIL"
            print(f"[{status}] {result.name}: {result.detail}")
        print(f"checks passed: {len(results) - len(failed)}/{len(results)}")
        if failed:
            print("failed: " + ", ".join(r.name for r in failed))
    return 1 if failed else 0


def cmd_report(args: argparse.Namespace) -> int:
    from .report import write_report

    universe = _universe(args)
    complex_ = build_non_chromatic_complex(universe)
    written = write_report(args.out_dir, complex_, universe)
    for path in written:
        print(path)
    return 0


def _add_universe_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--pitches", type=int, default=12, help="number of pitch classes (default 12)"
    )
    parser.add_argument(
        "--run", "--run-limit",
        dest="run_limit", type=int, default=3,
        help="forbidden run length of consecutive pitch classes (default 3)",
    )


def _add_format_option(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--format", choices=("table", "json"), default="table",
        help="output format (default table)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="scaletopo",
        description=(
            "Combinatorics and exact rational homology of the simplicial "
            "complex of non-chromatic musical scales."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("fvector", help="face counts of the non-chromatic complex")
    _add_universe_options(p)
    _add_format_option(p)
    p.set_defaults(func=cmd_fvector)

    p = sub.add_parser("facets", help="maximal non-chromatic scales, one per line")
    _add_universe_options(p)
    _add_format_option(p)
    p.set_defaults(func=cmd_facets)

    p = sub.add_parser("classify", help="facet classification by interval sequence")
    _add_universe_options(p)
    _add_format_option(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("homology", help="reduced Betti numbers")
    _add_universe_options(p)
    _add_format_option(p)
    p.add_argument(
        "--facets-file",
        help="JSON file {ground_set_size, facets} describing an explicit complex",
    )
    p.set_defaults(func=cmd_homology)

    p = sub.add_parser("collapse", help="greedy elementary collapses above a dimension")
    _add_universe_options(p)
    _add_format_option(p)
    p.add_argument("--to-dim", type=int, default=5, help="target dimension (default 5)")
    p.add_argument(
        "--facets-file",
        help="JSON file {ground_set_size, facets} describing an explicit complex",
    )
    p.set_defaults(func=cmd_collapse)

    p = sub.add_parser("spheres", help="nine-note scales, sphere certificates, basis ranks")
    _add_universe_options(p)
    _add_format_option(p)
    p.set_defaults(func=cmd_spheres)

    p = sub.add_parser("verify", help="recompute and check every published fact")
    _add_format_option(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("report", help="write CSV summaries and figures to a directory")
    _add_universe_options(p)
    p.add_argument("--out-dir", required=True, help="output directory")
    p.set_defaults(func=cmd_report)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except CapacityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
