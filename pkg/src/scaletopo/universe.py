"""Cyclic pitch-class universes and scales-as-bit-sets.

Conventions
-----------
- A pitch class is an integer in ``[0, n_pitches)``.  In the default
  12-pitch universe, 0 = C, 1 = C#, ..., 11 = B (sharp spellings; flats
  are accepted on input and normalized).
- A scale is a subset of pitch classes stored as an int bit set: bit ``p``
  is set iff pitch class ``p`` belongs to the scale.  The empty scale is 0.
- Interval sequences are cyclic.  Two sequences are considered equal iff
  their lexicographically smallest rotations coincide.
- A scale is *chromatic* when it contains ``run_limit`` cyclically
  consecutive pitch classes (default: three, i.e. two stacked semitones).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

NOTE_NAMES = ("C", "C#", "D", "D#", "E", "F", "F#", "G", "G#", "A", "A#", "B")

_FLAT_TO_INDEX = {
    "DB": 1, "EB": 3, "FB": 4, "GB": 6, "AB": 8, "BB": 10, "CB": 11,
}
_NAME_TO_INDEX = {name: i for i, name in enumerate(NOTE_NAMES)}
_NAME_TO_INDEX.update({"E#": 5, "B#": 0})
_NAME_TO_INDEX.update(_FLAT_TO_INDEX)

# Bit-set representation caps the universe size.
MAX_BITSET_PITCHES = 64


@dataclass(frozen=True)
class PitchUniverse:
    """Cyclic universe of ``n_pitches`` classes with forbidden run length ``run_limit``.

    A scale over the universe is chromatic iff it contains ``run_limit``
    cyclically consecutive pitch classes.  The defaults (12, 3) describe
    the usual western pitch space where two consecutive semitone steps
    are ruled out.
    """

    n_pitches: int = 12
    run_limit: int = 3

    def __post_init__(self) -> None:
        if self.n_pitches < 3:
            raise ValueError(f"need at least 3 pitch classes, got {self.n_pitches}")
        if self.n_pitches > MAX_BITSET_PITCHES:
            raise ValueError(
                f"bit-set scales support at most {MAX_BITSET_PITCHES} pitch classes"
            )
        if not 2 <= self.run_limit <= self.n_pitches:
            raise ValueError(
                f"run_limit must be in [2, {self.n_pitches}], got {self.run_limit}"
            )

    @property
    def full_mask(self) -> int:
        return (1 << self.n_pitches) - 1


DEFAULT_UNIVERSE = PitchUniverse()


def check_pitch(pitch: int, universe: PitchUniverse = DEFAULT_UNIVERSE) -> int:
    if not 0 <= pitch < universe.n_pitches:
        raise ValueError(f"pitch class {pitch} outside [0, {universe.n_pitches})")
    return pitch


def check_scale(scale: int, universe: PitchUniverse = DEFAULT_UNIVERSE) -> int:
    if scale < 0 or scale > universe.full_mask:
        raise ValueError(f"scale mask {scale:#x} outside the {universe.n_pitches}-pitch universe")
    return scale


def scale_of(pitches: Iterable[int], universe: PitchUniverse = DEFAULT_UNIVERSE) -> int:
    """Bit-set of a collection of pitch classes.

    >>> scale_of([0, 4, 7])
    145
    """
    mask = 0
    for p in pitches:
        mask |= 1 << check_pitch(p, universe)
    return mask


def pitch_classes(scale: int) -> tuple[int, ...]:
    """Sorted pitch classes of a scale mask.

    >>> pitch_classes(145)
    (0, 4, 7)
    """
    out = []
    index = 0
    while scale:
        if scale & 1:
            out.append(index)
        scale >>= 1
        index += 1
    return tuple(out)


def rotate_mask(scale: int, k: int, universe: PitchUniverse = DEFAULT_UNIVERSE) -> int:
    """Cyclic left rotation of a scale mask by ``k`` positions."""
    n = universe.n_pitches
    k %= n
    if k == 0:
        return scale
    return ((scale << k) | (scale >> (n - k))) & universe.full_mask


def distance(t1: int, t2: int, universe: PitchUniverse = DEFAULT_UNIVERSE) -> int:
    """Minimum of the two clockwise distances between two pitch classes.

    >>> distance(9, 0)
    3
    """
    check_pitch(t1, universe)
    check_pitch(t2, universe)
    n = universe.n_pitches
    forward = (t2 - t1) % n
    return min(forward, n - forward)


def interval_sequence(scale: int, universe: PitchUniverse = DEFAULT_UNIVERSE) -> tuple[int, ...]:
    """Cyclic gaps between consecutive scale members, starting at the smallest.

    The gaps sum to the universe size; a single-note scale spans the whole
    cycle.

    >>> interval_sequence(scale_of([0, 2, 4, 5, 7, 9, 11]))
    (2, 2, 1, 2, 2, 2, 1)
    """
    check_scale(scale, universe)
    members = pitch_classes(scale)
    if not members:
        raise ValueError("the empty scale has no interval sequence")
    n = universe.n_pitches
    k = len(members)
    return tuple((members[(i + 1) % k] - members[i]) % n or n for i in range(k))


def canonical_rotation(sequence: Iterable[int]) -> tuple[int, ...]:
    """Lexicographically smallest rotation; the equality key for cyclic sequences.

    >>> canonical_rotation((2, 2, 1, 2, 2, 2, 1))
    (1, 2, 2, 1, 2, 2, 2)
    """
    seq = tuple(sequence)
    k = len(seq)
    if k == 0:
        return seq
    return min(tuple(seq[(i + j) % k] for j in range(k)) for i in range(k))


def format_intervals(sequence: Iterable[int]) -> str:
    """Hyphen-joined rendering, e.g. ``2-2-1-2-2-2-1``."""
    return "-".join(str(step) for step in sequence)


def is_non_chromatic(scale: int, universe: PitchUniverse = DEFAULT_UNIVERSE) -> bool:
    """True iff the scale contains no ``run_limit`` cyclically consecutive pitches.

    Empty and single-note scales are vacuously non-chromatic.

    >>> is_non_chromatic(scale_of([0, 2, 4, 5, 7, 9, 11]))
    True
    >>> is_non_chromatic(scale_of([0, 1, 4, 5, 7, 9, 11]))
    False
    """
    check_scale(scale, universe)
    # After AND-ing run_limit-1 rotations, bit i survives iff pitches
    # i, i-1, ..., i-run_limit+1 are all present.
    runs = scale
    for _ in range(universe.run_limit - 1):
        runs &= rotate_mask(runs, 1, universe)
        if runs == 0:
            return True
    return runs == 0


def transpose(scale: int, k: int, universe: PitchUniverse = DEFAULT_UNIVERSE) -> int:
    """Shift every member by ``k`` modulo the universe size."""
    check_scale(scale, universe)
    return rotate_mask(scale, k, universe)


def symmetry_order(scale: int, universe: PitchUniverse = DEFAULT_UNIVERSE) -> int:
    """Number of transpositions fixing the scale; divides ``n_pitches``.

    >>> symmetry_order(scale_of([0, 2, 4, 6, 8, 10]))
    6
    """
    check_scale(scale, universe)
    if scale == 0:
        raise ValueError("symmetry order is undefined for the empty scale")
    return sum(1 for k in range(universe.n_pitches) if rotate_mask(scale, k, universe) == scale)


def orbit_size(scale: int, universe: PitchUniverse = DEFAULT_UNIVERSE) -> int:
    """Number of distinct transpositions of the scale."""
    return universe.n_pitches // symmetry_order(scale, universe)


def mode_count(scale: int, universe: PitchUniverse = DEFAULT_UNIVERSE) -> int:
    """Transposition-orbit size times the number of distinct rotations of the
    interval sequence (the count of root/starting-note choices that sound
    different).

    >>> mode_count(scale_of([0, 2, 4, 5, 7, 9, 11]))
    84
    """
    seq = interval_sequence(scale, universe)
    k = len(seq)
    rotations = {tuple(seq[(i + j) % k] for j in range(k)) for i in range(k)}
    return orbit_size(scale, universe) * len(rotations)


def parse_scale(text: str, universe: PitchUniverse = DEFAULT_UNIVERSE) -> int:
    """Parse a scale from note names (12-pitch universe only) or integers.

    Tokens may be comma- or whitespace-separated.  Note names are
    case-insensitive sharps or flats; flats normalize to the sharp index.

    >>> parse_scale("C, D, E, F, G, A, B") == scale_of([0, 2, 4, 5, 7, 9, 11])
    True
    >>> parse_scale("0 6")
    65
    """
    tokens = [t for t in text.replace(",", " ").split() if t]
    if not tokens:
        return 0
    pitches = []
    for token in tokens:
        try:
            pitches.append(int(token))
            continue
        except ValueError:
            pass
        if universe.n_pitches != 12:
            raise ValueError(
                f"note names require the 12-pitch universe; cannot parse {token!r}"
            )
        key = token.upper().replace("♯", "#").replace("♭", "B")
        if key not in _NAME_TO_INDEX:
            raise ValueError(f"unknown note name {token!r}")
        pitches.append(_NAME_TO_INDEX[key])
    return scale_of(pitches, universe)


def format_scale(scale: int, universe: PitchUniverse = DEFAULT_UNIVERSE) -> str:
    """Space-separated note names at 12 pitches, integers otherwise."""
    check_scale(scale, universe)
    members = pitch_classes(scale)
    if universe.n_pitches == 12:
        return " ".join(NOTE_NAMES[p] for p in members)
    return " ".join(str(p) for p in members)
