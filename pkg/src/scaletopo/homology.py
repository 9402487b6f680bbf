"""Boundary operators and reduced simplicial homology over the rationals.

All ranks are computed exactly: sparse integer column reduction with
fraction-free updates and gcd normalization.  No floating point anywhere.

The convention is *reduced* homology: the empty face is a genuine
(-1)-dimensional simplex, and the boundary of every vertex is +1 times the
empty face.  Vertices of a face are oriented in ascending pitch-class
order.  The boundary space (image of the next boundary operator) is
written R_n in reports; it is the space usually denoted B_n.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Iterable, Mapping, Sequence

from .complexes import SimplicialComplex
from .universe import pitch_classes

SparseColumn = tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class BoundaryMatrix:
    """Matrix of the boundary operator from dimension ``n`` to ``n - 1``.

    ``rows`` and ``cols`` hold face masks in ascending order; ``columns``
    holds, per column face, the (row index, sign) pairs of its
    codimension-1 subfaces.  Signs alternate with the position of the
    omitted vertex.
    """

    dimension: int
    rows: tuple[int, ...]
    cols: tuple[int, ...]
    columns: tuple[SparseColumn, ...]

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self.rows), len(self.cols))

    def column_map(self, face: int) -> dict[int, int]:
        """Signed boundary of one column face, keyed by row face mask."""
        j = self.cols.index(face)
        return {self.rows[i]: sign for i, sign in self.columns[j]}

    def dense(self) -> list[list[int]]:
        out = [[0] * len(self.cols) for _ in self.rows]
        for j, column in enumerate(self.columns):
            for i, sign in column:
                out[i][j] = sign
        return out


def boundary_matrix(complex_: SimplicialComplex, n: int) -> BoundaryMatrix:
    """Boundary operator matrix for dimension ``n`` (``n = 0`` maps vertices
    to the empty face)."""
    if n < 0 or n > complex_.dim:
        raise ValueError(f"dimension {n} out of range for a complex of dimension {complex_.dim}")
    rows = tuple(complex_.faces_of_dim(n - 1))
    cols = tuple(complex_.faces_of_dim(n))
    row_index = {face: i for i, face in enumerate(rows)}
    columns = []
    for face in cols:
        entries = []
        for position, p in enumerate(pitch_classes(face)):
            sub = face & ~(1 << p)
            entries.append((row_index[sub], -1 if position % 2 else 1))
        columns.append(tuple(entries))
    return BoundaryMatrix(n, rows, cols, tuple(columns))


# -- exact rank / kernel ------------------------------------------------


def _normalize(column: dict[int, int]) -> dict[int, int]:
    g = 0
    for value in column.values():
        g = gcd(g, value)
    if g > 1:
        return {row: value // g for row, value in column.items()}
    return column


def _rank_of_columns(columns: Iterable[Mapping[int, int] | SparseColumn]) -> int:
    """Rank over Q of integer sparse columns, by fraction-free reduction.

    Each incoming column is reduced against stored pivot columns (pivot =
    largest remaining row index); integer cross-multiplication keeps the
    arithmetic exact and gcd division keeps entries small.
    """
    pivots: dict[int, dict[int, int]] = {}
    rank = 0
    for raw in columns:
        column = dict(raw)
        while column:
            row = max(column)
            pivot = pivots.get(row)
            if pivot is None:
                pivots[row] = _normalize(column)
                rank += 1
                break
            a, b = column[row], pivot[row]
            merged = {r: v * b for r, v in column.items()}
            for r, v in pivot.items():
                merged[r] = merged.get(r, 0) - v * a
            column = _normalize({r: v for r, v in merged.items() if v})
    return rank


def rank_exact(matrix: BoundaryMatrix | Sequence[Sequence[int]]) -> int:
    """Exact rational rank of an integer matrix (dense rows or a boundary matrix).

    >>> rank_exact([[0, 0], [0, 0]])
    0
    >>> rank_exact([[1, 0], [0, 1]])
    2
    """
    if isinstance(matrix, BoundaryMatrix):
        return _rank_of_columns(matrix.columns)
    columns: dict[int, dict[int, int]] = {}
    for i, row in enumerate(matrix):
        for j, value in enumerate(row):
            if value:
                columns.setdefault(j, {})[i] = int(value)
    return _rank_of_columns(columns.values())


def _kernel_of_columns(
    columns: Sequence[SparseColumn], n_cols: int
) -> list[dict[int, Fraction]]:
    """Basis of the null space, as dicts column-index -> coefficient.

    Column reduction with combination tracking: a column that reduces to
    zero yields the recorded combination as a kernel vector.
    """
    pivots: dict[int, tuple[dict[int, Fraction], dict[int, Fraction]]] = {}
    kernel: list[dict[int, Fraction]] = []
    for j in range(n_cols):
        column = {row: Fraction(value) for row, value in columns[j]}
        combo = {j: Fraction(1)}
        while column:
            row = max(column)
            if row not in pivots:
                pivots[row] = (column, combo)
                break
            pivot_col, pivot_combo = pivots[row]
            factor = column[row] / pivot_col[row]
            for r, v in pivot_col.items():
                column[r] = column.get(r, Fraction(0)) - factor * v
            column = {r: v for r, v in column.items() if v}
            for r, v in pivot_combo.items():
                combo[r] = combo.get(r, Fraction(0)) - factor * v
            combo = {r: v for r, v in combo.items() if v}
        if not column:
            kernel.append(combo)
    return kernel


# -- chains ---------------------------------------------------------------


@dataclass
class Chain:
    """Formal rational combination of faces of one dimension.

    Zero coefficients are dropped on construction; coefficients coerce to
    ``Fraction``.
    """

    dimension: int
    coeffs: dict[int, Fraction] = field(default_factory=dict)

    def __post_init__(self) -> None:
        cleaned = {}
        for face, value in self.coeffs.items():
            value = Fraction(value)
            if value:
                if face.bit_count() != self.dimension + 1:
                    raise ValueError(
                        f"face {face:#x} has cardinality {face.bit_count()}, "
                        f"expected {self.dimension + 1}"
                    )
                cleaned[face] = value
        self.coeffs = cleaned

    def is_zero(self) -> bool:
        return not self.coeffs

    def support(self) -> tuple[int, ...]:
        return tuple(sorted(self.coeffs))

    def to_json_dict(self) -> dict:
        return {
            "dimension": self.dimension,
            "terms": [
                {
                    "face": list(pitch_classes(face)),
                    "coeff": f"{self.coeffs[face].numerator}/{self.coeffs[face].denominator}",
                }
                for face in sorted(self.coeffs)
            ],
        }

    @classmethod
    def from_json_dict(cls, data: Mapping) -> "Chain":
        try:
            dimension = int(data["dimension"])
            terms = data["terms"]
        except (KeyError, TypeError) as exc:
            raise ValueError(f"chain JSON needs dimension and terms: {exc}") from exc
        coeffs: dict[int, Fraction] = {}
        for term in terms:
            mask = 0
            for p in term["face"]:
                mask |= 1 << int(p)
            coeffs[mask] = coeffs.get(mask, Fraction(0)) + Fraction(term["coeff"])
        return cls(dimension, coeffs)


def _check_chain_in_complex(chain: Chain, complex_: SimplicialComplex) -> None:
    for face in chain.coeffs:
        if face not in complex_:
            raise ValueError(f"face {face:#x} is not a face of the complex")


def apply_boundary(chain: Chain, complex_: SimplicialComplex) -> Chain:
    """Linear extension of the alternating-sum boundary map.

    Applying it twice always yields the zero chain.
    """
    if chain.dimension < 0:
        raise ValueError("boundary is defined for chains of dimension >= 0")
    _check_chain_in_complex(chain, complex_)
    out: dict[int, Fraction] = {}
    for face, coeff in chain.coeffs.items():
        for position, p in enumerate(pitch_classes(face)):
            sub = face & ~(1 << p)
            sign = -1 if position % 2 else 1
            out[sub] = out.get(sub, Fraction(0)) + coeff * sign
    return Chain(chain.dimension - 1, out)


def is_cycle(chain: Chain, complex_: SimplicialComplex) -> bool:
    """True iff the boundary of the chain vanishes."""
    if chain.is_zero():
        _check_chain_in_complex(chain, complex_)
        return True
    return apply_boundary(chain, complex_).is_zero()


def cycle_space_basis(complex_: SimplicialComplex, d: int) -> list[Chain]:
    """Basis of the space of d-cycles (kernel of the boundary operator)."""
    matrix = boundary_matrix(complex_, d)
    vectors = _kernel_of_columns(matrix.columns, len(matrix.cols))
    return [
        Chain(d, {matrix.cols[j]: value for j, value in vec.items()})
        for vec in vectors
    ]


# -- homology -------------------------------------------------------------


def reduced_betti(complex_: SimplicialComplex) -> tuple[int, ...]:
    """Reduced Betti numbers for dimensions -1 through the complex dimension.

    beta_d = (f_d - rank boundary_d) - rank boundary_{d+1}; for any
    non-trivial complex the (-1)-entry is 0.
    """
    top = complex_.dim
    counts = complex_.f_vector()
    ranks = {n: rank_exact(boundary_matrix(complex_, n)) for n in range(0, top + 1)}
    betti = []
    for d in range(-1, top + 1):
        cycles = counts[d + 1] - ranks.get(d, 0)
        betti.append(cycles - ranks.get(d + 1, 0))
    return tuple(betti)


def connected_components(complex_: SimplicialComplex) -> int:
    """Component count of the 1-skeleton; equals the 0th reduced Betti number
    plus one."""
    vertices = complex_.faces_of_dim(0)
    if not vertices:
        raise ValueError("component count needs at least one vertex")
    parent = {v: v for v in vertices}

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for edge in complex_.faces_of_dim(1):
        a, b = pitch_classes(edge)
        ra, rb = find(1 << a), find(1 << b)
        if ra != rb:
            parent[ra] = rb
    return len({find(v) for v in vertices})


def _integer_columns_of_chains(
    chains: Sequence[Chain], row_index: Mapping[int, int]
) -> list[dict[int, int]]:
    columns = []
    for chain in chains:
        scale = 1
        for value in chain.coeffs.values():
            scale = scale * value.denominator // gcd(scale, value.denominator)
        columns.append(
            {row_index[face]: int(value * scale) for face, value in chain.coeffs.items()}
        )
    return columns


def homology_rank_of_cycles(
    cycles: Sequence[Chain], complex_: SimplicialComplex, d: int
) -> int:
    """Dimension of the span of the cycles' classes in d-th reduced homology.

    Computed as rank([cycles | boundary_{d+1}]) - rank(boundary_{d+1}).
    """
    for chain in cycles:
        if chain.dimension != d:
            raise ValueError(f"expected {d}-chains, got dimension {chain.dimension}")
        if not is_cycle(chain, complex_):
            raise ValueError("input chain is not a cycle")
    row_index = {face: i for i, face in enumerate(complex_.faces_of_dim(d))}
    cycle_columns = _integer_columns_of_chains(cycles, row_index)
    if d < complex_.dim:
        boundary_columns: list = list(boundary_matrix(complex_, d + 1).columns)
    else:
        boundary_columns = []
    boundary_rank = _rank_of_columns(boundary_columns)
    combined_rank = _rank_of_columns(boundary_columns + cycle_columns)
    return combined_rank - boundary_rank
