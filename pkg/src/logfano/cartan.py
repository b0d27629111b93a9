"""Generalized Cartan matrices: validation, built-in tables, classification.

Pairing convention, fixed once for the whole package: ``A[i][j]`` is the
pairing ``<alpha_j, alpha_i^vee>``.  Simple reflections therefore act by

    s_i(alpha_j)      = alpha_j      - A[i][j] * alpha_i
    s_i(alpha_j^vee)  = alpha_j^vee  - A[j][i] * alpha_i^vee

All indices in the public API are 1-based, matching the usual s_1,...,s_n
labelling of Dynkin nodes.  All arithmetic is exact: integers for lattice
data, ``fractions.Fraction`` for symmetrizers and minors.
"""

from __future__ import annotations

import functools
import re
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Sequence

from .errors import (
    AsymmetricZeroPattern,
    DiagonalNotTwo,
    IndexOutOfRange,
    InvalidInput,
    InvalidRank,
    NonSquare,
    PositiveOffDiagonal,
    UnknownType,
)


class CartanClass(Enum):
    """Classification of a symmetrizable generalized Cartan matrix."""

    FINITE = "finite"
    AFFINE = "affine"
    INDEFINITE = "indefinite"
    NOT_SYMMETRIZABLE = "not_symmetrizable"


@dataclass(frozen=True)
class GeneralizedCartanMatrix:
    """A validated integer matrix with 2s on the diagonal, non-positive
    off-diagonal entries, and a symmetric zero pattern.

    Construct through :func:`validate_gcm` or :func:`builtin`; the raw
    constructor performs no checks.
    """

    entries: tuple[tuple[int, ...], ...]

    @property
    def n(self) -> int:
        return len(self.entries)

    def a(self, i: int, j: int) -> int:
        """Entry <alpha_j, alpha_i^vee>, 1-based node indices."""
        return self.entries[i - 1][j - 1]

    def check_node(self, i: int) -> None:
        if not isinstance(i, int) or isinstance(i, bool) or not 1 <= i <= self.n:
            raise IndexOutOfRange(f"node index {i!r} not in 1..{self.n}")

    def to_json_dict(self) -> dict:
        return {"rank": self.n, "cartan": [list(row) for row in self.entries]}


def validate_gcm(entries: Sequence[Sequence[int]]) -> GeneralizedCartanMatrix:
    """Validate a square integer matrix as a generalized Cartan matrix."""
    rows = list(entries)
    n = len(rows)
    if n == 0:
        raise NonSquare("matrix must have at least one row")
    for row in rows:
        if len(row) != n:
            raise NonSquare(f"matrix is {n} rows but a row has {len(row)} entries")
        for x in row:
            if not isinstance(x, int) or isinstance(x, bool):
                raise NonSquare(f"matrix entries must be integers, got {x!r}")
    for i in range(n):
        if rows[i][i] != 2:
            raise DiagonalNotTwo(f"entry [{i + 1}][{i + 1}] is {rows[i][i]}, must be 2")
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            if rows[i][j] > 0:
                raise PositiveOffDiagonal(
                    f"entry [{i + 1}][{j + 1}] is {rows[i][j]}, must be <= 0"
                )
            if (rows[i][j] == 0) != (rows[j][i] == 0):
                raise AsymmetricZeroPattern(
                    f"entries [{i + 1}][{j + 1}] and [{j + 1}][{i + 1}] must vanish together"
                )
    return GeneralizedCartanMatrix(tuple(tuple(row) for row in rows))


# --- built-in types (Bourbaki node numbering) ---

_TYPE_RE = re.compile(r"^([A-Za-z])\s*(\d+)\s*(~?)$")


def _bond(m: list[list[int]], i: int, j: int, down: int = -1, up: int = -1) -> None:
    # down = <alpha_j, alpha_i^vee>, up = <alpha_i, alpha_j^vee>; 1-based.
    m[i - 1][j - 1] = down
    m[j - 1][i - 1] = up


def builtin(type_name: str) -> GeneralizedCartanMatrix:
    """Standard Cartan matrix for a label like ``"A3"``, ``"B2"``, ``"G2"``,
    or ``"A1~"`` (the affine rank-2 matrix [[2,-2],[-2,2]])."""
    match = _TYPE_RE.match(type_name.strip())
    if not match:
        raise UnknownType(f"cannot parse type label {type_name!r}")
    family = match.group(1).upper()
    rank = int(match.group(2))
    affine = match.group(3) == "~"

    if affine:
        if family == "A" and rank == 1:
            return GeneralizedCartanMatrix(((2, -2), (-2, 2)))
        raise UnknownType(f"affine type {type_name!r} is not built in (only A1~)")

    m = [[2 if i == j else 0 for j in range(rank)] for i in range(rank)]
    if family == "A":
        if rank < 1:
            raise InvalidRank("A_n needs n >= 1")
        for i in range(1, rank):
            _bond(m, i, i + 1)
    elif family == "B":
        if rank < 2:
            raise InvalidRank("B_n needs n >= 2")
        for i in range(1, rank - 1):
            _bond(m, i, i + 1)
        _bond(m, rank - 1, rank, down=-1, up=-2)  # alpha_n short
    elif family == "C":
        if rank < 2:
            raise InvalidRank("C_n needs n >= 2")
        for i in range(1, rank - 1):
            _bond(m, i, i + 1)
        _bond(m, rank - 1, rank, down=-2, up=-1)  # alpha_n long
    elif family == "D":
        if rank < 4:
            raise InvalidRank("D_n needs n >= 4")
        for i in range(1, rank - 1):
            _bond(m, i, i + 1)
        _bond(m, rank - 2, rank)
    elif family == "E":
        if rank not in (6, 7, 8):
            raise InvalidRank("E_n needs n in {6, 7, 8}")
        _bond(m, 1, 3)
        _bond(m, 2, 4)
        for i in range(3, rank):
            _bond(m, i, i + 1)
    elif family == "F":
        if rank != 4:
            raise InvalidRank("F_n needs n = 4")
        _bond(m, 1, 2)
        _bond(m, 2, 3, down=-1, up=-2)  # alpha_3, alpha_4 short
        _bond(m, 3, 4)
    elif family == "G":
        if rank != 2:
            raise InvalidRank("G_n needs n = 2")
        _bond(m, 1, 2, down=-3, up=-1)  # alpha_1 short
    else:
        raise UnknownType(f"unknown type family {family!r}")
    return GeneralizedCartanMatrix(tuple(tuple(row) for row in m))


def builtin_name(gcm: GeneralizedCartanMatrix) -> str | None:
    """Recognize a matrix as one of the built-in types, or return None.

    Recognition is exact matrix equality, so it is stable under round trips
    through the JSON file format.
    """
    n = gcm.n
    candidates = [f"A{n}"]
    if n >= 2:
        candidates += [f"B{n}", f"C{n}"]
    if n >= 4:
        candidates.append(f"D{n}")
    if n in (6, 7, 8):
        candidates.append(f"E{n}")
    if n == 4:
        candidates.append("F4")
    if n == 2:
        candidates += ["G2", "A1~"]
    for name in candidates:
        if builtin(name).entries == gcm.entries:
            return name
    return None


# --- classification ---


def symmetrizer(gcm: GeneralizedCartanMatrix) -> tuple[Fraction, ...] | None:
    """Positive rational diagonal D with D*A symmetric, or None.

    Propagates d_j = d_i * A[i][j] / A[j][i] along edges of the Dynkin graph
    and reports None when a cycle forces an inconsistency.
    """
    n = gcm.n
    d: list[Fraction | None] = [None] * n
    for start in range(1, n + 1):
        if d[start - 1] is not None:
            continue
        d[start - 1] = Fraction(1)
        stack = [start]
        while stack:
            i = stack.pop()
            for j in range(1, n + 1):
                if j == i or gcm.a(i, j) == 0:
                    continue
                forced = d[i - 1] * Fraction(gcm.a(i, j), gcm.a(j, i))
                if d[j - 1] is None:
                    d[j - 1] = forced
                    stack.append(j)
                elif d[j - 1] != forced:
                    return None
    return tuple(d)  # type: ignore[arg-type]


def _det(mat: list[list[Fraction]]) -> Fraction:
    """Determinant by exact fraction-valued Gaussian elimination."""
    m = [row[:] for row in mat]
    size = len(m)
    det = Fraction(1)
    for col in range(size):
        pivot = next((r for r in range(col, size) if m[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = -det
        det *= m[col][col]
        inv = 1 / m[col][col]
        for r in range(col + 1, size):
            factor = m[r][col] * inv
            if factor:
                for c in range(col, size):
                    m[r][c] -= factor * m[col][c]
    return det


def _rank(mat: list[list[Fraction]]) -> int:
    m = [row[:] for row in mat]
    nrows = len(m)
    ncols = len(m[0]) if m else 0
    rank = 0
    row = 0
    for col in range(ncols):
        pivot = next((r for r in range(row, nrows) if m[r][col] != 0), None)
        if pivot is None:
            continue
        m[row], m[pivot] = m[pivot], m[row]
        inv = 1 / m[row][col]
        for r in range(row + 1, nrows):
            factor = m[r][col] * inv
            if factor:
                for c in range(col, ncols):
                    m[r][c] -= factor * m[row][c]
        rank += 1
        row += 1
        if row == nrows:
            break
    return rank


def _submatrix(mat: list[list[Fraction]], idxs: tuple[int, ...]) -> list[list[Fraction]]:
    return [[mat[r][c] for c in idxs] for r in idxs]


@functools.lru_cache(maxsize=None)
def classify_type(gcm: GeneralizedCartanMatrix) -> CartanClass:
    """Classify a matrix as finite, affine, or indefinite via its
    symmetrization; non-symmetrizable matrices get their own bucket.

    Finite means the symmetrized matrix is positive definite (Sylvester's
    leading-minor test); affine means positive semidefinite with a
    one-dimensional kernel (all principal minors >= 0, rank n-1).  All tests
    are exact rational arithmetic.
    """
    d = symmetrizer(gcm)
    if d is None:
        return CartanClass.NOT_SYMMETRIZABLE
    n = gcm.n
    sym = [[d[i] * gcm.a(i + 1, j + 1) for j in range(n)] for i in range(n)]

    if all(_det(_submatrix(sym, tuple(range(k + 1)))) > 0 for k in range(n)):
        return CartanClass.FINITE

    # Positive semidefinite iff every principal minor is >= 0.
    def principal_minors_nonnegative() -> bool:
        for mask in range(1, 1 << n):
            idxs = tuple(i for i in range(n) if mask >> i & 1)
            if _det(_submatrix(sym, idxs)) < 0:
                return False
        return True

    if principal_minors_nonnegative() and _rank(sym) == n - 1:
        return CartanClass.AFFINE
    return CartanClass.INDEFINITE


# --- JSON file format ---


def from_json_value(value) -> GeneralizedCartanMatrix:
    """Read a root datum from decoded JSON: either a built-in type label
    string or an object {"rank": n, "cartan": [[...], ...]}."""
    if isinstance(value, str):
        return builtin(value)
    if isinstance(value, dict):
        if set(value) != {"rank", "cartan"}:
            raise InvalidInput('GCM object must have exactly the keys "rank" and "cartan"')
        gcm = validate_gcm(value["cartan"])
        if gcm.n != value["rank"]:
            raise InvalidInput(f'"rank" is {value["rank"]} but the matrix has size {gcm.n}')
        return gcm
    raise InvalidInput(f"cannot read a Cartan matrix from {type(value).__name__}")
