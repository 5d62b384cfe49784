"""Z_(p)-lattices in Q^n in lower-triangular Hermite form, and linear algebra over F_p."""
from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence

from sympy.core.intfunc import igcdex

from quartic_basis.polyring import unit_part, vp_int

Vector = tuple[Fraction, ...]


class TriangularLattice:
    """Integer rows whose pivot sits in the highest nonzero column.

    Vectors are added one at a time as in an incremental Hermite reduction; the
    lattice is the Z-span of everything added.
    """

    def __init__(self, dimension: int):
        self.dimension = dimension
        self._pivots: list[list[int] | None] = [None] * dimension

    def add_vector(self, vec0: Sequence[int]) -> None:
        vec = list(vec0)
        for j in reversed(range(self.dimension)):
            if vec[j] == 0:
                continue
            row = self._pivots[j]
            if row is None:
                self._pivots[j] = vec
                return
            a, b = row[j], vec[j]
            if b % a == 0:
                q = b // a
                vec = [v - q * r for v, r in zip(vec, row)]
            elif a % b == 0:
                q = a // b
                row, vec = vec, [r - q * v for r, v in zip(row, vec)]
                self._pivots[j] = row
            else:
                x, y, g = (int(t) for t in igcdex(a, b))
                ag, mbg = a // g, -b // g
                self._pivots[j] = [x * r + y * v for r, v in zip(row, vec)]
                vec = [mbg * r + ag * v for r, v in zip(row, vec)]

    def hermite_rows(self) -> list[list[int]]:
        """Positive diagonal, entries left of each pivot reduced modulo the pivots below."""
        if any(row is None for row in self._pivots):
            raise ValueError("lattice is not of full rank")
        rows = [list(row) if row[i] > 0 else [-v for v in row] for i, row in enumerate(self._pivots)]  # type: ignore[union-attr, index]
        for i in range(self.dimension):
            for j in reversed(range(i)):
                q = rows[i][j] // rows[j][j]
                if q:
                    rows[i] = [v - q * w for v, w in zip(rows[i], rows[j])]
        return rows


def _p_denominator(vec: Sequence[Fraction], p: int) -> tuple[int, int]:
    """(e, u) with lcm of the denominators = p^e * u."""
    d = lcm(*(Fraction(c).denominator for c in vec))
    e = vp_int(d, p)
    return e, unit_part(d, p)


def hermite_basis(generators: Iterable[Sequence[Fraction]], p: int, floor: int = 0) -> tuple[Vector, ...]:
    """Triangular basis of the Z_(p)-span of the generators.

    The span must contain p^floor * Z^n; denominators prime to p are units and dropped.
    """
    gens = [tuple(Fraction(c) for c in vec) for vec in generators]
    if not gens:
        raise ValueError("no generators")
    n = len(gens[0])
    scales = [_p_denominator(vec, p) for vec in gens]
    k = max(e for e, _ in scales)
    lattice = TriangularLattice(n)
    for vec, (_, u) in zip(gens, scales):
        factor = u * p**k
        lattice.add_vector([int(c * factor) for c in vec])
    for i in range(n):
        lattice.add_vector([p ** (k + floor) if j == i else 0 for j in range(n)])
    scale = p**k
    return tuple(tuple(Fraction(v, scale) for v in row) for row in lattice.hermite_rows())


def triangular_coordinates(rows: Sequence[Vector], vec: Sequence[Fraction]) -> Vector:
    """c with sum c_i rows_i = vec, by back-substitution from the top degree."""
    rest = [Fraction(c) for c in vec]
    coords = [Fraction(0)] * len(rows)
    for i in reversed(range(len(rows))):
        c = rest[i] / rows[i][i]
        coords[i] = c
        if c:
            rest = [r - c * w for r, w in zip(rest, rows[i])]
    if any(rest):
        raise ValueError(f"{vec} is not in the span of the rows")
    return tuple(coords)


def is_p_integral_vector(vec: Iterable[Fraction], p: int) -> bool:
    return all(Fraction(c).denominator % p for c in vec)


def reduce_mod_p(value: Fraction, p: int) -> int:
    if value.denominator % p == 0:
        raise ValueError(f"{value} is not p-integral at p={p}")
    return value.numerator * pow(value.denominator, -1, p) % p


def left_kernel_mod_p(matrix: Sequence[Sequence[int]], p: int) -> list[list[int]]:
    """Basis of {c : c * matrix = 0 mod p}, entries in [0, p)."""
    n_rows = len(matrix)
    if n_rows == 0:
        return []
    n_cols = len(matrix[0])
    # row-reduce the transpose; its null space is the left kernel
    work = [[matrix[i][j] % p for i in range(n_rows)] for j in range(n_cols)]
    pivot_cols: list[int] = []
    r = 0
    for c in range(n_rows):
        pivot = next((i for i in range(r, n_cols) if work[i][c]), None)
        if pivot is None:
            continue
        work[r], work[pivot] = work[pivot], work[r]
        inv = pow(work[r][c], -1, p)
        work[r] = [v * inv % p for v in work[r]]
        for i in range(n_cols):
            if i != r and work[i][c]:
                f = work[i][c]
                work[i] = [(v - f * w) % p for v, w in zip(work[i], work[r])]
        pivot_cols.append(c)
        r += 1
    kernel = []
    for free in (c for c in range(n_rows) if c not in pivot_cols):
        vec = [0] * n_rows
        vec[free] = 1
        for row_index, c in enumerate(pivot_cols):
            vec[c] = -work[row_index][free] % p
        kernel.append(vec)
    return kernel
