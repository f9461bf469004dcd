"""Exact sparse linear algebra over the rationals.

Vectors are dicts mapping coordinate index to a nonzero Fraction.  The
Echelon accumulator keeps a reduced echelon basis and is the single engine
behind rank, kernel and image computations used across the package.
"""

from __future__ import annotations

from fractions import Fraction

SparseVec = dict


class Echelon:
    """Incremental reduced echelon form of sparse rational vectors.

    Pivot columns are leftmost nonzero coordinates; every stored row is
    normalized (pivot entry 1) and fully reduced against the other rows, so
    insertion order does not affect the resulting row space.
    """

    __slots__ = ("rows",)

    def __init__(self):
        self.rows: dict = {}  # pivot index -> normalized sparse row

    @property
    def rank(self) -> int:
        return len(self.rows)

    def reduce(self, vec: SparseVec) -> SparseVec:
        """Return a copy of vec reduced against the current echelon."""
        v = dict(vec)
        for p in sorted(set(v) & set(self.rows)):
            f = v.get(p)
            if not f:
                continue
            for c, rc in self.rows[p].items():
                s = v.get(c, 0) - f * rc
                if s:
                    v[c] = s
                else:
                    v.pop(c, None)
        return v

    def insert(self, vec: SparseVec):
        """Reduce vec and, if independent, add it; return the new pivot or None."""
        v = self.reduce(vec)
        if not v:
            return None
        p = min(v)
        inv = 1 / v[p]
        row = {c: x * inv for c, x in v.items()}
        for other in self.rows.values():
            f = other.get(p)
            if f:
                for c, rc in row.items():
                    s = other.get(c, 0) - f * rc
                    if s:
                        other[c] = s
                    else:
                        other.pop(c, None)
        self.rows[p] = row
        return p

    def contains(self, vec: SparseVec) -> bool:
        return not self.reduce(vec)

    def basis(self):
        """Echelon rows in pivot order (a canonical basis of the span)."""
        return [dict(self.rows[p]) for p in sorted(self.rows)]


def kernel_of_columns(columns, normalize: bool = True):
    """Right-kernel basis of the matrix whose j-th column is columns[j].

    Columns are sparse vectors over row indices.  Kernel vectors are sparse
    over column indices and come out in a canonical order (one per dependent
    column, in column order).
    """
    # Pivot rows are not back-substituted, but each stored row only involves
    # coordinates that become pivots later (if at all), so one reduction pass
    # in insertion order is complete.
    pivots: dict = {}  # row index -> (value row, combination row), insertion order
    kernel = []
    for j, col in enumerate(columns):
        v = dict(col)
        combo = {j: Fraction(1)}
        for p, (pv, pc) in pivots.items():
            f = v.get(p)
            if not f:
                continue
            for c, rc in pv.items():
                s = v.get(c, 0) - f * rc
                if s:
                    v[c] = s
                else:
                    v.pop(c, None)
            for c, rc in pc.items():
                s = combo.get(c, 0) - f * rc
                if s:
                    combo[c] = s
                else:
                    combo.pop(c, None)
        if v:
            p = min(v)
            inv = 1 / v[p]
            pivots[p] = ({c: x * inv for c, x in v.items()},
                         {c: x * inv for c, x in combo.items()})
        else:
            if normalize:
                lead = combo[min(combo)]
                combo = {c: x / lead for c, x in combo.items()}
            kernel.append(combo)
    return kernel


def rank_of_columns(columns) -> int:
    ech = Echelon()
    for col in columns:
        ech.insert(col)
    return ech.rank


class ExactMatrix:
    """Dense exact rational matrix with rank, kernel and image routines."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries):
        entries = [[Fraction(x) for x in row] for row in entries]
        self.rows = len(entries)
        self.cols = len(entries[0]) if entries else 0
        for row in entries:
            if len(row) != self.cols:
                raise ValueError("ragged matrix")
        self.entries = entries

    @classmethod
    def identity(cls, n: int) -> "ExactMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    def column(self, j: int) -> SparseVec:
        return {i: self.entries[i][j] for i in range(self.rows) if self.entries[i][j]}

    def _columns(self):
        return [self.column(j) for j in range(self.cols)]

    def rank(self) -> int:
        return rank_of_columns(self._columns())

    def kernel_basis(self):
        """Basis of the right kernel as dense tuples, first nonzero entry 1."""
        out = []
        for vec in kernel_of_columns(self._columns()):
            dense = tuple(vec.get(j, Fraction(0)) for j in range(self.cols))
            out.append(dense)
        return out

    def image_basis(self):
        """Canonical (reduced echelon) basis of the column space."""
        ech = Echelon()
        for col in self._columns():
            ech.insert(col)
        return [tuple(row.get(i, Fraction(0)) for i in range(self.rows))
                for row in ech.basis()]

    def rref(self) -> "ExactMatrix":
        """Reduced row echelon form (rows of the echelon of the row space)."""
        ech = Echelon()
        for i in range(self.rows):
            ech.insert({j: x for j, x in enumerate(self.entries[i]) if x})
        body = [[row.get(j, Fraction(0)) for j in range(self.cols)]
                for row in ech.basis()]
        body += [[Fraction(0)] * self.cols for _ in range(self.rows - len(body))]
        return ExactMatrix(body)


def kernel_basis(matrix: ExactMatrix):
    """Basis of the right kernel of an exact matrix; empty list if injective."""
    return matrix.kernel_basis()
