"""Exact integer Smith normal form and abelian invariants of presentations."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .presentations import Presentation
from .words import AlphabetMismatchError, Word


@dataclass(frozen=True)
class IntMatrix:
    rows: int
    cols: int
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        entries = tuple(tuple(int(v) for v in row) for row in self.entries)
        object.__setattr__(self, "entries", entries)
        if len(entries) != self.rows or any(len(row) != self.cols for row in entries):
            raise ValueError(f"entries do not match shape {self.rows}x{self.cols}")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: int | None = None) -> "IntMatrix":
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        return cls(len(rows), cols, tuple(tuple(r) for r in rows))

    @classmethod
    def identity(cls, k: int) -> "IntMatrix":
        return cls(k, k, tuple(tuple(int(i == j) for j in range(k)) for i in range(k)))

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.entries[i][j]

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        cols = list(zip(*other.entries)) if other.rows else [()] * other.cols
        out = tuple(tuple(sum(a * b for a, b in zip(row, col)) for col in cols) for row in self.entries)
        return IntMatrix(self.rows, other.cols, out)

    def transpose(self) -> "IntMatrix":
        return IntMatrix(self.cols, self.rows, tuple(zip(*self.entries)) if self.rows else
                         tuple(() for _ in range(self.cols)))

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self.entries]


def determinant(m: IntMatrix) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    if m.rows != m.cols:
        raise ValueError("determinant of a non-square matrix")
    a = m.tolist()
    k = m.rows
    sign, prev = 1, 1
    for i in range(k):
        if a[i][i] == 0:
            swap = next((r for r in range(i + 1, k) if a[r][i] != 0), None)
            if swap is None:
                return 0
            a[i], a[swap] = a[swap], a[i]
            sign = -sign
        for r in range(i + 1, k):
            for c in range(i + 1, k):
                a[r][c] = (a[r][c] * a[i][i] - a[r][i] * a[i][c]) // prev
        prev = a[i][i]
    return sign * a[k - 1][k - 1] if k else 1


@dataclass(frozen=True)
class SmithForm:
    """``U @ M @ V == D`` with D diagonal, d1 | d2 | ..., and U, V unimodular."""

    D: IntMatrix
    U: IntMatrix | None
    V: IntMatrix | None
    diagonal: tuple[int, ...]

    @property
    def rank(self) -> int:
        return sum(1 for d in self.diagonal if d != 0)


class _Sparse:
    """Row-sparse matrix with a column index, plus optional dense transforms."""

    def __init__(self, rows: Sequence[Sequence[int]], ncols: int, transforms: bool):
        self.nrows, self.ncols = len(rows), ncols
        self.rows = [{j: v for j, v in enumerate(r) if v} for r in rows]
        self.colrows: list[set[int]] = [set() for _ in range(ncols)]
        for i, r in enumerate(self.rows):
            for j in r:
                self.colrows[j].add(i)
        self.U = [[int(i == j) for j in range(self.nrows)] for i in range(self.nrows)] if transforms else None
        # V kept column-wise so column operations are list operations
        self.Vcols = [[int(i == j) for i in range(ncols)] for j in range(ncols)] if transforms else None

    def _set(self, i: int, j: int, v: int) -> None:
        if v:
            self.rows[i][j] = v
            self.colrows[j].add(i)
        else:
            self.rows[i].pop(j, None)
            self.colrows[j].discard(i)

    def add_row(self, dst: int, src: int, q: int) -> None:
        """row[dst] += q * row[src]"""
        if q == 0:
            return
        drow = self.rows[dst]
        for j, v in list(self.rows[src].items()):
            self._set(dst, j, drow.get(j, 0) + q * v)
        if self.U is not None:
            ud, us = self.U[dst], self.U[src]
            for k in range(self.nrows):
                if us[k]:
                    ud[k] += q * us[k]

    def add_col(self, dst: int, src: int, q: int) -> None:
        """col[dst] += q * col[src]"""
        if q == 0:
            return
        for i in list(self.colrows[src]):
            row = self.rows[i]
            self._set(i, dst, row.get(dst, 0) + q * row[src])
        if self.Vcols is not None:
            vd, vs = self.Vcols[dst], self.Vcols[src]
            for k in range(self.ncols):
                if vs[k]:
                    vd[k] += q * vs[k]

    def negate_row(self, i: int) -> None:
        for j in list(self.rows[i]):
            self.rows[i][j] = -self.rows[i][j]
        if self.U is not None:
            self.U[i] = [-x for x in self.U[i]]


def smith_normal_form(m: IntMatrix | Sequence[Sequence[int]], transforms: bool = True) -> SmithForm:
    """Smith normal form over Z with exact (unbounded) integers.

    Pivots are the smallest nonzero |entry| of the active submatrix, ties to the
    lowest (row, col).  With ``transforms=False`` only D is computed.
    """
    if not isinstance(m, IntMatrix):
        m = IntMatrix.from_rows(m)
    s = _Sparse(m.entries, m.cols, transforms)
    active_rows = set(range(m.rows))
    active_cols = set(range(m.cols))
    pivots: list[tuple[int, int]] = []

    while True:
        best = None
        for i in sorted(active_rows):
            for j, v in s.rows[i].items():
                if j in active_cols:
                    key = (abs(v), i, j)
                    if best is None or key < best:
                        best = key
        if best is None:
            break
        _, r, c = best
        p = s.rows[r][c]
        for i in sorted(s.colrows[c] - {r}):
            s.add_row(i, r, -(s.rows[i][c] // p))
        for j in sorted(set(s.rows[r]) - {c}):
            s.add_col(j, c, -(s.rows[r][j] // p))
        if len(s.colrows[c]) > 1 or len(s.rows[r]) > 1:
            continue  # remainders left; a smaller pivot exists now
        bad = None
        for i in sorted(active_rows - {r}):
            if any(v % p for j, v in s.rows[i].items()):
                bad = i
                break
        if bad is not None:
            s.add_row(r, bad, 1)
            continue
        if p < 0:
            s.negate_row(r)
        pivots.append((r, c))
        active_rows.discard(r)
        active_cols.discard(c)

    row_order = [r for r, _ in pivots] + sorted(active_rows)
    col_order = [c for _, c in pivots] + sorted(active_cols)
    k = min(m.rows, m.cols)
    diagonal = tuple(s.rows[r][c] for r, c in pivots) + (0,) * (k - len(pivots))
    D = IntMatrix(m.rows, m.cols, tuple(
        tuple(diagonal[i] if i == j and i < k else 0 for j in range(m.cols)) for i in range(m.rows)))
    U = V = None
    if transforms:
        U = IntMatrix(m.rows, m.rows, tuple(tuple(s.U[r]) for r in row_order))
        V = IntMatrix(m.cols, m.cols, tuple(
            tuple(s.Vcols[c][i] for c in col_order) for i in range(m.cols)))
    return SmithForm(D, U, V, diagonal)


# -- presentations ----------------------------------------------------------------

@dataclass(frozen=True)
class AbelianInvariants:
    torsion: tuple[int, ...]
    free_rank: int

    def __post_init__(self):
        object.__setattr__(self, "torsion", tuple(self.torsion))
        if any(d < 2 for d in self.torsion):
            raise ValueError(f"torsion factors must be >= 2: {self.torsion}")
        if any(b % a for a, b in zip(self.torsion, self.torsion[1:])):
            raise ValueError(f"torsion factors must form a divisibility chain: {self.torsion}")

    @property
    def min_generators(self) -> int:
        return len(self.torsion) + self.free_rank

    def order(self) -> int | None:
        if self.free_rank:
            return None
        out = 1
        for d in self.torsion:
            out *= d
        return out

    def __str__(self):
        parts = [f"Z{d}" for d in self.torsion]
        if self.free_rank:
            parts.append("Z" if self.free_rank == 1 else f"Z^{self.free_rank}")
        return " + ".join(parts) if parts else "0"

    def to_dict(self) -> dict:
        return {"free_rank": self.free_rank, "torsion": list(self.torsion)}


def relation_matrix(p: Presentation) -> IntMatrix:
    return IntMatrix.from_rows([r.exponent_sums() for r in p.relators], p.n_gens)


def invariants_from_diagonal(diagonal: Sequence[int], n_gens: int) -> AbelianInvariants:
    rank = sum(1 for d in diagonal if d)
    return AbelianInvariants(tuple(d for d in diagonal if d > 1), n_gens - rank)


def abelian_invariants(p: Presentation) -> AbelianInvariants:
    snf = smith_normal_form(relation_matrix(p), transforms=False)
    return invariants_from_diagonal(snf.diagonal, p.n_gens)


def min_gens_lower_bound(p: Presentation) -> int:
    """Minimal generator count of the abelianization; bounds G and NG from below."""
    return abelian_invariants(p).min_generators


@dataclass(frozen=True)
class AbelianImage:
    torsion: tuple[int, ...]   # residues, aligned with AbelianInvariants.torsion
    moduli: tuple[int, ...]
    free: tuple[int, ...]


class Abelianization:
    """The abelianization map of a presentation, coordinates taken from the SNF column transform."""

    def __init__(self, p: Presentation):
        self.presentation = p
        snf = smith_normal_form(relation_matrix(p), transforms=True)
        self.V = snf.V
        self.invariants = invariants_from_diagonal(snf.diagonal, p.n_gens)
        diag = list(snf.diagonal) + [0] * (p.n_gens - len(snf.diagonal))
        self._torsion_coords = [(t, d) for t, d in enumerate(diag) if d > 1]
        self._free_coords = [t for t, d in enumerate(diag) if d == 0]

    def image(self, w: Word) -> AbelianImage:
        if w.alphabet != self.presentation.alphabet:
            raise AlphabetMismatchError(f"{w} is not over {self.presentation.alphabet.names}")
        x = w.exponent_sums()
        k = self.presentation.n_gens
        coords = [sum(x[i] * self.V.entries[i][t] for i in range(k)) for t in range(k)]
        return AbelianImage(
            tuple(coords[t] % d for t, d in self._torsion_coords),
            tuple(d for _, d in self._torsion_coords),
            tuple(coords[t] for t in self._free_coords),
        )


def abelianized_image(p: Presentation, w: Word) -> AbelianImage:
    return Abelianization(p).image(w)
