"""Exact dense matrices over the rings in nilk.rings.

Desk-scale only: determinants by cofactor expansion (bitmask over columns),
inverses by adjugate.  Values are immutable; entry equality is canonical
polynomial equality.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .rings import (IdealSpec, NotAUnitError, Poly, Ring, RingMismatchError,
                    ideal_member, poly_latex, poly_terms_from_json,
                    poly_terms_to_json, ring_from_json, ring_to_json)


class NotInvertibleError(ValueError):
    """Determinant is not a recognized unit."""


def _as_entry(ring: Ring, x) -> Poly:
    if isinstance(x, Poly):
        if x.ring != ring:
            raise RingMismatchError(f"entry over {x.ring}, matrix over {ring}")
        return x
    return ring.const(x)


@dataclass(frozen=True)
class Matrix:
    ring: Ring
    rows: int
    cols: int
    entries: tuple  # tuple of row tuples of Poly

    # -- constructors

    @staticmethod
    def from_rows(ring: Ring, rows: Sequence[Sequence]) -> "Matrix":
        nr = len(rows)
        nc = len(rows[0]) if nr else 0
        ents = []
        for r in rows:
            if len(r) != nc:
                raise ValueError("ragged rows")
            ents.append(tuple(_as_entry(ring, x) for x in r))
        return Matrix(ring, nr, nc, tuple(ents))

    @staticmethod
    def identity(ring: Ring, n: int) -> "Matrix":
        one, zero = ring.one(), ring.zero()
        return Matrix(ring, n, n, tuple(
            tuple(one if i == j else zero for j in range(n)) for i in range(n)))

    @staticmethod
    def zeros(ring: Ring, rows: int, cols: int) -> "Matrix":
        zero = ring.zero()
        return Matrix(ring, rows, cols, tuple(tuple(zero for _ in range(cols))
                                              for _ in range(rows)))

    @staticmethod
    def diag(ring: Ring, elems: Sequence) -> "Matrix":
        n = len(elems)
        m = [[ring.zero()] * n for _ in range(n)]
        for i, e in enumerate(elems):
            m[i][i] = _as_entry(ring, e)
        return Matrix.from_rows(ring, m)

    def __getitem__(self, rc) -> Poly:
        r, c = rc
        return self.entries[r][c]

    # -- arithmetic

    def _check(self, other: "Matrix", same_shape: bool):
        if self.ring != other.ring:
            raise RingMismatchError(f"{self.ring} vs {other.ring}")
        if same_shape and (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check(other, True)
        return Matrix(self.ring, self.rows, self.cols, tuple(
            tuple(a + b for a, b in zip(ra, rb))
            for ra, rb in zip(self.entries, other.entries)))

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._check(other, True)
        return Matrix(self.ring, self.rows, self.cols, tuple(
            tuple(a - b for a, b in zip(ra, rb))
            for ra, rb in zip(self.entries, other.entries)))

    def __neg__(self) -> "Matrix":
        return Matrix(self.ring, self.rows, self.cols, tuple(
            tuple(-a for a in r) for r in self.entries))

    def __matmul__(self, other: "Matrix") -> "Matrix":
        self._check(other, False)
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.rows}x{self.cols} by "
                             f"{other.rows}x{other.cols}")
        bt = other.transpose().entries
        out = []
        for ra in self.entries:
            row = []
            for cb in bt:
                acc = self.ring.zero()
                for a, b in zip(ra, cb):
                    if not (a.is_zero() or b.is_zero()):
                        acc = acc + a * b
                row.append(acc)
            out.append(tuple(row))
        return Matrix(self.ring, self.rows, other.cols, tuple(out))

    def scale(self, u) -> "Matrix":
        u = _as_entry(self.ring, u)
        return Matrix(self.ring, self.rows, self.cols, tuple(
            tuple(u * a for a in r) for r in self.entries))

    def transpose(self) -> "Matrix":
        return Matrix(self.ring, self.cols, self.rows,
                      tuple(zip(*self.entries)))

    def direct_sum(self, other: "Matrix") -> "Matrix":
        self._check(other, False)
        return block_assemble(self.ring, self.rows + other.rows,
                              self.cols + other.cols,
                              [(0, 0, self), (self.rows, self.cols, other)])

    def power(self, k: int) -> "Matrix":
        if self.rows != self.cols:
            raise ValueError("power of non-square matrix")
        out = Matrix.identity(self.ring, self.rows)
        for _ in range(k):
            out = out @ self
        return out

    # -- predicates

    def is_zero(self) -> bool:
        return all(a.is_zero() for r in self.entries for a in r)

    def is_idempotent(self) -> bool:
        return self.rows == self.cols and self @ self == self

    def nilpotency_index(self, max_k: int) -> Optional[int]:
        """Least k <= max_k with m^k = 0, or None."""
        if self.rows != self.cols:
            raise ValueError("nilpotency of non-square matrix")
        p = Matrix.identity(self.ring, self.rows)
        for k in range(1, max_k + 1):
            p = p @ self
            if p.is_zero():
                return k
        return None

    # -- determinant / inverse

    def det(self) -> Poly:
        if self.rows != self.cols:
            raise ValueError("determinant of non-square matrix")
        n = self.rows
        ring = self.ring
        if n == 0:
            return ring.one()
        memo: dict[int, Poly] = {}

        def rec(row: int, colmask: int) -> Poly:
            if row == n:
                return ring.one()
            cached = memo.get(colmask)
            if cached is not None:
                return cached
            acc = ring.zero()
            sign = 1
            for c in range(n):
                bit = 1 << c
                if not (colmask & bit):
                    continue
                a = self.entries[row][c]
                if not a.is_zero():
                    sub = rec(row + 1, colmask & ~bit)
                    term = a * sub
                    acc = acc + (term if sign > 0 else -term)
                sign = -sign
            memo[colmask] = acc
            return acc

        return rec(0, (1 << n) - 1)

    def _adjugate(self) -> "Matrix":
        n = self.rows
        if n == 1:
            return Matrix.from_rows(self.ring, [[self.ring.one()]])
        cof = [[None] * n for _ in range(n)]
        for i in range(n):
            for j in range(n):
                minor = Matrix.from_rows(self.ring, [
                    [self.entries[r][c] for c in range(n) if c != j]
                    for r in range(n) if r != i])
                d = minor.det()
                cof[i][j] = d if (i + j) % 2 == 0 else -d
        return Matrix.from_rows(self.ring, cof).transpose()

    def inverse(self) -> "Matrix":
        """Adjugate inverse; raises NotInvertibleError unless det is a
        recognized unit.  Exact: self @ inverse == identity."""
        if self.rows != self.cols:
            raise NotInvertibleError("non-square matrix")
        d = self.det()
        dinv = d.try_invert()
        if dinv is None:
            raise NotInvertibleError(f"determinant {d} is not a recognized unit")
        return self._adjugate().scale(dinv)

    # -- row/column operations (1-indexed, matching the displayed formulas)

    def row_scale(self, i: int, u) -> "Matrix":
        u = _as_entry(self.ring, u)
        if u.try_invert() is None:
            raise NotAUnitError(f"row scale by non-unit {u}")
        rows = [list(r) for r in self.entries]
        rows[i - 1] = [u * a for a in rows[i - 1]]
        return Matrix.from_rows(self.ring, rows)

    def col_scale(self, j: int, u) -> "Matrix":
        u = _as_entry(self.ring, u)
        if u.try_invert() is None:
            raise NotAUnitError(f"column scale by non-unit {u}")
        rows = [list(r) for r in self.entries]
        for r in rows:
            r[j - 1] = r[j - 1] * u
        return Matrix.from_rows(self.ring, rows)

    # -- entrywise helpers

    def map_entries(self, f, ring: Optional[Ring] = None) -> "Matrix":
        rows = [[f(a) for a in r] for r in self.entries]
        return Matrix.from_rows(ring if ring is not None else self.ring, rows)

    def into(self, ring: Ring) -> "Matrix":
        return self.map_entries(lambda a: a.into(ring), ring)

    def substitute(self, assignments, target: Optional[Ring] = None) -> "Matrix":
        first = self.entries[0][0].substitute(assignments, target)
        return self.map_entries(lambda a: a.substitute(assignments, first.ring),
                                first.ring)

    def __str__(self):
        return "[" + "; ".join(", ".join(str(a) for a in r)
                               for r in self.entries) + "]"


def elementary(ring: Ring, n: int, i: int, j: int, a) -> Matrix:
    """Identity with a in position (i, j); 1-indexed, i != j."""
    if i == j:
        raise ValueError("elementary matrix requires i != j")
    if not (1 <= i <= n and 1 <= j <= n):
        raise ValueError("index out of range")
    rows = [list(r) for r in Matrix.identity(ring, n).entries]
    rows[i - 1][j - 1] = _as_entry(ring, a)
    return Matrix.from_rows(ring, rows)


def block_assemble(ring: Ring, rows: int, cols: int,
                   placements: Iterable[tuple[int, int, Matrix]]) -> Matrix:
    """Zero matrix with the given blocks placed at (row, col) offsets."""
    out = [[ring.zero()] * cols for _ in range(rows)]
    for r0, c0, blk in placements:
        if blk.ring != ring:
            raise RingMismatchError("block over wrong ring")
        if r0 + blk.rows > rows or c0 + blk.cols > cols:
            raise ValueError("block does not fit")
        for i in range(blk.rows):
            for j in range(blk.cols):
                out[r0 + i][c0 + j] = blk.entries[i][j]
    return Matrix.from_rows(ring, out)


@dataclass(frozen=True)
class DoublePair:
    """A pair of matrices (first, second) with first - second entrywise in
    the declared ideal: an element of the double ring D(R, I)."""

    first: Matrix
    second: Matrix
    ideal: IdealSpec

    def validate(self) -> bool:
        d = self.first - self.second
        return all(ideal_member(a, self.ideal) for r in d.entries for a in r)


# ---------------------------------------------------------------------------
# serialization


def matrix_to_json(m: Matrix) -> dict:
    return {
        "ring": ring_to_json(m.ring),
        "rows": m.rows,
        "cols": m.cols,
        "entries": [[poly_terms_to_json(a) for a in r] for r in m.entries],
    }


def matrix_from_json(j: dict) -> Matrix:
    ring = ring_from_json(j["ring"])
    rows = [[poly_terms_from_json(ring, e) for e in r] for r in j["entries"]]
    m = Matrix.from_rows(ring, rows)
    if (m.rows, m.cols) != (j["rows"], j["cols"]):
        raise ValueError("inconsistent matrix dimensions")
    return m


def matrix_latex(m: Matrix) -> str:
    body = " \\\\\n".join(" & ".join(poly_latex(a) for a in r) for r in m.entries)
    return "\\begin{pmatrix}\n" + body + "\n\\end{pmatrix}"
