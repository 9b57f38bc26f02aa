"""Lawrence–Krammer representation over Z[t^±1, q^±1].

Faithful, so it decides the word problem independently of the Garside
machinery; we use it only as a cross-check oracle.

Basis vectors are v_{j,k}, 1 <= j < k <= n, ordered lexicographically.
Generator action (Bigelow's normalisation)::

    σ_i v_{j,k} = v_{j,k}                                     i ∉ {j-1, j, k-1, k}
                  q v_{i,k} + (q²-q) v_{i,j} + (1-q) v_{j,k}    i = j-1
                  v_{j+1,k}                                     i = j ≠ k-1
                  q v_{j,i} + (1-q) v_{j,k} - (q²-q) t v_{i,k}  i = k-1 ≠ j
                  v_{j,k+1}                                     i = k
                  -t q² v_{j,k}                                 i = j = k-1

The matrix of a word is the product of generator matrices in word order;
multiplication on the right by a generator only rewrites the columns of
basis vectors touching strands i, i+1, so it is done sparsely.
"""

from __future__ import annotations

from functools import lru_cache

from .errors import CapacityError
from .poly import LaurentPoly2
from .words import BraidWord

MAX_STRANDS = 8

P = LaurentPoly2.mono
ONE = LaurentPoly2.const(1)


class PolyMatrix2:
    """Square matrix of :class:`LaurentPoly2` entries (row-major)."""

    __slots__ = ("rows",)

    def __init__(self, rows):
        self.rows = [list(r) for r in rows]

    @classmethod
    def identity(cls, dim: int) -> "PolyMatrix2":
        zero = LaurentPoly2()
        return cls([[ONE if r == c else zero for c in range(dim)] for r in range(dim)])

    @property
    def dim(self) -> int:
        return len(self.rows)

    def __getitem__(self, rc):
        r, c = rc
        return self.rows[r][c]

    def __eq__(self, other):
        if not isinstance(other, PolyMatrix2):
            return NotImplemented
        return self.rows == other.rows

    def __mul__(self, other: "PolyMatrix2") -> "PolyMatrix2":
        n = self.dim
        zero = LaurentPoly2()
        out = []
        for r in range(n):
            row = []
            for c in range(n):
                acc = zero
                for k in range(n):
                    a = self.rows[r][k]
                    if a.is_zero():
                        continue
                    b = other.rows[k][c]
                    if not b.is_zero():
                        acc = acc + a * b
                row.append(acc)
            out.append(row)
        return PolyMatrix2(out)

    def __repr__(self):
        return f"PolyMatrix2({self.rows!r})"


@lru_cache(maxsize=None)
def _basis(n: int) -> dict[tuple[int, int], int]:
    pairs = [(j, k) for j in range(1, n + 1) for k in range(j + 1, n + 1)]
    return {p: idx for idx, p in enumerate(pairs)}


@lru_cache(maxsize=None)
def generator_columns(n: int, i: int, sign: int) -> tuple[tuple[int, tuple[tuple[int, LaurentPoly2], ...]], ...]:
    """Non-trivial columns of the matrix of σ_i^{sign}.

    Returns ``(column, ((row, coeff), ...))`` pairs; every other column is the
    identity column.
    """
    b = _basis(n)
    z = b[(i, i + 1)]
    cols = []
    if sign > 0:
        cols.append((z, ((z, P(-1, 1, 2)),)))
    else:
        cols.append((z, ((z, P(-1, -1, -2)),)))
    for a in range(1, n + 1):
        if a in (i, i + 1):
            continue
        if a < i:
            x, y = b[(a, i)], b[(a, i + 1)]
            if sign > 0:
                cols.append((x, ((y, ONE),)))
                cols.append((y, ((x, P(1, 0, 1)), (y, ONE - P(1, 0, 1)), (z, P(-1, 1, 2) + P(1, 1, 1)))))
            else:
                cols.append((y, ((x, ONE),)))
                cols.append((x, ((y, P(1, 0, -1)), (x, ONE - P(1, 0, -1)), (z, P(-1, 0, -1) + P(1, 0, -2)))))
        else:
            x, y = b[(i, a)], b[(i + 1, a)]
            if sign > 0:
                cols.append((x, ((y, ONE),)))
                cols.append((y, ((x, P(1, 0, 1)), (z, P(1, 0, 2) - P(1, 0, 1)), (y, ONE - P(1, 0, 1)))))
            else:
                cols.append((y, ((x, ONE),)))
                cols.append((x, ((y, P(1, 0, -1)), (x, ONE - P(1, 0, -1)), (z, P(1, -1, -1) - P(1, -1, -2)))))
    return tuple(cols)


def generator_matrix(n: int, x: int) -> PolyMatrix2:
    m = PolyMatrix2.identity(len(_basis(n)))
    return _right_apply(m, n, x)


def _right_apply(m: PolyMatrix2, n: int, x: int) -> PolyMatrix2:
    """m · M(σ_{|x|}^{sign x})."""
    zero = LaurentPoly2()
    rows = m.rows
    new_cols = {}
    for col, terms in generator_columns(n, abs(x), 1 if x > 0 else -1):
        vec = []
        for r in range(len(rows)):
            acc = zero
            for src, coeff in terms:
                e = rows[r][src]
                if not e.is_zero():
                    acc = acc + e * coeff
            vec.append(acc)
        new_cols[col] = vec
    out = [list(row) for row in rows]
    for col, vec in new_cols.items():
        for r in range(len(out)):
            out[r][col] = vec[r]
    return PolyMatrix2(out)


def lk_matrix(w: BraidWord, max_strands: int = MAX_STRANDS) -> PolyMatrix2:
    n = w.strands
    if n > max_strands:
        raise CapacityError(
            f"Lawrence-Krammer matrices are limited to B{max_strands} "
            f"(dimension {max_strands * (max_strands - 1) // 2}); got B{n}"
        )
    m = PolyMatrix2.identity(n * (n - 1) // 2)
    for x in w.letters:
        m = _right_apply(m, n, x)
    return m
