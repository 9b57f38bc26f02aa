"""Knot invariants of braid closures, all in exact integer arithmetic.

Reduced Burau convention (the only place it is fixed): the matrix of σ_i is
the (n-1)×(n-1) identity with row i replaced by

    (i, i-1) -> t      (when i > 1)
    (i, i)   -> -t
    (i, i+1) -> 1      (when i < n-1)

and the matrix of a word is the product of its letters' matrices in word
order.  The Alexander polynomial of the closure is

    det(I - B(w)) · (1 - t) / (1 - t^n)

normalised to lowest exponent 0 and positive leading coefficient.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .errors import InternalError, MultiComponentError, ParameterError, PreconditionError
from .poly import LaurentPoly
from .words import BraidWord, cycles, underlying_permutation

ZERO = LaurentPoly()
ONE = LaurentPoly.const(1)
T = LaurentPoly.monomial(1, 1)


def _identity(dim: int) -> list[list[LaurentPoly]]:
    return [[ONE if r == c else ZERO for c in range(dim)] for r in range(dim)]


def _burau_row(n: int, i: int, sign: int) -> dict[int, LaurentPoly]:
    """Non-identity row (0-based column -> entry) of the matrix of σ_i^{±1}; row index is i-1."""
    row = {}
    if sign > 0:
        if i > 1:
            row[i - 2] = T
        row[i - 1] = -T
        if i < n - 1:
            row[i] = ONE
    else:
        tinv = LaurentPoly.monomial(1, -1)
        if i > 1:
            row[i - 2] = ONE
        row[i - 1] = -tinv
        if i < n - 1:
            row[i] = tinv
    return row


def reduced_burau(w: BraidWord) -> list[list[LaurentPoly]]:
    n = w.strands
    m = _identity(n - 1)
    for x in w.letters:
        i = abs(x)
        row = _burau_row(n, i, 1 if x > 0 else -1)
        pivot = [m[r][i - 1] for r in range(n - 1)]
        # m · G where G = I + e_i (row - e_i)^T
        for c, g in row.items():
            delta = g - ONE if c == i - 1 else g
            for r in range(n - 1):
                if not pivot[r].is_zero():
                    m[r][c] = m[r][c] + pivot[r] * delta
    return m


def burau_generator(n: int, x: int) -> list[list[LaurentPoly]]:
    return reduced_burau(BraidWord(n, (x,)))


def matmul(a, b):
    n = len(a)
    return [[sum((a[r][k] * b[k][c] for k in range(n)), ZERO) for c in range(n)] for r in range(n)]


def determinant(m: list[list[LaurentPoly]]) -> LaurentPoly:
    """Fraction-free (Bareiss) determinant over Z[t^±1]."""
    a = [list(row) for row in m]
    n = len(a)
    if n == 0:
        return ONE
    sign = 1
    prev = ONE
    for k in range(n - 1):
        if a[k][k].is_zero():
            for r in range(k + 1, n):
                if not a[r][k].is_zero():
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return ZERO
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]).divmod_exact(prev)
        prev = a[k][k]
    return a[n - 1][n - 1] * sign


def normalize(p: LaurentPoly) -> LaurentPoly:
    """Unit-normalise: lowest exponent 0, positive leading coefficient."""
    if p.is_zero():
        return p
    p = p.shift(-p.min_exp())
    return -p if p.leading() < 0 else p


@dataclass(frozen=True)
class AlexanderResult:
    poly: LaurentPoly
    monic: bool
    degree_span: int

    def __str__(self):
        return self.poly.format()


def component_count(w: BraidWord) -> int:
    return len(cycles(underlying_permutation(w)))


def alexander(w: BraidWord) -> AlexanderResult:
    n = w.strands
    comps = component_count(w)
    if comps != 1:
        raise MultiComponentError(f"closure has {comps} components; the Alexander polynomial here needs a knot")
    b = reduced_burau(w)
    dim = n - 1
    m = [[(ONE if r == c else ZERO) - b[r][c] for c in range(dim)] for r in range(dim)]
    det = determinant(m)
    # (1 - t^n) / (1 - t) = 1 + t + ... + t^{n-1}
    geometric = LaurentPoly.from_list([1] * n)
    try:
        poly = det.divmod_exact(geometric)
    except InternalError as exc:
        raise InternalError(f"Burau determinant not divisible by 1+t+...+t^{n - 1}: {exc}") from exc
    poly = normalize(poly)
    return AlexanderResult(poly, abs(poly.leading()) == 1, poly.span())


def torus_alexander(p: int, q: int) -> LaurentPoly:
    """(t^{pq} - 1)(t - 1) / ((t^p - 1)(t^q - 1)) for coprime p, q."""
    if gcd(p, q) != 1:
        raise ParameterError(f"T({p},{q}) is not a knot")

    def tm1(k):
        return LaurentPoly({k: 1, 0: -1})

    return normalize((tm1(p * q) * tm1(1)).divmod_exact(tm1(p) * tm1(q)))


def positive_braid_genus(w: BraidWord) -> int:
    if not w.is_positive():
        raise PreconditionError("genus formula needs an all-positive word")
    if component_count(w) != 1:
        raise PreconditionError("genus formula needs a knot closure")
    return (len(w) - w.strands + 1) // 2


def surface_slope(k: int, q: int, m: int) -> int:
    if q < 2 or k < 2 or not 1 <= m <= q - 1 or gcd(q, m) != 1:
        raise ParameterError(f"need q >= 2, k >= 2, 1 <= m <= q-1, gcd(q,m)=1; got k={k}, q={q}, m={m}")
    return k * q * q + m * q - m * m
