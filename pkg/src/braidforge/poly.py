"""Exact Laurent polynomials with integer coefficients.

:class:`LaurentPoly` is the one-variable ring Z[t, t^-1] used for Burau and
Alexander data; :class:`LaurentPoly2` is Z[t^±1, q^±1] for the
Lawrence–Krammer matrices.  Both are immutable, store no zero coefficients
and never touch floating point.
"""

from __future__ import annotations

from typing import Mapping, Union

from .errors import InternalError

IntLike = Union[int, "LaurentPoly"]


class LaurentPoly:
    __slots__ = ("_c", "_hash")

    def __init__(self, coeffs: Mapping[int, int] | None = None):
        c = {}
        if coeffs:
            for e, v in coeffs.items():
                if v:
                    c[int(e)] = int(v)
        self._c = c
        self._hash = None

    @classmethod
    def const(cls, v: int) -> "LaurentPoly":
        return cls({0: v})

    @classmethod
    def monomial(cls, coeff: int, exp: int) -> "LaurentPoly":
        return cls({exp: coeff})

    @classmethod
    def from_list(cls, coeffs, low: int = 0) -> "LaurentPoly":
        """Ascending coefficient list starting at exponent ``low``."""
        return cls({low + k: v for k, v in enumerate(coeffs)})

    @property
    def coeffs(self) -> dict[int, int]:
        return dict(self._c)

    def is_zero(self) -> bool:
        return not self._c

    def min_exp(self) -> int:
        return min(self._c)

    def max_exp(self) -> int:
        return max(self._c)

    def span(self) -> int:
        return self.max_exp() - self.min_exp() if self._c else 0

    def leading(self) -> int:
        return self._c[self.max_exp()]

    def trailing(self) -> int:
        return self._c[self.min_exp()]

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._c.items()))
        return self._hash

    def __add__(self, other: IntLike) -> "LaurentPoly":
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        c = dict(self._c)
        for e, v in other._c.items():
            c[e] = c.get(e, 0) + v
        return LaurentPoly(c)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({e: -v for e, v in self._c.items()})

    def __sub__(self, other: IntLike) -> "LaurentPoly":
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        return self + (-other)

    def __rsub__(self, other: int) -> "LaurentPoly":
        return LaurentPoly.const(other) - self

    def __mul__(self, other: IntLike) -> "LaurentPoly":
        if isinstance(other, int):
            return LaurentPoly({e: v * other for e, v in self._c.items()})
        c: dict[int, int] = {}
        for e1, v1 in self._c.items():
            for e2, v2 in other._c.items():
                c[e1 + e2] = c.get(e1 + e2, 0) + v1 * v2
        return LaurentPoly(c)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "LaurentPoly":
        if k < 0:
            if len(self._c) != 1:
                raise ValueError("only monomials can be raised to negative powers")
            (e, v), = self._c.items()
            if abs(v) != 1:
                raise ValueError("monomial is not a unit")
            return LaurentPoly({e * k: v ** (-k)})
        out = LaurentPoly.const(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by t^k."""
        return LaurentPoly({e + k: v for e, v in self._c.items()})

    def divmod_exact(self, other: "LaurentPoly") -> "LaurentPoly":
        """Exact quotient ``self / other``; raises :class:`InternalError` if it does not exist in Z[t^±1]."""
        if other.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        if self.is_zero():
            return LaurentPoly()
        rem = dict(self._c)
        d_hi = other.max_exp()
        d_lead = other.leading()
        d_lo = other.min_exp()
        quot: dict[int, int] = {}
        while rem:
            hi = max(rem)
            if hi - d_hi < self.min_exp() - d_lo:
                break
            v = rem[hi]
            if v % d_lead:
                raise InternalError(f"non-integral quotient dividing {self} by {other}")
            qv = v // d_lead
            qe = hi - d_hi
            quot[qe] = qv
            for e, dv in other._c.items():
                k = e + qe
                nv = rem.get(k, 0) - qv * dv
                if nv:
                    rem[k] = nv
                else:
                    rem.pop(k, None)
        if rem:
            raise InternalError(f"{self} is not divisible by {other}")
        return LaurentPoly(quot)

    def __floordiv__(self, other: IntLike) -> "LaurentPoly":
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        return self.divmod_exact(other)

    def __call__(self, x):
        """Evaluate at an integer or Fraction (negative powers use true division)."""
        return sum(v * (x ** e if e >= 0 else 1 / x ** (-e)) for e, v in self._c.items())

    def is_palindromic(self) -> bool:
        if not self._c:
            return True
        lo, hi = self.min_exp(), self.max_exp()
        return all(self._c.get(lo + k, 0) == self._c.get(hi - k, 0) for k in range(hi - lo + 1))

    def format(self, var: str = "t") -> str:
        """Descending exponents with explicit signs, e.g. ``2*t^2 - 3*t + 2``."""
        if not self._c:
            return "0"
        parts = []
        for idx, e in enumerate(sorted(self._c, reverse=True)):
            v = self._c[e]
            mag = abs(v)
            if e == 0:
                mono = str(mag)
            else:
                powr = var if e == 1 else f"{var}^{e}"
                mono = powr if mag == 1 else f"{mag}*{powr}"
            if idx == 0:
                parts.append(("-" if v < 0 else "") + mono)
            else:
                parts.append(("- " if v < 0 else "+ ") + mono)
        return " ".join(parts)

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"LaurentPoly({self.format()!r})"

    @classmethod
    def parse(cls, text: str, var: str = "t") -> "LaurentPoly":
        """Inverse of :meth:`format` (also tolerates missing spaces)."""
        s = text.replace(" ", "")
        if not s:
            raise ValueError("empty polynomial text")
        if s[0] not in "+-":
            s = "+" + s
        terms = []
        cur = ""
        for ch in s:
            if ch in "+-" and cur and not cur.endswith("^"):
                terms.append(cur)
                cur = ch
            else:
                cur += ch
        terms.append(cur)
        c: dict[int, int] = {}
        for term in terms:
            sign = -1 if term[0] == "-" else 1
            body = term[1:]
            if var in body:
                coef_txt, _, pow_txt = body.partition(var)
                coef = int(coef_txt.rstrip("*")) if coef_txt.rstrip("*") else 1
                exp = int(pow_txt[1:]) if pow_txt.startswith("^") else 1
                if pow_txt and not pow_txt.startswith("^"):
                    raise ValueError(f"bad term {term!r}")
            else:
                coef, exp = int(body), 0
            c[exp] = c.get(exp, 0) + sign * coef
        return cls(c)


class LaurentPoly2:
    """Element of Z[t^±1, q^±1], keyed by exponent pairs ``(t_exp, q_exp)``."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: Mapping[tuple[int, int], int] | None = None):
        self._c = {k: v for k, v in (coeffs or {}).items() if v}

    @classmethod
    def const(cls, v: int) -> "LaurentPoly2":
        return cls({(0, 0): v})

    @classmethod
    def mono(cls, coeff: int, t: int = 0, q: int = 0) -> "LaurentPoly2":
        return cls({(t, q): coeff})

    @property
    def coeffs(self) -> dict[tuple[int, int], int]:
        return dict(self._c)

    def is_zero(self) -> bool:
        return not self._c

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly2.const(other)
        if not isinstance(other, LaurentPoly2):
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        return hash(frozenset(self._c.items()))

    def __add__(self, other) -> "LaurentPoly2":
        if isinstance(other, int):
            other = LaurentPoly2.const(other)
        c = dict(self._c)
        for k, v in other._c.items():
            c[k] = c.get(k, 0) + v
        return LaurentPoly2(c)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly2({k: -v for k, v in self._c.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = LaurentPoly2.const(other)
        return self + (-other)

    def __rsub__(self, other):
        return LaurentPoly2.const(other) - self

    def __mul__(self, other) -> "LaurentPoly2":
        if isinstance(other, int):
            return LaurentPoly2({k: v * other for k, v in self._c.items()})
        c: dict[tuple[int, int], int] = {}
        for (a1, b1), v1 in self._c.items():
            for (a2, b2), v2 in other._c.items():
                k = (a1 + a2, b1 + b2)
                c[k] = c.get(k, 0) + v1 * v2
        return LaurentPoly2(c)

    __rmul__ = __mul__

    def __repr__(self):
        if not self._c:
            return "0"
        terms = []
        for (a, b), v in sorted(self._c.items(), reverse=True):
            mono = "".join(
                s for s in (f"t^{a}" if a else "", f"q^{b}" if b else "") if s
            )
            terms.append(f"{v}{'*' + mono if mono else ''}")
        return " + ".join(terms)
