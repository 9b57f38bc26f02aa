"""Braid words in B_n and the Π / Δ / rev shorthand.

A word is stored as a flat tuple of nonzero signed integers: ``i`` is the
generator σ_i and ``-i`` its inverse.  Nothing here knows about braid
relations beyond free cancellation; deciding equality is the job of
:mod:`braidforge.garside`.

Shorthand used throughout the package:

* ``Π_s^l = σ_l σ_{l+1} ⋯ σ_s`` (ascending run)
* ``Δ_s^l = Π_s^l Π_{s-1}^l ⋯ Π_l^l`` (layered runs; ``Δ_{n-1}^1`` is the half twist)
* ``rev w`` writes the letters of ``w`` in reverse order, keeping signs.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence, Union

from .errors import ParameterError, WordFormatError


class Letter(NamedTuple):
    index: int
    sign: int

    @classmethod
    def from_int(cls, x: int) -> "Letter":
        if x == 0:
            raise ParameterError("generator index 0 does not exist")
        return cls(abs(x), 1 if x > 0 else -1)

    def __int__(self) -> int:
        return self.index * self.sign


@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        if not isinstance(self.strands, int) or self.strands < 2:
            raise ParameterError(f"strand count must be an integer >= 2, got {self.strands!r}")
        letters = tuple(int(x) for x in self.letters)
        for x in letters:
            if x == 0 or abs(x) >= self.strands:
                raise ParameterError(f"letter {x} out of range for B{self.strands}")
        object.__setattr__(self, "letters", letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        return concat(self, other)

    def __pow__(self, k: int) -> "BraidWord":
        return power(self, k)

    def __invert__(self) -> "BraidWord":
        return invert(self)

    def __str__(self) -> str:
        return format_word(self)

    def as_letters(self) -> tuple[Letter, ...]:
        return tuple(Letter.from_int(x) for x in self.letters)

    def is_positive(self) -> bool:
        return all(x > 0 for x in self.letters)


def identity(strands: int) -> BraidWord:
    return BraidWord(strands, ())


def _check_run(l: int, s: int, strands: int) -> None:
    if not (1 <= l <= s <= strands - 1):
        raise ParameterError(f"need 1 <= l <= s <= {strands - 1}, got l={l}, s={s}")


def pi_letters(l: int, s: int) -> tuple[int, ...]:
    """σ_l ⋯ σ_s as raw letters; empty when s < l."""
    return tuple(range(l, s + 1))


def delta_letters(l: int, s: int) -> tuple[int, ...]:
    """Δ_s^l as raw letters; empty when s < l."""
    out: list[int] = []
    for top in range(s, l - 1, -1):
        out.extend(range(l, top + 1))
    return tuple(out)


def pi_word(l: int, s: int, strands: int) -> BraidWord:
    _check_run(l, s, strands)
    return BraidWord(strands, pi_letters(l, s))


def delta_word(l: int, s: int, strands: int) -> BraidWord:
    _check_run(l, s, strands)
    return BraidWord(strands, delta_letters(l, s))


def half_twist(strands: int) -> BraidWord:
    """The Garside element Δ of B_n."""
    return BraidWord(strands, delta_letters(1, strands - 1))


def rev(w: BraidWord) -> BraidWord:
    return BraidWord(w.strands, w.letters[::-1])


def _same_strands(a: BraidWord, b: BraidWord) -> None:
    if a.strands != b.strands:
        raise ParameterError(f"strand mismatch: B{a.strands} vs B{b.strands}")


def concat(*words: BraidWord) -> BraidWord:
    if not words:
        raise ParameterError("concat needs at least one word")
    for w in words[1:]:
        _same_strands(words[0], w)
    out: list[int] = []
    for w in words:
        out.extend(w.letters)
    return BraidWord(words[0].strands, tuple(out))


def invert(w: BraidWord) -> BraidWord:
    return BraidWord(w.strands, tuple(-x for x in reversed(w.letters)))


def power(w: BraidWord, k: int) -> BraidWord:
    if k < 0:
        w, k = invert(w), -k
    return BraidWord(w.strands, w.letters * k)


def free_reduce(w: BraidWord) -> BraidWord:
    stack: list[int] = []
    for x in w.letters:
        if stack and stack[-1] == -x:
            stack.pop()
        else:
            stack.append(x)
    return BraidWord(w.strands, tuple(stack))


def exponent_sum(w: BraidWord) -> int:
    return sum(1 if x > 0 else -1 for x in w.letters)


def underlying_permutation(w: BraidWord) -> tuple[int, ...]:
    """Image of ``w`` in S_n as a one-line image list.

    Entry ``j-1`` is the final position of the strand that starts at
    position ``j``.  Letters act left to right, σ_i swapping positions
    i and i+1 regardless of sign.
    """
    at = list(range(w.strands + 1))  # at[position] = strand
    for x in w.letters:
        i = abs(x)
        at[i], at[i + 1] = at[i + 1], at[i]
    perm = [0] * w.strands
    for pos in range(1, w.strands + 1):
        perm[at[pos] - 1] = pos
    return tuple(perm)


def compose(first: Sequence[int], then: Sequence[int]) -> tuple[int, ...]:
    """Permutation doing ``first`` and then ``then`` (one-line, 1-based)."""
    return tuple(then[first[j] - 1] for j in range(len(first)))


def inverse_permutation(perm: Sequence[int]) -> tuple[int, ...]:
    inv = [0] * len(perm)
    for j, image in enumerate(perm, start=1):
        inv[image - 1] = j
    return tuple(inv)


def cycles(perm: Sequence[int]) -> list[tuple[int, ...]]:
    seen = set()
    out = []
    for start in range(1, len(perm) + 1):
        if start in seen:
            continue
        cyc = []
        j = start
        while j not in seen:
            seen.add(j)
            cyc.append(j)
            j = perm[j - 1]
        out.append(tuple(cyc))
    return out


# -- Π/Δ expressions ---------------------------------------------------------


@dataclass(frozen=True)
class Pi:
    l: int
    s: int
    exponent: int = 1


@dataclass(frozen=True)
class Delta:
    l: int
    s: int
    exponent: int = 1


@dataclass(frozen=True)
class Sigma:
    i: int
    exponent: int = 1


@dataclass(frozen=True)
class Rev:
    body: tuple
    exponent: int = 1

    def __post_init__(self):
        if not isinstance(self.body, tuple):
            body = (self.body,) if isinstance(self.body, (Pi, Delta, Sigma, Rev)) else tuple(self.body)
            object.__setattr__(self, "body", body)


Token = Union[Pi, Delta, Sigma, Rev]


def expand(expr: Union[Token, Iterable[Token]], strands: int) -> BraidWord:
    """Spell out a Π/Δ/σ/rev expression.  No simplification is done."""
    if isinstance(expr, (Pi, Delta, Sigma, Rev)):
        expr = (expr,)
    out: list[int] = []
    for tok in expr:
        if isinstance(tok, Pi):
            _check_run(tok.l, tok.s, strands)
            base = BraidWord(strands, pi_letters(tok.l, tok.s))
        elif isinstance(tok, Delta):
            _check_run(tok.l, tok.s, strands)
            base = BraidWord(strands, delta_letters(tok.l, tok.s))
        elif isinstance(tok, Sigma):
            if not 1 <= tok.i <= strands - 1:
                raise ParameterError(f"σ_{tok.i} out of range for B{strands}")
            base = BraidWord(strands, (tok.i,))
        elif isinstance(tok, Rev):
            base = rev(expand(tok.body, strands))
        else:
            raise ParameterError(f"unknown token {tok!r}")
        out.extend(power(base, tok.exponent).letters)
    return BraidWord(strands, tuple(out))


# -- text format ---------------------------------------------------------------


def format_word(w: BraidWord) -> str:
    if not w.letters:
        return f"B{w.strands}:"
    return f"B{w.strands}: " + " ".join(str(x) for x in w.letters)


def parse_word(text: str) -> BraidWord:
    """Parse ``Bn: i j -k ...``.  Errors carry the index of the first bad token."""
    tokens = text.split()
    if not tokens:
        raise WordFormatError("empty input, missing 'Bn:' header", 0)
    head = tokens[0]
    if not (head.startswith("B") and head.endswith(":") and head[1:-1].isdigit()):
        raise WordFormatError(f"missing or malformed header {head!r}, expected 'Bn:'", 0)
    n = int(head[1:-1])
    if n < 2:
        raise WordFormatError(f"strand count must be >= 2, got {n}", 0)
    letters = []
    for pos, tok in enumerate(tokens[1:], start=1):
        try:
            x = int(tok)
        except ValueError:
            raise WordFormatError(f"token {pos} ({tok!r}) is not an integer", pos) from None
        if x == 0 or abs(x) >= n:
            raise WordFormatError(f"token {pos} ({tok!r}) out of range for B{n}", pos)
        letters.append(x)
    return BraidWord(n, tuple(letters))
