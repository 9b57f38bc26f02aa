"""Left-greedy Garside normal form for B_n.

Every braid is written uniquely as ``Δ^inf · A_1 ⋯ A_k`` where each A_j is a
permutation braid other than 1 and Δ, and every adjacent pair is
left-weighted: the starting set of A_{j+1} lies inside the finishing set of
A_j.  Two words are equal in B_n iff their normal forms coincide.

Permutation braids are stored as one-line image tuples using the same
convention as :func:`braidforge.words.underlying_permutation`: entry ``j-1``
is the final position of the strand starting at ``j``.  For a permutation
braid P:

* σ_i is a left divisor of P iff the strands starting at i, i+1 cross,
  i.e. ``P(i) > P(i+1)``;
* σ_i is a right divisor iff the strands ending at i, i+1 cross,
  i.e. ``P⁻¹(i) > P⁻¹(i+1)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import ParameterError, WordFormatError
from .words import BraidWord, inverse_permutation

Perm = tuple[int, ...]


def identity_perm(n: int) -> Perm:
    return tuple(range(1, n + 1))


def delta_perm(n: int) -> Perm:
    return tuple(range(n, 0, -1))


def _swap_positions(p: Perm, i: int) -> Perm:
    """p ∘ s_i : swap entries i and i+1 (1-based)."""
    q = list(p)
    q[i - 1], q[i] = q[i], q[i - 1]
    return tuple(q)


def _swap_values(p: Perm, i: int) -> Perm:
    """s_i ∘ p : exchange the values i and i+1."""
    return tuple(i + 1 if x == i else i if x == i + 1 else x for x in p)


def generator_perm(n: int, i: int) -> Perm:
    return _swap_positions(identity_perm(n), i)


def tau(p: Perm) -> Perm:
    """Conjugation by Δ, which sends σ_i to σ_{n-i}."""
    n = len(p)
    return tuple(n + 1 - p[n - j] for j in range(1, n + 1))


def starting_set(p: Perm) -> frozenset[int]:
    return frozenset(i for i in range(1, len(p)) if p[i - 1] > p[i])


def finishing_set(p: Perm) -> frozenset[int]:
    return starting_set(inverse_permutation(p))


def perm_length(p: Perm) -> int:
    n = len(p)
    return sum(1 for a in range(n) for b in range(a + 1, n) if p[a] > p[b])


def perm_to_letters(p: Perm) -> tuple[int, ...]:
    """A positive word for the permutation braid of ``p``."""
    out = []
    while True:
        for i in range(1, len(p)):
            if p[i - 1] > p[i]:
                out.append(i)
                p = _swap_positions(p, i)
                break
        else:
            return tuple(out)


@lru_cache(maxsize=1 << 18)
def left_weight(a: Perm, b: Perm) -> tuple[Perm, Perm]:
    """Rewrite the pair (a, b) into a left-weighted pair with the same product.

    Moves generators from the front of ``b`` to the back of ``a`` while the
    result stays simple.  ``lru_cache`` is thread safe and memoisation here is
    semantically invisible.
    """
    n = len(a)
    a_l = list(a)
    b_l = list(b)
    a_inv = [0] * n
    for j, x in enumerate(a_l, start=1):
        a_inv[x - 1] = j
    i = 1
    while i < n:
        # σ_i starts b but does not finish a: transfer it.
        if b_l[i - 1] > b_l[i] and a_inv[i - 1] < a_inv[i]:
            p, q = a_inv[i - 1], a_inv[i]
            a_l[p - 1], a_l[q - 1] = i + 1, i
            a_inv[i - 1], a_inv[i] = q, p
            b_l[i - 1], b_l[i] = b_l[i], b_l[i - 1]
            i = i - 1 if i > 1 else 1
        else:
            i += 1
    return tuple(a_l), tuple(b_l)


def _greedy_simples(n: int, letters) -> list[Perm]:
    """Cut a positive word (generator indices) into maximal simple chunks."""
    out: list[Perm] = []
    cur: list[int] = []
    cur_inv: list[int] = []
    for i in letters:
        if not cur or cur_inv[i - 1] > cur_inv[i]:
            if cur:
                out.append(tuple(cur))
            cur = list(range(1, n + 1))
            cur_inv = list(cur)
        # cur <- cur · σ_i
        p, q = cur_inv[i - 1], cur_inv[i]
        cur[p - 1], cur[q - 1] = i + 1, i
        cur_inv[i - 1], cur_inv[i] = q, p
    if cur:
        out.append(tuple(cur))
    return out


@dataclass(frozen=True)
class PermutationBraid:
    strands: int
    perm: Perm

    def word(self) -> BraidWord:
        return BraidWord(self.strands, perm_to_letters(self.perm))

    def __str__(self) -> str:
        return " ".join(str(x) for x in self.perm)


@dataclass(frozen=True)
class NormalForm:
    strands: int
    inf: int
    factors: tuple[PermutationBraid, ...] = ()

    @property
    def canonical_length(self) -> int:
        return len(self.factors)

    def word(self) -> BraidWord:
        """Spell the normal form back out as a braid word."""
        n = self.strands
        d = perm_to_letters(delta_perm(n))
        if self.inf >= 0:
            letters = list(d * self.inf)
        else:
            letters = [-x for x in reversed(d)] * (-self.inf)
        for f in self.factors:
            letters.extend(perm_to_letters(f.perm))
        return BraidWord(n, tuple(letters))

    def serialize(self) -> str:
        body = "; ".join(str(f) for f in self.factors)
        return f"inf={self.inf}; factors=[{body}]"

    __str__ = serialize

    @classmethod
    def parse(cls, text: str, strands: int | None = None) -> "NormalForm":
        """Inverse of :meth:`serialize`.

        ``strands`` is required when the factor list is empty.
        """
        try:
            head, rest = text.split("; factors=[", 1)
            if not head.startswith("inf=") or not rest.endswith("]"):
                raise ValueError
            inf = int(head[4:])
            body = rest[:-1]
            perms = [tuple(int(x) for x in chunk.split()) for chunk in body.split("; ")] if body else []
        except ValueError:
            raise WordFormatError(f"malformed normal form {text!r}") from None
        if strands is None:
            if not perms:
                raise WordFormatError("strand count needed to parse an empty factor list")
            strands = len(perms[0])
        return cls(strands, inf, tuple(PermutationBraid(strands, p) for p in perms))


def _push_simple(factors: list[Perm], x: Perm) -> None:
    """Right-multiply a left-weighted factor list by the simple element x."""
    factors.append(x)
    for j in range(len(factors) - 2, -1, -1):
        a, b = factors[j], factors[j + 1]
        a2, b2 = left_weight(a, b)
        if a2 == a:
            break
        factors[j], factors[j + 1] = a2, b2


def _simple_factors(w: BraidWord) -> tuple[int, list[Perm]]:
    """Write ``w`` as Δ^{-k} · X_1 ⋯ X_m with every X_j simple.

    A negative run equals (a_1 ⋯ a_r)^{-1} for simple a_j; each a^{-1} is
    Δ^{-1}·(Δa^{-1}), and every Δ^{-1} is moved to the front, applying τ to
    each factor it passes.
    """
    n = w.strands
    d = delta_perm(n)
    pieces: list[tuple[Perm, bool]] = []  # (simple, preceded by Δ^{-1})
    letters = w.letters
    start = 0
    while start < len(letters):
        stop = start
        positive = letters[start] > 0
        while stop < len(letters) and (letters[stop] > 0) == positive:
            stop += 1
        run = letters[start:stop]
        if positive:
            pieces.extend((c, False) for c in _greedy_simples(n, run))
        else:
            chunks = _greedy_simples(n, [-x for x in reversed(run)])
            for c in reversed(chunks):
                c_inv = inverse_permutation(c)
                pieces.append((tuple(c_inv[x - 1] for x in d), True))
        start = stop

    k = sum(1 for _, flagged in pieces if flagged)
    out: list[Perm] = []
    right = k
    for c, flagged in pieces:
        if flagged:
            right -= 1
        out.append(tau(c) if right % 2 else c)
    return k, out


def normal_form(w: BraidWord) -> NormalForm:
    n = w.strands
    d = delta_perm(n)
    k, simples = _simple_factors(w)
    factors: list[Perm] = []
    for x in simples:
        _push_simple(factors, x)

    ident = identity_perm(n)
    while factors and factors[-1] == ident:
        factors.pop()
    lead = 0
    while lead < len(factors) and factors[lead] == d:
        lead += 1
    return NormalForm(
        n,
        lead - k,
        tuple(PermutationBraid(n, p) for p in factors[lead:]),
    )


def equal(a: BraidWord, b: BraidWord) -> bool:
    if a.strands != b.strands:
        raise ParameterError(f"strand mismatch: B{a.strands} vs B{b.strands}")
    return normal_form(a) == normal_form(b)


def is_central_power(w: BraidWord) -> bool:
    """True iff ``w`` commutes with every generator of B_n."""
    n = w.strands
    for i in range(1, n):
        g = (i,)
        if normal_form(BraidWord(n, w.letters + g)) != normal_form(BraidWord(n, g + w.letters)):
            return False
    return True


def is_left_weighted(nf: NormalForm) -> bool:
    perms = [f.perm for f in nf.factors]
    n = nf.strands
    if any(p in (identity_perm(n), delta_perm(n)) for p in perms):
        return False
    return all(starting_set(b) <= finishing_set(a) for a, b in zip(perms, perms[1:]))
