"""Twisted torus knot braids and fiberedness certificates.

K(p, q, r, n) is the closure of

    (σ_{q-1} ⋯ σ_1)^p (σ_{r-1} ⋯ σ_1)^{nr}     in B_q.

For n < 0 the positivity argument works on the reversed word
β = (Π_{r-1})^{nr} (Π_{q-1})^p; reversal preserves homogeneity, so a
positive word for β certifies the knot as fibered.  Positivity is reached in
two independent ways: closed-form words, and a rewriting engine that pushes
negative letters to the right using three verified rules

    A:  σ_l⁻¹ Π_s^{l+1} Π_s^l      ->  Π_s^{l+1} Π_{s-1}^l           (l < s)
    B:  σ_l⁻¹ Π_s^{l+1} Π_{s-1}^l  ->  Π_s^{l+1} Π_{s-1}^l σ_s⁻¹     (l < s)
    C:  σ_t^{±1} Π_s^l             ->  Π_s^l σ_{t-1}^{±1}            (l < t <= s)

together with free cancellation and far commutation.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from enum import Enum

from .errors import (
    HypothesisViolation,
    MultiComponentError,
    ParameterError,
    RewriteError,
    UnsupportedParameters,
)
from .garside import equal, normal_form
from .invariants import alexander, component_count
from .words import (
    BraidWord,
    exponent_sum,
    format_word,
    parse_word,
    pi_letters,
    rev,
    underlying_permutation,
)


@dataclass(frozen=True)
class TTKParams:
    p: int
    q: int
    r: int
    n: int

    def __post_init__(self):
        if self.q < 2:
            raise ParameterError(f"q must be >= 2, got {self.q}")
        if not 0 <= self.r <= self.p + self.q:
            raise ParameterError(f"need 0 <= r <= p+q, got r={self.r}")

    def require_braid_form(self) -> None:
        if self.r >= self.q or self.r >= self.p:
            raise UnsupportedParameters(
                f"braid form needs r < p and r < q; got p={self.p}, q={self.q}, r={self.r}"
            )

    @property
    def in_theorem_scope(self) -> bool:
        return self.n < 0 and self.r < self.q and -self.n * self.q < self.p

    def as_dict(self) -> dict:
        return {"p": self.p, "q": self.q, "r": self.r, "n": self.n}

    def __str__(self):
        return f"K({self.p},{self.q},{self.r},{self.n})"


def ttk_braid(params: TTKParams) -> BraidWord:
    params.require_braid_form()
    p, q, r, n = params.p, params.q, params.r, params.n
    torus = tuple(range(q - 1, 0, -1)) * p
    block = tuple(range(r - 1, 0, -1))
    if n >= 0:
        twist = block * (n * r)
    else:
        twist = tuple(-x for x in reversed(block)) * (-n * r)
    return BraidWord(q, torus + twist)


def reversed_form(p: int, q: int, r: int, n: int) -> BraidWord:
    """(Π_{r-1})^{-nr} (Π_{q-1})^p, the reversed braid of K(p, q, r, -n)."""
    neg = tuple(-x for x in reversed(pi_letters(1, r - 1))) * (n * r)
    return BraidWord(q, neg + pi_letters(1, q - 1) * p)


# -- rewrite rules ---------------------------------------------------------------


def _pi(l: int, s: int) -> tuple[int, ...]:
    return pi_letters(l, s)


def rule_sides(rule: str, *, l: int, s: int, t: int | None = None, inverse: bool = False) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Raw letter tuples (lhs, rhs) of a lemma rule instance."""
    if rule == "A":
        if not 1 <= l < s:
            raise ParameterError(f"rule A needs 1 <= l < s, got l={l}, s={s}")
        return (-l,) + _pi(l + 1, s) + _pi(l, s), _pi(l + 1, s) + _pi(l, s - 1)
    if rule == "B":
        if not 1 <= l < s:
            raise ParameterError(f"rule B needs 1 <= l < s, got l={l}, s={s}")
        return (-l,) + _pi(l + 1, s) + _pi(l, s - 1), _pi(l + 1, s) + _pi(l, s - 1) + (-s,)
    if rule == "C":
        if t is None or not 1 <= l < t <= s:
            raise ParameterError(f"rule C needs 1 <= l < t <= s, got t={t}, l={l}, s={s}")
        sgn = -1 if inverse else 1
        return (sgn * t,) + _pi(l, s), _pi(l, s) + (sgn * (t - 1),)
    raise ParameterError(f"unknown rule {rule!r}")


@dataclass(frozen=True)
class RewriteStep:
    rule: str
    position: int
    params: tuple[tuple[str, int], ...] = ()

    def __str__(self):
        body = " ".join(f"{k}={v}" for k, v in self.params)
        return f"rule={self.rule} {body} pos={self.position}".replace("  ", " ")


def _apply(w: BraidWord, position: int, lhs, rhs) -> BraidWord:
    letters = w.letters
    if not 0 <= position <= len(letters) - len(lhs) or letters[position:position + len(lhs)] != lhs:
        raise RewriteError(
            f"pattern {lhs} does not occur at position {position} of {format_word(w)}"
        )
    return BraidWord(w.strands, letters[:position] + rhs + letters[position + len(lhs):])


def lemma_rewrite_A(w: BraidWord, l: int, s: int, position: int) -> BraidWord:
    return _apply(w, position, *rule_sides("A", l=l, s=s))


def lemma_rewrite_B(w: BraidWord, l: int, s: int, position: int) -> BraidWord:
    return _apply(w, position, *rule_sides("B", l=l, s=s))


def lemma_rewrite_C(w: BraidWord, t: int, l: int, s: int, position: int, inverse: bool = False) -> BraidWord:
    return _apply(w, position, *rule_sides("C", t=t, l=l, s=s, inverse=inverse))


def lemma_instances(s_max: int):
    """Every rule instance with s <= s_max, as (label, strands, lhs, rhs)."""
    if s_max < 2:
        raise ParameterError(f"s_max must be >= 2, got {s_max}")
    for s in range(2, s_max + 1):
        for l in range(1, s):
            for rule in "AB":
                lhs, rhs = rule_sides(rule, l=l, s=s)
                yield f"{rule} l={l} s={s}", s + 1, lhs, rhs
            for t in range(l + 1, s + 1):
                for inv in (False, True):
                    lhs, rhs = rule_sides("C", t=t, l=l, s=s, inverse=inv)
                    yield f"C{'-inv' if inv else ''} t={t} l={l} s={s}", s + 1, lhs, rhs


@dataclass
class LemmaReport:
    checked: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.checked > 0 and not self.failures

    def summary(self) -> str:
        lines = [f"FAIL {f}" for f in self.failures]
        lines.append(f"{self.checked} rule instances checked, {len(self.failures)} failed")
        return "\n".join(lines)


def run_lemma_suite(s_max: int = 7) -> LemmaReport:
    report = LemmaReport()
    for label, n, lhs, rhs in lemma_instances(s_max):
        report.checked += 1
        if not equal(BraidWord(n, lhs), BraidWord(n, rhs)):
            report.failures.append(label)
    return report


# -- closed-form positive words ------------------------------------------------


def positive_block(q: int, r: int) -> tuple[int, ...]:
    """Π^r_{q-1} Π^{r-1}_{q-2} ⋯ Π^2_{q-r+1} Π_{q-r}."""
    out: list[int] = []
    for j in range(r):
        out.extend(_pi(r - j, q - 1 - j))
    return tuple(out)


def positive_word_n1(p: int, q: int, r: int) -> BraidWord:
    if not (1 <= r < q and r < p):
        raise UnsupportedParameters(f"need 1 <= r < q and r < p; got p={p}, q={q}, r={r}")
    return BraidWord(q, positive_block(q, r) + _pi(1, q - 1) * (p - r))


def positive_word_general(p: int, q: int, r: int, n: int) -> BraidWord:
    """Positive word for (Π_{r-1})^{-nr}(Π_{q-1})^p when n >= 1 and nq < p."""
    if n < 1 or not 1 <= r < q:
        raise UnsupportedParameters(f"need n >= 1 and 1 <= r < q; got q={q}, r={r}, n={n}")
    if n * q >= p:
        raise HypothesisViolation(f"need nq < p; got n={n}, q={q}, p={p}")
    unit = positive_block(q, r) + _pi(1, q - 1) * (q - r)
    return BraidWord(q, unit * n + _pi(1, q - 1) * (p - n * q))


def is_homogeneous(w: BraidWord) -> bool:
    signs: dict[int, int] = {}
    for x in w.letters:
        i, sgn = abs(x), 1 if x > 0 else -1
        if signs.setdefault(i, sgn) != sgn:
            return False
    return True


# -- rewriting engine --------------------------------------------------------------


def _run_end(letters, start: int, first: int) -> int:
    """Largest s such that letters[start:] begins with first, first+1, ..., s (first-1 if none)."""
    s = first - 1
    k = start
    while k < len(letters) and letters[k] == s + 1:
        s += 1
        k += 1
    return s


class _Engine:
    def __init__(self, w: BraidWord, verify: bool):
        self.n = w.strands
        self.letters = list(w.letters)
        self.steps: list[RewriteStep] = []
        self.verify = verify
        self._target = normal_form(w) if verify else None

    def _record(self, step: RewriteStep) -> None:
        self.steps.append(step)
        if self.verify and normal_form(BraidWord(self.n, tuple(self.letters))) != self._target:
            raise RewriteError(f"step {step} broke equality")

    def _rule(self, rule: str, pos: int, **kw) -> None:
        inverse = kw.pop("inverse", False)
        lhs, rhs = rule_sides(rule, inverse=inverse, **kw)
        if tuple(self.letters[pos:pos + len(lhs)]) != lhs:
            raise RewriteError(f"rule {rule} {kw} does not match at {pos}")
        self.letters[pos:pos + len(lhs)] = rhs
        params = tuple(sorted(kw.items())) + ((("inverse", 1),) if inverse else ())
        self._record(RewriteStep(rule + ("'" if inverse else ""), pos, params))

    def _pull(self, target: int, value: int) -> bool:
        """Commute a letter ``value`` leftwards to index ``target`` through far generators."""
        for idx in range(target, len(self.letters)):
            y = self.letters[idx]
            if y == value:
                if idx > target:
                    del self.letters[idx]
                    self.letters.insert(target, value)
                    self._record(RewriteStep("commute", target, (("from", idx), ("i", value))))
                return True
            if abs(abs(y) - value) < 2:
                return False
        return False

    def run(self) -> None:
        letters = self.letters
        while True:
            negs = [k for k, x in enumerate(letters) if x < 0]
            if not negs:
                return
            i = negs[-1]
            a = -letters[i]
            j = i + 1
            if j == len(letters):
                raise RewriteError(f"negative letter σ_{a}^-1 stranded at the end of the word")
            b = letters[j]
            if b == a:
                del letters[i:i + 2]
                self._record(RewriteStep("cancel", i, (("i", a),)))
            elif abs(b - a) >= 2:
                letters[i], letters[j] = b, -a
                self._record(RewriteStep("commute", i, (("i", a), ("j", b))))
            elif b == a - 1:
                if not (j + 1 < len(letters) and letters[j + 1] == a) and not self._pull(j + 1, a):
                    raise RewriteError(f"no rule moves σ_{a}^-1 past σ_{b} at {i}")
                s = _run_end(letters, j, a - 1)
                self._rule("C", i, t=a, l=a - 1, s=s, inverse=True)
            else:  # b == a + 1
                s = _run_end(letters, j, a + 1)
                k = j + (s - a)
                s2 = _run_end(letters, k, a)
                while s2 < s and self._pull(k + (s2 + 1 - a), s2 + 1):
                    s2 = _run_end(letters, k, a)
                if s2 >= s:
                    self._rule("A", i, l=a, s=s)
                elif s2 == s - 1:
                    self._rule("B", i, l=a, s=s)
                else:
                    raise RewriteError(f"no rule applies to σ_{a}^-1 Π_{s}^{a + 1} at {i}")


def positivize(w: BraidWord, verify: bool = False) -> tuple[BraidWord, list[RewriteStep]]:
    """Push every negative letter rightwards until it cancels.

    Raises :class:`RewriteError` when some negative letter cannot be moved by
    the rule set.  With ``verify`` every intermediate word is checked against
    the input by normal form.
    """
    eng = _Engine(w, verify)
    eng.run()
    return BraidWord(w.strands, tuple(eng.letters)), eng.steps


def replay_positive_word(p: int, q: int, r: int, n: int, verify: bool = False) -> tuple[BraidWord, list[RewriteStep]]:
    """Rule-driven positivisation of (Π_{r-1})^{-nr}(Π_{q-1})^p."""
    if n < 1 or not 1 <= r < q:
        raise UnsupportedParameters(f"need n >= 1 and 1 <= r < q; got q={q}, r={r}, n={n}")
    return positivize(reversed_form(p, q, r, n), verify=verify)


# -- certificates -------------------------------------------------------------------


class Status(str, Enum):
    POSITIVE_WORD_PROOF = "PositiveWordProof"
    HOMOGENEOUS_PROOF = "HomogeneousProof"
    NOT_DETERMINED = "NotDeterminedByWord"
    NECESSARY_CONDITION_FAILS = "NecessaryConditionFails"


@dataclass
class FiberednessCertificate:
    params: TTKParams
    status: Status
    witness: BraidWord | None = None
    transcript: list[str] = field(default_factory=list)
    checks: dict[str, bool] = field(default_factory=dict)
    alexander: str | None = None

    @property
    def valid(self) -> bool:
        return all(self.checks.values())

    @property
    def fibered(self) -> bool | None:
        if self.status in (Status.POSITIVE_WORD_PROOF, Status.HOMOGENEOUS_PROOF):
            return True
        if self.status is Status.NECESSARY_CONDITION_FAILS:
            return False
        return None

    def to_dict(self) -> dict:
        return {
            "params": self.params.as_dict(),
            "status": self.status.value,
            "witness": format_word(self.witness) if self.witness is not None else None,
            "transcript": list(self.transcript),
            "checks": dict(self.checks),
            "alexander": self.alexander,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    @classmethod
    def from_dict(cls, d: dict) -> "FiberednessCertificate":
        return cls(
            params=TTKParams(**d["params"]),
            status=Status(d["status"]),
            witness=parse_word(d["witness"]) if d.get("witness") else None,
            transcript=list(d.get("transcript", [])),
            checks={k: bool(v) for k, v in d.get("checks", {}).items()},
            alexander=d.get("alexander"),
        )

    @classmethod
    def from_json(cls, text: str) -> "FiberednessCertificate":
        return cls.from_dict(json.loads(text))


def _positive_proof(params: TTKParams, raw: BraidWord, replay: bool, verify_steps: bool) -> FiberednessCertificate | None:
    p, q, r, n = params.p, params.q, params.r, params.n
    m = -n
    beta = rev(raw)
    transcript = [f"rule=rev pos=0 beta=rev(raw) word={format_word(beta)}"]
    replayed = None
    if replay or not params.in_theorem_scope:
        try:
            replayed, steps = replay_positive_word(p, q, r, m, verify=verify_steps)
        except RewriteError as exc:
            transcript.append(f"replay failed: {exc}")
        else:
            transcript.extend(str(st) for st in steps)

    if params.in_theorem_scope:
        witness = positive_word_general(p, q, r, m)
        transcript.append(f"rule=closed_form n={m} r={r} pos=0")
    elif m == 1:
        # the n = 1 closed form only needs r < p and r < q
        witness = positive_word_n1(p, q, r)
        transcript.append(f"rule=closed_form_n1 r={r} pos=0 (outside -n*q < p)")
    elif replayed is not None:
        witness = replayed
        transcript.append("rule=replay_witness pos=0 (outside -n*q < p)")
    else:
        return None

    checks = {
        "witness_positive": witness.is_positive(),
        "witness_homogeneous": is_homogeneous(witness),
        "equal_reversed_raw": equal(witness, beta),
        "equal_raw_rev_witness": equal(rev(witness), raw),
        "exponent_sum": exponent_sum(witness) == exponent_sum(raw) == p * (q - 1) - m * r * (r - 1),
        "permutation": underlying_permutation(witness) == underlying_permutation(beta),
    }
    if replayed is not None:
        checks["replay_agrees"] = replayed.is_positive() and normal_form(replayed) == normal_form(witness)
    return FiberednessCertificate(params, Status.POSITIVE_WORD_PROOF, witness, transcript, checks)


def fiberedness_certificate(params: TTKParams, replay: bool = True, verify_steps: bool = False) -> FiberednessCertificate:
    """Classify K(p,q,r,n) by what a braid word can prove.

    * n < 0 with -n*q < p: positive word from the closed form (plus a
      rule-by-rule replay in the transcript);
    * n < 0 outside that range: a positive word is still attempted (closed
      form for n = -1, otherwise the rewriting engine) and only claimed when
      it checks out;
    * homogeneous raw word (n >= 0, or an empty twist block);
    * otherwise a non-monic Alexander polynomial rules fibering out, and
      anything else is reported as undetermined.
    """
    raw = ttk_braid(params)
    if params.n < 0 and params.r >= 1:
        cert = _positive_proof(params, raw, replay, verify_steps)
        if cert is not None:
            return cert

    if is_homogeneous(raw):
        reason = "n >= 0" if params.n >= 0 else "twist block empty"
        return FiberednessCertificate(
            params,
            Status.HOMOGENEOUS_PROOF,
            raw,
            [f"rule=homogeneous pos=0 ({reason})"],
            {"witness_homogeneous": True},
        )

    try:
        alex = alexander(raw)
    except MultiComponentError:
        return FiberednessCertificate(
            params,
            Status.NOT_DETERMINED,
            None,
            [f"closure has {component_count(raw)} components; no positive word found"],
            {},
        )
    text = alex.poly.format()
    if not alex.monic:
        return FiberednessCertificate(
            params,
            Status.NECESSARY_CONDITION_FAILS,
            None,
            [f"rule=alexander pos=0 poly={text} (not monic)"],
            {"alexander_non_monic": True},
            text,
        )
    return FiberednessCertificate(
        params,
        Status.NOT_DETERMINED,
        None,
        [f"rule=alexander pos=0 poly={text} (monic, inconclusive)"],
        {},
        text,
    )
