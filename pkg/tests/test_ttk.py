import json

import pytest
from hypothesis import given, settings, strategies as st

from braidforge.errors import HypothesisViolation, ParameterError, RewriteError, UnsupportedParameters
from braidforge.garside import equal
from braidforge.invariants import alexander, positive_braid_genus
from braidforge.ttk import (
    FiberednessCertificate,
    Status,
    TTKParams,
    fiberedness_certificate,
    is_homogeneous,
    lemma_instances,
    lemma_rewrite_A,
    lemma_rewrite_B,
    lemma_rewrite_C,
    positive_word_general,
    positive_word_n1,
    positivize,
    replay_positive_word,
    reversed_form,
    rule_sides,
    run_lemma_suite,
    ttk_braid,
)
from braidforge.words import BraidWord, exponent_sum, format_word, parse_word, underlying_permutation


def W(n, *letters):
    return BraidWord(n, letters)


def test_ttk_braid_examples():
    assert format_word(ttk_braid(TTKParams(3, 5, 2, -1))) == "B5: 4 3 2 1 4 3 2 1 4 3 2 1 -1 -1"
    assert format_word(ttk_braid(TTKParams(4, 3, 2, -2))) == "B3: 2 1 2 1 2 1 2 1 -1 -1 -1 -1"
    assert ttk_braid(TTKParams(7, 4, 1, -3)).letters == (3, 2, 1) * 7


@pytest.mark.parametrize("p,q,r,n", [(4, 3, 3, -1), (2, 5, 2, -1), (5, 3, 4, 1)])
def test_ttk_braid_rejects(p, q, r, n):
    with pytest.raises(UnsupportedParameters):
        ttk_braid(TTKParams(p, q, r, n))


def test_params_validation():
    with pytest.raises(ParameterError):
        TTKParams(5, 1, 0, -1)
    assert TTKParams(7, 3, 2, -2).in_theorem_scope
    assert not TTKParams(6, 3, 2, -2).in_theorem_scope
    assert not TTKParams(7, 3, 2, 2).in_theorem_scope


@pytest.mark.parametrize("rewrite,args,word,expected", [
    (lemma_rewrite_A, (1, 2), (-1, 2, 1, 2), (2, 1)),
    (lemma_rewrite_A, (2, 3), (-2, 3, 2, 3), (3, 2)),
    (lemma_rewrite_A, (1, 3), (-1, 2, 3, 1, 2, 3), (2, 3, 1, 2)),
    (lemma_rewrite_B, (1, 2), (-1, 2, 1), (2, 1, -2)),
    (lemma_rewrite_B, (2, 3), (-2, 3, 2), (3, 2, -3)),
    (lemma_rewrite_B, (1, 3), (-1, 2, 3, 1, 2), (2, 3, 1, 2, -3)),
    (lemma_rewrite_C, (2, 1, 2), (2, 1, 2), (1, 2, 1)),
    (lemma_rewrite_C, (3, 1, 3), (3, 1, 2, 3), (1, 2, 3, 2)),
])
def test_rule_examples(rewrite, args, word, expected):
    n = max(abs(x) for x in word) + 1
    w = BraidWord(n, word)
    out = rewrite(w, *args, position=0)
    assert out.letters == expected
    assert equal(out, w)


def test_rule_c_inverse_example():
    w = W(3, -2, 1, 2)
    out = lemma_rewrite_C(w, 2, 1, 2, position=0, inverse=True)
    assert out.letters == (1, 2, -1)
    assert equal(out, w)


def test_rule_at_offset_and_mismatch():
    w = W(4, 3, -1, 2, 1, 2)
    assert lemma_rewrite_A(w, 1, 2, position=1).letters == (3, 2, 1)
    with pytest.raises(RewriteError):
        lemma_rewrite_A(w, 1, 2, position=0)
    with pytest.raises(ParameterError):
        rule_sides("A", l=2, s=2)
    with pytest.raises(ParameterError):
        rule_sides("C", t=1, l=1, s=2)


def test_lemma_suite_exhaustive():
    report = run_lemma_suite(7)
    # A and B: 21 pairs each; C: 56 triples in two sign variants
    assert report.checked == 21 * 2 + 56 * 2
    assert report.ok, report.failures


@pytest.mark.parametrize("label,n,lhs,rhs", list(lemma_instances(5)))
def test_lemma_instances_individually(label, n, lhs, rhs):
    assert equal(BraidWord(n, lhs), BraidWord(n, rhs)), label


def test_positive_word_examples():
    w = positive_word_n1(5, 3, 2)
    assert format_word(w) == "B3: 2 1 1 2 1 2 1 2"
    assert exponent_sum(w) == 8
    assert equal(w, reversed_form(5, 3, 2, 1))
    w = positive_word_n1(3, 5, 2)
    assert format_word(w) == "B5: 2 3 4 1 2 3 1 2 3 4"
    assert equal(w, reversed_form(3, 5, 2, 1))
    assert positive_word_n1(4, 3, 1).letters == (1, 2) * 4
    g = positive_word_general(7, 3, 2, 2)
    assert format_word(g) == "B3: 2 1 1 2 2 1 1 2 1 2"
    assert len(g) == 10 and equal(g, reversed_form(7, 3, 2, 2))


def test_positive_word_boundary():
    for q in range(2, 6):
        for n in (1, 2, 3):
            p = n * q + 1
            w = positive_word_general(p, q, q - 1, n)
            assert w.letters[-(q - 1):] == tuple(range(1, q))
            assert equal(w, reversed_form(p, q, q - 1, n))


def test_positive_word_errors():
    with pytest.raises(HypothesisViolation):
        positive_word_general(6, 3, 2, 2)
    with pytest.raises(UnsupportedParameters):
        positive_word_n1(2, 3, 2)


@settings(max_examples=50)
@given(st.integers(2, 6), st.data())
def test_general_matches_n1(q, data):
    r = data.draw(st.integers(1, q - 1))
    p = data.draw(st.integers(q + 1, 20))
    assert equal(positive_word_general(p, q, r, 1), positive_word_n1(p, q, r))


def test_replay_verified_steps():
    w, steps = replay_positive_word(7, 3, 2, 2, verify=True)
    assert w.is_positive()
    assert equal(w, positive_word_general(7, 3, 2, 2))
    assert {s.rule for s in steps} <= {"A", "B", "C", "C'", "cancel", "commute"}
    assert all(str(s).startswith("rule=") for s in steps)


def test_positivize_gets_stuck_on_nonfibered_example():
    with pytest.raises(RewriteError):
        positivize(reversed_form(4, 3, 2, 2))


@settings(max_examples=30)
@given(st.integers(2, 5), st.data())
def test_positivization_preserves_permutation(q, data):
    r = data.draw(st.integers(1, q - 1))
    n = data.draw(st.integers(1, 3))
    p = data.draw(st.integers(n * q + 1, n * q + 8))
    raw = reversed_form(p, q, r, n)
    w, _ = positivize(raw)
    assert w.is_positive()
    assert underlying_permutation(w) == underlying_permutation(raw)
    assert exponent_sum(w) == p * (q - 1) - n * r * (r - 1)


def test_homogeneity():
    assert is_homogeneous(W(4, 1, 2, 3, 1))
    assert not is_homogeneous(W(3, 2, 2, 1, 1, 2, -1))
    assert is_homogeneous(W(3, -1, 2, -1))


def test_certificate_examples():
    c = fiberedness_certificate(TTKParams(5, 3, 2, -1))
    assert c.status is Status.POSITIVE_WORD_PROOF and c.valid and c.fibered
    assert c.witness.is_positive()
    assert c.transcript[0].startswith("rule=rev")

    c = fiberedness_certificate(TTKParams(4, 3, 2, -2))
    assert c.status is Status.NECESSARY_CONDITION_FAILS
    assert c.alexander == "2*t^2 - 3*t + 2"
    assert c.fibered is False

    c = fiberedness_certificate(TTKParams(5, 3, 2, 1))
    assert c.status is Status.HOMOGENEOUS_PROOF
    assert c.witness == ttk_braid(TTKParams(5, 3, 2, 1))


def test_certificate_outside_hypothesis():
    # nq >= p, but the n = 1 closed form still gives a verified positive word
    c = fiberedness_certificate(TTKParams(3, 5, 2, -1))
    assert c.status is Status.POSITIVE_WORD_PROOF and c.valid
    with pytest.raises(UnsupportedParameters):
        fiberedness_certificate(TTKParams(3, 3, 3, -1))


@pytest.mark.parametrize("params", [(5, 3, 2, -1), (11, 4, 3, -2), (4, 3, 2, -2), (5, 3, 2, 1), (8, 3, 2, -3)])
def test_certificate_json_round_trip(params):
    c = fiberedness_certificate(TTKParams(*params))
    d = json.loads(c.to_json())
    assert set(d) >= {"params", "status", "witness", "transcript", "checks"}
    back = FiberednessCertificate.from_json(c.to_json())
    assert back == c
    assert back.to_json() == c.to_json()


def test_witnesses_are_fibered_consistent():
    for params in [(5, 3, 2, -1), (7, 3, 2, -2), (11, 4, 3, -2), (13, 5, 2, -2)]:
        c = fiberedness_certificate(TTKParams(*params))
        assert c.status is Status.POSITIVE_WORD_PROOF
        assert is_homogeneous(c.witness)
        res = alexander(c.witness)
        assert res.monic
        assert res.degree_span == 2 * positive_braid_genus(c.witness)
        assert parse_word(format_word(c.witness)) == c.witness
