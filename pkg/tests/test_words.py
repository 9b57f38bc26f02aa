import pytest
from hypothesis import given, strategies as st

from braidforge.errors import ParameterError, WordFormatError
from braidforge.words import (
    BraidWord,
    Delta,
    Letter,
    Pi,
    Rev,
    Sigma,
    concat,
    compose,
    cycles,
    delta_word,
    expand,
    exponent_sum,
    format_word,
    free_reduce,
    inverse_permutation,
    invert,
    parse_word,
    pi_word,
    power,
    rev,
    underlying_permutation,
)

from conftest import braid_words, word_pairs


def W(n, *letters):
    return BraidWord(n, letters)


@pytest.mark.parametrize("l,s,n,expected", [
    (1, 3, 4, (1, 2, 3)),
    (2, 2, 3, (2,)),
    (1, 1, 2, (1,)),
])
def test_pi_word(l, s, n, expected):
    assert pi_word(l, s, n).letters == expected


@pytest.mark.parametrize("l,s,n,expected", [
    (1, 2, 3, (1, 2, 1)),
    (1, 1, 2, (1,)),
    (3, 4, 5, (3, 4, 3)),
])
def test_delta_word(l, s, n, expected):
    assert delta_word(l, s, n).letters == expected


@pytest.mark.parametrize("args", [(0, 2, 3), (2, 1, 3), (1, 3, 3), (1, 1, 1)])
def test_run_words_reject_bad_range(args):
    with pytest.raises(ParameterError):
        pi_word(*args)
    with pytest.raises(ParameterError):
        delta_word(*args)


@given(st.integers(1, 9), st.integers(0, 9))
def test_run_lengths(l, extra):
    s = l + extra
    assert len(pi_word(l, s, s + 1)) == s - l + 1
    assert len(delta_word(l, s, s + 1)) == (s - l + 1) * (s - l + 2) // 2


def test_rev_examples():
    assert rev(W(4, 1, 2, 3)).letters == (3, 2, 1)
    assert rev(W(3)).letters == ()
    assert rev(W(3, 1, -1, 2)).letters == (2, -1, 1)


def test_group_ops_examples():
    assert invert(W(3, 1, 2)).letters == (-2, -1)
    assert power(W(2, 1), 0).letters == ()
    assert concat(W(3, 1), W(3, 2)).letters == (1, 2)
    assert (W(3, 1, 2) ** -2).letters == (-2, -1, -2, -1)
    with pytest.raises(ParameterError):
        concat(W(3, 1), W(4, 1))


@pytest.mark.parametrize("word,reduced", [
    ((1, -1), ()),
    ((1, 2, -2, 1), (1, 1)),
    ((-2, 1, -1, 2), ()),
])
def test_free_reduce_examples(word, reduced):
    assert free_reduce(W(3, *word)).letters == reduced


def test_exponent_sum_examples():
    # the K(4,3,2,-2) word: 8 positive letters, 4 negative
    assert exponent_sum(W(3, 2, 1, 2, 1, 2, 1, 2, 1, -1, -1, -1, -1)) == 4
    assert exponent_sum(W(3)) == 0


def test_permutation_examples():
    assert underlying_permutation(W(2, 1)) == (2, 1)
    assert underlying_permutation(W(2, 1, 1)) == (1, 2)
    w = W(5, *((4, 3, 2, 1) * 3), -1, -1)
    assert len(cycles(underlying_permutation(w))) == 1


def test_expand_examples():
    e = [Rev(Pi(1, 4), 3), Rev(Pi(1, 1), -2)]
    assert format_word(expand(e, 5)) == "B5: 4 3 2 1 4 3 2 1 4 3 2 1 -1 -1"
    assert expand(Delta(1, 2), 3).letters == (1, 2, 1)
    assert expand(Pi(1, 2, 0), 3).letters == ()
    assert expand([Sigma(2, -1), Sigma(1)], 3).letters == (-2, 1)
    with pytest.raises(ParameterError):
        expand(Pi(1, 3), 3)


def test_letter_type():
    assert Letter.from_int(-3) == Letter(3, -1)
    assert int(Letter(2, 1)) == 2
    assert W(3, 1, -2).as_letters() == (Letter(1, 1), Letter(2, -1))


def test_word_validation():
    for bad in [(0,), (3,), (-3,)]:
        with pytest.raises(ParameterError):
            BraidWord(3, bad)
    with pytest.raises(ParameterError):
        BraidWord(1, ())


def test_text_format_round_trip():
    text = "B5: 4 3 2 1 4 3 2 1 4 3 2 1 -1 -1"
    assert format_word(parse_word(text)) == text
    assert format_word(parse_word("B3:")) == "B3:"


@pytest.mark.parametrize("text,pos", [
    ("", 0),
    ("3: 1 2", 0),
    ("B1: ", 0),
    ("B3: 1 0 2", 2),
    ("B3: 1 2 3", 3),
    ("B3: 1 -3", 2),
    ("B3: 1 two", 2),
])
def test_parse_errors_report_position(text, pos):
    with pytest.raises(WordFormatError) as info:
        parse_word(text)
    assert info.value.position == pos


@given(braid_words())
def test_text_round_trip_property(w):
    assert parse_word(format_word(w)) == w


@given(braid_words())
def test_rev_properties(w):
    assert rev(rev(w)) == w
    assert exponent_sum(rev(w)) == exponent_sum(w)
    assert underlying_permutation(rev(w)) == inverse_permutation(underlying_permutation(w))


@given(word_pairs())
def test_exponent_sum_additive(pair):
    a, b = pair
    assert exponent_sum(concat(a, b)) == exponent_sum(a) + exponent_sum(b)
    assert exponent_sum(invert(a)) == -exponent_sum(a)


@given(braid_words(max_len=30))
def test_free_reduce_preserves(w):
    r = free_reduce(w)
    assert exponent_sum(r) == exponent_sum(w)
    assert underlying_permutation(r) == underlying_permutation(w)
    assert all(x != -y for x, y in zip(r.letters, r.letters[1:]))
    assert free_reduce(concat(w, invert(w))).letters == ()


def _naive_perm(w):
    # track strand labels sitting at each position
    pos = list(range(1, w.strands + 1))
    for x in w.letters:
        i = abs(x) - 1
        pos[i], pos[i + 1] = pos[i + 1], pos[i]
    out = [0] * w.strands
    for p, strand in enumerate(pos, start=1):
        out[strand - 1] = p
    return tuple(out)


@given(word_pairs())
def test_permutation_homomorphism(pair):
    a, b = pair
    assert underlying_permutation(a) == _naive_perm(a)
    assert underlying_permutation(concat(a, b)) == compose(underlying_permutation(a), underlying_permutation(b))
