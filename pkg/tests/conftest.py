import random
import sys

import pytest
from hypothesis import settings, strategies as st

from braidforge.words import BraidWord

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")


@st.composite
def braid_words(draw, min_strands=2, max_strands=5, max_len=20, positive=False):
    n = draw(st.integers(min_strands, max_strands))
    gens = st.integers(1, n - 1)
    if not positive:
        gens = st.builds(lambda i, s: i * s, gens, st.sampled_from([1, -1]))
    letters = draw(st.lists(gens, max_size=max_len))
    return BraidWord(n, tuple(letters))


@st.composite
def word_pairs(draw, min_strands=2, max_strands=5, max_len=20):
    """Two words on the same strand count."""
    n = draw(st.integers(min_strands, max_strands))
    a = draw(braid_words(n, n, max_len))
    b = draw(braid_words(n, n, max_len))
    return a, b


def random_word(rng: random.Random, n: int, length: int) -> BraidWord:
    return BraidWord(n, tuple(rng.choice((1, -1)) * rng.randint(1, n - 1) for _ in range(length)))


@pytest.fixture
def rng():
    return random.Random(20240917)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[num])
