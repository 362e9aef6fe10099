from pathlib import Path

import pytest
from hypothesis import strategies as st

from takahashi_groups.words import Word

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture
def fixtures_dir():
    return FIXTURES


def syllable_lists(ngens=3, max_exp=3, max_size=12):
    return st.lists(
        st.tuples(st.integers(0, ngens - 1), st.integers(-max_exp, max_exp)),
        max_size=max_size,
    )


def words(ngens=3, max_exp=3, max_size=12):
    return syllable_lists(ngens, max_exp, max_size).map(Word)
