import io

import pytest

from tenhundred.lexicon import load_reference_word_list, load_word_list


@pytest.fixture(scope="session")
def reference():
    return load_reference_word_list()


TOY_WORDS = """\
talk\tverb
thing\tnoun
good\tadjective
"""


@pytest.fixture(scope="session")
def toy():
    """Three-entry lexicon used for brute-force closure oracles."""
    return load_word_list(io.StringIO(TOY_WORDS))
