import pytest

from degmatch import Alphabet, parse_bracket, parse_solid


@pytest.fixture(scope="session")
def abcd():
    return Alphabet("abcd")


@pytest.fixture(scope="session")
def golden_pattern(abcd):
    return parse_bracket("a[bc]da[bd]", abcd)


@pytest.fixture(scope="session")
def golden_text(abcd):
    return parse_solid("dacdabdadcabdac", abcd)
