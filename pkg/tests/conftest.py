from pathlib import Path

import pytest

from trialogic import parse_theory

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture(scope="session")
def fixtures_dir() -> Path:
    return FIXTURES


def load(name: str):
    return parse_theory((FIXTURES / name).read_text(encoding="utf-8"))


@pytest.fixture(scope="session")
def s1():
    return load("s1.ddt")


@pytest.fixture(scope="session")
def s2():
    return load("s2.ddt")


@pytest.fixture(scope="session")
def s3():
    return load("s3.ddt")


@pytest.fixture(scope="session")
def s4():
    return load("s4.ddt")


@pytest.fixture(scope="session")
def ambiguity():
    return load("ambiguity.ddt")


@pytest.fixture(scope="session")
def annotated():
    return load("annotated.ddt")


@pytest.fixture(scope="session")
def cycle():
    return load("cycle.ddt")


@pytest.fixture(scope="session")
def empty_deontic():
    return load("empty_deontic.ddt")
