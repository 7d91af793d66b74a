import os

import pytest
from hypothesis import settings

import gradedmorita.fixtures as fx
from gradedmorita.overc import algebra_over_c_from_centralizer

settings.register_profile("suite", derandomize=True, max_examples=60)
settings.load_profile("suite")

FIXTURES_DIR = os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), "fixtures")


@pytest.fixture(scope="session")
def fixtures_dir() -> str:
    return FIXTURES_DIR


@pytest.fixture(scope="session")
def a1():
    return fx.e1_algebra()


@pytest.fixture(scope="session")
def a2():
    return fx.e2_algebra()


@pytest.fixture(scope="session")
def a3():
    return fx.e3_algebra()


@pytest.fixture(scope="session")
def dual_numbers():
    return fx.dual_numbers_algebra()


@pytest.fixture(scope="session")
def x1(a1):
    return algebra_over_c_from_centralizer(a1)


@pytest.fixture(scope="session")
def x2(a2):
    return algebra_over_c_from_centralizer(a2)


@pytest.fixture(scope="session")
def x3(a3):
    return algebra_over_c_from_centralizer(a3)
