import pytest
from hypothesis import settings

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@pytest.fixture(scope="session")
def sympy_t():
    sympy = pytest.importorskip("sympy")
    return sympy.symbols("t")
