import random

import pytest

from cdtwist.algebra.engine import make_cd_tower
from cdtwist.cli.dependencies import reset_config
from cdtwist.nonassoc.quaternion import nonassoc_params
from cdtwist.scalars.quadratic import QuadExt


@pytest.fixture
def rng():
    return random.Random(1234)


@pytest.fixture
def quaternions():
    """Symbolic generalized quaternions E_2"""
    return make_cd_tower(2, "symbolic")


@pytest.fixture
def octonions():
    return make_cd_tower(3, "symbolic")


@pytest.fixture
def real_octonions():
    """Octonions over Q with every parameter -1"""
    return make_cd_tower(3, [-1, -1, -1])


@pytest.fixture
def h_params():
    """E = Q(sqrt(2)), g = sqrt(2), alpha = 2"""
    return nonassoc_params(2, QuadExt(0, 1, 2))


@pytest.fixture(autouse=True)
def fresh_config(monkeypatch):
    monkeypatch.delenv("CDTWIST_TABLE_CAP", raising=False)
    monkeypatch.delenv("CDTWIST_CONFIG", raising=False)
    reset_config()
    yield
    reset_config()
