import random

import pytest
from hypothesis import settings

from hermes.code import make_code
from hermes.galois import make_field

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")

# received word of the worked example and the codeword it came from
EXAMPLE_V = "a^2,0,0,a^2,0,0,0,0"
EXAMPLE_MSG = "a^2,a^2,0,a^2"
EXAMPLE_Q = "x^2*z^2 + x*z^2 + a^2*x^4*z + a^2*x*z"


@pytest.fixture(scope="session")
def gf4():
    return make_field(2)


@pytest.fixture(scope="session")
def c4():
    return make_code(2, 4)


@pytest.fixture(scope="session")
def example_v(c4):
    return c4.F.parse_vector(EXAMPLE_V)


def random_word(code, rng: random.Random):
    return [rng.randrange(code.F.order) for _ in range(code.n)]


def random_message(code, rng: random.Random):
    return [rng.randrange(code.F.order) for _ in range(code.k)]


def random_ring_elem(ring, rng: random.Random, max_xdeg=4, density=0.6):
    F = ring.F
    coords = [[rng.randrange(F.order) if rng.random() < density else 0 for _ in range(rng.randint(0, max_xdeg + 1))]
              for _ in range(F.q)]
    return ring(coords)


def pytest_terminal_summary(terminalreporter):
    mod = __import__("sys").modules.get("test_acceptance")
    if mod and mod.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in mod.RESULTS:
            terminalreporter.write_line(line)
