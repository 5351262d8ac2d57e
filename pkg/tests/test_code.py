import itertools
import random

import pytest
from hypothesis import given, strategies as st

from conftest import EXAMPLE_MSG, random_message, random_word
from hermes.code import basis_exponents, enumerate_points, make_code
from hermes.errors import ParameterError
from hermes.galois import make_field


def test_points_q2(c4):
    F = c4.F
    text = [(F.token(a), F.token(b)) for a, b in c4.points]
    assert text == [("0", "0"), ("0", "1"), ("1", "a^1"), ("1", "a^2"),
                    ("a^1", "a^1"), ("a^1", "a^2"), ("a^2", "a^1"), ("a^2", "a^2")]


@pytest.mark.parametrize("q", [2, 3, 4])
def test_point_count(q):
    assert len(enumerate_points(make_field(q))) == q**3


def test_params(c4):
    assert (c4.n, c4.k, c4.g) == (8, 4, 1)
    assert c4.basis_text() == ["1", "x", "y", "x^2"]


def test_dimension_beyond_2g():
    # Riemann-Roch: k = u + 1 - g once u >= 2g - 1
    for u in range(5, 27):
        assert len(basis_exponents(3, u)) == u + 1 - 3


@pytest.mark.parametrize("u", [0, 8, 9, -1])
def test_u_out_of_range(u):
    with pytest.raises(ParameterError):
        make_code(2, u)


def test_example_encoding(c4):
    F = c4.F
    cw, mu = c4.encode(F.parse_vector(EXAMPLE_MSG))
    assert F.format_vector(cw) == "a^2,a^2,a^2,a^2,0,0,0,0"
    assert str(mu) == "a^2*x^2 + a^2*x + a^2"


def test_wrong_message_length(c4):
    with pytest.raises(ParameterError):
        c4.encode([0, 0, 0])


def published_h_table(R):
    F = R.F
    a, a2 = F.from_log(1), F.from_log(2)
    x, y = R.x, R.y

    def p(*cs):
        # coefficients for x^3, x^2, x^1 (constant term last)
        out = R.zero
        for e, c in zip(range(len(cs) - 1, -1, -1), cs):
            out = out + R.const(c) * x**e
        return out

    return [
        p(1, 0, 0, 1) * y + p(1, 0, 0, 1),
        p(1, 0, 0, 1) * y,
        p(1, 1, 1, 0) * y + p(a2, a2, a2, 0),
        p(1, 1, 1, 0) * y + p(a, a, a, 0),
        p(1, a, a2, 0) * y + p(a2, 1, a, 0),
        p(1, a, a2, 0) * y + p(a, a2, 1, 0),
        p(1, a2, a, 0) * y + p(a2, a, 1, 0),
        p(1, a2, a, 0) * y + p(a, 1, a2, 0),
    ]


def test_h_table_q2(c4):
    assert [c4.h_i(i) for i in range(1, 9)] == published_h_table(c4.ring)


@pytest.mark.parametrize("q,u", [(2, 4), (3, 5)])
def test_kronecker_property(q, u):
    code = make_code(q, u)
    for i in range(1, code.n + 1):
        h = code.h_i(i)
        assert [h.evaluate(P) for P in code.points] == [int(i == j) for j in range(1, code.n + 1)]


def test_h_index_range(c4):
    with pytest.raises(ParameterError):
        c4.h_i(0)
    with pytest.raises(ParameterError):
        c4.h_i(9)


@pytest.mark.parametrize("q,u", [(2, 4), (3, 7)])
def test_h_v_round_trip_and_eta(q, u):
    code = make_code(q, u)
    rng = random.Random(q)
    for _ in range(10):
        v = random_word(code, rng)
        assert code.ev(code.h_v(v)) == v
    assert code.ev(code.eta()) == [0] * code.n


@given(st.randoms(use_true_random=False))
def test_encode_linear(rnd):
    code = make_code(3, 6)
    F = code.F
    a, b = random_message(code, rnd), random_message(code, rnd)
    s = [F.add(x, y) for x, y in zip(a, b)]
    ca, cb, cs = code.encode(a)[0], code.encode(b)[0], code.encode(s)[0]
    assert cs == [F.add(x, y) for x, y in zip(ca, cb)]


@given(st.randoms(use_true_random=False))
def test_coordinates_inverts_message_function(rnd):
    code = make_code(3, 10)
    msg = random_message(code, rnd)
    assert code.coordinates(code.message_function(msg)) == msg


def test_coordinates_rejects_outside(c4):
    with pytest.raises(ParameterError):
        c4.coordinates(c4.ring.x ** 3)


def test_minimum_distance_q2(c4):
    weights = [sum(1 for s in c4.encode(list(m))[0] if s) for m in itertools.product(range(4), repeat=4) if any(m)]
    assert min(weights) >= 4
    assert len(weights) == 255
