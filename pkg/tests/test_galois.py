import itertools

import pytest
from hypothesis import given, strategies as st

from hermes.errors import ParameterError
from hermes.galois import CONWAY, SUPPORTED_Q, GF, make_field, prime_power


def poly_mulmod(a, b, modulus, p):
    """Schoolbook product of coefficient lists over GF(p), reduced by a monic modulus."""
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = (out[i + j] + x * y) % p
    dg = len(modulus) - 1
    for top in range(len(out) - 1, dg - 1, -1):
        c = out[top]
        if c:
            for k, m in enumerate(modulus):
                out[top - dg + k] = (out[top - dg + k] - c * m) % p
    return (out + [0] * dg)[:dg]


def digits(F, a):
    v = F.vec[a]
    return [(v // F.p**i) % F.p for i in range(F.degree)]


def test_gf4_relation():
    F = make_field(2)
    a = F.alpha
    assert F.mul(a, a) == F.add(a, 1)
    assert F.pow(a, 3) == 1
    assert F.mul(a, F.pow(a, 2)) == 1
    assert F.add(a, a) == 0


def test_gf9_period():
    F = make_field(3)
    assert F.pow(F.alpha, 8) == 1
    assert F.pow(F.alpha, 4) != 1


@pytest.mark.parametrize("q", [1, 6, 10, 12, 0])
def test_not_prime_power(q):
    with pytest.raises(ParameterError):
        GF(q)


def test_unsupported_prime_power():
    with pytest.raises(ParameterError):
        GF(11)


def test_prime_power():
    assert prime_power(2) == (2, 1)
    assert prime_power(9) == (3, 2)
    assert prime_power(8) == (2, 3)
    assert prime_power(12) is None


def test_inverse_of_zero():
    with pytest.raises(ZeroDivisionError):
        make_field(2).inv(0)


def test_inverse_of_one():
    for q in (2, 3, 4):
        assert make_field(q).inv(1) == 1


@pytest.mark.parametrize("q", SUPPORTED_Q)
def test_fermat_and_tables_against_polynomial_oracle(q):
    F = make_field(q)
    assert F.modulus == CONWAY[(F.p, F.degree)]
    for a in range(1, F.order):
        assert F.pow(a, F.order - 1) == 1
        assert F.mul(a, F.inv(a)) == 1
    if F.order > 64:
        return
    for a, b in itertools.product(F.elements(), repeat=2):
        da, db = digits(F, a), digits(F, b)
        assert digits(F, F.add(a, b)) == [(x + y) % F.p for x, y in zip(da, db)]
        assert digits(F, F.mul(a, b)) == poly_mulmod(da, db, F.modulus, F.p)


@pytest.mark.parametrize("q", [2, 4, 8])
def test_char2_negation_is_identity(q):
    F = make_field(q)
    assert all(F.neg(a) == a for a in F.elements())


def test_canonical_order():
    F = make_field(2)
    assert [F.token(a) for a in F.elements()] == ["0", "1", "a^1", "a^2"]
    assert sorted(F.elements()) == list(F.elements())


def test_tokens_round_trip():
    F = make_field(3)
    for a in F.elements():
        assert F.parse(F.token(a)) == a
    assert F.parse("a") == F.alpha
    assert F.parse("a^0") == 1
    assert F.parse_vector("0,1,a^3") == [0, 1, 4]
    assert F.format_vector([0, 1, 4]) == "0,1,a^3"


@pytest.mark.parametrize("tok", ["b", "a^x", "a^8", "2", "", "a^-1"])
def test_bad_tokens(tok):
    with pytest.raises(ParameterError):
        make_field(3).parse(tok)


def test_from_int():
    F = make_field(3)
    assert F.from_int(0) == 0
    assert F.from_int(1) == 1
    assert F.add(F.from_int(2), 1) == 0
    assert F.from_int(5) == F.from_int(2)


elems = st.sampled_from(SUPPORTED_Q).flatmap(
    lambda q: st.tuples(st.just(make_field(q)), *[st.integers(0, q * q - 1)] * 3)
)


@given(elems)
def test_field_axioms(t):
    F, a, b, c = t
    assert F.add(a, b) == F.add(b, a)
    assert F.mul(a, b) == F.mul(b, a)
    assert F.add(F.add(a, b), c) == F.add(a, F.add(b, c))
    assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))
    assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
    assert F.sub(F.add(a, b), b) == a
    assert F.add(a, F.neg(a)) == 0
    if b:
        assert F.mul(F.div(a, b), b) == a
