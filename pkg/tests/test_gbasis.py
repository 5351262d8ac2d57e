import random

import pytest
from hypothesis import given, strategies as st

from hermes.errors import ParameterError
from hermes.galois import make_field
from hermes.gbasis import WeightedOrder, algorithm_g, counter_bound, index, smallest
from hermes.interp import build_instance, to_engine
from hermes.oracles import minimal_leading_term, same_module

GF4 = make_field(2)


def random_instance(rng, F, M=None):
    """Generators with ``index(g_i) = i`` and random low-degree entries."""
    M = M or rng.randint(1, 4)
    order = WeightedOrder(rng.randint(1, 3), tuple(rng.randint(0, 6) for _ in range(M)))
    gens = []
    for i in range(M):
        g = []
        for j in range(M):
            if j > i:
                g.append([])
                continue
            a = [rng.randrange(F.order) for _ in range(rng.randint(0, 5))]
            if j == i:
                a.append(rng.randrange(1, F.order))
            while a and not a[-1]:
                a.pop()
            g.append(a)
        gens.append(g)
    return gens, order


def test_single_update_example():
    order = WeightedOrder(1, (1, 2))
    g1 = [[0, 0, 1], []]
    g2 = [[0, 0, 0, 1], [1]]
    basis, counter = algorithm_g(GF4, [g1, g2], order, trace=True)
    assert basis == [[[0, 0, 1], []], [[], [1]]]
    assert counter.updates == 1
    assert counter.trace == [(1, 0, 1, False)]


def test_reduced_input_unchanged():
    order = WeightedOrder(2, (0, 1, 5))
    gens = [[[1, 1], [], []], [[1], [0, 1], []], [[], [1], [3]]]
    basis, counter = algorithm_g(GF4, gens, order)
    assert basis == gens
    assert counter.mult_count == 0
    assert counter_bound(gens, order) >= 0


def test_input_not_mutated():
    rng = random.Random(5)
    gens, order = random_instance(rng, GF4, 4)
    snapshot = [[list(a) for a in g] for g in gens]
    algorithm_g(GF4, gens, order)
    assert gens == snapshot


def test_precondition_errors():
    order = WeightedOrder(1, (0, 0))
    with pytest.raises(ParameterError):
        algorithm_g(GF4, [[[1], []]], order)
    with pytest.raises(ParameterError):
        algorithm_g(GF4, [[[1], []], [[], []]], order)
    with pytest.raises(ParameterError):
        algorithm_g(GF4, [[[1], [1]], [[], [1]]], order)
    with pytest.raises(ParameterError):
        algorithm_g(GF4, [[[1], []], [[1], [1], []]], order)


def test_order_validation():
    with pytest.raises(ParameterError):
        WeightedOrder(0, (1,))
    with pytest.raises(ParameterError):
        WeightedOrder(1, (-1,))


def test_worked_example_trace(c4, example_v):
    gens, order = to_engine(build_instance(c4, example_v, 2, 2))
    basis, counter = algorithm_g(c4.F, gens, order, trace=True, debug=True)
    # engine positions: (0,0)->0, (0,1)->1, (1,0)->2; the first update swaps
    # with d=-2, the next two reduce against (0,0) then (0,1) with d=1
    steps = [t for t in counter.trace if t[0] == 2]
    assert steps == [(2, 1, -2, True), (2, 0, 1, False), (2, 1, 1, False)]
    assert smallest(basis, order) == 4
    assert counter.mult_count <= counter_bound(gens, order)


def test_worked_example_rows_after_first_pass(c4, example_v):
    F = c4.F
    gens, order = to_engine(build_instance(c4, example_v, 2, 2))
    head = [g[:3] for g in gens[:3]]
    rows, _ = algorithm_g(F, head, WeightedOrder(order.ux, order.weights[:3]))
    tops = [[(len(a) - 1, F.token(a[-1])) if a else None for a in g] for g in rows]
    # (degree, leading coefficient) of the 1, y and z coordinates
    assert tops == [
        [(8, "1"), None, None],
        [(7, "a^1"), (6, "a^2"), (4, "1")],
        [(8, "a^2"), None, (6, "1")],
    ]


@given(st.randoms(use_true_random=False), st.sampled_from([2, 3]))
def test_random_instances(rnd, q):
    F = make_field(q)
    gens, order = random_instance(rnd, F)
    basis, counter = algorithm_g(F, gens, order, debug=True)
    assert [order.lt(g)[1] for g in basis] == list(range(order.rank))
    assert counter.mult_count <= counter_bound(gens, order)
    assert same_module(F, gens, basis, order)
    assert order.lt(basis[smallest(basis, order)]) == minimal_leading_term(F, gens, order)


def test_same_module_detects_difference():
    order = WeightedOrder(1, (0, 0))
    a = [[[1], []], [[], [1]]]
    b = [[[0, 1], []], [[], [1]]]
    assert not same_module(GF4, a, b, order)
    assert same_module(GF4, a, a, order)
