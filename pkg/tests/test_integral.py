import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tnormint import (
    LUKASIEWICZ,
    MINIMUM,
    PRODUCT,
    Capacity,
    InputError,
    characteristic,
    enumerate_capacities,
    integral_functional,
    random_capacity,
    tnormed_integral,
    tnormed_integral_grid,
    value_grid,
)
from tnormint.integral import sugeno_integral

OPS = [MINIMUM, PRODUCT, LUKASIEWICZ]


def brute_integral(nu, f, op, steps=1000):
    """max over t = k/steps of op(nu({f >= t}), t), written from scratch."""
    best = 0.0
    for k in range(steps + 1):
        t = k / steps
        level = [i for i, v in enumerate(f) if v >= t]
        best = max(best, op.func(nu(level), t))
    return best


def test_constant_function(op):
    nu = random_capacity(3, value_grid(10), 5)
    assert tnormed_integral(nu, (0.4, 0.4, 0.4), op) == pytest.approx(0.4, abs=1e-12)


def test_characteristic_gives_capacity(op):
    nu = random_capacity(3, value_grid(10), 11)
    for mask in range(8):
        assert tnormed_integral(nu, characteristic(mask, 3), op) == nu.values[mask]


@pytest.mark.parametrize("op,expected", [(PRODUCT, 0.4), (MINIMUM, 0.5), (LUKASIEWICZ, 0.4)],
                         ids=["product", "minimum", "lukasiewicz"])
def test_two_point_example(uniform2, op, expected):
    f = (0.8, 0.4)
    assert brute_integral(uniform2, f, op) == pytest.approx(expected, abs=1e-3)
    assert tnormed_integral(uniform2, f, op) == pytest.approx(expected, abs=1e-12)


def test_grid_oracle(uniform2):
    assert tnormed_integral_grid(uniform2, (0.4, 0.4), PRODUCT, 0.1) == pytest.approx(0.4)
    assert tnormed_integral_grid(uniform2, (0.8, 0.4), PRODUCT, 1e-3) == pytest.approx(0.4, abs=1e-3)
    with pytest.raises(InputError):
        tnormed_integral_grid(uniform2, (0.8, 0.4), PRODUCT, 0.5)


def test_dimension_mismatch(uniform2):
    with pytest.raises(InputError):
        tnormed_integral(uniform2, (0.1, 0.2, 0.3), PRODUCT)


def test_integral_functional(op):
    for nu in list(enumerate_capacities(2, value_grid(4))):
        I = integral_functional(nu, op)
        assert I((1.0, 1.0)) == 1.0
        for mask in range(4):
            assert I(characteristic(mask, 2)) == nu.values[mask]
    with pytest.raises(InputError):
        integral_functional(Capacity(1, (0.2, 1.0)), op)


def test_minimum_is_sugeno():
    rng = random.Random(3)
    for seed in range(200):
        nu = random_capacity(3, value_grid(10), seed)
        f = tuple(rng.random() for _ in range(3))
        assert tnormed_integral(nu, f, MINIMUM) == sugeno_integral(nu, f)


capacities = st.builds(random_capacity, st.integers(1, 4), st.just(value_grid(10)), st.integers(0, 10**6))
ops = st.sampled_from(OPS)


@st.composite
def cap_and_fn(draw):
    nu = draw(capacities)
    f = tuple(draw(st.lists(st.floats(0, 1), min_size=nu.n, max_size=nu.n)))
    return nu, f


@given(cap_and_fn(), ops)
def test_exact_vs_grid_oracle(pair, op):
    nu, f = pair
    exact = tnormed_integral(nu, f, op)
    grid = tnormed_integral_grid(nu, f, op, 1e-2)
    assert grid <= exact + 1e-9
    assert exact <= grid + 1e-2 + 1e-9


@given(cap_and_fn(), st.lists(st.floats(0, 1), min_size=4, max_size=4), ops)
def test_monotone(pair, r, op):
    nu, g = pair
    f = tuple(min(a, b) for a, b in zip(g, r))
    assert tnormed_integral(nu, f, op) <= tnormed_integral(nu, g, op) + 1e-12


@given(cap_and_fn(), st.floats(0, 1), ops)
def test_star_homogeneous(pair, c, op):
    nu, f = pair
    cf = tuple(op(c, v) for v in f)
    assert tnormed_integral(nu, cf, op) == pytest.approx(op(c, tnormed_integral(nu, f, op)), abs=1e-9)


@settings(max_examples=200)
@given(capacities, st.integers(0, 10**6), ops)
def test_comonotone_maxitive(nu, seed, op):
    from tnormint import random_comonotone_pair

    f, g = random_comonotone_pair(nu.n, value_grid(20), seed)
    fg = tuple(max(a, b) for a, b in zip(f, g))
    lhs = tnormed_integral(nu, fg, op)
    assert lhs == pytest.approx(max(tnormed_integral(nu, f, op), tnormed_integral(nu, g, op)), abs=1e-9)
