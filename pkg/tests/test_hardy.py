#!/usr/bin/env python3

# Copyright (C) 2026 tgmod Developers
# This program is free software under the terms of the GNU GPLv3 or later.

import numpy as np
import pytest
import scipy.special

from tgmod import disc, hardy, misc, series, symbols

def dilog(x):
    return scipy.special.spence(1 - x)

def test_lambda_weight():
    assert np.isclose(hardy.lambda_weight(0), np.log(2))
    assert np.isclose(hardy.lambda_weight(1 - 2 * np.exp(-2)), 2)

    with pytest.raises(misc.InvalidParameter):
        hardy.lambda_weight(1)

def test_lambda_profile():
    s, value = hardy.lambda_profile_max()

    assert abs(s - 0.792) < 0.01
    assert np.isclose(value, hardy.lambda_profile(s))
    assert np.all(np.diff(hardy.lambda_profile(np.linspace(0.9, 1 - 1e-6,
        100))) < 0)

def test_boundary_norm():
    circle = disc.circle(lambda z: z)

    assert np.isclose(hardy.boundary_hp_norm(circle, 2), 1)
    assert np.isclose(hardy.boundary_hp_norm(circle, 0.5), 1)

    circle = disc.circle(lambda z: disc.psi(0.5, 0.5, z))

    assert np.isclose(hardy.boundary_hp_norm(circle), np.sqrt(0.190476),
        rtol=1e-5)

    with pytest.raises(misc.InvalidParameter):
        hardy.boundary_hp_norm(circle, 0)

def test_parseval():
    rng = np.random.default_rng(2)

    assert hardy.h2_series_norm([0, 1]) == 1
    assert hardy.h2_series_norm([3, 4]) == 5

    for N in 0, 7, 64, 256:
        p = rng.standard_normal(N + 1) + 1j * rng.standard_normal(N + 1)

        circle = disc.circle(lambda z: series.evaluate(p, z))

        assert abs(hardy.h2_series_norm(p)
            - hardy.boundary_hp_norm(circle)) < 1e-12

def test_mobius_identity():
    g = symbols.identity()

    assert np.isclose(hardy.mobius_centered_norm(g, 0.6).value, 0.8,
        rtol=0, atol=1e-10)

    for a in 0, 0.3j, -0.9 + 0.1j, 0.999:
        assert np.isclose(hardy.mobius_centered_norm(g, a).value,
            np.sqrt(1 - abs(a) ** 2), rtol=0, atol=1e-10)

def test_mobius_cesaro():
    g = symbols.cesaro()

    for a in 0.0, 0.5, 0.9, 0.99:
        exact = np.sqrt(np.pi ** 2 / 6 - 2 * dilog(-a) + dilog(a ** 2))

        assert abs(hardy.mobius_centered_norm(g, a).value - exact) < 1e-8

def test_mobius_rotation():
    g = symbols.cesaro()

    a = 0.7

    for phi in 0.5, 2.0:
        assert np.isclose(hardy.mobius_centered_norm(g.rotate(phi),
            a * np.exp(1j * phi)).value, hardy.mobius_centered_norm(g,
            a).value, rtol=1e-10)

def test_method():
    assert hardy.method(symbols.identity(), 0) == 'uniform'
    assert hardy.method(symbols.identity(), 0.5) == 'graded'
    assert hardy.method(symbols.cesaro(), 0) == 'graded'
    assert hardy.method(symbols.power(300), 0.5) == 'poisson'

def test_poisson_rule():
    result = hardy.mobius_centered_norm(symbols.power(300), 0.5)

    assert result.method == 'poisson'
    assert np.isclose(result.value, 1, rtol=0, atol=1e-10)

def test_garsia():
    g = symbols.polynomial([1, 2, 0, -1j])

    for a in 0, 0.5, 0.3 - 0.8j:
        assert np.isclose(hardy.garsia_norm(g, a),
            hardy.mobius_centered_norm(g, a).value, rtol=1e-10)

    with pytest.raises(misc.UnsupportedSymbol):
        hardy.garsia_norm(symbols.cesaro(), 0.5)

def test_resolution_guard():
    g = symbols.lacunary(terms=8)

    assert hardy.resolved(g, 0.9)
    assert not hardy.resolved(g, 0.99)
    assert hardy.resolved(symbols.cesaro(), 1 - 1e-12)

def test_grid():
    grid = hardy.SeminormGrid.default(symbols.identity(), levels=2, angles=4)

    points = grid.points()

    assert len(points) == 9
    assert points[0] == 0
    assert np.allclose(np.absolute(points[1:5]), 0.5)

    grid = hardy.SeminormGrid.default(symbols.log_kernel(1j), 1, 4)

    assert np.allclose(grid.angles, [0, np.pi / 2, np.pi, 1.5 * np.pi])

    with pytest.raises(misc.InvalidParameter):
        hardy.SeminormGrid([0.5, 0.2], [0])

    with pytest.raises(misc.InvalidParameter):
        hardy.SeminormGrid([0.5], [0, 0])

    with pytest.raises(misc.InvalidParameter):
        hardy.SeminormGrid([0.5], [0], samples_per_circle=100)

def test_bmoa_seminorm():
    grid = hardy.SeminormGrid.default(levels=4, angles=8)

    assert hardy.bmoa_seminorm(symbols.constant(2), grid).value == 0

    result = hardy.bmoa_seminorm(symbols.identity(), grid)

    assert np.isclose(result.value, 1)
    assert result.argmax == 0
    assert result.to_dict()['argmax'] == dict(r=0.0, theta=0.0)

    g = symbols.log_kernel(0.5j)

    assert np.isclose(hardy.bmoa_seminorm(3 * g, grid).value,
        3 * hardy.bmoa_seminorm(g, grid).value, rtol=1e-12)

def test_bmoa_cesaro():
    grid = hardy.SeminormGrid([0, 0.9, 0.999], [0])

    result = hardy.bmoa_seminorm(symbols.cesaro(), grid)

    assert result.value >= 2.1
    assert np.isclose(result.argmax, 0.999)

def test_lmoa_identity():
    s, value = hardy.lambda_profile_max()

    grid = hardy.SeminormGrid(np.linspace(0, 0.99, 199), [0])

    result = hardy.lmoa_seminorm(symbols.identity(), grid)

    assert value - 1e-3 <= result.value <= value + 1e-9
    assert hardy.lmoa_seminorm(symbols.constant(1), grid).value == 0

@pytest.mark.slow
def test_lmoa_cesaro():
    result = hardy.lmoa_seminorm(symbols.cesaro())

    assert result.flag == 'diverging'

def test_subordination():
    rng = np.random.default_rng(3)

    g = symbols.cesaro()

    assert hardy.subordination_gap(g, 1, 0.5j) == 0

    for _ in range(20):
        r = 1 - rng.random()
        a = 0.9 * rng.random() * np.exp(2j * np.pi * rng.random())

        assert hardy.subordination_gap(g, r, a) >= -1e-9
        assert hardy.subordination_gap(symbols.identity(), r, a, 1) >= -1e-9

def test_hp_norm():
    f = symbols.hp_test(0.8, 1)

    assert np.isclose(hardy.hp_norm(f, 1), 1, rtol=0, atol=1e-6)
    assert np.isclose(hardy.hp_norm(symbols.identity(), 3, radius=0.5), 0.5)
