#!/usr/bin/env python3

# Copyright (C) 2026 tgmod Developers
# This program is free software under the terms of the GNU GPLv3 or later.

import numpy as np
import pytest

from tgmod import hardy, misc, series, symbols, volterra

def test_apply_identity():
    assert np.allclose(volterra.tg_apply(symbols.identity(), [1], 4),
        [0, 1, 0, 0, 0])

    assert np.allclose(volterra.tg_apply(symbols.identity(), [0, 2], 3),
        [0, 0, 1, 0])

    assert np.allclose(volterra.tg_apply(symbols.identity(), [1], 0), [0])

def test_apply_constant_argument():
    for g in symbols.cesaro(), symbols.polynomial([3, 1, -2j]):
        c = g.taylor(8)
        c[0] = 0

        assert np.allclose(volterra.tg_apply(g, [1], 8), c)

def test_apply_linear():
    rng = np.random.default_rng(4)

    f, h = (rng.standard_normal(10) + 1j * rng.standard_normal(10)
        for _ in range(2))

    g = symbols.cesaro()
    k = symbols.log_kernel(0.5j)

    assert np.allclose(volterra.tg_apply(g, 2 * f - 1j * h, 9),
        2 * volterra.tg_apply(g, f, 9) - 1j * volterra.tg_apply(g, h, 9))

    assert np.allclose(volterra.tg_apply(g + 3 * k, f, 9),
        volterra.tg_apply(g, f, 9) + 3 * volterra.tg_apply(k, f, 9))

    assert np.allclose(volterra.tg_apply(symbols.constant(2), f, 9), 0)

def test_apply_truncated():
    with pytest.raises(misc.Unresolved):
        volterra.tg_apply(symbols.lacunary(terms=4), [1], 32)

    with pytest.raises(misc.InvalidParameter):
        volterra.tg_apply(symbols.identity(), [1], -1)

def test_boundary_identity():
    value, converged = volterra.tg_boundary_value(symbols.identity(),
        symbols.constant(1), 1)

    assert converged
    assert np.isclose(value, 1, rtol=0, atol=1e-12)

def test_boundary_paths():
    g = symbols.polynomial([0, 1, 0.5j])
    f = symbols.polynomial([1, -0.5, 0.25])

    coeffs = volterra.tg_apply(g, f.taylor(2), 4)

    zeta = np.exp(2j * np.pi * np.arange(128) / 128)

    values, converged = volterra.tg_boundary_value(g, f, zeta)

    assert np.all(converged)
    assert np.allclose(values, series.evaluate(coeffs, zeta), rtol=0,
        atol=1e-9)

def test_boundary_refinement():
    g = symbols.cesaro()
    f = symbols.hp_test(0.9, 1)

    coarse, converged = volterra.tg_boundary_value(g, f, -1)
    fine, _ = volterra.tg_boundary_value(g, f, -1, order=24)

    assert converged
    assert abs(coarse - fine) < 1e-8

def test_singular_ray():
    with pytest.raises(misc.SingularRay):
        volterra.tg_boundary_value(symbols.cesaro(), symbols.constant(1), 1)

    with pytest.raises(misc.InvalidParameter):
        volterra.tg_boundary_value(symbols.cesaro(), symbols.constant(1), 0.5)

def test_testfn():
    assert np.isclose(volterra.hp_testfn(0, 2).eval(0.4j), 1)

    f = volterra.hp_testfn(0.8, 1)

    assert np.isclose(hardy.hp_norm(f, 1), 1, rtol=0, atol=1e-6)

    with pytest.raises(misc.InvalidParameter):
        volterra.hp_testfn(0.5, 0.5)

def test_norm_identity():
    g = symbols.identity()
    f = symbols.constant(1)

    assert np.isclose(volterra.tg_norm(g, f, 2).value, 1, rtol=0, atol=1e-12)

    result = volterra.tg_norm(g, f, 2, method='radial')

    assert result.method == 'radial'
    assert np.isclose(result.value, 1, rtol=0, atol=1e-10)

def test_aleman_cima():
    g = symbols.identity()

    for a in 0.0, 0.5, 0.8j:
        ratio = volterra.aleman_cima_ratio(g, a)

        assert np.isfinite(ratio) and ratio > 0

    with pytest.raises(misc.DegenerateSymbol):
        volterra.aleman_cima_ratio(symbols.constant(1), 0.5)

    with pytest.raises(misc.InvalidParameter):
        volterra.aleman_cima_ratio(g, 0.5, p=2, q=1)

@pytest.mark.slow
def test_aleman_cima_cesaro():
    ratio = volterra.aleman_cima_ratio(symbols.cesaro(), 0.9, p=1, q=0.25)

    assert np.isfinite(ratio) and ratio > 0

def test_tail():
    g = symbols.identity()

    assert volterra.offarc_tail_integral(symbols.constant(1), 0.5).value == 0

    with pytest.raises(misc.InvalidParameter):
        volterra.offarc_tail_integral(g, 0)

    on, off = volterra.arc_split(g, 0.9)

    norm = volterra.tg_norm(g, volterra.hp_testfn(0.9, 1), 1, 0.9).value

    assert 0 < off < norm
    assert np.isclose(on + off, norm, rtol=1e-6)

    assert np.isclose(volterra.offarc_tail_integral(g, 0.9).value, off)

def test_tail_bound():
    g = symbols.identity()

    bound = volterra.tail_bound(g, 0.9, seminorm=1.0)

    assert np.isclose(bound, 0.1 ** (2 / 3) + 0.1 ** 0.5)

def test_testfn_ladder():
    result = volterra.testfn_ladder(symbols.identity(), 2, levels=3,
        angles=4)

    assert len(result) == 3
    assert np.all(result.values > 0)

def test_h2_norm_series():
    k = np.arange(1, 400)

    u, v = 0.5, 0.75

    direct = np.sqrt(np.sum((u ** k - v ** k) ** 2 / k ** 2))

    assert np.isclose(volterra.h2_norm_series(u, v), direct, rtol=0,
        atol=1e-12)

    assert np.isclose(volterra.h2_norm_series(u, v, chunk=2, limit=3),
        direct, rtol=0, atol=1e-12)

def test_leibov():
    sequence = volterra.leibov_build()

    assert len(sequence) == 13
    assert np.isclose(sequence.u[0], 0.5)
    assert np.isclose(sequence.u[1], 0.75)

    for f in sequence.f:
        assert f.eval(0) == 0

    rows = sequence.diagnostics(seminorm=False)

    assert [row['n'] for row in rows] == list(range(1, 13))

    norms = [row['h2_norm_series'] for row in rows]

    assert np.all(np.diff(norms) < 0)

    for row in rows[:10]:
        assert abs(row['h2_norm_series'] - row['h2_norm_quad']) < 1e-8

    assert min(row['empirical_c'] for row in rows[1:12]) >= 0.1

def test_leibov_energy():
    sequence = volterra.leibov_build(2.0 ** -np.arange(1, 5))

    rows = volterra.leibov_energy(symbols.identity(), sequence)

    assert len(rows) == 3

    for row in rows:
        assert row['own'] > 0 and row['next'] > 0

@pytest.mark.parametrize('sizes', [[0.5], [0.5, 0.5], [0.25, 0.5],
    [1.0, 0.5], [0.5, 2.0 ** -21]])
def test_leibov_invalid(sizes):
    with pytest.raises(misc.InvalidParameter):
        volterra.LeibovSequence(sizes)
