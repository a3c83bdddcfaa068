#!/usr/bin/env python3

# Copyright (C) 2026 tgmod Developers
# This program is free software under the terms of the GNU GPLv3 or later.

import numpy as np
import pytest

from tgmod import misc, series, symbols

def registry():
    return [
        symbols.identity(),
        symbols.cesaro(),
        symbols.log_kernel(0.5j),
        symbols.log_kernel(1j),
        symbols.hp_test(0.5, 2),
        symbols.hp_test(0.9, 1),
        symbols.power(3),
        symbols.polynomial([1, 2, 0, -1j]),
        symbols.lacunary(),
        symbols.dilate(symbols.cesaro(), 0.9),
        symbols.constant(2.0),
        ]

points = 0.5 * np.exp(2j * np.pi * np.arange(7) / 7)

@pytest.mark.parametrize('g', registry(), ids=lambda g: g.name)
def test_taylor_consistency(g):
    c = g.taylor(1024)

    assert np.allclose(series.evaluate(c, points), g.eval(points), rtol=0,
        atol=1e-10)

@pytest.mark.parametrize('g', registry(), ids=lambda g: g.name)
def test_derivative_consistency(g):
    h = 1e-5

    for z in 0.7 * np.exp(2j * np.pi * np.arange(5) / 5):
        difference = (g.eval(z + h) - g.eval(z - h)) / (2 * h)

        assert abs(difference - g.deriv(z)) <= 1e-6 * max(abs(g.deriv(z)), 1)

def test_cesaro():
    g = symbols.cesaro()

    assert np.allclose(g.taylor(3), [0, 1, 1 / 2, 1 / 3])
    assert np.allclose(g.singular, [0])
    assert not g.polynomial

def test_log_kernel():
    assert symbols.log_kernel(0).eval(0.3 + 0.4j) == 0
    assert np.allclose(symbols.log_kernel(1j).singular, [np.pi / 2])
    assert np.allclose(symbols.log_kernel(0.5j).peaks, [np.pi / 2])

    with pytest.raises(misc.InvalidParameter):
        symbols.log_kernel(2)

def test_hp_test():
    assert np.isclose(symbols.hp_test(0, 1).eval(0.3 - 0.2j), 1)

    a = 0.4 + 0.3j

    k = np.arange(6)

    assert np.allclose(symbols.hp_test(a, 2).taylor(5),
        np.sqrt(1 - abs(a) ** 2) * np.conj(a) ** k)

    with pytest.raises(misc.InvalidParameter):
        symbols.hp_test(1, 2)

    with pytest.raises(misc.InvalidParameter):
        symbols.hp_test(0.5, 0)

def test_polynomial():
    g = symbols.polynomial([[1, 0], [0, 2]])

    assert g.degree == 1
    assert np.isclose(g.eval(0.5), 1 + 1j)
    assert symbols.constant(3).constant
    assert not symbols.identity().constant

def test_arithmetic():
    g = symbols.cesaro()
    h = symbols.identity()

    z = np.array([0.1, -0.5j, 0.3 + 0.6j])

    assert np.allclose((g + h).eval(z), g.eval(z) + h.eval(z))
    assert np.allclose((g - h).deriv(z), g.deriv(z) - h.deriv(z))
    assert np.allclose((3j * g).eval(z), 3j * g.eval(z))
    assert np.allclose((-g).taylor(4), -g.taylor(4))

def test_rotate_dilate():
    g = symbols.cesaro()

    rotated = g.rotate(1.0)

    assert np.allclose(rotated.singular, [1.0])
    assert np.isclose(rotated.eval(0.5 * np.exp(1j)), g.eval(0.5))

    dilated = g.dilate(0.5)

    assert np.isclose(dilated.eval(0.8), g.eval(0.4))
    assert np.allclose(dilated.taylor(4), g.taylor(4) * 0.5 ** np.arange(5))
    assert g.dilate(1) is g

    with pytest.raises(misc.InvalidParameter):
        g.dilate(0)

def test_lacunary():
    g = symbols.lacunary(terms=4)

    assert not g.exact
    assert g.degree == 16
    assert np.allclose(np.nonzero(g.taylor(16))[0], [2, 4, 8, 16])

def test_registry_errors():
    with pytest.raises(misc.UnsupportedSymbol):
        symbols.symbol('gamma')

    with pytest.raises(misc.UnsupportedSymbol):
        symbols.symbol('power', exponent=2)

    with pytest.raises(misc.InvalidParameter):
        symbols.symbol('power', k=1.5)

    with pytest.raises(misc.InvalidParameter):
        symbols.symbol('hp_test', a='foo', p=2)

    with pytest.raises(misc.InvalidParameter):
        symbols.symbol('hp_test', a=0.5, p='abc')

    with pytest.raises(misc.InvalidParameter):
        symbols.symbol('lacunary', decay='x')

    with pytest.raises(misc.InvalidParameter):
        symbols.symbol('polynomial', coeffs='abc')

    with pytest.raises(misc.InvalidParameter):
        symbols.number([1, 'i'])

def test_record():
    g = symbols.record('{"name": "log_kernel", "params": {"u": [0, 0.5]}}')

    assert np.isclose(g.params['u'], 0.5j)

    h = symbols.record(dict(name='dilate',
        params=dict(inner=dict(name='cesaro'), r=0.5)))

    assert np.isclose(h.eval(0.5), -np.log(0.75))

    assert symbols.record('identity').name == 'identity'

    with pytest.raises(misc.UnsupportedSymbol):
        symbols.record('{"name": ')

    with pytest.raises(misc.UnsupportedSymbol):
        symbols.record(dict(params=dict()))
