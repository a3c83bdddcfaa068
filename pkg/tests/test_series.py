#!/usr/bin/env python3

# Copyright (C) 2026 tgmod Developers
# This program is free software under the terms of the GNU GPLv3 or later.

import numpy as np
import pytest

from tgmod import misc, series

def test_evaluate():
    assert series.evaluate(series.poly([0, 1]), 0.5) == 0.5
    assert series.evaluate(series.poly([3]), 0.3 - 0.2j) == 3
    assert series.evaluate(series.poly([1, 1, 1]), 1) == 3

def test_calculus():
    c = series.poly([1, 2, 3])

    assert np.allclose(series.derivative(c), [2, 6])
    assert np.allclose(series.calculus(series.poly([1]), 'antiderivative'),
        [0, 1])

    p = series.poly([0, 1j, -2, 0.5])

    assert np.allclose(series.derivative(series.antiderivative(p)), p)

    with pytest.raises(misc.InvalidParameter):
        series.calculus(p, 'sideways')

def test_cauchy():
    assert np.allclose(series.cauchy(series.poly([1, 1]), series.poly([1, 1]),
        2), [1, 2, 1])

    p = series.poly([1, 2, 3, 4])

    assert np.allclose(series.cauchy(p, series.poly([1]), 2), [1, 2, 3])
    assert np.allclose(series.cauchy(series.poly([0, 1]),
        series.poly([0, 1]), 1), [0, 0])

def test_cauchy_properties():
    rng = np.random.default_rng(1)

    p, q, r = (rng.standard_normal(9) + 1j * rng.standard_normal(9)
        for _ in range(3))

    assert np.allclose(series.cauchy(p, q, 8), series.cauchy(q, p, 8))
    assert np.allclose(series.cauchy(p, 2 * q + 3j * r, 8),
        2 * series.cauchy(p, q, 8) + 3j * series.cauchy(p, r, 8))
    assert np.allclose(series.cauchy(p, q, 5),
        series.truncate(series.cauchy(p, q, 16), 5))

def test_poly():
    assert np.allclose(series.poly([[1, 2], [3, -4]]), [1 + 2j, 3 - 4j])
    assert np.allclose(series.poly([]), [0])

    with pytest.raises(misc.InvalidParameter):
        series.poly([1, np.nan])

    with pytest.raises(misc.InvalidParameter):
        series.poly('abc')

    with pytest.raises(misc.InvalidParameter):
        series.poly([1, 'x'])

def test_norm():
    assert series.norm(series.poly([3, 4])) == 5

def test_sparse():
    n, c = series.sparse(series.poly([0, 2, 0, 1j]))

    assert list(n) == [1, 3]
    assert np.allclose(series.dense(n, c), [0, 2, 0, 1j])
    assert np.allclose(series.dense(n, c, 1), [0, 2])
