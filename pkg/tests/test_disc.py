#!/usr/bin/env python3

# Copyright (C) 2026 tgmod Developers
# This program is free software under the terms of the GNU GPLv3 or later.

import numpy as np
import pytest

from tgmod import disc, hardy, misc

def test_mobius_examples():
    z = 0.3 - 0.4j

    assert np.isclose(disc.mobius(0, z), -z)
    assert np.isclose(disc.mobius(0.2 + 0.1j, 0), 0.2 + 0.1j)

    w = disc.mobius(0.5, 1)

    assert np.isclose(w, -1)
    assert np.isclose(abs(w), 1)

def test_mobius_involution():
    r = np.linspace(0, 0.95, 7)
    phi = np.linspace(0, 2 * np.pi, 9)

    z = np.concatenate([s * np.exp(1j * phi) for s in np.linspace(0, 1, 6)])

    for a in (r[:, None] * np.exp(1j * phi[None, :])).ravel():
        assert np.allclose(disc.mobius(a, disc.mobius(a, z)), z, rtol=0,
            atol=1e-12)

        boundary = disc.mobius(a, np.exp(1j * phi))

        assert np.allclose(np.absolute(boundary), 1, rtol=0, atol=1e-12)

@pytest.mark.parametrize('a', [1, 1j, 2, np.nan])
def test_invalid_point(a):
    with pytest.raises(misc.InvalidParameter):
        disc.mobius(a, 0)

def test_psi():
    z = 0.3 + 0.2j

    assert np.isclose(disc.psi(1, 0.4 - 0.3j, z), z)
    assert np.isclose(disc.psi(0.7, 0, z), 0.7 * z)
    assert abs(disc.psi(0.5, 0.5, 0)) < 1e-15

    with pytest.raises(misc.InvalidParameter):
        disc.psi(0, 0.5, z)

@pytest.mark.parametrize('r', [0.1, 0.5, 0.9])
@pytest.mark.parametrize('a', [0.1, 0.5, 0.9])
def test_psi_norm(r, a):
    circle = disc.circle(lambda z: disc.psi(r, a, z))

    square = hardy.boundary_hp_norm(circle, 2) ** 2

    assert np.isclose(square, disc.psi_h2_closed(r, a), rtol=1e-10, atol=0)

def test_circle():
    circle = disc.circle(lambda z: z, samples=8)

    assert circle.size == 8
    assert circle.uniform
    assert np.allclose(np.absolute(circle.values), 1)

    with pytest.raises(misc.InvalidParameter):
        disc.circle(lambda z: z, samples=12)

def test_circle_offset_retry():
    circle = disc.circle(lambda z: 1 / (1 - z), samples=4, offset=0)

    assert circle.offset == 0.25
    assert np.all(np.isfinite(circle.values))

def test_circle_singular():
    with pytest.raises(misc.SingularSample):
        disc.circle(lambda z: np.full(z.shape, np.inf), breaks=[0.0])
