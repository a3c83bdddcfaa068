#!/usr/bin/env python3

# Copyright (C) 2026 tgmod Developers
# This program is free software under the terms of the GNU GPLv3 or later.

"""Disc automorphisms and boundary sampling."""

import numpy as np

from . import misc, quadrature

def point(a, strict=True):
    """Check and convert interior point of the unit disc.

    Parameters
    ----------
    a : complex
        Point.
    strict : bool
        Require :math:`|a| < 1`? Otherwise :math:`|a| \\le 1` is accepted.

    Returns
    -------
    complex
        Validated point.
    """
    a = complex(a)

    if not np.isfinite(a):
        raise misc.InvalidParameter('point must be finite')

    if abs(a) > 1 or strict and abs(a) == 1:
        raise misc.InvalidParameter('point %r not in the open unit disc' % a)

    return a

def mobius(a, z):
    r"""Evaluate disc automorphism.

    .. math::

        \sigma_a(z) = \frac{a - z}{1 - \bar a z}

    interchanges :math:`0` and :math:`a`, is an involution, and preserves the
    unit circle.

    Parameters
    ----------
    a : complex
        Point with :math:`|a| < 1`.
    z : complex or ndarray
        Points with :math:`|z| \le 1`.

    Returns
    -------
    complex or ndarray
        :math:`\sigma_a(z)`.
    """
    a = point(a)

    z = np.asarray(z, dtype=complex)

    return (a - z) / (1 - np.conj(a) * z)

def psi(r, a, z):
    r"""Evaluate :math:`\psi_{r, a} = \sigma_{r a} \circ r \sigma_a`.

    This analytic self-map of the disc fixes the origin and relates the
    Möbius-centered functions of :math:`g` and its dilation
    :math:`g_r(z) = g(r z)`:

    .. math::

        g_r \circ \sigma_a - g_r(a)
            = [g \circ \sigma_{r a} - g(r a)] \circ \psi_{r, a}.
    """
    r = float(r)

    if not 0 < r <= 1:
        raise misc.InvalidParameter('dilation r must lie in (0, 1]')

    a = point(a)

    return mobius(r * a, r * mobius(a, z))

def psi_h2_closed(r, a):
    r"""Calculate :math:`\|\psi_{r, a}\|_{H^2}^2 = r^2 (1 - |a|^2) / (1 - r^4
    |a|^2)`."""

    a2 = abs(point(a)) ** 2

    return r ** 2 * (1 - a2) / (1 - r ** 4 * a2)

def arguments(a, angles):
    """Map boundary angles under :math:`\\sigma_a` (which is an involution)."""

    angles = np.asarray(angles, dtype=float)

    return np.angle(mobius(a, np.exp(1j * angles)))

class CircleSamples(object):
    """Function values on a circle together with a quadrature rule.

    Parameters
    ----------
    radius : float
        Radius in :math:`(0, 1]`.
    values : ndarray
        Function values at the nodes.
    theta : ndarray
        Angles of the nodes.
    weights : ndarray
        Weights of the normalized measure :math:`d\\theta / 2 \\pi`. If
        omitted, the nodes are assumed to be equispaced.
    offset : float
        Angular offset of an equispaced grid in units of the step.

    Attributes
    ----------
    size : int
        Number of samples.
    """
    def __init__(self, radius, values, theta=None, weights=None, offset=0.5):
        self.radius = float(radius)
        self.values = np.asarray(values)
        self.offset = offset

        if not 0 < self.radius <= 1:
            raise misc.InvalidParameter('radius must lie in (0, 1]')

        self.size = self.values.size

        if theta is None:
            theta, _ = quadrature.uniform(self.size, offset)

        if weights is None:
            weights = np.full(self.size, 1.0 / self.size)

        self.theta = np.asarray(theta)
        self.weights = np.asarray(weights)

    @property
    def uniform(self):
        return np.all(self.weights == self.weights[0])

def circle(function, radius=1.0, samples=2 ** 14, offset=0.5, breaks=(),
        depth=None, parts=1):
    """Sample function on a circle.

    Without special angles, the function is sampled on `samples` equispaced
    angles with the given offset; if a sample is not finite, the grid is
    shifted by a quarter step once before giving up. With special angles, a
    composite Gauss-Legendre rule graded toward them is used instead.

    Parameters
    ----------
    function : function
        Vectorized function of complex points.
    radius : float
        Radius of the circle.
    samples : int
        Number of equispaced samples (a power of two).
    offset : float
        Offset of the equispaced grid in units of the step.
    breaks : array_like
        Special angles (singularities or peaks of the function).
    depth : int
        Grading depth of the graded rule.
    parts : int
        Number of subcells per graded cell.

    Returns
    -------
    CircleSamples
        Samples and quadrature rule.
    """
    if samples < 1 or samples & (samples - 1):
        raise misc.InvalidParameter('number of samples must be a power of two')

    breaks = np.asarray(breaks, dtype=float).ravel()

    if breaks.size:
        theta, weights = quadrature.circle(breaks,
            depth=quadrature.levels if depth is None else depth, parts=parts)

        values = function(radius * np.exp(1j * theta))

        if not np.all(np.isfinite(values)):
            raise misc.SingularSample('non-finite value on graded circle rule')

        return CircleSamples(radius, values, theta, weights, offset=None)

    for shift in offset, offset + 0.25:
        theta, weights = quadrature.uniform(samples, shift)

        values = function(radius * np.exp(1j * theta))

        if np.all(np.isfinite(values)):
            return CircleSamples(radius, values, theta, weights, offset=shift)

    raise misc.SingularSample('non-finite value on shifted circle grid')
