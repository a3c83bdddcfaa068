#!/usr/bin/env python3

# Copyright (C) 2026 tgmod Developers
# This program is free software under the terms of the GNU GPLv3 or later.

"""Truncated Maclaurin series.

A truncated series is stored as a one-dimensional complex array whose entry
`k` is the coefficient of :math:`z^k`. The zero function is ``[0]``.
"""

import numpy as np

from . import misc

def poly(coeffs):
    """Validate and convert coefficients to a series.

    Parameters
    ----------
    coeffs : array_like
        Complex coefficients; real/imaginary pairs ``[[re, im], ...]`` are
        accepted as well.

    Returns
    -------
    ndarray
        Complex coefficients of degree at least zero.
    """
    try:
        coeffs = np.asarray(coeffs)

        if (coeffs.ndim == 2 and coeffs.shape[1] == 2
                and not np.iscomplexobj(coeffs)):
            coeffs = coeffs[:, 0] + 1j * coeffs[:, 1]

        coeffs = np.array(coeffs, dtype=complex).ravel()

    except (TypeError, ValueError):
        raise misc.InvalidParameter('series coefficients must be numbers')

    if coeffs.size == 0:
        coeffs = np.zeros(1, dtype=complex)

    if not np.all(np.isfinite(coeffs)):
        raise misc.InvalidParameter('series coefficients must be finite')

    return coeffs

def evaluate(p, z):
    """Evaluate series at given points (Horner scheme)."""

    z = np.asarray(z, dtype=complex)

    value = np.zeros(z.shape, dtype=complex)

    for c in p[::-1]:
        value = value * z + c

    return value

def derivative(p):
    """Differentiate series termwise."""

    if len(p) == 1:
        return np.zeros(1, dtype=complex)

    return p[1:] * np.arange(1, len(p))

def antiderivative(p):
    """Integrate series termwise with vanishing constant term."""

    return np.concatenate(([0j], p / np.arange(1, len(p) + 1)))

def calculus(p, direction):
    """Apply :func:`derivative` or :func:`antiderivative` by name."""

    if direction == 'derivative':
        return derivative(p)

    if direction == 'antiderivative':
        return antiderivative(p)

    raise misc.InvalidParameter('unknown direction %r' % direction)

def truncate(p, N):
    """Cut or zero-pad series to degree `N`."""

    if N < 0:
        raise misc.InvalidParameter('degree must be non-negative')

    q = np.zeros(N + 1, dtype=complex)
    q[:min(len(p), N + 1)] = p[:N + 1]

    return q

def cauchy(p, q, N):
    """Multiply series and truncate product to degree `N`.

    Parameters
    ----------
    p, q : ndarray
        Factors.
    N : int
        Degree of the result.

    Returns
    -------
    ndarray
        Coefficients :math:`\\sum_{j + k = n} p_j q_k` for :math:`n \\le N`.
    """
    if N < 0:
        raise misc.InvalidParameter('degree must be non-negative')

    return truncate(np.convolve(p[:N + 1], q[:N + 1]), N)

def norm(p):
    """Calculate :math:`H^2` norm from coefficients (Parseval)."""

    return float(np.sqrt(np.sum(np.absolute(p) ** 2)))

def sparse(p, eps=0.0):
    """Get exponents and values of nonzero coefficients."""

    n = np.nonzero(np.absolute(p) > eps)[0]

    return n, p[n]

def dense(n, c, N=None):
    """Scatter sparse coefficients into a series of degree `N`."""

    n = np.asarray(n, dtype=int)

    if N is None:
        N = int(n.max()) if n.size else 0

    p = np.zeros(N + 1, dtype=complex)

    keep = n <= N

    np.add.at(p, n[keep], np.asarray(c, dtype=complex)[keep])

    return p
