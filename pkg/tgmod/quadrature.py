#!/usr/bin/env python3

# Copyright (C) 2026 tgmod Developers
# This program is free software under the terms of the GNU GPLv3 or later.

"""Gauss-Legendre rules on geometrically graded meshes."""

import numpy as np
import numpy.polynomial.legendre

from . import misc

order = 16 # Gauss points per cell
ratio = 0.5 # geometric grading ratio
levels = 40 # graded cells toward each special point

_rules = dict()

def gauss(n):
    """Get Gauss-Legendre nodes and weights on the unit interval.

    Parameters
    ----------
    n : int
        Number of points.

    Returns
    -------
    ndarray, ndarray
        Nodes in :math:`(0, 1)` and weights summing to one.
    """
    if n < 1:
        raise misc.InvalidParameter('Gauss order must be positive')

    if n not in _rules:
        x, w = numpy.polynomial.legendre.leggauss(n)
        _rules[n] = (0.5 * (x + 1), 0.5 * w)

    return _rules[n]

def composite(edges, n=order):
    """Get composite Gauss-Legendre rule for given cell edges.

    Parameters
    ----------
    edges : array_like
        Increasing cell edges.
    n : int
        Gauss points per cell.

    Returns
    -------
    ndarray, ndarray
        Nodes and weights, cell by cell from left to right.
    """
    edges = np.asarray(edges, dtype=float)

    x, w = gauss(n)

    width = np.diff(edges)

    nodes = edges[:-1, None] + width[:, None] * x[None, :]
    weights = width[:, None] * w[None, :]

    return nodes.ravel(), weights.ravel()

def graded(a, b, depth=levels, q=ratio, toward='a'):
    r"""Generate cell edges on :math:`[a, b]` graded toward one end.

    Toward `a`, the edges are :math:`a + (b - a) q^k` for
    :math:`k = 0, \dots, depth`, plus `a` itself, so that the cell adjacent to
    the special point has width :math:`(b - a) q^{depth}`.

    Parameters
    ----------
    a, b : float
        Interval bounds.
    depth : int
        Number of graded cells (the innermost cell is added on top).
    q : float
        Geometric ratio in :math:`(0, 1)`.
    toward : str
        ``'a'`` or ``'b'``.

    Returns
    -------
    ndarray
        Increasing cell edges.
    """
    if not 0 < q < 1:
        raise misc.InvalidParameter('grading ratio must lie in (0, 1)')

    steps = (b - a) * q ** np.arange(depth, -1, -1)

    if toward == 'a':
        return np.concatenate(([a], a + steps))

    return np.concatenate(((b - steps)[::-1], [b]))

def refine(edges, parts):
    """Split cells into equal subcells.

    Parameters
    ----------
    edges : array_like
        Increasing cell edges.
    parts : int or array_like
        Number of subcells, for all cells or cell by cell.

    Returns
    -------
    ndarray
        Refined cell edges.
    """
    edges = np.asarray(edges, dtype=float)

    parts = np.broadcast_to(np.maximum(np.asarray(parts, dtype=int), 1),
        (len(edges) - 1,))

    if np.all(parts == 1):
        return edges

    fine = [edges[i] + (edges[i + 1] - edges[i]) * np.arange(n) / n
        for i, n in enumerate(parts)]

    return np.append(np.concatenate(fine), edges[-1])

def segment(a, b, depth=levels, q=ratio, parts=1):
    """Generate cell edges on :math:`[a, b]` graded toward both ends."""

    c = 0.5 * (a + b)

    left = graded(a, c, depth, q, toward='a')
    right = graded(c, b, depth, q, toward='b')

    return refine(np.concatenate((left, right[1:])), parts)

def uniform(samples, offset=0.5):
    """Get equispaced angles on the circle with normalized weights.

    Parameters
    ----------
    samples : int
        Number of angles.
    offset : float
        Offset of the grid in units of the angular step.

    Returns
    -------
    ndarray, ndarray
        Angles in :math:`[0, 2 \\pi)` and weights :math:`1 / samples`.
    """
    theta = 2 * np.pi * (np.arange(samples) + offset) / samples

    return theta, np.full(samples, 1.0 / samples)

def breakpoints(angles, eps=1e-15):
    """Reduce angles modulo :math:`2 \\pi` and remove duplicates."""

    angles = np.sort(np.mod(np.asarray(angles, dtype=float).ravel(),
        2 * np.pi))

    if angles.size == 0:
        return angles

    keep = np.ones(angles.size, dtype=bool)
    keep[1:] = np.diff(angles) > eps

    angles = angles[keep]

    if angles.size > 1 and angles[0] + 2 * np.pi - angles[-1] <= eps:
        angles = angles[:-1]

    return angles

def circle(breaks, depth=levels, n=order, q=ratio, parts=1):
    """Get composite rule on the circle graded toward special angles.

    The circle is cut at the special angles; every arc in between is graded
    toward both of its ends.

    Parameters
    ----------
    breaks : array_like
        Special angles (at least one).
    depth, n, q
        Grading depth, Gauss points per cell, and grading ratio.
    parts : int or function
        Number of subcells per graded cell, or function mapping the cell
        edges of an arc to the numbers of subcells.

    Returns
    -------
    ndarray, ndarray
        Angles in :math:`[0, 2 \\pi)` and weights of the normalized measure
        :math:`d\\theta / 2 \\pi`.
    """
    breaks = breakpoints(breaks)

    if breaks.size == 0:
        raise misc.InvalidParameter('graded circle rule needs special angles')

    ends = np.append(breaks, breaks[0] + 2 * np.pi)

    theta = []
    weights = []

    for a, b in zip(ends[:-1], ends[1:]):
        edges = segment(a, b, depth, q)

        x, w = composite(refine(edges,
            parts(edges) if callable(parts) else parts), n)

        theta.append(x)
        weights.append(w)

    theta = np.mod(np.concatenate(theta), 2 * np.pi)
    weights = np.concatenate(weights) / (2 * np.pi)

    return theta, weights

def arc(a, b, breaks=(), depth=levels, n=order, q=ratio, cells=1):
    """Get composite rule on an angular interval graded toward inner breaks.

    Parameters
    ----------
    a, b : float
        Interval bounds (radians).
    breaks : array_like
        Special angles. Those inside :math:`(a, b)`, modulo
        :math:`2 \\pi`, cut the interval and attract graded cells.
    depth, n, q
        Grading depth, Gauss points per cell, and grading ratio.
    cells : int
        Number of equal cells on the whole interval without special points;
        graded cells wider than the resulting width are split.

    Returns
    -------
    ndarray, ndarray
        Angles and weights of :math:`d\\theta` (not normalized).
    """
    inner = []
    left = right = False

    for angle in np.asarray(breaks, dtype=float).ravel():
        angle = a + np.mod(angle - a, 2 * np.pi)

        if np.isclose(angle, a, rtol=0, atol=1e-14) or np.isclose(angle,
                a + 2 * np.pi, rtol=0, atol=1e-14):
            left = True
        elif np.isclose(angle, b, rtol=0, atol=1e-14):
            right = True
        elif a < angle < b:
            inner.append(angle)

    if b - a >= 2 * np.pi - 1e-14:
        left = right = left or right

    ends = np.concatenate(([a], np.unique(inner), [b]))

    special = np.ones(len(ends), dtype=bool)
    special[0] = left
    special[-1] = right

    theta = []
    weights = []

    for i, (c, d) in enumerate(zip(ends[:-1], ends[1:])):
        if special[i] and special[i + 1]:
            edges = segment(c, d, depth, q)
        elif special[i]:
            edges = graded(c, d, depth, q, toward='a')
        elif special[i + 1]:
            edges = graded(c, d, depth, q, toward='b')
        else:
            edges = np.array([c, d])

        edges = refine(edges, np.ceil(np.diff(edges) * cells / (b - a)))

        x, w = composite(edges, n)

        theta.append(x)
        weights.append(w)

    return np.concatenate(theta), np.concatenate(weights)

def radial(start=0.0, end=1.0, depth=levels, n=order, q=ratio):
    """Get composite rule on :math:`[start, end]` graded toward `end`."""

    return composite(graded(start, end, depth, q, toward='b'), n)
