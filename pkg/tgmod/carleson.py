#!/usr/bin/env python3

# Copyright (C) 2026 tgmod Developers
# This program is free software under the terms of the GNU GPLv3 or later.

"""Carleson windows and Carleson-measure seminorms."""

import numpy as np

from . import hardy, ladder, misc, MPI, quadrature
comm = MPI.comm

class Arc(object):
    """Boundary arc and its Carleson window.

    Parameters
    ----------
    center : float
        Center angle in radians.
    measure : float
        Normalized measure :math:`|I| \\in (0, 1]` (the circle has measure one).

    Attributes
    ----------
    length : float
        Angular length :math:`2 \\pi |I|`.
    """
    def __init__(self, center, measure):
        self.center = float(center)
        self.measure = float(measure)

        if not 0 < self.measure <= 1:
            raise misc.InvalidParameter('arc measure must lie in (0, 1]')

        self.length = 2 * np.pi * self.measure

    def __repr__(self):
        return 'Arc(%r, %r)' % (self.center, self.measure)

    @property
    def bounds(self):
        return self.center - np.pi * self.measure, \
            self.center + np.pi * self.measure

    @property
    def midpoint(self):
        return np.exp(1j * self.center)

    def split(self):
        """Get left and right halves."""

        quarter = 0.5 * np.pi * self.measure

        return (Arc(self.center - quarter, 0.5 * self.measure),
            Arc(self.center + quarter, 0.5 * self.measure))

    def to_dict(self):
        return dict(center=self.center, measure=self.measure)

class WindowQuadrature(object):
    """Tensor-product rule on Carleson windows.

    The radial direction uses Gauss-Legendre cells graded geometrically
    toward the boundary; the angular direction uses equal cells with the
    same number of points, graded toward special angles inside the arc.

    Parameters
    ----------
    angular_points : int
        Number of angular nodes on an arc without special angles.
    radial_cells : int
        Number of graded radial cells.
    radial_grading : float
        Geometric ratio of the radial cells.
    gauss_order : int
        Gauss points per cell.
    """
    def __init__(self, angular_points=64, radial_cells=24, radial_grading=0.5,
            gauss_order=8):

        self.angular_points = int(angular_points)
        self.radial_cells = int(radial_cells)
        self.radial_grading = float(radial_grading)
        self.gauss_order = int(gauss_order)

        if min(self.angular_points, self.radial_cells, self.gauss_order) < 1:
            raise misc.InvalidParameter('window quadrature counts must be '
                'positive')

        if not 0 < self.radial_grading < 1:
            raise misc.InvalidParameter('radial grading must lie in (0, 1)')

    def doubled(self):
        """Get rule with all counts doubled."""

        return WindowQuadrature(2 * self.angular_points,
            2 * self.radial_cells, self.radial_grading, 2 * self.gauss_order)

    def nodes(self, I, breaks=(), degree=0, shift=0):
        """Get nodes and weights of window integrals.

        Parameters
        ----------
        I : Arc
            Boundary arc.
        breaks : array_like
            Special angles of the integrand.
        degree : int
            Polynomial degree of the integrand; the angular cells are split
            such that each cell holds a bounded number of oscillations.
        shift : int
            Additional Gauss points per cell (for node-shift retries).

        Returns
        -------
        ndarray, ndarray
            Points :math:`z` and weights of :math:`(1 - |z|^2) dA(z)` with
            :math:`dA = r dr d\\theta / \\pi`.
        """
        n = self.gauss_order + shift

        r, wr = quadrature.composite(quadrature.graded(1 - I.measure, 1.0,
            self.radial_cells, self.radial_grading, toward='b'), n)

        cells = max(self.angular_points // self.gauss_order,
            int(np.ceil(degree * I.length / 4)), 1)

        lo, hi = I.bounds

        theta, wt = quadrature.arc(lo, hi, breaks, self.radial_cells + 4, n,
            self.radial_grading, cells)

        z = r[:, None] * np.exp(1j * theta[None, :])
        w = (wr * r * (1 - r ** 2))[:, None] * wt[None, :] / np.pi

        return z.ravel(), w.ravel()

def integrate(density, I, quad, breaks=(), degree=0):
    """Integrate density against :math:`(1 - |z|^2) dA` over window."""

    for shift in 0, 1:
        z, w = quad.nodes(I, breaks, degree, shift)

        values = density(z)

        if np.all(np.isfinite(values)):
            return float(np.sum(w * values))

    raise misc.SingularSample('non-finite integrand in Carleson window')

def radial_moment(s, h):
    r"""Calculate :math:`\int_{1 - h}^1 (1 - r^2) r^{s + 1} dr`."""

    s = np.asarray(s, dtype=float)

    log = np.log1p(-h) if h < 1 else -np.inf

    with np.errstate(invalid='ignore'):
        a = -np.expm1((s + 2) * log)
        b = -np.expm1((s + 4) * log)

    return a / (s + 2) - b / (s + 4)

def exact_window(g, I):
    r"""Integrate :math:`|g'|^2 (1 - |z|^2)` over window of polynomial.

    .. math::

        \mu(g, I) = \frac 1 \pi \sum_{m, n} m n c_m \bar c_n
            \int_I e^{i (m - n) \theta} d\theta
            \int_{1 - |I|}^1 (1 - r^2) r^{m + n - 1} dr
    """
    n, c = g.terms

    keep = n > 0
    n, c = n[keep], c[keep]

    if not n.size:
        return 0.0

    k = n[:, None] - n[None, :]

    width = 0.5 * I.length

    if I.measure == 1:
        angular = np.where(k == 0, 2 * np.pi, 0.0)
    else:
        safe = np.where(k == 0, 1, k)

        angular = np.where(k == 0, 2 * width,
            2 * np.sin(k * width) / safe * np.exp(1j * k * I.center))

    radial = radial_moment(n[:, None] + n[None, :] - 2, I.measure)

    b = n * c

    total = np.sum(b[:, None] * np.conj(b)[None, :] * angular * radial)

    return max(float(total.real) / np.pi, 0.0)

def mu_window(g, I, quad=None):
    r"""Calculate Carleson measure of window.

    .. math::

        \mu(g, I) = \int_{S(I)} |g'(z)|^2 (1 - |z|^2) dA(z),
        \qquad
        S(I) = \{z \in D : 1 - |z| < |I|, z / |z| \in I\}

    Polynomial symbols are integrated exactly; closed forms with the window
    quadrature graded toward their special angles.

    Parameters
    ----------
    g : Symbol
        Analytic symbol.
    I : Arc
        Boundary arc.
    quad : WindowQuadrature
        Window rule.

    Returns
    -------
    float
        Carleson measure :math:`\mu(g, I)`.
    """
    if g.polynomial:
        return exact_window(g, I)

    quad = quad or WindowQuadrature()

    return integrate(lambda z: np.absolute(g.deriv(z)) ** 2, I, quad,
        g.breaks)

def window_energy_ratio(g, f, I, quad=None):
    r"""Calculate Carleson energy of :math:`T_g f` on window.

    Uses :math:`(T_g f)' = f g'`:

    .. math::

        \frac{\mu(T_g f, I)}{|I|} = \frac 1 {|I|}
            \int_{S(I)} |f(z)|^2 |g'(z)|^2 (1 - |z|^2) dA(z)
    """
    if f.constant:
        return abs(f.eval(0)) ** 2 * mu_window(g, I, quad) / I.measure

    if g.constant:
        return 0.0

    quad = quad or WindowQuadrature()

    breaks = np.concatenate((g.breaks, f.breaks))

    return integrate(lambda z: np.absolute(f.eval(z) * g.deriv(z)) ** 2, I,
        quad, breaks, g.degree or 0) / I.measure

def angle_grid(g, angles=64):
    """Get equispaced arc centers plus singular angles of the symbol."""

    phi = 2 * np.pi * np.arange(angles) / angles

    return quadrature.breakpoints(np.concatenate((phi, g.singular)))

def default_arcs(g, levels=10, angles=64):
    """Get arcs of measure :math:`2^{-j}`, :math:`j = 0, \\dots, J`.

    A single arc of full measure suffices.
    """
    arcs = [Arc(0.0, 1.0)]

    for j in range(1, levels + 1):
        arcs.extend(Arc(phi, 2.0 ** -j) for phi in angle_grid(g, angles))

    return arcs

def carleson_seminorm(g, arcs=None, quad=None):
    """Estimate BMOA seminorm in Carleson form.

    .. math::

        \\|g\\|_* \\simeq \\sup_I \\sqrt{\\mu(g, I) / |I|}

    Returns
    -------
    NormResult
        Maximum over arcs; the attaining arc is stored as `arc`.
    """
    if arcs is None:
        arcs = default_arcs(g)

    if not arcs:
        raise misc.InvalidParameter('no arcs given')

    status = misc.StatusBar(len(arcs), title='Carleson seminorm')

    values = np.sqrt(MPI.map(lambda I: mu_window(g, I, quad) / I.measure,
        arcs, status=status))

    i = int(np.argmax(values))

    result = hardy.NormResult(values[i], degree_used=g.degree or 0,
        method='window', resolved=hardy.resolved(g, 1 - arcs[i].measure))

    result.arc = arcs[i]

    return result

def log_carleson_ladder(g, sizes=None, angles=None, quad=None):
    """Calculate ladder of logarithmically weighted Carleson ratios.

    Rung values are :math:`\\max_I \\log(2 / |I|) \\sqrt{\\mu(g, I) / |I|}`
    over arcs of the given size centered at the grid angles. The estimate
    :math:`\\hat\\alpha` of the limsup of the squared quantity is the square of
    the tail estimate.

    Parameters
    ----------
    g : Symbol
        Analytic symbol.
    sizes : array_like
        Decreasing arc measures; defaults to :math:`2^{-j}`, :math:`j = 1,
        \\dots, 10`.
    angles : array_like
        Arc centers; defaults to :func:`angle_grid`.
    quad : WindowQuadrature
        Window rule.

    Returns
    -------
    Ladder
        Ladder with columns ``size, log_factor, ratio, value`` and
        `alpha_hat` in its summary.
    """
    if sizes is None:
        sizes = 2.0 ** -np.arange(1, 11)

    sizes = np.asarray(sizes, dtype=float)

    if np.any(np.diff(sizes) >= 0) or np.any(sizes > 1) or np.any(sizes <= 0):
        raise misc.InvalidParameter('sizes must decrease within (0, 1]')

    if angles is None:
        angles = angle_grid(g)

    angles = np.asarray(angles, dtype=float)

    arcs = [Arc(phi, size) for size in sizes for phi in angles]

    status = misc.StatusBar(len(arcs), title='log-Carleson ladder')

    ratios = np.reshape(MPI.map(lambda I: mu_window(g, I, quad) / I.measure,
        arcs, status=status), (len(sizes), len(angles)))

    best = np.argmax(ratios, axis=1)

    ratio = ratios[np.arange(len(sizes)), best]

    factor = np.log(2 / sizes)

    result = ladder.Ladder(sizes, factor * np.sqrt(ratio), angles[best],
        name='size', columns=dict(log_factor=factor, ratio=ratio))

    result.alpha_hat = result.tail_estimate ** 2
    result.summary['alpha_hat'] = result.alpha_hat

    return result
