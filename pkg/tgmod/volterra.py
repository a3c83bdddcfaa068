#!/usr/bin/env python3

# Copyright (C) 2026 tgmod Developers
# This program is free software under the terms of the GNU GPLv3 or later.

"""Volterra operator, Hardy-space test functions, and Leibov sequences."""

import numpy as np
import scipy.special

from . import carleson, disc, hardy, ladder, misc, MPI, quadrature, series
from . import symbols
comm = MPI.comm

tol = 1e-9 # convergence target of radial integrals
cells = 40 # maximum number of radial cells

def coefficients(g, N):
    """Get Maclaurin coefficients of symbol or series up to degree `N`."""

    if isinstance(g, symbols.Symbol):
        if not g.exact and N > g.degree:
            raise misc.Unresolved('%s is truncated at degree %d < %d'
                % (g.name, g.degree, N))

        return g.taylor(N)

    return series.truncate(series.poly(g), N)

def tg_apply(g, f, N):
    r"""Apply Volterra operator to truncated series.

    .. math::

        T_g f(z) = \int_0^z f(\zeta) g'(\zeta) d\zeta

    Parameters
    ----------
    g, f : Symbol or array_like
        Symbol and argument (symbols or coefficients).
    N : int
        Degree of the result.

    Returns
    -------
    ndarray
        Coefficients of :math:`T_g f` up to degree `N`; the constant term is
        zero.
    """
    N = int(N)

    if N < 0:
        raise misc.InvalidParameter('degree must be non-negative')

    if N == 0:
        return np.zeros(1, dtype=complex)

    dg = series.derivative(coefficients(g, N))

    product = series.cauchy(coefficients(f, N - 1), dg, N - 1)

    return series.antiderivative(product)

def singular_rays(angles, g, f):
    angles = np.mod(np.asarray(angles, dtype=float), 2 * np.pi)

    special = np.union1d(g.singular, f.singular)

    for angle in special:
        distance = np.absolute(np.angle(np.exp(1j * (angles - angle))))

        if np.any(distance < 1e-14):
            raise misc.SingularRay('ray through singular angle %g' % angle)

def tg_boundary_value(g, f, zeta, tol=tol, cells=cells, depth=8,
        order=quadrature.order):
    r"""Evaluate :math:`T_g f` on the unit circle by radial integration.

    .. math::

        T_g f(\zeta) = \int_0^1 f(r \zeta) g'(r \zeta) \zeta dr

    The interval is split into cells :math:`[1 - 2^{-k}, 1 - 2^{-k - 1}]`
    with a composite Gauss-Legendre rule; after each new cell the remainder
    up to :math:`r = 1` is estimated by one more cell. A ray has converged as
    soon as successive estimates differ by less than `tol`.

    Parameters
    ----------
    g, f : Symbol
        Symbol and argument.
    zeta : complex or ndarray
        Boundary points.
    tol : float
        Absolute convergence target.
    cells : int
        Maximum number of cells.
    depth : int
        Minimum number of cells before convergence is tested.
    order : int
        Gauss points per cell.

    Returns
    -------
    ndarray, ndarray
        Values and per-ray convergence mask (scalars for scalar input).
    """
    scalar = np.ndim(zeta) == 0

    zeta = np.atleast_1d(np.asarray(zeta, dtype=complex))

    if np.any(np.absolute(np.absolute(zeta) - 1) > 1e-12):
        raise misc.InvalidParameter('boundary points must have modulus one')

    singular_rays(np.angle(zeta), g, f)

    x, w = quadrature.gauss(order)

    def cell(start, end, rays):
        r = start + (end - start) * x
        z = r[:, None] * rays[None, :]

        values = f.eval(z) * g.deriv(z)

        if not np.all(np.isfinite(values)):
            raise misc.SingularRay('non-finite radial integrand')

        return (end - start) * np.dot(w, values) * rays

    total = np.zeros(zeta.shape, dtype=complex)
    estimate = np.zeros(zeta.shape, dtype=complex)
    converged = np.zeros(zeta.shape, dtype=bool)

    for k in range(cells):
        active = ~converged

        if not np.any(active):
            break

        rays = zeta[active]

        start, end = 1 - 2.0 ** -k, 1 - 2.0 ** -(k + 1)

        total[active] += cell(start, end, rays)

        new = total[active] + cell(end, 1.0, rays)

        if k >= depth:
            done = np.absolute(new - estimate[active]) < tol

            index = np.nonzero(active)[0]
            converged[index[done]] = True

        estimate[active] = new

    if scalar:
        return estimate[0], bool(converged[0])

    return estimate, converged

def hp_testfn(a, p):
    r"""Create normalized test function :math:`f_a` of :math:`H^p`.

    .. math::

        f_a(z) = \left[\frac{1 - |a|^2}{(1 - \bar a z)^2}\right]^{1 / p}

    Parameters
    ----------
    a : complex
        Point with :math:`|a| < 1`.
    p : float
        Exponent :math:`p \ge 1`.
    """
    if not float(p) >= 1:
        raise misc.InvalidParameter('test functions need p >= 1')

    return symbols.hp_test(a, p)

def depth(a):
    """Get number of radial or angular levels resolving scale :math:`1 -
    |a|`."""

    return int(np.ceil(np.log2(1 / (1 - abs(a)))))

def tg_norm(g, f, p, a=0, method=None, depth_circle=None):
    """Calculate :math:`\\|T_g f\\|_{H^p}`.

    Parameters
    ----------
    g, f : Symbol
        Symbol and argument.
    p : float
        Exponent.
    a : complex
        Concentration point of `f` (sets the resolution).
    method : str
        ``'radial'`` (boundary values by radial integration) or ``'taylor'``
        (truncated series); chosen automatically by default.
    depth_circle : int
        Grading depth of the boundary rule.

    Returns
    -------
    NormResult
        Norm with the number of boundary nodes; `resolved` is false if any
        radial integral has not converged.
    """
    p = hardy.exponent(p)

    if method is None:
        radial = abs(a) > 0.9 or not g.polynomial or not g.exact
        method = 'radial' if radial else 'taylor'

    if method == 'taylor':
        N = (g.degree or 0) + int(np.ceil(40 / (1 - abs(a))))

        coeffs = tg_apply(g, f, N)

        M = hardy.power_of_two(4 * N)

        circle = disc.circle(lambda z: series.evaluate(coeffs, z), samples=M)

        return hardy.NormResult(hardy.boundary_hp_norm(circle, p),
            degree_used=N, samples_used=M, method='taylor')

    if depth_circle is None:
        depth_circle = 20 + depth(a)

    breaks = np.union1d(g.breaks, f.breaks)

    if breaks.size:
        theta, weights = quadrature.circle(breaks, depth_circle)
    else:
        theta, weights = quadrature.uniform(2 ** 12)

    values, converged = tg_boundary_value(g, f, np.exp(1j * theta),
        depth=8 + depth(a))

    result = hardy.NormResult(np.sum(weights * np.absolute(values) ** p)
        ** (1 / p), samples_used=theta.size, method='radial')

    if not np.all(converged):
        result.flag = 'unconverged'
        result.resolved = False

    return result

def aleman_cima_ratio(g, a, p=2, q=None):
    r"""Calculate ratio of the Aleman-Cima lower bound.

    .. math::

        \frac{\|T_g f_a\|_{H^p}}{\|g \circ \sigma_a - g(a)\|_{H^q}}
        \ge c_{p, q} > 0 \qquad (0 < q < p / 2)

    Parameters
    ----------
    g : Symbol
        Nonconstant symbol.
    a : complex
        Point with :math:`|a| < 1`.
    p : float
        Exponent :math:`p \ge 1`.
    q : float
        Exponent :math:`0 < q < p / 2`; defaults to :math:`p / 4`.

    Returns
    -------
    float
        Ratio.
    """
    p = float(p)

    if q is None:
        q = p / 4

    q = float(q)

    if not 0 < q < p / 2:
        raise misc.InvalidParameter('need 0 < q < p / 2')

    if g.constant:
        raise misc.DegenerateSymbol('ratio of zeros for constant symbol')

    f = hp_testfn(a, p)

    numerator = tg_norm(g, f, p, a).value
    denominator = hardy.mobius_centered_norm(g, a, q).value

    if denominator == 0:
        raise misc.DegenerateSymbol('vanishing Möbius-centered norm')

    return numerator / denominator

def half_width(a):
    """Get half-width :math:`(1 - |a|)^{1 / 6}` of the arc :math:`I(a)`."""

    return (1 - abs(a)) ** (1 / 6)

def arc_integral(g, f, lo, hi, nodes, a):
    """Integrate :math:`|T_g f|` over angular interval with respect to `m`."""

    breaks = np.concatenate((g.singular, f.singular))

    theta, weights = quadrature.arc(lo, hi, breaks, depth=20 + depth(a),
        cells=max(nodes // quadrature.order, 1))

    values, converged = tg_boundary_value(g, f, np.exp(1j * theta),
        depth=8 + depth(a))

    result = hardy.NormResult(np.sum(weights * np.absolute(values))
        / (2 * np.pi), samples_used=theta.size, method='radial')

    if not np.all(converged):
        result.flag = 'unconverged'
        result.resolved = False

    return result

def offarc_tail_integral(g, a, nodes=4096):
    r"""Integrate :math:`|T_g f_a|` off the arc :math:`I(a)`.

    .. math::

        \int_{T \setminus I(a)} |T_g f_a| dm, \qquad
        I(a) = \{e^{i \theta}: |\theta - \arg a| < (1 - |a|)^{1 / 6}\},

    with the :math:`H^1` test function :math:`f_a(z) = (1 - |a|^2) / (1 -
    \bar a z)^2`.

    Parameters
    ----------
    g : Symbol
        Symbol.
    a : complex
        Nonzero point with :math:`|a| < 1`.
    nodes : int
        Number of angular nodes on the complement arc.

    Returns
    -------
    NormResult
        Integral; `resolved` is false if a radial integral has not converged.
    """
    a = disc.point(a)

    if a == 0:
        raise misc.InvalidParameter('tail integral needs nonzero a')

    if g.constant:
        return hardy.NormResult(0.0, method='radial')

    f = hp_testfn(a, 1)

    w = half_width(a)
    c = np.angle(a)

    return arc_integral(g, f, c + w, c + 2 * np.pi - w, nodes, a)

def arc_split(g, a, nodes=4096):
    """Split :math:`\\|T_g f_a\\|_{H^1}` into integrals on and off
    :math:`I(a)`.

    Returns
    -------
    float, float
        Integrals over :math:`I(a)` and its complement.
    """
    a = disc.point(a)

    if a == 0:
        raise misc.InvalidParameter('arc split needs nonzero a')

    f = hp_testfn(a, 1)

    w = half_width(a)
    c = np.angle(a)

    on = arc_integral(g, f, c - w, c + w, nodes, a)
    off = arc_integral(g, f, c + w, c + 2 * np.pi - w, nodes, a)

    return on.value, off.value

def tail_bound(g, a, seminorm=None):
    r"""Calculate :math:`(1 - |a|)^{2 / 3} \|g - g(0)\|_{H^1} + (1 -
    |a|)^{1 / 2} \|g\|_*` with unit constants."""

    a = disc.point(a)

    if seminorm is None:
        seminorm = hardy.bmoa_seminorm(g).value

    h1 = hardy.hp_norm(g - symbols.constant(g.eval(0)), 1)

    return (1 - abs(a)) ** (2 / 3) * h1 + (1 - abs(a)) ** 0.5 * seminorm

def testfn_ladder(g, p=2, levels=10, angles=16):
    """Calculate ladder of :math:`\\max_\\theta \\|T_g f_a\\|_{H^p}` at
    :math:`|a| = 1 - 2^{-j}`."""

    if levels < 1:
        raise misc.InvalidParameter('need at least one level')

    radii = 1 - 2.0 ** -np.arange(1, levels + 1)

    phi = carleson.angle_grid(g, angles)

    points = [r * np.exp(1j * t) for r in radii for t in phi]

    status = misc.StatusBar(len(points), title='test functions')

    values = np.reshape([result.value for result in MPI.map(
        lambda a: tg_norm(g, hp_testfn(a, p), p, a), points, status=status)],
        (len(radii), len(phi)))

    best = np.argmax(values, axis=1)

    return ladder.Ladder(radii, values[np.arange(len(radii)), best],
        phi[best], name='radius')

def h2_norm_series(u, v, eps=1e-18, chunk=2 ** 16, limit=2 ** 24):
    r"""Calculate :math:`\|\log(1 - \bar u z) - \log(1 - \bar v z)\|_{H^2}`.

    .. math::

        \sum_{k = 1}^\infty \frac{|u^k - v^k|^2}{k^2}

    The series is summed until the terms fall below `eps`. Beyond `limit`
    terms, the closed form in terms of dilogarithms is used.
    """
    u, v = complex(u), complex(v)

    total = 0.0

    for start in range(1, limit, chunk):
        k = np.arange(start, start + chunk)

        terms = np.absolute(u ** k - v ** k) ** 2 / k ** 2
        total += terms.sum()

        bound = (abs(u) ** k[-1] + abs(v) ** k[-1]) ** 2 / k[-1] ** 2

        if bound < eps:
            return float(np.sqrt(total))

    def dilog(z):
        return scipy.special.spence(1 - z)

    square = (dilog(abs(u) ** 2) + dilog(abs(v) ** 2)
        - 2 * dilog(np.conj(u) * v).real)

    return float(np.sqrt(max(square.real, 0.0)))

class LeibovSequence(object):
    """Logarithmic kernels attached to shrinking arcs.

    Parameters
    ----------
    sizes : array_like
        Strictly decreasing arc measures in :math:`[2^{-20}, 1)`.
    centers : array_like
        Arc centers; defaults to zero.

    Attributes
    ----------
    arcs : list of Arc
        Arcs :math:`I_n`.
    u : ndarray
        Points :math:`u_n = (1 - |I_n|) \\xi_n` with the midpoints
        :math:`\\xi_n` of the arcs.
    f : list of Symbol
        Kernels :math:`f_n(z) = \\log(1 - \\bar u_n z)`.
    h : list of Symbol
        Differences :math:`h_n = f_{n + 1} - f_n`.
    """
    def __init__(self, sizes, centers=None):
        sizes = np.asarray(sizes, dtype=float).ravel()

        if sizes.size < 2:
            raise misc.InvalidParameter('need at least two sizes')

        if np.any(np.diff(sizes) >= 0):
            raise misc.InvalidParameter('sizes must decrease strictly')

        if sizes[0] >= 1 or sizes[-1] < 2.0 ** -20:
            raise misc.InvalidParameter('sizes must lie in [2^-20, 1)')

        if centers is None:
            centers = np.zeros(sizes.size)

        centers = np.broadcast_to(np.asarray(centers, dtype=float),
            sizes.shape)

        self.sizes = sizes
        self.arcs = [carleson.Arc(c, s) for c, s in zip(centers, sizes)]
        self.u = (1 - sizes) * np.exp(1j * centers)
        self.f = [symbols.log_kernel(u) for u in self.u]
        self.h = [f2 - f1 for f1, f2 in zip(self.f[:-1], self.f[1:])]

    def __len__(self):
        return len(self.arcs)

    def h2_norm_series(self, n):
        """Calculate :math:`\\|h_n\\|_{H^2}` by the coefficient series."""

        return h2_norm_series(self.u[n], self.u[n + 1])

    def h2_norm_quad(self, n):
        """Calculate :math:`\\|h_n\\|_{H^2}` from the truncated Taylor
        difference."""

        N = int(np.ceil(40 / (1 - max(abs(self.u[n]), abs(self.u[n + 1])))))

        return hardy.h2_series_norm(self.h[n].taylor(N))

    def empirical_c(self, n, radii=33, angles=65):
        """Calculate :math:`\\min |f_n(z)| / \\log(2 / |I_n|)` on the closed
        window."""

        I = self.arcs[n]

        lo, hi = I.bounds

        r = np.linspace(1 - I.measure, 1, radii)
        theta = np.linspace(lo, hi, angles)

        z = r[:, None] * np.exp(1j * theta[None, :])

        return float(np.absolute(self.f[n].eval(z)).min()
            / np.log(2 / I.measure))

    def diagnostics(self, seminorm=True, grid=None):
        """Get per-index diagnostics.

        Parameters
        ----------
        seminorm : bool
            Estimate :math:`\\|h_n\\|_*` by :func:`hardy.bmoa_seminorm`?
        grid : SeminormGrid
            Grid of the seminorm estimate.

        Returns
        -------
        list of dict
            Rows with keys ``n, size, u_re, u_im, h2_norm_series,
            h2_norm_quad, bmoa_seminorm, empirical_c``, with `n` counted
            from one.
        """
        rows = []

        status = misc.StatusBar(len(self) - 1, title='Leibov sequence')

        for n in range(len(self) - 1):
            rows.append(dict(
                n=n + 1,
                size=self.sizes[n],
                u_re=self.u[n].real,
                u_im=self.u[n].imag,
                h2_norm_series=self.h2_norm_series(n),
                h2_norm_quad=self.h2_norm_quad(n),
                bmoa_seminorm=hardy.bmoa_seminorm(self.h[n], grid).value
                    if seminorm else None,
                empirical_c=self.empirical_c(n),
                ))

            status.update()

        return rows

    def energy(self, g, quad=None):
        """Get Carleson energies of :math:`T_g f_n` on :math:`I_n` and
        :math:`I_{n + 1}`."""

        rows = []

        for n in range(len(self) - 1):
            rows.append(dict(
                n=n + 1,
                size=self.sizes[n],
                own=carleson.window_energy_ratio(g, self.f[n], self.arcs[n],
                    quad),
                next=carleson.window_energy_ratio(g, self.f[n],
                    self.arcs[n + 1], quad),
                ))

        return rows

columns = ['n', 'size', 'u_re', 'u_im', 'h2_norm_series', 'h2_norm_quad',
    'bmoa_seminorm', 'empirical_c']

def leibov_build(sizes=None, center_angles=None):
    """Build Leibov sequence, by default for arcs of measure :math:`2^{-n}`,
    :math:`n = 1, \\dots, 13`."""

    if sizes is None:
        sizes = 2.0 ** -np.arange(1, 14)

    return LeibovSequence(sizes, center_angles)

def leibov_energy(g, sequence, quad=None):
    """Get window energies of :math:`T_g f_n` along a Leibov sequence."""

    return sequence.energy(g, quad)
