#!/usr/bin/env python3

# Copyright (C) 2026 tgmod Developers
# This program is free software under the terms of the GNU GPLv3 or later.

"""Hardy-space norms and Möbius-centered seminorms."""

import numpy as np
import scipy.optimize

from . import disc, ladder, misc, MPI, quadrature, series
comm = MPI.comm

kappa = 10 # resolution-guard constant
samples = 2 ** 14 # equispaced samples per circle
maximum = 256 # largest polynomial degree for graded pullback rule

class NormResult(object):
    """Computed norm together with quadrature metadata.

    Parameters
    ----------
    value : float
        Norm or seminorm.
    degree_used : int
        Polynomial degree of the symbol (zero for closed forms).
    samples_used : int
        Number of boundary nodes per evaluation.
    resolved : bool
        Has the resolution guard passed?
    argmax : complex
        Grid point attaining a reported supremum.
    method : str
        Quadrature rule used: ``'uniform'``, ``'graded'``, ``'poisson'``, or
        ``'window'``.
    flag : str
        Optional trend flag of the underlying ladder.
    """
    def __init__(self, value, degree_used=0, samples_used=0, resolved=True,
            argmax=None, method=None, flag=None):

        self.value = float(value)
        self.degree_used = int(degree_used)
        self.samples_used = int(samples_used)
        self.resolved = bool(resolved)
        self.argmax = argmax
        self.method = method
        self.flag = flag
        self.rungs = None
        self.arc = None

    def __float__(self):
        return self.value

    def __repr__(self):
        return 'NormResult(%r, resolved=%r)' % (self.value, self.resolved)

    def to_dict(self):
        data = dict(
            value=self.value,
            degree_used=self.degree_used,
            samples_used=self.samples_used,
            resolved=self.resolved,
            argmax=None,
            )

        if self.argmax is not None:
            data['argmax'] = dict(r=abs(self.argmax),
                theta=float(np.mod(np.angle(self.argmax), 2 * np.pi)))

        if self.arc is not None:
            data['arc'] = self.arc.to_dict()

        if self.flag is not None:
            data['flag'] = self.flag

        return data

class SeminormGrid(object):
    """Discretization of the supremum over the disc.

    Parameters
    ----------
    radii : array_like
        Strictly increasing values of :math:`|a|` in :math:`[0, 1)`.
    angles : array_like
        Arguments of :math:`a` in :math:`[0, 2 \\pi)` without duplicates.
    samples_per_circle : int
        Equispaced samples per boundary circle (power of two).
    """
    def __init__(self, radii, angles, samples_per_circle=samples):
        self.radii = np.asarray(radii, dtype=float).ravel()
        self.angles = np.asarray(angles, dtype=float).ravel()
        self.samples_per_circle = int(samples_per_circle)

        if not self.radii.size or not self.angles.size:
            raise misc.InvalidParameter('seminorm grid must not be empty')

        if np.any(np.diff(self.radii) <= 0):
            raise misc.InvalidParameter('radii must be strictly increasing')

        if self.radii[0] < 0 or self.radii[-1] >= 1:
            raise misc.InvalidParameter('radii must lie in [0, 1)')

        if np.any(self.angles < 0) or np.any(self.angles >= 2 * np.pi):
            raise misc.InvalidParameter('angles must lie in [0, 2 pi)')

        if np.unique(self.angles).size != self.angles.size:
            raise misc.InvalidParameter('angles must not repeat')

        n = self.samples_per_circle

        if n < 1 or n & (n - 1):
            raise misc.InvalidParameter('samples per circle must be a power '
                'of two')

    @classmethod
    def default(cls, g=None, levels=10, angles=64, samples_per_circle=samples):
        """Create default grid :math:`\\{0\\} \\cup \\{1 - 2^{-j}\\}`.

        Parameters
        ----------
        g : Symbol
            Symbol whose singular angles are added to the angles.
        levels : int
            Number of radii besides zero.
        angles : int
            Number of equispaced angles.
        samples_per_circle : int
            Equispaced samples per boundary circle.
        """
        radii = np.concatenate(([0.0], 1 - 2.0 ** -np.arange(1, levels + 1)))

        phi = 2 * np.pi * np.arange(angles) / angles

        if g is not None and g.singular.size:
            phi = quadrature.breakpoints(np.concatenate((phi, g.singular)))

        return cls(radii, phi, samples_per_circle)

    def points(self):
        """Get grid points in lexicographic order of (radius, angle).

        At radius zero only a single point is used.
        """
        points = []

        for r in self.radii:
            if r == 0:
                points.append(0j)
            else:
                points.extend(r * np.exp(1j * self.angles))

        return np.array(points)

def lambda_weight(a):
    """Calculate logarithmic weight :math:`\\lambda(a) = \\log(2 / (1 -
    |a|))`."""

    a = disc.point(a)

    return float(np.log(2 / (1 - abs(a))))

def lambda_profile(s):
    r"""Calculate :math:`\lambda(s) \sqrt{1 - s^2}`.

    This is the λ-weighted Möbius-centered :math:`H^2` norm of the identity
    symbol at :math:`|a| = s`; it decreases for :math:`s` close to one.
    """
    s = np.asarray(s, dtype=float)

    if np.any(s < 0) or np.any(s >= 1):
        raise misc.InvalidParameter('profile argument must lie in [0, 1)')

    return np.log(2 / (1 - s)) * np.sqrt(1 - s ** 2)

def lambda_profile_max():
    """Maximize :func:`lambda_profile` on the unit interval.

    Returns
    -------
    float, float
        Maximizer and maximum.
    """
    result = scipy.optimize.minimize_scalar(lambda s: -lambda_profile(s),
        bounds=(0.0, 1 - 1e-12), method='bounded',
        options=dict(xatol=1e-12))

    return float(result.x), float(-result.fun)

def boundary_hp_norm(samples, p=2):
    """Calculate :math:`L^p` mean of circle samples.

    Parameters
    ----------
    samples : CircleSamples
        Function values on a circle.
    p : float
        Exponent :math:`p > 0`.

    Returns
    -------
    float
        :math:`(\\int |f|^p dm)^{1 / p}` by the quadrature rule of the
        samples.
    """
    p = exponent(p)

    if not np.all(np.isfinite(samples.values)):
        raise misc.SingularSample('non-finite circle samples')

    mean = np.sum(samples.weights * np.absolute(samples.values) ** p)

    return float(mean ** (1 / p))

def h2_series_norm(p):
    """Calculate :math:`H^2` norm from Maclaurin coefficients."""

    return series.norm(series.poly(p))

def hp_norm(g, p=2, radius=1.0, samples=samples, depth=None):
    """Calculate :math:`H^p` norm of symbol on a circle.

    The boundary rule is graded toward the special angles of `g`, if any.
    """
    return boundary_hp_norm(disc.circle(g.eval, radius, samples,
        breaks=g.breaks, depth=depth), p)

def exponent(p):
    p = float(p)

    if not p > 0 or not np.isfinite(p):
        raise misc.InvalidParameter('exponent p must be positive')

    return p

def levels(a):
    """Get grading depth for Möbius pullbacks centered at `a`."""

    return quadrature.levels + int(np.ceil(np.log2(1 / (1 - abs(a)))))

def resolved(g, a, kappa=kappa):
    """Apply resolution guard :math:`N (1 - |a|) \\ge \\kappa`.

    Only symbols defined by truncated infinite series are subject to it.
    """
    if g.exact:
        return True

    return g.degree * (1 - abs(a)) >= kappa

def method(g, a):
    """Select quadrature rule of Möbius-centered norms."""

    if g.polynomial and g.degree > maximum:
        return 'poisson'

    if a == 0 and not g.breaks.size:
        return 'uniform'

    return 'graded'

def power_of_two(n):
    return 1 << int(np.ceil(np.log2(max(n, 1))))

def boundary(g, a=0, samples=samples):
    """Precompute boundary samples of `g` for the Poisson-weighted rule.

    The grid depends on :math:`|a|`; it suffices for all centers up to that
    modulus.
    """
    M = power_of_two(max(samples, 8 * (g.degree or 0), 64 / (1 - abs(a))))

    return disc.circle(g.eval, samples=M)

def mobius_centered_norm(g, a, p=2, samples=samples, kappa=kappa,
        boundary=None):
    r"""Calculate Möbius-centered :math:`H^p` norm.

    .. math::

        \|g \circ \sigma_a - g(a)\|_{H^p}^p
            = \int_0^{2 \pi} |g(\sigma_a(e^{i \theta})) - g(a)|^p
                \frac{d \theta}{2 \pi}
            = \int |g(\zeta) - g(a)|^p P_a(\zeta) dm(\zeta),

    where :math:`P_a(\zeta) = (1 - |a|^2) / |\zeta - a|^2` is the Poisson
    kernel. The left form is integrated either on an equispaced grid (no
    special angles) or by a composite Gauss-Legendre rule graded toward the
    angles where :math:`\sigma_a` compresses the circle or hits a singularity
    of `g`. The right form is used for polynomials of high degree.

    Parameters
    ----------
    g : Symbol
        Analytic symbol.
    a : complex
        Center with :math:`|a| < 1`.
    p : float
        Exponent :math:`p > 0`.
    samples : int
        Number of equispaced samples (a power of two).
    kappa : float
        Resolution-guard constant.
    boundary : CircleSamples
        Precomputed boundary values of `g` for the Poisson-weighted rule.

    Returns
    -------
    NormResult
        Norm with quadrature metadata.
    """
    a = disc.point(a)
    p = exponent(p)

    ga = g.eval(a)

    rule = method(g, a)

    if rule == 'poisson':
        M = power_of_two(max(samples, 8 * g.degree, 64 / (1 - abs(a))))

        if boundary is None or boundary.size < M:
            boundary = disc.circle(g.eval, samples=M)

        zeta = np.exp(1j * boundary.theta)
        kernel = (1 - abs(a) ** 2) / np.absolute(zeta - a) ** 2

        value = np.sum(boundary.weights * kernel
            * np.absolute(boundary.values - ga) ** p) ** (1 / p)

        size = boundary.size

    else:
        def pullback(z):
            return g.eval(disc.mobius(a, z)) - ga

        if rule == 'uniform':
            circle = disc.circle(pullback, samples=4 * samples
                if g.singular.size else samples)
        else:
            breaks = disc.arguments(a, g.breaks)

            if a:
                breaks = np.append(breaks, np.angle(a))

            parts = 1

            if g.polynomial:
                def parts(edges):
                    phi = np.unwrap(disc.arguments(a, edges))

                    return np.ceil(g.degree * np.absolute(np.diff(phi)) / 4)

            circle = disc.circle(pullback, breaks=breaks, depth=levels(a),
                parts=parts)

        value = boundary_hp_norm(circle, p)
        size = circle.size

    return NormResult(value, degree_used=g.degree or 0, samples_used=size,
        resolved=resolved(g, a, kappa), method=rule)

def sweep(g, grid=None, p=2, kappa=kappa, title='seminorm'):
    """Evaluate Möbius-centered norms on all grid points.

    Returns
    -------
    ndarray, list of NormResult
        Grid points in lexicographic order and the norms there.
    """
    if grid is None:
        grid = SeminormGrid.default(g)

    points = grid.points()

    data = None

    if method(g, 0) == 'poisson':
        data = boundary(g, points[np.argmax(np.absolute(points))],
            grid.samples_per_circle)

    status = misc.StatusBar(len(points), title=title)

    results = MPI.map(lambda a: mobius_centered_norm(g, a, p,
        grid.samples_per_circle, kappa, data), points, status=status)

    return points, results

def supremum(points, values, results):
    """Reduce sweep to maximum with first (lexicographic) argmax."""

    i = int(np.argmax(values))

    return NormResult(values[i],
        degree_used=max(result.degree_used for result in results),
        samples_used=max(result.samples_used for result in results),
        resolved=all(result.resolved for result in results),
        argmax=complex(points[i]),
        method=results[i].method)

def rungs(points, values):
    """Get maxima per nonzero radius in increasing order."""

    radii = np.round(np.absolute(points), 15)

    unique = np.unique(radii[radii > 0])

    return unique, np.array([values[radii == r].max() for r in unique])

def bmoa_seminorm(g, grid=None, p=2, kappa=kappa):
    """Estimate BMOA seminorm by the maximum over a grid.

    .. math::

        \\|g\\|_* = \\sup_{a \\in D} \\|g \\circ \\sigma_a - g(a)\\|_{H^p}

    Parameters
    ----------
    g : Symbol
        Analytic symbol.
    grid : SeminormGrid
        Centers :math:`a`; defaults to :meth:`SeminormGrid.default`.
    p : float
        Exponent.
    kappa : float
        Resolution-guard constant.

    Returns
    -------
    NormResult
        Grid maximum (a lower bound for the supremum) and its argmax.
    """
    points, results = sweep(g, grid, p, kappa)

    values = np.array([result.value for result in results])

    result = supremum(points, values, results)
    result.rungs = rungs(points, values)

    return result

def lmoa_seminorm(g, grid=None, kappa=kappa):
    """Estimate logarithmic BMOA seminorm by the maximum over a grid.

    .. math::

        \\|g\\|_{*, \\log}
            = \\sup_{a \\in D} \\lambda(a) \\|g \\circ \\sigma_a - g(a)\\|_{H^2}

    The result is flagged ``'diverging'`` if each of the final three
    per-radius maxima exceeds its predecessor by more than 10%.
    """
    points, results = sweep(g, grid, 2, kappa, title='log seminorm')

    weights = np.log(2 / (1 - np.absolute(points)))

    values = weights * np.array([result.value for result in results])

    result = supremum(points, values, results)
    result.rungs = rungs(points, values)
    result.flag = ladder.trend(result.rungs[1])

    return result

def subordination_gap(g, r, a, p=2):
    r"""Calculate gap of Littlewood subordination inequality.

    .. math::

        \|g \circ \sigma_{r a} - g(r a)\|_{H^p}
            - \|g_r \circ \sigma_a - g_r(a)\|_{H^p} \ge 0
    """
    r = float(r)

    if not 0 < r <= 1:
        raise misc.InvalidParameter('dilation r must lie in (0, 1]')

    a = disc.point(a)

    lhs = mobius_centered_norm(g.dilate(r), a, p)
    rhs = mobius_centered_norm(g, r * a, p)

    return rhs.value - lhs.value

def garsia_norm(g, a):
    r"""Calculate Möbius-centered :math:`H^2` norm of polynomial symbol.

    Uses :math:`\|g \circ \sigma_a - g(a)\|_{H^2}^2 = P[|g|^2](a) - |g(a)|^2`
    with the Poisson extension of :math:`|g|^2` computed from the
    coefficients.
    """
    if not g.polynomial:
        raise misc.UnsupportedSymbol('Garsia norm needs polynomial symbol')

    a = disc.point(a)

    n, c = g.terms

    k = n[:, None] - n[None, :]

    harmonic = np.where(k >= 0, a ** np.abs(k), np.conj(a) ** np.abs(k))

    poisson = np.real(c @ harmonic @ np.conj(c))

    return float(np.sqrt(max(poisson - abs(g.eval(a)) ** 2, 0.0)))

if __name__ == '__main__':
    from . import symbols

    info = MPI.info

    info('Identity at a = 0.6: %.12f (expected 0.8)'
        % mobius_centered_norm(symbols.identity(), 0.6).value)

    info('Lambda profile maximum: s = %.6f, value = %.6f'
        % lambda_profile_max())
