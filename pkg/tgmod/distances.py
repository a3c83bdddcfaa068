#!/usr/bin/env python3

# Copyright (C) 2026 tgmod Developers
# This program is free software under the terms of the GNU GPLv3 or later.

"""Radial ladders, distance proxies, and essential-norm reports."""

import numpy as np

from . import carleson, hardy, ladder, misc, MPI, volterra
comm = MPI.comm

depth = 40 # default ladder depth for exact symbols
compact = 0.01 # relative threshold below which a proxy is compact-like
noncompact = 0.1 # relative threshold above which a proxy is not

def cap(g, levels, kappa=hardy.kappa):
    """Limit ladder depth by the resolution guard."""

    if g.exact:
        return levels

    return min(levels, int(np.floor(np.log2(g.degree / kappa))))

def ladder_grid(g, levels=depth, angles=64):
    """Get seminorm grid of radii :math:`1 - 2^{-j}` and zero."""

    return hardy.SeminormGrid.default(g, levels, angles)

def radial_ladder(g, p=2, levels=10, angles=64, weight=None,
        kappa=hardy.kappa):
    """Calculate ladder of Möbius-centered norms toward the boundary.

    Rung :math:`j` is the maximum over the angle grid of
    :math:`w(a) \\|g \\circ \\sigma_a - g(a)\\|_{H^p}` at :math:`|a| = 1 -
    2^{-j}`, where :math:`w = 1` or :math:`w = \\lambda`.

    Parameters
    ----------
    g : Symbol
        Analytic symbol.
    p : float
        Exponent.
    levels : int
        Number of rungs :math:`J \\ge 3`; symbols defined by truncated series
        are capped at the resolution guard.
    angles : int
        Number of equispaced angles (singular angles are added).
    weight : str
        None or ``'lambda'``.
    kappa : float
        Resolution-guard constant.

    Returns
    -------
    Ladder
        Ladder over :math:`|a|`. The summary holds the value at the origin,
        the number of levels used, and the resolution status.
    """
    if levels < 3:
        raise misc.InvalidParameter('ladder needs at least three levels')

    if weight not in (None, 'none', 'lambda'):
        raise misc.InvalidParameter('unknown weight %r' % weight)

    used = cap(g, levels, kappa)

    if used < 3:
        raise misc.Unresolved('truncated symbol resolves fewer than three '
            'levels')

    points, results = hardy.sweep(g, ladder_grid(g, used, angles), p, kappa,
        title='radial ladder')

    values = np.array([result.value for result in results])

    if weight == 'lambda':
        values = values * np.log(2 / (1 - np.absolute(points)))

    radii = np.round(np.absolute(points), 15)

    moduli, rungs, phi = [], [], []

    for r in np.unique(radii[radii > 0]):
        i = np.nonzero(radii == r)[0]
        k = i[np.argmax(values[i])]

        moduli.append(r)
        rungs.append(values[k])
        phi.append(np.mod(np.angle(points[k]), 2 * np.pi))

    return ladder.Ladder(moduli, rungs, phi, name='radius', summary=dict(
        p=p,
        weight='lambda' if weight == 'lambda' else None,
        origin=values[radii == 0][0],
        levels=used,
        resolved=all(result.resolved for result in results),
        finite=bool(np.all(np.isfinite(values))),
        ))

def scale(ladder):
    """Get classification scale: seminorm on the ladder grid, floor one."""

    return max(ladder.values.max(), ladder.summary['origin'], 1.0)

def dist_vmoa(g, p=2, levels=None, angles=64):
    """Estimate :math:`\\mathrm{dist}(g, \\mathrm{VMOA})` up to constants.

    .. math::

        \\mathrm{dist}(g, \\mathrm{VMOA}) \\simeq \\limsup_{|a| \\to 1}
            \\|g \\circ \\sigma_a - g(a)\\|_{H^p}

    Returns
    -------
    float, Ladder
        Tail estimate of the unweighted radial ladder and the ladder.
    """
    if levels is None:
        levels = depth

    result = radial_ladder(g, p, levels, angles)

    if not result.summary['resolved'] or not result.summary['finite']:
        raise misc.Unresolved('BMOA seminorm not resolved on ladder grid')

    return result.tail_estimate, result

def lmoa_gate(g, kappa=hardy.kappa):
    """Check logarithmic BMOA membership numerically.

    Returns
    -------
    NormResult
        Logarithmic seminorm on the default grid.

    Raises
    ------
    NotInLMOA
        If the λ-weighted ladder is diverging; the ladder is attached.
    """
    result = hardy.lmoa_seminorm(g, kappa=kappa)

    if result.flag == 'diverging':
        levels, values = result.rungs

        raise misc.NotInLMOA('logarithmic seminorm diverges',
            ladder.Ladder(levels, values, name='radius',
                summary=dict(weight='lambda')))

    return result

def dist_lvmoa(g, levels=None, angles=64, sizes=None, quad=None):
    """Estimate :math:`\\mathrm{dist}(g, \\mathrm{LVMOA})` up to constants.

    .. math::

        \\mathrm{dist}(g, \\mathrm{LVMOA}) \\simeq \\limsup_{|a| \\to 1}
            \\lambda(a) \\|g \\circ \\sigma_a - g(a)\\|_{H^2}
            \\simeq \\limsup_{|I| \\to 0} \\log \\frac 2 {|I|}
            \\sqrt{\\frac{\\mu(g, I)}{|I|}}

    Returns
    -------
    float, Ladder, dict
        λ-weighted tail estimate, its ladder, and the cross-check with the
        logarithmic Carleson ladder (``alpha_hat_sqrt``, ``ratio``).
    """
    lmoa_gate(g)

    if levels is None:
        levels = depth

    result = radial_ladder(g, 2, levels, angles, weight='lambda')

    if not result.summary['resolved'] or not result.summary['finite']:
        raise misc.Unresolved('LMOA seminorm not resolved on ladder grid')

    if sizes is None:
        sizes = 2.0 ** -np.arange(1, min(result.summary['levels'], 16) + 1)

    logc = carleson.log_carleson_ladder(g, sizes, quad=quad)

    root = np.sqrt(logc.alpha_hat)

    cross = dict(alpha_hat_sqrt=root,
        ratio=result.tail_estimate / root if root > 0 else None)

    return result.tail_estimate, result, cross

def classify(proxy, scale):
    """Apply classification thresholds relative to scale."""

    if proxy < compact * scale:
        return 'compact-like'

    if proxy > noncompact * scale:
        return 'non-compact-like'

    return 'indeterminate'

class EssentialNormReport(object):
    """Distance proxy with ladder, classification, and cited equivalence.

    Parameters
    ----------
    space : str
        ``'H^p'``, ``'BMOA'``, or ``'VMOA'``.
    p : float
        Exponent of Hardy space targets.
    dist_proxy : float
        Ladder tail estimate.
    ladder : Ladder
        Ladder behind the proxy.
    classification : str
        ``'compact-like'``, ``'non-compact-like'``, ``'indeterminate'``, or
        ``'not-bounded-like'``.
    equivalence : str
        ``'Thm1.1'`` (Hardy spaces) or ``'Thm1.2'`` (BMOA and VMOA).
    norms : list of str
        Essential norms instantiated by the proxy.
    cross_check : dict
        Logarithmic Carleson cross-check for BMOA and VMOA targets.
    test_function : dict
        Test-function lower bound for Hardy space targets.
    """
    def __init__(self, space, p, dist_proxy, ladder, classification,
            equivalence, norms, cross_check=None, test_function=None):

        self.space = space
        self.p = p
        self.dist_proxy = float(dist_proxy)
        self.ladder = ladder
        self.classification = classification
        self.equivalence = equivalence
        self.norms = norms
        self.cross_check = cross_check
        self.test_function = test_function

    def to_dict(self):
        data = dict(
            space=self.space,
            p=self.p,
            dist_proxy=self.dist_proxy,
            classification=self.classification,
            equivalence=self.equivalence,
            norms=self.norms,
            flag=self.ladder.flag,
            ladder=self.ladder.to_dict()['rungs'],
            cross_check=self.cross_check,
            )

        if 'weak-essential' in self.norms:
            data['weak_essential_proxy'] = self.dist_proxy

        data['test_function'] = self.test_function

        return data

def parse_space(space, p=None):
    """Normalize target space name.

    Returns
    -------
    str, float
        ``'H^p'``, ``'BMOA'``, or ``'VMOA'`` and the exponent (None for the
        latter two).
    """
    name = str(space).strip().upper().replace('^', '')

    if name in ('BMOA', 'VMOA'):
        return name, None

    if name.startswith('H'):
        rest = name[1:]

        if rest not in ('', 'P'):
            p = float(rest)

        if p is None:
            raise misc.InvalidParameter('Hardy space needs exponent p')

        if not float(p) >= 1:
            raise misc.InvalidParameter('Hardy space exponent must be >= 1')

        return 'H^p', float(p)

    raise misc.InvalidParameter('unknown space %r' % space)

def essential_norm_report(g, space, p=None, levels=None, angles=64,
        test_function=False):
    """Assemble essential-norm report of :math:`T_g` on a target space.

    Hardy spaces use :math:`\\mathrm{dist}(g, \\mathrm{VMOA})`, which is
    equivalent to the essential norm and, for :math:`p = 1`, also to the
    weak essential norm. BMOA and VMOA use :math:`\\mathrm{dist}(g,
    \\mathrm{LVMOA})` under the hypothesis that :math:`g` lies in LMOA.

    Parameters
    ----------
    g : Symbol
        Analytic symbol.
    space : str
        Target space, e.g. ``'H2'``, ``'H^p'`` together with `p`, ``'BMOA'``,
        or ``'VMOA'``.
    p : float
        Exponent of Hardy spaces.
    levels : int
        Ladder depth (default 40, capped for truncated series).
    angles : int
        Number of equispaced angles.
    test_function : bool
        Add the test-function lower bound for Hardy space targets?

    Returns
    -------
    EssentialNormReport
        Report. Failing membership preconditions are reported as
        ``'not-bounded-like'`` with the failing ladder.
    """
    space, p = parse_space(space, p)

    if levels is None:
        levels = depth

    if space == 'H^p':
        norms = ['essential', 'weak-essential'] if p == 1 else ['essential']

        result = radial_ladder(g, 2, levels, angles)

        extra = None

        if test_function:
            lower = volterra.testfn_ladder(g, p, min(levels, 10))
            extra = dict(lower_bound=lower.tail_estimate, flag=lower.flag,
                ladder=lower.to_dict()['rungs'])

        if not result.summary['resolved'] or not result.summary['finite']:
            return EssentialNormReport(space, p, result.tail_estimate, result,
                'not-bounded-like', 'Thm1.1', norms,
                test_function=extra)

        return EssentialNormReport(space, p, result.tail_estimate, result,
            classify(result.tail_estimate, scale(result)), 'Thm1.1',
            norms, test_function=extra)

    norms = ['essential', 'weak-essential']

    try:
        proxy, result, cross = dist_lvmoa(g, levels, angles)

    except misc.NotInLMOA as error:
        MPI.info('%s: %s' % (space, error.detail))

        return EssentialNormReport(space, p, error.ladder.tail_estimate,
            error.ladder, 'not-bounded-like', 'Thm1.2', norms)

    except misc.Unresolved as error:
        MPI.info('%s: %s' % (space, error.detail))

        result = radial_ladder(g, 2, levels, angles, weight='lambda')

        return EssentialNormReport(space, p, result.tail_estimate, result,
            'not-bounded-like', 'Thm1.2', norms)

    return EssentialNormReport(space, p, proxy, result,
        classify(proxy, scale(result)), 'Thm1.2', norms, cross)
