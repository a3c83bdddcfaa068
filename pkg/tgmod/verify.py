#!/usr/bin/env python3

# Copyright (C) 2026 tgmod Developers
# This program is free software under the terms of the GNU GPLv3 or later.

"""Acceptance checks of identities, inequalities, and classifications."""

import time

import numpy as np
import scipy.stats

from . import carleson, disc, distances, hardy, misc, MPI, series, symbols
from . import volterra

def registry_symbols():
    """Get one representative of every registry entry."""

    return [
        symbols.identity(),
        symbols.cesaro(),
        symbols.log_kernel(0.5j),
        symbols.hp_test(0.5, 2),
        symbols.power(3),
        symbols.polynomial([1, 2, 0, -1j]),
        symbols.lacunary(),
        symbols.dilate(symbols.cesaro(), 0.9),
        ]

def check(name, passed, value, tolerance, **extra):
    record = dict(name=name, passed=bool(passed), value=value,
        tolerance=tolerance)
    record.update(extra)
    return record

def psi_identity():
    """Compare quadrature of :math:`\\|\\psi_{r, a}\\|_{H^2}^2` with its closed
    form."""

    grid = np.linspace(0.1, 0.9, 9)

    error = 0.0

    for r in grid:
        for a in grid:
            circle = disc.circle(lambda z: disc.psi(r, a, z))

            square = hardy.boundary_hp_norm(circle, 2) ** 2
            exact = disc.psi_h2_closed(r, a)

            error = max(error, abs(square - exact) / exact)

    return check('psi-identity', error < 1e-10, error, 1e-10)

def testfn_normalization():
    """Check :math:`\\|f_a\\|_{H^p} = 1` for test functions."""

    points = [r * np.exp(2j * np.pi * k / 3)
        for r in np.linspace(0, 0.99, 8) for k in range(3)]

    error = 0.0

    for p in 1, 2, 4:
        for a in points:
            error = max(error, abs(hardy.hp_norm(volterra.hp_testfn(a, p), p)
                - 1))

    return check('testfn-normalization', error < 1e-6, error, 1e-6)

def parseval(count=100, seed=0):
    """Compare coefficient and boundary :math:`H^2` norms."""

    rng = np.random.default_rng(seed)

    error = 0.0

    for _ in range(count):
        N = rng.integers(0, 257)

        p = rng.standard_normal(N + 1) + 1j * rng.standard_normal(N + 1)

        circle = disc.circle(lambda z: series.evaluate(p, z))

        error = max(error, abs(hardy.h2_series_norm(p)
            - hardy.boundary_hp_norm(circle, 2)))

    return check('parseval', error < 1e-12, error, 1e-12)

def identity_closed_forms():
    """Check closed forms for the identity symbol."""

    g = symbols.identity()

    error = 0.0

    for r in np.linspace(0, 0.99, 12):
        for phi in 0.0, 1.0, 4.0:
            a = r * np.exp(1j * phi)

            error = max(error, abs(hardy.mobius_centered_norm(g, a).value
                - np.sqrt(1 - r ** 2)))

    mu = carleson.mu_window(g, carleson.Arc(0.0, 0.5))

    return check('identity-closed-forms', error < 1e-10
        and abs(mu - 0.140625) < 1e-6, error, 1e-10, mu_window=mu)

def cesaro_ladder():
    """Compare Cesàro ladder with the limit :math:`\\pi / \\sqrt 2`."""

    result = distances.radial_ladder(symbols.cesaro(), 2, levels=10)

    limit = np.pi / np.sqrt(2)

    error = abs(result.values[-1] - limit) / limit

    return check('cesaro-ladder', error < 0.05
        and np.isclose(np.cos(result.angles[-1]), 1), result.values[-1], 0.05,
        limit=limit, angle=result.angles[-1])

def subordination(count=1000, seed=0):
    """Check Littlewood subordination on random draws."""

    rng = np.random.default_rng(seed)

    candidates = registry_symbols()

    gap = np.inf

    status = misc.StatusBar(count, title='subordination')

    for _ in range(count):
        g = candidates[rng.integers(len(candidates))]

        r = 1 - rng.random()
        a = 0.95 * np.sqrt(rng.random()) * np.exp(2j * np.pi * rng.random())
        p = rng.choice([0.5, 1.0, 2.0, 4.0])

        gap = min(gap, hardy.subordination_gap(g, r, a, p))

        status.update()

    return check('subordination', gap >= -1e-9, gap, -1e-9)

def lambda_monotonicity():
    """Check that :math:`\\lambda(s) \\sqrt{1 - s^2}` decreases near one."""

    s = np.linspace(0.9, 1 - 1e-6, 1000)

    step = np.diff(hardy.lambda_profile(s)).max()

    return check('lambda-monotonicity', step <= 0, step, 0.0)

def tail_decay():
    """Fit decay of off-arc tail integrals of the Cesàro symbol."""

    g = symbols.cesaro()

    a = 1 - 2.0 ** -np.arange(4, 11)

    values = np.array([volterra.offarc_tail_integral(g, x).value for x in a])

    slope = scipy.stats.linregress(np.log(1 - a), np.log(values)).slope

    return check('tail-decay', slope >= 0.45
        and np.all(np.diff(values) < 0), slope, 0.45,
        values=values.tolist())

def carleson_bracket():
    """Compare Carleson-form and Möbius-form seminorms."""

    ratios = dict()

    for g in registry_symbols():
        ratios[g.name] = (carleson.carleson_seminorm(g).value
            / hardy.bmoa_seminorm(g).value)

    proxy, ladder, cross = distances.dist_lvmoa(symbols.lacunary())

    values = list(ratios.values()) + [cross['ratio']]

    passed = all(r is not None and 0.1 <= r <= 10 for r in values)

    return check('carleson-bracket', passed, ratios, [0.1, 10],
        lacunary_ratio=cross['ratio'])

def leibov():
    """Check norms and window constants of the Leibov sequence."""

    sequence = volterra.leibov_build()

    rows = sequence.diagnostics(seminorm=False)

    error = max(abs(row['h2_norm_series'] - row['h2_norm_quad'])
        for row in rows[:10])

    norms = [row['h2_norm_series'] for row in rows]

    c = min(row['empirical_c'] for row in rows[1:12])

    return check('leibov', error < 1e-8 and np.all(np.diff(norms) < 0)
        and c >= 0.1, error, 1e-8, empirical_c=c)

def reverse_holder():
    """Compare seminorms for different exponents."""

    ratios = []

    for g in registry_symbols():
        grid = hardy.SeminormGrid.default(g, levels=8, angles=16)

        two = hardy.bmoa_seminorm(g, grid).value

        for p in 0.5, 1, 4:
            ratios.append(hardy.bmoa_seminorm(g, grid, p).value / two)

    return check('reverse-holder', min(ratios) >= 0.1 and max(ratios) <= 10,
        [min(ratios), max(ratios)], [0.1, 10])

def classification():
    """Run the compactness dichotomy on standard symbols."""

    cesaro = symbols.cesaro()

    cases = [
        (symbols.identity(), 'H2', 'compact-like'),
        (cesaro, 'H1', 'non-compact-like'),
        (cesaro, 'BMOA', 'not-bounded-like'),
        (symbols.polynomial([0, 1, 0.5]), 'BMOA', 'compact-like'),
        ]

    outcome = []
    passed = True

    for g, space, expected in cases:
        report = distances.essential_norm_report(g, space)

        outcome.append(dict(symbol=g.name, space=space,
            classification=report.classification, proxy=report.dist_proxy))

        passed &= report.classification == expected

        if space == 'H1':
            passed &= 'weak-essential' in report.norms

        if space == 'BMOA' and expected == 'compact-like':
            passed &= report.dist_proxy < 1e-3

    return check('classification', passed, outcome, None)

checks = {
    'psi-identity': psi_identity,
    'testfn-normalization': testfn_normalization,
    'parseval': parseval,
    'identity-closed-forms': identity_closed_forms,
    'cesaro-ladder': cesaro_ladder,
    'subordination': subordination,
    'lambda-monotonicity': lambda_monotonicity,
    'tail-decay': tail_decay,
    'carleson-bracket': carleson_bracket,
    'leibov': leibov,
    'reverse-holder': reverse_holder,
    'classification': classification,
    }

def selection(suite):
    """Parse comma-separated or listed suite names (``'all'`` selects all)."""

    if suite is None or suite == 'all':
        return list(checks)

    if isinstance(suite, str):
        suite = suite.split(',')

    names = [name.strip() for name in suite if name.strip()]

    unknown = [name for name in names if name not in checks]

    if unknown:
        raise misc.InvalidParameter('unknown checks: %s' % ', '.join(unknown))

    return names

def verify_suite(suite='all', budget=None):
    """Run acceptance checks.

    Parameters
    ----------
    suite : str or list
        ``'all'``, comma-separated names, or list of names.
    budget : float
        Time limit in seconds, tested after each check.

    Returns
    -------
    dict
        Report with per-check records and overall status.

    Raises
    ------
    BudgetExceeded
        If the time limit is exceeded; the partial report is attached as
        `report`.
    """
    names = selection(suite)

    start = time.monotonic()

    report = dict(checks=[], passed=True)

    for name in names:
        MPI.info('Running check %s' % name)

        tic = time.monotonic()

        record = checks[name]()
        record['seconds'] = time.monotonic() - tic

        report['checks'].append(record)
        report['passed'] &= record['passed']

        if budget is not None and time.monotonic() - start > budget:
            report['elapsed'] = time.monotonic() - start

            error = misc.BudgetExceeded('time budget of %g s exceeded after %s'
                % (budget, name))
            error.report = report

            raise error

    report['elapsed'] = time.monotonic() - start

    return report
