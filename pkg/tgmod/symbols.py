#!/usr/bin/env python3

# Copyright (C) 2026 tgmod Developers
# This program is free software under the terms of the GNU GPLv3 or later.

"""Analytic functions on the unit disc with closed forms and Taylor series."""

import json

import numpy as np

from . import disc, misc, series

class Symbol(object):
    """Analytic function on the unit disc.

    Every symbol carries a pointwise evaluator, the pointwise derivative, and
    a generator of Maclaurin coefficients. Polynomial-type symbols (finite
    linear combinations of powers) additionally store their nonzero terms,
    which allows exact window integrals and Poisson-weighted boundary norms.

    Parameters
    ----------
    name : str
        Registry name or description of a derived symbol.
    params : dict
        Parameters as given to :func:`symbol`.
    value, deriv : function
        Vectorized evaluators of :math:`g` and :math:`g'`.
    taylor : function
        Maps degree `N` to the coefficients up to :math:`z^N`.
    singular : array_like
        Boundary angles where the closed form is singular.
    peaks : array_like
        Boundary angles where the function varies rapidly without being
        singular (nearby singularities outside the closed disc).
    terms : tuple of ndarray
        Exponents and coefficients of polynomial-type symbols.
    exact : bool
        Is the evaluator exact? False for truncated infinite series, which
        are subject to the resolution guard.

    Attributes
    ----------
    degree : int or None
        Largest exponent of polynomial-type symbols.
    """
    def __init__(self, name, params, value, deriv, taylor, singular=(),
            peaks=(), terms=None, exact=True):

        self.name = name
        self.params = params
        self._value = value
        self._deriv = deriv
        self._taylor = taylor
        self.singular = np.unique(np.mod(np.asarray(singular, dtype=float),
            2 * np.pi))
        self.peaks = np.unique(np.mod(np.asarray(peaks, dtype=float),
            2 * np.pi))
        self.terms = terms
        self.exact = exact

        if terms is None:
            self.degree = None
        else:
            self.degree = int(terms[0].max()) if terms[0].size else 0

    def __repr__(self):
        return 'Symbol(%r, %r)' % (self.name, self.params)

    def eval(self, z):
        """Evaluate symbol at interior or boundary points."""

        with np.errstate(divide='ignore', invalid='ignore'):
            return self._value(np.asarray(z, dtype=complex))

    def deriv(self, z):
        """Evaluate derivative of symbol."""

        with np.errstate(divide='ignore', invalid='ignore'):
            return self._deriv(np.asarray(z, dtype=complex))

    def taylor(self, N):
        """Get Maclaurin coefficients up to degree `N`."""

        if N < 0:
            raise misc.InvalidParameter('degree must be non-negative')

        return series.poly(self._taylor(int(N)))

    @property
    def breaks(self):
        """Special boundary angles (singular angles and peaks)."""

        return np.union1d(self.singular, self.peaks)

    @property
    def polynomial(self):
        return self.terms is not None

    @property
    def constant(self):
        return self.polynomial and not np.any(
            (self.terms[0] > 0) & (self.terms[1] != 0))

    def __neg__(self):
        return combine([(-1, self)])

    def __add__(self, other):
        return combine([(1, self), (1, other)])

    def __sub__(self, other):
        return combine([(1, self), (-1, other)])

    def __mul__(self, c):
        return combine([(c, self)])

    __rmul__ = __mul__

    def rotate(self, phi):
        r"""Get rotated symbol :math:`z \mapsto g(e^{-i \phi} z)`."""

        u = np.exp(-1j * phi)

        terms = None

        if self.polynomial:
            n, c = self.terms
            terms = n, c * u ** n

        return Symbol('rotate', dict(inner=self, phi=phi),
            value=lambda z: self._value(u * z),
            deriv=lambda z: u * self._deriv(u * z),
            taylor=lambda N: self._taylor(N) * u ** np.arange(N + 1),
            singular=self.singular + phi,
            peaks=self.peaks + phi,
            terms=terms,
            exact=self.exact)

    def dilate(self, r):
        r"""Get dilated symbol :math:`g_r(z) = g(r z)`."""

        r = float(r)

        if not 0 < r <= 1:
            raise misc.InvalidParameter('dilation r must lie in (0, 1]')

        if r == 1:
            return self

        terms = None

        if self.polynomial:
            n, c = self.terms
            terms = n, c * r ** n

        return Symbol('dilate', dict(inner=self, r=r),
            value=lambda z: self._value(r * z),
            deriv=lambda z: r * self._deriv(r * z),
            taylor=lambda N: self._taylor(N) * r ** np.arange(N + 1),
            peaks=self.breaks,
            terms=terms,
            exact=self.exact)

def combine(parts):
    """Form linear combination of symbols.

    Parameters
    ----------
    parts : list of (complex, Symbol)
        Coefficients and symbols.

    Returns
    -------
    Symbol
        :math:`\\sum_i c_i g_i`.
    """
    parts = [(complex(c), g) for c, g in parts]

    terms = None

    if all(g.polynomial for c, g in parts):
        n = np.concatenate([g.terms[0] for c, g in parts])
        v = np.concatenate([c * g.terms[1] for c, g in parts])

        terms = series.sparse(series.dense(n, v))

        if not terms[0].size:
            terms = np.zeros(1, dtype=int), np.zeros(1, dtype=complex)

    def value(z):
        return sum(c * g._value(z) for c, g in parts)

    def deriv(z):
        return sum(c * g._deriv(z) for c, g in parts)

    def taylor(N):
        return sum(c * series.truncate(g._taylor(N), N) for c, g in parts)

    if terms is not None:
        value, deriv = monomials(*terms)

    return Symbol('combine', dict(parts=parts),
        value=value,
        deriv=deriv,
        taylor=taylor,
        singular=np.concatenate([g.singular for c, g in parts]),
        peaks=np.concatenate([g.peaks for c, g in parts]),
        terms=terms,
        exact=all(g.exact for c, g in parts))

def monomials(n, c):
    """Get evaluators of finite sum of powers."""

    n = np.asarray(n, dtype=int)
    c = np.asarray(c, dtype=complex)

    dense = n.size and n.max() < 4 * n.size

    if dense:
        p = series.dense(n, c)
        dp = series.derivative(p)

        def value(z):
            return series.evaluate(p, z)

        def deriv(z):
            return series.evaluate(dp, z)

    else:
        def value(z):
            result = np.zeros(np.shape(z), dtype=complex)

            for k, ck in zip(n, c):
                result += ck * z ** k

            return result

        def deriv(z):
            result = np.zeros(np.shape(z), dtype=complex)

            for k, ck in zip(n, c):
                if k:
                    result += k * ck * z ** (k - 1)

            return result

    return value, deriv

def polynomial(coeffs, name='polynomial', params=None):
    """Create polynomial symbol from coefficients."""

    p = series.poly(coeffs)

    n, c = series.sparse(p)

    if not n.size:
        n, c = np.zeros(1, dtype=int), np.zeros(1, dtype=complex)

    value, deriv = monomials(n, c)

    if params is None:
        params = dict(coeffs=[[x.real, x.imag] for x in p])

    return Symbol(name, params,
        value=value,
        deriv=deriv,
        taylor=lambda N: series.truncate(p, N),
        terms=(n, c))

def constant(c=1.0):
    """Create constant symbol."""

    return polynomial([c], name='constant', params=dict(c=c))

def identity():
    """Create symbol :math:`g(z) = z` (classical Volterra operator)."""

    return polynomial([0, 1], name='identity', params=dict())

def power(k):
    """Create symbol :math:`g(z) = z^k`."""

    if int(k) != k or k < 0:
        raise misc.InvalidParameter('power must be a non-negative integer')

    k = int(k)

    n, c = np.array([k]), np.array([1.0 + 0j])

    value, deriv = monomials(n, c)

    return Symbol('power', dict(k=k),
        value=value,
        deriv=deriv,
        taylor=lambda N: series.dense(n, c, N),
        terms=(n, c))

def cesaro():
    """Create symbol :math:`g(z) = -\\log(1 - z)` (Cesàro operator)."""

    return Symbol('cesaro', dict(),
        value=lambda z: -np.log(1 - z),
        deriv=lambda z: 1 / (1 - z),
        taylor=lambda N: np.concatenate(([0], 1.0 / np.arange(1, N + 1))),
        singular=[0.0])

def log_kernel(u):
    r"""Create symbol :math:`f(z) = \log(1 - \bar u z)`.

    Parameters
    ----------
    u : complex
        Point with :math:`|u| \le 1`. For :math:`|u| = 1` the symbol is
        singular at :math:`\arg u`, otherwise it peaks there.
    """
    u = disc.point(u, strict=False)

    v = np.conj(u)

    def taylor(N):
        k = np.arange(1, N + 1)

        return np.concatenate(([0], -v ** k / k))

    singular = peaks = []

    if abs(u) == 1:
        singular = [np.angle(u)]
    elif u:
        peaks = [np.angle(u)]

    return Symbol('log_kernel', dict(u=u),
        value=lambda z: np.log(1 - v * z),
        deriv=lambda z: -v / (1 - v * z),
        taylor=taylor,
        singular=singular,
        peaks=peaks)

def hp_test(a, p):
    r"""Create normalized test function of :math:`H^p`.

    .. math::

        f_a(z) = \left[\frac{1 - |a|^2}{(1 - \bar a z)^2}\right]^{1 / p}
               = (1 - |a|^2)^{1 / p} (1 - \bar a z)^{-2 / p}

    Since :math:`\mathrm{Re}(1 - \bar a z) > 0` on the closed disc, the
    principal branches agree and :math:`\|f_a\|_{H^p} = 1`. The Taylor
    coefficients follow from the generalized binomial series.

    Parameters
    ----------
    a : complex
        Point with :math:`|a| < 1`.
    p : float
        Exponent :math:`p > 0`.
    """
    a = disc.point(a)
    p = float(p)

    if not p > 0:
        raise misc.InvalidParameter('exponent p must be positive')

    v = np.conj(a)
    s = 2 / p
    scale = (1 - abs(a) ** 2) ** (1 / p)

    def taylor(N):
        k = np.arange(1, N + 1)

        factors = np.concatenate(([1.0], (s + k - 1) / k * v))

        return scale * np.cumprod(factors)

    return Symbol('hp_test', dict(a=a, p=p),
        value=lambda z: scale * np.exp(-s * np.log(1 - v * z)),
        deriv=lambda z: scale * s * v * np.exp(-(s + 1) * np.log(1 - v * z)),
        taylor=taylor,
        peaks=[np.angle(a)] if a else [])

def lacunary(base=2, decay=1.5, terms=14):
    r"""Create lacunary series :math:`\sum_{k = 1}^K k^{-s} z^{b^k}`.

    The series is truncated after `terms` powers and therefore subject to the
    resolution guard: it represents the infinite series only at scales
    :math:`1 - |z| \gtrsim b^{-K}`.

    Parameters
    ----------
    base : int
        Base :math:`b \ge 2` of the exponents.
    decay : float
        Exponent :math:`s` of the coefficient law :math:`c_k = k^{-s}`.
    terms : int
        Number of terms :math:`K`.
    """
    if int(base) != base or base < 2:
        raise misc.InvalidParameter('lacunary base must be an integer >= 2')

    if int(terms) != terms or terms < 1:
        raise misc.InvalidParameter('number of terms must be positive')

    base, terms = int(base), int(terms)

    k = np.arange(1, terms + 1)

    n = base ** k
    c = k ** -float(decay) + 0j

    value, deriv = monomials(n, c)

    return Symbol('lacunary', dict(base=base, decay=decay, terms=terms),
        value=value,
        deriv=deriv,
        taylor=lambda N: series.dense(n, c, N),
        terms=(n, c),
        exact=False)

def dilate(inner, r):
    """Create dilation :math:`g_r(z) = g(r z)` of given symbol or record."""

    if not isinstance(inner, Symbol):
        inner = record(inner)

    return inner.dilate(r)

registry = dict(
    identity=identity,
    cesaro=cesaro,
    log_kernel=log_kernel,
    hp_test=hp_test,
    power=power,
    polynomial=polynomial,
    lacunary=lacunary,
    dilate=dilate,
    constant=constant,
    )

def symbol(name, **params):
    """Create symbol from registry.

    Parameters
    ----------
    name : str
        One of ``identity``, ``cesaro``, ``log_kernel(u)``, ``hp_test(a,
        p)``, ``power(k)``, ``polynomial(coeffs)``, ``lacunary(base, decay,
        terms)``, ``dilate(inner, r)``, ``constant(c)``.
    **params
        Parameters of the symbol. Complex numbers may be given as
        ``[re, im]`` pairs.

    Returns
    -------
    Symbol
        New symbol.
    """
    if name not in registry:
        raise misc.UnsupportedSymbol('unknown symbol %r' % name)

    for key in 'u', 'a', 'c':
        if key in params:
            params[key] = number(params[key])

    try:
        return registry[name](**params)

    except misc.Error:
        raise

    except TypeError as error:
        raise misc.UnsupportedSymbol('bad parameters for %r: %s'
            % (name, error))

    except ValueError as error:
        raise misc.InvalidParameter('bad parameter value for %r: %s'
            % (name, error))

def number(x):
    """Convert ``[re, im]`` pair or number to complex."""

    if isinstance(x, (list, tuple)) and len(x) != 2:
        raise misc.InvalidParameter('complex numbers are [re, im] pairs')

    try:
        if isinstance(x, (list, tuple)):
            return complex(float(x[0]), float(x[1]))

        return complex(x)

    except (TypeError, ValueError):
        raise misc.InvalidParameter('%r is not a complex number' % (x,))

def record(spec):
    """Create symbol from specification record.

    Parameters
    ----------
    spec : dict or str
        ``{"name": ..., "params": {...}}``, its JSON text, or a registry name.

    Returns
    -------
    Symbol
        New symbol.
    """
    if isinstance(spec, Symbol):
        return spec

    if isinstance(spec, str):
        text = spec.strip()

        if text.startswith('{'):
            try:
                spec = json.loads(text)
            except ValueError as error:
                raise misc.UnsupportedSymbol('bad symbol record: %s' % error)
        else:
            spec = dict(name=text)

    if not isinstance(spec, dict) or 'name' not in spec:
        raise misc.UnsupportedSymbol('symbol record needs a name')

    params = dict(spec.get('params') or {})

    if spec['name'] == 'dilate' and 'inner' in params:
        params['inner'] = record(params['inner'])

    return symbol(spec['name'], **params)
