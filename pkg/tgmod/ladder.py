#!/usr/bin/env python3

# Copyright (C) 2026 tgmod Developers
# This program is free software under the terms of the GNU GPLv3 or later.

"""Ladders of values for limsup estimation."""

import numpy as np

from . import misc

growth = 0.1 # relative increase per rung flagged as divergence
window = 3 # number of final rungs entering tail estimate and trend

def trend(values, growth=growth, window=window):
    """Classify the final rungs of a ladder.

    Parameters
    ----------
    values : array_like
        Rung values in ladder order.
    growth : float
        Relative increase that counts as growth.
    window : int
        Number of final rungs considered.

    Returns
    -------
    str
        ``'diverging'`` if each of the final rungs exceeds its predecessor by
        more than `growth`, ``'converging'`` if they are non-increasing or all
        zero, and ``'indeterminate'`` otherwise.
    """
    values = np.asarray(values, dtype=float)

    tail = values[-window - 1:]

    if tail.size < 2:
        return 'indeterminate'

    if np.all(tail[-window:] == 0):
        return 'converging'

    if np.all(tail[1:] > (1 + growth) * tail[:-1]):
        return 'diverging'

    if np.all(np.diff(values[-window:]) <= 0):
        return 'converging'

    return 'indeterminate'

class Ladder(object):
    """Ordered sequence of (level, value) pairs.

    Parameters
    ----------
    levels : array_like
        Strictly monotone level parameters (e.g. :math:`|a|` or :math:`|I|`).
    values : array_like
        Nonnegative rung values.
    angles : array_like
        Angles attaining the rung values.
    name : str
        Name of the level parameter in tables.
    columns : dict
        Additional columns, emitted between level and value.
    summary : dict
        Additional summary entries of the JSON record.

    Attributes
    ----------
    tail_estimate : float
        Maximum of the final three values.
    flag : str
        Result of :func:`trend`.
    """
    def __init__(self, levels, values, angles=None, name='level', columns=None,
            summary=None):

        self.levels = np.asarray(levels, dtype=float)
        self.values = np.asarray(values, dtype=float)
        self.name = name
        self.columns = columns or dict()
        self.summary = summary or dict()

        if angles is None:
            angles = np.zeros(self.levels.size)

        self.angles = np.asarray(angles, dtype=float)

        if not self.levels.size or self.levels.shape != self.values.shape:
            raise misc.InvalidParameter('ladder needs one value per level')

        steps = np.diff(self.levels)

        if not (np.all(steps > 0) or np.all(steps < 0)):
            raise misc.InvalidParameter('ladder levels must be monotone')

        if np.any(self.values < 0):
            raise misc.InvalidParameter('ladder values must be nonnegative')

        self.tail_estimate = float(self.values[-window:].max())
        self.flag = trend(self.values)

    def __len__(self):
        return self.levels.size

    def __mul__(self, c):
        return Ladder(self.levels, abs(c) * self.values, self.angles,
            self.name, self.columns, self.summary)

    __rmul__ = __mul__

    def header(self):
        return [self.name] + list(self.columns) + ['value', 'angle']

    def rows(self):
        for i in range(len(self)):
            yield ([self.levels[i]]
                + [self.columns[key][i] for key in self.columns]
                + [self.values[i], self.angles[i]])

    def to_csv(self):
        """Format rungs as CSV table with one-line header."""

        return misc.csv(self.header(), self.rows())

    def to_dict(self):
        data = dict(self.summary)

        data['tail_estimate'] = self.tail_estimate
        data['flag'] = self.flag
        data['rungs'] = [dict(zip(self.header(), row)) for row in self.rows()]

        return data
