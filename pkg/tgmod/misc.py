#!/usr/bin/env python3

# Copyright (C) 2026 tgmod Developers
# This program is free software under the terms of the GNU GPLv3 or later.

"""Errors, status bars, and output formatting."""

import json
import math
import os
import sys
import tempfile

import numpy as np

from . import MPI
comm = MPI.comm

class Error(Exception):
    """Computational error with machine-readable kind.

    Parameters
    ----------
    detail : str
        Human-readable description.

    Attributes
    ----------
    kind : str
        Error class as emitted by the command-line interface.
    """
    kind = 'error'

    def __init__(self, detail=''):
        Exception.__init__(self, detail)
        self.detail = detail

    def record(self):
        """Get error as ``{error: kind, detail: detail}``."""

        return dict(error=self.kind, detail=self.detail)

class InvalidParameter(Error, ValueError):
    kind = 'invalid-parameter'

class UnsupportedSymbol(Error, ValueError):
    kind = 'unsupported-symbol'

class SingularSample(Error):
    kind = 'singular-sample'

class SingularRay(Error):
    kind = 'singular-ray'

class DegenerateSymbol(Error):
    kind = 'degenerate-symbol'

class Unresolved(Error):
    kind = 'unresolved'

class NotInLMOA(Error):
    kind = 'not-in-lmoa'

    def __init__(self, detail='', ladder=None):
        Error.__init__(self, detail)
        self.ladder = ladder

class BudgetExceeded(Error):
    kind = 'budget-exceeded'

progress = False

def verbosity(show_progress):
    """Enable or disable progress bars."""

    global progress
    progress = bool(show_progress)

class StatusBar(object):
    def __init__(self, count, width=60, title='progress'):
        self.active = progress and comm.rank == 0 and count > 0

        if not self.active:
            return

        self.counter = 0
        self.count = count
        self.width = width
        self.progress = 0

        sys.stderr.write((' %s ' % title).center(width, '_'))
        sys.stderr.write('\n')

    def update(self):
        if not self.active:
            return

        self.counter += 1

        progress = self.width * self.counter // self.count

        if progress != self.progress:
            sys.stderr.write('=' * (progress - self.progress))
            sys.stderr.flush()

            self.progress = progress

        if self.counter == self.count:
            sys.stderr.write('\n')

def number(x):
    """Convert float for JSON output.

    Finite numbers keep their shortest round-trip representation (at most 17
    significant digits); infinities and NaN become ``None``.
    """
    x = float(x)

    if not math.isfinite(x):
        return None

    return x

def plain(data):
    """Convert nested results to JSON-compatible Python objects."""

    if hasattr(data, 'to_dict'):
        return plain(data.to_dict())

    if isinstance(data, dict):
        return dict((str(key), plain(value)) for key, value in data.items())

    if isinstance(data, (list, tuple)):
        return [plain(value) for value in data]

    if isinstance(data, np.ndarray):
        return plain(data.tolist())

    if isinstance(data, (bool, np.bool_)):
        return bool(data)

    if isinstance(data, (int, np.integer)):
        return int(data)

    if isinstance(data, (float, np.floating)):
        return number(data)

    if isinstance(data, (complex, np.complexfloating)):
        return [number(data.real), number(data.imag)]

    return data

def dumps(data):
    """Serialize results as deterministic JSON document."""

    return json.dumps(plain(data), indent=2, allow_nan=False) + '\n'

def csv(header, rows):
    """Format table as CSV with '.' as decimal separator."""

    def cell(value):
        if value is None:
            return ''

        if isinstance(value, (float, np.floating)):
            value = number(value)
            return '' if value is None else repr(value)

        return str(value)

    lines = [','.join(header)]
    lines.extend(','.join(cell(value) for value in row) for row in rows)

    return '\n'.join(lines) + '\n'

def write(filename, text):
    """Write text to file atomically (temporary file and rename)."""

    if comm.rank != 0:
        return

    directory = os.path.dirname(os.path.abspath(filename))

    handle, tmp = tempfile.mkstemp(dir=directory, prefix='.tgmod-')

    try:
        with os.fdopen(handle, 'w', encoding='utf-8', newline='') as data:
            data.write(text)

        os.replace(tmp, filename)

    except BaseException:
        if os.path.exists(tmp):
            os.remove(tmp)
        raise
