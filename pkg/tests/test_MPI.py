#!/usr/bin/env python3

# Copyright (C) 2026 tgmod Developers
# This program is free software under the terms of the GNU GPLv3 or later.

import threading

import numpy as np

from tgmod import MPI

def test_distribute():
    sizes, cumsum = MPI.distribute(10, bounds=True, chunks=4)

    assert list(sizes) == [3, 3, 2, 2]
    assert list(cumsum) == [0, 3, 6, 8, 10]

def test_threads(monkeypatch):
    monkeypatch.setenv('TGMOD_THREADS', '4')
    assert MPI.threads() == 4

    monkeypatch.setenv('TGMOD_THREADS', 'many')
    assert MPI.threads() == 1

def test_map_order(monkeypatch):
    items = list(range(50))

    serial = MPI.map(lambda x: x ** 2, items)

    monkeypatch.setenv('TGMOD_THREADS', '3')

    threaded = MPI.map(lambda x: x ** 2, items)

    assert serial == threaded == [x ** 2 for x in items]

def test_map_reduction(monkeypatch):
    values = np.random.default_rng(0).standard_normal(100)

    serial = sum(MPI.map(lambda x: x / 3, values))

    monkeypatch.setenv('TGMOD_THREADS', '8')

    assert sum(MPI.map(lambda x: x / 3, values)) == serial

def test_map_status(monkeypatch):
    class Status(object):
        def __init__(self):
            self.callers = []

        def update(self):
            self.callers.append(threading.get_ident())

    monkeypatch.setenv('TGMOD_THREADS', '4')

    status = Status()

    MPI.map(lambda x: x + 1, range(20), status=status)

    assert status.callers == [threading.get_ident()] * 20
