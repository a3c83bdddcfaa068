#!/usr/bin/env python3

# Copyright (C) 2026 tgmod Developers
# This program is free software under the terms of the GNU GPLv3 or later.

"""Work distribution among processes and threads, and status messages."""

import logging
import os

import numpy as np

try:
    from mpi4py import MPI

except ImportError:
    class Communicator(object):
        def __init__(self):
            self.rank = 0
            self.size = 1

        def Barrier(self):
            pass

        def barrier(self):
            pass

        def Bcast(self, data):
            pass

        def bcast(self, data):
            return data

        def allgather(self, send):
            return [send]

        def allreduce(self, send):
            return send

    class Interface(object):
        def __init__(self):
            self.COMM_WORLD = Communicator()

    MPI = Interface()

comm = MPI.COMM_WORLD

logger = logging.getLogger('tgmod')

def threads():
    """Get number of worker threads per process from ``TGMOD_THREADS``."""

    try:
        count = int(os.environ.get('TGMOD_THREADS', 1))
    except ValueError:
        count = 1

    return max(count, 1)

def distribute(size, bounds=False, comm=comm, chunks=None):
    """Distribute work among processes.

    Parameters
    ----------
    size : int
        Number of work items.
    bounds : bool
        Also return the cumulative offsets of the chunks?
    comm : communicator
        MPI communicator.
    chunks : int
        Number of chunks. Defaults to the number of processes.

    Returns
    -------
    ndarray
        Number of items per chunk. The first ``size % chunks`` chunks carry
        one item more than the others.
    ndarray, optional
        Offsets of the chunks (length ``chunks + 1``).
    """
    if chunks is None:
        chunks = comm.size

    sizes = np.empty(chunks, dtype=int)

    if comm.rank == 0:
        sizes[:] = size // chunks
        sizes[:size % chunks] += 1

    comm.Bcast(sizes)

    if bounds:
        cumsum = np.zeros(chunks + 1, dtype=int)
        cumsum[1:] = np.cumsum(sizes)

        return sizes, cumsum

    return sizes

def map(function, items, comm=comm, status=None):
    """Evaluate function on all items, distributed among processes.

    Each process evaluates a contiguous chunk of `items`, optionally using a
    pool of ``TGMOD_THREADS`` threads. The results are gathered on all
    processes in the original order, so that any subsequent reduction is
    independent of the number of processes and threads.

    Parameters
    ----------
    function : function
        Function of a single item. Must not modify shared state.
    items : list
        Work items.
    comm : communicator
        MPI communicator.
    status : StatusBar
        Progress bar updated after each local item.

    Returns
    -------
    list
        ``[function(item) for item in items]``.
    """
    items = list(items)

    sizes, cumsum = distribute(len(items), bounds=True, comm=comm)

    my_items = items[cumsum[comm.rank]:cumsum[comm.rank + 1]]

    workers = threads()

    my_results = []

    def collect(results):
        # progress bar is only touched by calling thread
        for result in results:
            my_results.append(result)

            if status is not None:
                status.update()

    if workers > 1 and len(my_items) > 1:
        from concurrent.futures import ThreadPoolExecutor

        with ThreadPoolExecutor(max_workers=workers) as pool:
            collect(pool.map(function, my_items))
    else:
        collect(function(item) for item in my_items)

    results = []

    for chunk in comm.allgather(my_results):
        results.extend(chunk)

    return results

def info(message, error=False, comm=comm):
    """Log status message from first process."""

    if comm.rank == 0:
        logger.log(logging.ERROR if error else logging.INFO, message)
