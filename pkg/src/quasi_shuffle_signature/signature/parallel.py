"""
Divide-and-conquer evaluation of the iterated-sums signature:
split the time axis into contiguous chunks, compute the chunk
signatures independently and fold them left to right with Chen's
property.
"""
import concurrent.futures
import functools
import time

import numpy as np

import quasi_shuffle_signature.signature.iterated_sums as iterated_sums
import quasi_shuffle_signature.signature.time_series as time_series
import quasi_shuffle_signature.utils.typing_utils as typing_utils


def chunk_windows(n_steps, chunks):
    """
    Split the steps 1..n_steps into `chunks` contiguous windows
    (n_i, m_i) with n_0 = 0, m_last = n_steps and m_i = n_{i+1}.
    Chunk sizes differ by at most one. When chunks > n_steps some
    windows are empty.
    """
    chunks = typing_utils.check_positive_int("chunks", chunks)
    boundaries = [
        int(b) for b in np.linspace(0, n_steps, chunks+1).round()
    ]
    boundaries[0] = 0
    boundaries[-1] = n_steps
    return [
        (boundaries[i], boundaries[i+1]) for i in range(chunks)
    ]


def parallel_signature(
        x,
        max_weight=iterated_sums.DEFAULT_MAX_WEIGHT,
        chunks=1,
        n_processors=1,
        log=None,
        n=0,
        m=None):
    """
    Compute DS(x)_{n,m} chunk by chunk.

    Parameters
    ----------
    x:
        TimeSeries
    max_weight:
        truncation weight
    chunks:
        number of contiguous chunks the time axis is split into
    n_processors:
        number of worker processes used to compute chunk signatures
        (1 means everything happens in this process)
    log:
        optional logger with an info() method
    n, m:
        window (m defaults to N)

    Returns
    -------
    A Signature over (n, m)

    Notes
    -----
    The fold over chunks is always sequential and left to right,
    so for exact scalars the result is identical to
    iterated_sums_signature whatever the chunking or scheduling.
    """
    typing_utils.assert_type("x", x, time_series.TimeSeries)
    n_processors = typing_utils.check_positive_int(
        "n_processors", n_processors)
    n, m = iterated_sums.check_window(x, n, m)
    windows = [
        (n+start, n+stop) for start, stop in chunk_windows(m-n, chunks)
    ]

    t0 = time.time()
    if n_processors == 1 or len(windows) == 1:
        chunk_signatures = [
            _chunk_signature(window, x=x, max_weight=max_weight)
            for window in windows
        ]
    else:
        worker = functools.partial(
            _chunk_signature, x=x, max_weight=max_weight)
        with concurrent.futures.ProcessPoolExecutor(
                max_workers=n_processors) as executor:
            chunk_signatures = list(executor.map(worker, windows))

    if log is not None:
        log.info(
            f"computed {len(windows)} chunk signatures in "
            f"{time.time()-t0:.2e} seconds"
        )

    result = functools.reduce(iterated_sums.chen_merge, chunk_signatures)
    return result


def _chunk_signature(window, x, max_weight):
    return iterated_sums.iterated_sums_signature(
        x, n=window[0], m=window[1], max_weight=max_weight)
