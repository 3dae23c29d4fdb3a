"""Seeded, order-independent Monte Carlo plumbing.

Sample ``i`` of a run with seed ``s`` always draws from
``np.random.default_rng(np.random.SeedSequence(s, spawn_key=(i,)))``, the
``i``-th child of ``SeedSequence(s)``.  Results therefore do not depend on
how samples are split into chunks or across worker threads.  The
``TRIADIC_THREADS`` environment variable caps the worker count.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor

import numpy as np

__all__ = ["sample_rng", "worker_count", "run_chunked", "empirical_quantile"]

CHUNK = 500


def sample_rng(seed: int, index: int) -> np.random.Generator:
    if seed is None:
        raise ValueError("a seed is required for reproducible sampling")
    return np.random.default_rng(np.random.SeedSequence(int(seed), spawn_key=(int(index),)))


def worker_count() -> int:
    raw = os.environ.get("TRIADIC_THREADS")
    cpus = os.cpu_count() or 1
    if not raw:
        return min(cpus, 8)
    try:
        return max(1, min(int(raw), cpus))
    except ValueError:
        raise ValueError(f"TRIADIC_THREADS must be an integer, got {raw!r}") from None


def run_chunked(fn, samples: int, chunk: int = CHUNK) -> np.ndarray:
    """Evaluate ``fn(start, stop)`` over ``[0, samples)`` in chunks; concatenate in order.

    ``fn`` must return an array whose first axis has length ``stop - start``.
    """
    bounds = [(s, min(s + chunk, samples)) for s in range(0, samples, chunk)]
    if not bounds:
        return np.empty((0,))
    workers = min(worker_count(), len(bounds))
    if workers == 1:
        parts = [fn(a, b) for a, b in bounds]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(lambda ab: fn(*ab), bounds))
    return np.concatenate(parts, axis=0)


def empirical_quantile(observed, null_samples) -> float:
    """Mid-rank position of ``observed`` among the null samples, in [0, 1]."""
    null_samples = np.asarray(null_samples)
    if null_samples.size == 0:
        return float("nan")
    below = np.count_nonzero(null_samples < observed)
    ties = np.count_nonzero(null_samples == observed)
    return float((below + 0.5 * ties) / null_samples.size)
