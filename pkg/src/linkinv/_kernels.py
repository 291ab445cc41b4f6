"""Hot loops: brute-force Kauffman state enumeration.

Both paths return the same histogram ``hist[k, loops]`` = number of states
with ``k`` A-smoothings and ``loops`` closed curves.  The numba path is used
unless ``LINKINV_DISABLE_NUMBA=1`` or numba is not importable.
"""

from __future__ import annotations

import os

import numpy as np

_DISABLED = os.environ.get("LINKINV_DISABLE_NUMBA", "").strip().lower() in {"1", "true", "yes"}

try:
    if _DISABLED:
        raise ImportError("disabled by LINKINV_DISABLE_NUMBA")
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - depends on environment
    HAVE_NUMBA = False

MAX_STATESUM_CROSSINGS = 26


def _state_hist_numpy(pd: np.ndarray, n_edges: int, chunk: int = 1 << 14) -> np.ndarray:
    n = pd.shape[0]
    hist = np.zeros((n + 1, n_edges + 2), dtype=np.int64)
    total = 1 << n
    bits = np.arange(n, dtype=np.int64)
    for lo in range(0, total, chunk):
        masks = np.arange(lo, min(total, lo + chunk), dtype=np.int64)
        s = masks.shape[0]
        choose = ((masks[:, None] >> bits[None, :]) & 1).astype(bool)  # True = A
        # A joins (a,b),(c,d); B joins (a,d),(b,c)
        p1 = np.where(choose, pd[None, :, 1], pd[None, :, 3])
        p2 = np.where(choose, pd[None, :, 3], pd[None, :, 1])
        us = np.concatenate([np.broadcast_to(pd[None, :, 0], (s, n)), np.broadcast_to(pd[None, :, 2], (s, n))], axis=1)
        vs = np.concatenate([p1, p2], axis=1)
        lab = np.broadcast_to(np.arange(n_edges, dtype=np.int64), (s, n_edges)).copy()
        rows = np.arange(s)[:, None]
        while True:
            lu = lab[rows, us]
            lv = lab[rows, vs]
            m = np.minimum(lu, lv)
            new = lab.copy()
            np.minimum.at(new, (np.broadcast_to(rows, us.shape), us), m)
            np.minimum.at(new, (np.broadcast_to(rows, vs.shape), vs), m)
            new = np.take_along_axis(new, new, axis=1)
            if np.array_equal(new, lab):
                break
            lab = new
        loops = (lab == np.arange(n_edges)[None, :]).sum(axis=1)
        k = choose.sum(axis=1)
        np.add.at(hist, (k, loops), 1)
    return hist


if HAVE_NUMBA:

    @njit(cache=True)
    def _find(parent, i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    @njit(cache=True)
    def _state_hist_numba(pd, n_edges):
        n = pd.shape[0]
        hist = np.zeros((n + 1, n_edges + 2), dtype=np.int64)
        parent = np.empty(n_edges, dtype=np.int64)
        for mask in range(1 << n):
            for e in range(n_edges):
                parent[e] = e
            loops = n_edges
            k = 0
            for j in range(n):
                a = pd[j, 0]
                b = pd[j, 1]
                c = pd[j, 2]
                d = pd[j, 3]
                if (mask >> j) & 1:
                    k += 1
                    x1, y1, x2, y2 = a, b, c, d
                else:
                    x1, y1, x2, y2 = a, d, b, c
                r1 = _find(parent, x1)
                r2 = _find(parent, y1)
                if r1 != r2:
                    parent[r1] = r2
                    loops -= 1
                r1 = _find(parent, x2)
                r2 = _find(parent, y2)
                if r1 != r2:
                    parent[r1] = r2
                    loops -= 1
            hist[k, loops] += 1
        return hist


def state_histogram(pd, n_edges: int, backend: str | None = None) -> np.ndarray:
    """Histogram of Kauffman states of a PD array (0-based edge ids)."""
    pd = np.ascontiguousarray(pd, dtype=np.int64).reshape(-1, 4)
    if pd.shape[0] > MAX_STATESUM_CROSSINGS:
        raise ValueError(f"state sum over {pd.shape[0]} crossings exceeds the brute-force limit")
    if backend is None:
        backend = "numba" if HAVE_NUMBA else "numpy"
    if backend == "numba":
        if not HAVE_NUMBA:
            raise RuntimeError("numba backend requested but unavailable")
        return _state_hist_numba(pd, n_edges)
    if backend == "numpy":
        return _state_hist_numpy(pd, n_edges)
    raise ValueError(f"unknown backend {backend!r}")
