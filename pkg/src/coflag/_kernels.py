"""Integer kernels for staircase enumeration.

Two interchangeable backends: numba-compiled loops, and a chunked pure-numpy
path.  Numba is used when importable unless ``COFLAG_NUMBA=0`` is set in the
environment; both backends return identical arrays.
"""

from __future__ import annotations

import os

import numpy as np

try:  # pragma: no cover - exercised implicitly
    import numba
except ImportError:  # pragma: no cover
    numba = None

EXP_DTYPE = np.int16
_CHUNK = 1 << 18


def numba_requested() -> bool:
    return os.environ.get("COFLAG_NUMBA", "1").strip().lower() not in ("0", "false", "no", "off")


def backend() -> str:
    return "numba" if (numba is not None and numba_requested()) else "numpy"


# ---------------------------------------------------------------------------
# numpy


def staircase_numpy(bounds: np.ndarray, leads: np.ndarray) -> np.ndarray:
    """Exponent vectors in the box ``0 <= e < bounds`` divisible by no row of ``leads``.

    Rows come out in odometer order (last variable fastest).
    """
    bounds = np.asarray(bounds, dtype=np.int64)
    leads = np.asarray(leads, dtype=np.int64).reshape(-1, bounds.shape[0])
    n = bounds.shape[0]
    total = int(np.prod(bounds)) if n else 1
    # mixed-radix place values, last variable least significant
    place = np.ones(n, dtype=np.int64)
    for i in range(n - 2, -1, -1):
        place[i] = place[i + 1] * bounds[i + 1]
    out = []
    for start in range(0, total, _CHUNK):
        idx = np.arange(start, min(start + _CHUNK, total), dtype=np.int64)
        exps = (idx[:, None] // place[None, :]) % bounds[None, :] if n else np.zeros((len(idx), 0), np.int64)
        keep = np.ones(len(idx), dtype=bool)
        for lead in leads:
            keep &= ~np.all(exps >= lead[None, :], axis=1)
        out.append(exps[keep].astype(EXP_DTYPE))
    if not out:
        return np.zeros((0, n), dtype=EXP_DTYPE)
    return np.concatenate(out, axis=0)


def degree_histogram_numpy(exps: np.ndarray) -> np.ndarray:
    exps = np.asarray(exps)
    if exps.shape[0] == 0:
        return np.zeros(0, dtype=np.int64)
    return np.bincount(exps.sum(axis=1, dtype=np.int64))


# ---------------------------------------------------------------------------
# numba


def _staircase_loop(bounds, leads, out, fill):
    n = bounds.shape[0]
    k = leads.shape[0]
    e = np.zeros(n, np.int64)
    count = 0
    while True:
        ok = True
        for r in range(k):
            div = True
            for c in range(n):
                if e[c] < leads[r, c]:
                    div = False
                    break
            if div:
                ok = False
                break
        if ok:
            if fill:
                for c in range(n):
                    out[count, c] = e[c]
            count += 1
        c = n - 1
        while c >= 0:
            e[c] += 1
            if e[c] < bounds[c]:
                break
            e[c] = 0
            c -= 1
        if c < 0:
            break
    return count


def _histogram_loop(exps, out):
    for r in range(exps.shape[0]):
        d = 0
        for c in range(exps.shape[1]):
            d += exps[r, c]
        out[d] += 1
    return out


if numba is not None:
    _staircase_jit = numba.njit(cache=True)(_staircase_loop)
    _histogram_jit = numba.njit(cache=True)(_histogram_loop)
else:  # pragma: no cover
    _staircase_jit = _staircase_loop
    _histogram_jit = _histogram_loop


def staircase_numba(bounds: np.ndarray, leads: np.ndarray) -> np.ndarray:
    bounds = np.ascontiguousarray(bounds, dtype=np.int64)
    n = bounds.shape[0]
    leads = np.ascontiguousarray(np.asarray(leads, dtype=np.int64).reshape(-1, n))
    scratch = np.zeros((0, n), dtype=EXP_DTYPE)
    count = _staircase_jit(bounds, leads, scratch, False)
    out = np.zeros((count, n), dtype=EXP_DTYPE)
    _staircase_jit(bounds, leads, out, True)
    return out


def degree_histogram_numba(exps: np.ndarray) -> np.ndarray:
    exps = np.ascontiguousarray(exps)
    if exps.shape[0] == 0:
        return np.zeros(0, dtype=np.int64)
    top = int(exps.sum(axis=1).max())
    return _histogram_jit(exps, np.zeros(top + 1, dtype=np.int64))


# ---------------------------------------------------------------------------
# dispatch


def staircase(bounds, leads) -> np.ndarray:
    if backend() == "numba":
        return staircase_numba(bounds, leads)
    return staircase_numpy(bounds, leads)


def degree_histogram(exps) -> np.ndarray:
    if backend() == "numba":
        return degree_histogram_numba(exps)
    return degree_histogram_numpy(exps)
