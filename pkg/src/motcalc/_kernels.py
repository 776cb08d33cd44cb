"""Hot loop of the Weyl orbit search: one BFS level expansion.

A frontier is an ``(m, r)`` int64 array of weights in fundamental-weight
coordinates.  For every row ``mu`` and every simple index ``j`` with
``mu[j] > 0`` the child ``s_j(mu) = mu - mu[j] * alpha[j]`` lies exactly one
step further from the dominant weight, so a level never needs to be checked
against earlier ones, only deduplicated within itself.

Two implementations are provided; they return the same rows up to order.
The numba one is used when numba imports and ``MOTCALC_DISABLE_NUMBA`` is
unset or ``0``, otherwise the vectorised numpy one.
"""

import os

import numpy as np

try:
    import numba
except ImportError:  # pragma: no cover - numba is optional
    numba = None


def _env_disabled():
    return os.environ.get("MOTCALC_DISABLE_NUMBA", "0").strip().lower() not in ("", "0", "false", "no")


HAVE_NUMBA = numba is not None
USE_NUMBA = HAVE_NUMBA and not _env_disabled()


def expand_level_numpy(frontier, alpha):
    m, r = frontier.shape
    chunks = [np.empty((0, r), dtype=np.int64)]
    for j in range(r):
        sel = frontier[frontier[:, j] > 0]
        if len(sel):
            chunks.append(sel - sel[:, j : j + 1] * alpha[j])
    return np.concatenate(chunks)


def encode_rows(rows):
    """Map each row to one int64 key, or return None if keys could overflow.

    Keys are only compared within a single level, so the radix may be chosen
    per call.
    """
    if rows.shape[0] == 0:
        return np.empty(0, dtype=np.int64)
    lo = int(rows.min())
    base = int(rows.max()) - lo + 1
    if base ** rows.shape[1] >= 2**62:
        return None
    keys = np.zeros(rows.shape[0], dtype=np.int64)
    for j in range(rows.shape[1]):
        keys = keys * base + (rows[:, j] - lo)
    return keys


def unique_rows(rows):
    keys = encode_rows(rows)
    if keys is None:
        return np.unique(rows, axis=0)
    _, idx = np.unique(keys, return_index=True)
    return rows[idx]


def next_level_numpy(frontier, alpha):
    return unique_rows(expand_level_numpy(frontier, alpha))


if HAVE_NUMBA:

    @numba.njit(cache=True)
    def _expand_level_jit(frontier, alpha):
        m, r = frontier.shape
        count = 0
        for a in range(m):
            for j in range(r):
                if frontier[a, j] > 0:
                    count += 1
        out = np.empty((count, r), dtype=np.int64)
        k = 0
        for a in range(m):
            for j in range(r):
                c = frontier[a, j]
                if c > 0:
                    for t in range(r):
                        out[k, t] = frontier[a, t] - c * alpha[j, t]
                    k += 1
        return out

    @numba.njit(cache=True)
    def _dedupe_keyed_jit(rows, lo, base):
        # open addressing on the mixed-radix key; first occurrence wins
        n, r = rows.shape
        size = 1
        while size < 2 * n:
            size *= 2
        mask = size - 1
        table = np.full(size, -1, dtype=np.int64)
        keep = np.empty(n, dtype=np.int64)
        kept = 0
        for a in range(n):
            key = 0
            for t in range(r):
                key = key * base + (rows[a, t] - lo)
            h = ((key ^ (key >> 29)) * 0x5DEECE66D) & mask
            while True:
                slot = table[h]
                if slot == -1:
                    table[h] = key
                    keep[kept] = a
                    kept += 1
                    break
                if slot == key:
                    break
                h = (h + 1) & mask
        out = np.empty((kept, r), dtype=np.int64)
        for i in range(kept):
            for t in range(r):
                out[i, t] = rows[keep[i], t]
        return out

    def expand_level_numba(frontier, alpha):
        return _expand_level_jit(np.ascontiguousarray(frontier), np.ascontiguousarray(alpha))

    def next_level_numba(frontier, alpha):
        rows = expand_level_numba(frontier, alpha)
        if rows.shape[0] == 0:
            return rows
        lo = int(rows.min())
        base = int(rows.max()) - lo + 1
        if base ** rows.shape[1] >= 2**62:
            return np.unique(rows, axis=0)
        return _dedupe_keyed_jit(rows, lo, base)

else:  # pragma: no cover
    expand_level_numba = None
    next_level_numba = None


def next_level(frontier, alpha, use_numba=None):
    """Deduplicated set of weights one step further from the dominant one."""
    if use_numba is None:
        use_numba = USE_NUMBA
    if use_numba and HAVE_NUMBA:
        return next_level_numba(frontier, alpha)
    return next_level_numpy(frontier, alpha)
