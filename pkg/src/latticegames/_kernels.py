"""NOR fill over the unit box {0,1}^d.

Positions are bitmasks. A move is described by two masks: ``pos`` (bits
where it is positive, which must all be set for the move to be legal on a
0/1 position with positive entries equal to 1) and ``odd`` (bits where it
is odd, so the mod-2 reduced option is ``p ^ odd``).

Table cells hold 1 (P), 0 (N) or PENDING. Reading a PENDING cell means the
evaluation order was not a topological order; kernels report it as -1.

Set ``LATTICEGAMES_NO_NUMBA=1`` to force the pure-numpy path. With no
explicit backend, inputs smaller than ``SMALL`` also take the numpy path.
"""

from __future__ import annotations

import os

import numpy as np

PENDING = 2

try:
    import numba
except ImportError:  # pragma: no cover
    numba = None

NUMBA_DISABLED = os.environ.get("LATTICEGAMES_NO_NUMBA", "").strip().lower() in ("1", "true", "yes")
HAVE_NUMBA = numba is not None and not NUMBA_DISABLED
DEFAULT_BACKEND = "numba" if HAVE_NUMBA else "numpy"

# below this many items the automatic choice skips numba (JIT latency dominates)
SMALL = 4096


def pick_backend(backend: str | None, size: int) -> str:
    if backend:
        return backend
    return "numpy" if size < SMALL else DEFAULT_BACKEND


def level_values(weights) -> np.ndarray:
    """``w.p`` for every mask ``p`` of the box, indexed by mask."""
    lv = np.zeros(1, dtype=np.int64)
    for w in weights:
        lv = np.concatenate((lv, lv + np.int64(w)))
    return lv


def evaluation_order(weights) -> tuple[np.ndarray, np.ndarray]:
    """Masks sorted by increasing weight (ties by mask), and their weights."""
    lv = level_values(weights)
    order = np.argsort(lv, kind="stable")
    return order, lv[order]


def _nor_fill_py(order, pos, odd, table):
    evals = 0
    nmoves = pos.shape[0]
    for t in range(order.shape[0]):
        p = order[t]
        is_p = 1
        for k in range(nmoves):
            if p & pos[k] == pos[k]:
                evals += 1
                v = table[p ^ odd[k]]
                if v == PENDING:
                    return -1
                if v == 1:
                    is_p = 0
        table[p] = is_p
    return evals


if numba is not None:
    _nor_fill_numba = numba.njit(cache=True, nogil=True)(_nor_fill_py)
else:  # pragma: no cover
    _nor_fill_numba = None


def _nor_fill_numpy(order, levels, pos, odd, table):
    """Vectorized over each weight level; options always sit on lower levels."""
    evals = 0
    cuts = np.flatnonzero(np.diff(levels)) + 1
    for chunk in np.split(order, cuts):
        is_p = np.ones(chunk.shape[0], dtype=bool)
        for k in range(pos.shape[0]):
            legal = (chunk & pos[k]) == pos[k]
            n = int(np.count_nonzero(legal))
            if not n:
                continue
            evals += n
            vals = table[chunk[legal] ^ odd[k]]
            if (vals == PENDING).any():
                return -1
            is_p[legal] &= vals == 0
        table[chunk] = is_p
    return evals


def nor_fill(order, levels, pos, odd, table, backend: str | None = None) -> int:
    """Fill ``table`` in place; return the number of legal options examined."""
    backend = pick_backend(backend, table.shape[0])
    if backend == "numba":
        if _nor_fill_numba is None:
            raise RuntimeError("numba backend requested but numba is not installed")
        return int(_nor_fill_numba(order, pos, odd, table))
    if backend == "numpy":
        return _nor_fill_numpy(order, levels, pos, odd, table)
    if backend == "python":
        return _nor_fill_py(order, pos, odd, table)
    raise ValueError(f"unknown backend {backend!r}")


# -- pair scan for P-position closure on a solved region ---------------------
#
# Rows are sorted by weight level. For each P-row i, partners q are the rows
# with level <= budget - level[i]; P partners are taken only when
# lex[q] <= lex[i] so each unordered pair is seen once. Sum keys are exact
# because a sum inside the region never overflows a mixed-radix digit.


def _bisect_right(a, x, hi):
    lo = 0
    while lo < hi:
        mid = (lo + hi) >> 1
        if a[mid] <= x:
            lo = mid + 1
        else:
            hi = mid
    return lo


def _bisect_left(a, x):
    lo, hi = 0, a.shape[0]
    while lo < hi:
        mid = (lo + hi) >> 1
        if a[mid] < x:
            lo = mid + 1
        else:
            hi = mid
    return lo


def _pair_scan_py(p_rows, levels, is_p, lex, keys, keys_sorted, key_rows, budget, out):
    """Fill ``out`` with (i, q, sum_row) violations; return (checked, n_violations).

    Stops recording once ``out`` is full but keeps counting.
    """
    n = levels.shape[0]
    checked = 0
    nv = 0
    for t in range(p_rows.shape[0]):
        i = p_rows[t]
        end = _bisect_right(levels, budget - levels[i], n)
        for q in range(end):
            if is_p[q] and lex[q] > lex[i]:
                continue
            checked += 1
            k = keys[i] + keys[q]
            s = key_rows[_bisect_left(keys_sorted, k)]
            if is_p[s] != is_p[q]:
                if nv < out.shape[0]:
                    out[nv, 0] = i
                    out[nv, 1] = q
                    out[nv, 2] = s
                nv += 1
    return checked, nv


_HASH_MUL = np.uint64(0x9E3779B97F4A7C15)


def _hash_build(keys, bits):
    """Open-addressing table (linear probing) mapping nonnegative keys to rows."""
    size = 1 << bits
    mask = size - 1
    hkeys = np.full(size, -1, dtype=np.int64)
    hrows = np.zeros(size, dtype=np.int64)
    shift = np.uint64(64 - bits)
    for r in range(keys.shape[0]):
        h = np.int64((np.uint64(keys[r]) * _HASH_MUL) >> shift)
        while hkeys[h] != -1:
            h = (h + 1) & mask
        hkeys[h] = keys[r]
        hrows[h] = r
    return hkeys, hrows


def _pair_scan_hashed(p_rows, levels, is_p, lex, keys, hkeys, hrows, bits, budget, out):
    n = levels.shape[0]
    mask = (1 << bits) - 1
    shift = np.uint64(64 - bits)
    checked = 0
    nv = 0
    for t in range(p_rows.shape[0]):
        i = p_rows[t]
        end = _bisect_right(levels, budget - levels[i], n)
        ki = keys[i]
        for q in range(end):
            if is_p[q] and lex[q] > lex[i]:
                continue
            checked += 1
            k = ki + keys[q]
            h = np.int64((np.uint64(k) * _HASH_MUL) >> shift)
            while hkeys[h] != k:
                if hkeys[h] == -1:
                    return checked, -1
                h = (h + 1) & mask
            s = hrows[h]
            if is_p[s] != is_p[q]:
                if nv < out.shape[0]:
                    out[nv, 0] = i
                    out[nv, 1] = q
                    out[nv, 2] = s
                nv += 1
    return checked, nv


if numba is not None:
    # jitted callees must be bound under the same global name
    _bisect_right = numba.njit(cache=True)(_bisect_right)
    _hash_build_numba = numba.njit(cache=True)(_hash_build)
    _pair_scan_numba = numba.njit(cache=True, nogil=True)(_pair_scan_hashed)
else:  # pragma: no cover
    _hash_build_numba = _pair_scan_numba = None


def _pair_scan_numpy(p_rows, levels, is_p, lex, keys, keys_sorted, key_rows, budget, out):
    checked = 0
    nv = 0
    is_p = is_p.astype(bool)
    for i in p_rows:
        end = int(np.searchsorted(levels, budget - levels[i], side="right"))
        cand = np.flatnonzero(~is_p[:end] | (lex[:end] <= lex[i]))
        checked += cand.shape[0]
        sums = key_rows[np.searchsorted(keys_sorted, keys[cand] + keys[i])]
        bad = np.flatnonzero(is_p[sums] != is_p[cand])
        room = max(0, min(bad.shape[0], out.shape[0] - nv))
        out[nv : nv + room, 0] = i
        out[nv : nv + room, 1] = cand[bad[:room]]
        out[nv : nv + room, 2] = sums[bad[:room]]
        nv += bad.shape[0]
    return checked, nv


def pair_scan(p_rows, levels, is_p, lex, keys, keys_sorted, key_rows, budget, backend=None, capacity=1024):
    """Closure violations as an (n, 3) array of row indices, and the pair count.

    The numba path looks sums up in a hash table; the others use binary
    search over ``keys_sorted``.
    """
    backend = pick_backend(backend, keys.shape[0])
    is_p = is_p.astype(np.uint8)
    budget = np.int64(budget)
    if backend == "numba":
        if _pair_scan_numba is None:
            raise RuntimeError("numba backend requested but numba is not installed")
        bits = max(4, int(2 * keys.shape[0] - 1).bit_length())
        hkeys, hrows = _hash_build_numba(keys, bits)
    elif backend not in ("numpy", "python"):
        raise ValueError(f"unknown backend {backend!r}")
    while True:
        out = np.empty((capacity, 3), dtype=np.int64)
        if backend == "numba":
            checked, nv = _pair_scan_numba(p_rows, levels, is_p, lex, keys, hkeys, hrows, bits, budget, out)
        elif backend == "numpy":
            checked, nv = _pair_scan_numpy(p_rows, levels, is_p, lex, keys, keys_sorted, key_rows, budget, out)
        else:
            checked, nv = _pair_scan_py(p_rows, levels, is_p, lex, keys, keys_sorted, key_rows, budget, out)
        if nv < 0:
            raise AssertionError("pair sum missing from the region")
        if nv <= capacity:
            return out[:nv], int(checked)
        capacity = nv
