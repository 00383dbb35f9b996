"""Integer kernels over exponent matrices.

Each kernel exists twice: a numba ``@njit`` loop and a vectorised numpy
version.  The numba path is used when numba imports and the environment
variable ``BORELSEG_NO_NUMBA`` is unset (or ``0``); otherwise the numpy path
is used.  Both paths are importable directly for benchmarking and tests.
"""

import os

import numpy as np

DISABLE_ENV = "BORELSEG_NO_NUMBA"


def _numba_disabled():
    return os.environ.get(DISABLE_ENV, "0").strip().lower() not in ("", "0", "false", "no")


try:  # pragma: no cover - import guard
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover
    HAVE_NUMBA = False

    def njit(*args, **kw):
        if args and callable(args[0]):
            return args[0]
        return lambda f: f


# ---------------------------------------------------------------- numpy path

def divisible_mask_np(terms, gens):
    """Row i is True iff some row of ``gens`` divides row i of ``terms``."""
    if gens.shape[0] == 0 or terms.shape[0] == 0:
        return np.zeros(terms.shape[0], dtype=np.bool_)
    out = np.zeros(terms.shape[0], dtype=np.bool_)
    # chunk over generators to bound the broadcast size
    for g in gens:
        out |= np.all(terms >= g, axis=1)
    return out


def minimal_mask_np(rows):
    """Row i is True iff no earlier row divides it (rows distinct, sorted by degree)."""
    k = rows.shape[0]
    out = np.ones(k, dtype=np.bool_)
    for i in range(1, k):
        if np.any(np.all(rows[:i] <= rows[i], axis=1)):
            out[i] = False
    return out


def count_outside_np(terms, gens):
    return int(terms.shape[0] - np.count_nonzero(divisible_mask_np(terms, gens)))


# ---------------------------------------------------------------- numba path

@njit(cache=True)
def divisible_mask_nb(terms, gens):
    nt, width = terms.shape
    ng = gens.shape[0]
    out = np.zeros(nt, dtype=np.bool_)
    for i in range(nt):
        for g in range(ng):
            ok = True
            for k in range(width):
                if terms[i, k] < gens[g, k]:
                    ok = False
                    break
            if ok:
                out[i] = True
                break
    return out


@njit(cache=True)
def minimal_mask_nb(rows):
    k, width = rows.shape
    out = np.ones(k, dtype=np.bool_)
    for i in range(1, k):
        for j in range(i):
            ok = True
            for c in range(width):
                if rows[j, c] > rows[i, c]:
                    ok = False
                    break
            if ok:
                out[i] = False
                break
    return out


@njit(cache=True)
def count_outside_nb(terms, gens):
    mask = divisible_mask_nb(terms, gens)
    c = 0
    for i in range(mask.shape[0]):
        if not mask[i]:
            c += 1
    return c


def use_numba():
    return HAVE_NUMBA and not _numba_disabled()


def _as_matrix(rows, width):
    if isinstance(rows, np.ndarray):
        return np.ascontiguousarray(rows, dtype=np.int64)
    arr = np.asarray(list(rows), dtype=np.int64)
    if arr.size == 0:
        return np.zeros((0, width), dtype=np.int64)
    return arr.reshape(-1, width)


def divisible_mask(terms, gens, width):
    t = _as_matrix(terms, width)
    g = _as_matrix(gens, width)
    if use_numba():
        return divisible_mask_nb(t, g)
    return divisible_mask_np(t, g)


def count_outside(terms, gens, width):
    t = _as_matrix(terms, width)
    g = _as_matrix(gens, width)
    if use_numba():
        return int(count_outside_nb(t, g))
    return count_outside_np(t, g)


def minimal_mask(rows, width):
    x = _as_matrix(rows, width)
    if use_numba():
        return minimal_mask_nb(x)
    return minimal_mask_np(x)
