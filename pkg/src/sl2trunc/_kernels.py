"""Hot integer kernels: Weyl-orbit tree enumeration and the Σ-box scan.

Each kernel has a numba ``@njit`` implementation and a pure-numpy one with
identical output (as a set; callers sort).  The numba path is used unless
``SL2TRUNC_DISABLE_NUMBA`` is set to a non-empty value other than ``0`` or
numba fails to import.  Both paths work on int64 arrays; callers clear
denominators before calling in.
"""

from __future__ import annotations

import os

import numpy as np

_flag = os.environ.get("SL2TRUNC_DISABLE_NUMBA", "").strip()
_DISABLED = _flag not in ("", "0")

try:
    if _DISABLED:
        raise ImportError("disabled by SL2TRUNC_DISABLE_NUMBA")
    from numba import njit

    HAVE_NUMBA = True
except ImportError:
    HAVE_NUMBA = False

BACKEND = "numba" if HAVE_NUMBA else "numpy"
BACKENDS = ("numba", "numpy") if HAVE_NUMBA else ("numpy",)

OVERFLOW = -1


# ---------------------------------------------------------------------------
# Orbit enumeration.
#
# Starting from the dominant member of an orbit, every other member nu has a
# unique parent s_j(nu) where j is the smallest index with nu[j] < 0.  So from
# mu we descend to s_i(mu) only when mu[i] > 0 and the child is nonnegative in
# every coordinate before i.  This walks a spanning tree of the orbit: no
# duplicate is ever produced and no hash set is needed.
# ---------------------------------------------------------------------------


def _orbit_tree_py(cartan, dominant, cap):
    r = dominant.shape[0]
    frontier = dominant.reshape(1, r).copy()
    levels = [frontier]
    total = 1
    while frontier.shape[0]:
        children = []
        for i in range(r):
            par = frontier[frontier[:, i] > 0]
            if not par.shape[0]:
                continue
            nu = par - par[:, i : i + 1] * cartan[:, i].reshape(1, r)
            if i:
                nu = nu[np.all(nu[:, :i] >= 0, axis=1)]
            if nu.shape[0]:
                children.append(nu)
        if not children:
            break
        frontier = np.concatenate(children, axis=0)
        total += frontier.shape[0]
        if total > cap:
            return np.empty((0, r), dtype=np.int64), OVERFLOW
        levels.append(frontier)
    out = np.concatenate(levels, axis=0)
    return out, out.shape[0]


def _orbit_tree_nb_impl(cartan, dominant, cap):
    r = dominant.shape[0]
    size = 64
    out = np.empty((size, r), dtype=np.int64)
    stack_size = 64
    stack = np.empty((stack_size, r), dtype=np.int64)
    stack[0, :] = dominant
    sp = 1
    count = 0
    nu = np.empty(r, dtype=np.int64)
    while sp > 0:
        sp -= 1
        mu = stack[sp].copy()
        if count >= cap:
            return out[:0], OVERFLOW
        if count == size:
            grown = np.empty((size * 2, r), dtype=np.int64)
            grown[:size] = out
            out = grown
            size *= 2
        out[count, :] = mu
        count += 1
        for i in range(r):
            c = mu[i]
            if c <= 0:
                continue
            ok = True
            for j in range(r):
                nu[j] = mu[j] - c * cartan[j, i]
            for j in range(i):
                if nu[j] < 0:
                    ok = False
                    break
            if not ok:
                continue
            if sp == stack_size:
                grown = np.empty((stack_size * 2, r), dtype=np.int64)
                grown[:stack_size] = stack
                stack = grown
                stack_size *= 2
            stack[sp, :] = nu
            sp += 1
    return out[:count].copy(), count


# ---------------------------------------------------------------------------
# Σ box scan: all integer g with lo <= g <= hi (componentwise) and
# sum(weights * g) >= target.  weights are positive, so a prefix can be
# abandoned as soon as even the all-hi completion misses the target.
# ---------------------------------------------------------------------------


def _box_scan_py(weights, lo, hi, target):
    r = weights.shape[0]
    tail = min(r, 3)
    head = r - tail
    axes = [np.arange(lo[k], hi[k] + 1, dtype=np.int64) for k in range(head, r)]
    grid = np.stack(np.meshgrid(*axes, indexing="ij"), axis=-1).reshape(-1, tail)
    grid_val = grid @ weights[head:]
    best_rest = np.cumsum((weights * hi)[::-1])[::-1]
    found = []

    def rec(k, prefix, partial):
        if k == head:
            sel = grid_val >= target - partial
            if np.any(sel):
                block = grid[sel]
                pre = np.broadcast_to(np.asarray(prefix, dtype=np.int64), (block.shape[0], head))
                found.append(np.concatenate([pre, block], axis=1))
            return
        for g in range(hi[k], lo[k] - 1, -1):
            s = partial + weights[k] * g
            if s + best_rest[k + 1] < target:
                break
            rec(k + 1, prefix + [g], s)

    if best_rest[0] >= target:
        rec(0, [], 0)
    if not found:
        return np.empty((0, r), dtype=np.int64)
    return np.concatenate(found, axis=0)


def _box_scan_nb_impl(weights, lo, hi, target):
    r = weights.shape[0]
    best_rest = np.zeros(r + 1, dtype=np.int64)
    for k in range(r - 1, -1, -1):
        best_rest[k] = best_rest[k + 1] + weights[k] * hi[k]
    size = 64
    out = np.empty((size, r), dtype=np.int64)
    count = 0
    if best_rest[0] < target:
        return out[:0].copy()
    cur = hi.copy()
    partial = np.zeros(r + 1, dtype=np.int64)
    k = 0
    cur[0] = hi[0] + 1
    # odometer over coordinates, each descending from hi to lo
    while k >= 0:
        cur[k] -= 1
        if cur[k] < lo[k] or partial[k] + weights[k] * cur[k] + best_rest[k + 1] < target:
            k -= 1
            continue
        partial[k + 1] = partial[k] + weights[k] * cur[k]
        if k == r - 1:
            if count == size:
                grown = np.empty((size * 2, r), dtype=np.int64)
                grown[:size] = out
                out = grown
                size *= 2
            out[count, :] = cur
            count += 1
        else:
            k += 1
            cur[k] = hi[k] + 1
    return out[:count].copy()


if HAVE_NUMBA:
    _orbit_tree_nb = njit(cache=True)(_orbit_tree_nb_impl)
    _box_scan_nb = njit(cache=True)(_box_scan_nb_impl)
else:
    _orbit_tree_nb = None
    _box_scan_nb = None


def _pick(backend):
    backend = backend or BACKEND
    if backend not in ("numba", "numpy"):
        raise ValueError(f"unknown backend {backend!r}")
    if backend == "numba" and not HAVE_NUMBA:
        raise RuntimeError("numba backend requested but unavailable")
    return backend


def orbit_tree(cartan: np.ndarray, dominant: np.ndarray, cap: int, backend: str | None = None):
    """Enumerate the orbit of a dominant integer weight.

    Returns ``(points, count)``; ``count`` is ``OVERFLOW`` when the orbit has
    more than ``cap`` elements, in which case ``points`` is empty.
    """
    cartan = np.ascontiguousarray(cartan, dtype=np.int64)
    dominant = np.ascontiguousarray(dominant, dtype=np.int64)
    if _pick(backend) == "numba":
        return _orbit_tree_nb(cartan, dominant, np.int64(cap))
    return _orbit_tree_py(cartan, dominant, cap)


def box_scan(weights: np.ndarray, lo: np.ndarray, hi: np.ndarray, target: int,
             backend: str | None = None) -> np.ndarray:
    """Integer points of the box ``[lo, hi]`` with ``weights @ g >= target``."""
    weights = np.ascontiguousarray(weights, dtype=np.int64)
    lo = np.ascontiguousarray(lo, dtype=np.int64)
    hi = np.ascontiguousarray(hi, dtype=np.int64)
    if np.any(lo > hi):
        return np.empty((0, weights.shape[0]), dtype=np.int64)
    if _pick(backend) == "numba":
        return _box_scan_nb(weights, lo, hi, np.int64(target))
    return _box_scan_py(weights, lo, hi, int(target))


def lex_sorted(points: np.ndarray) -> np.ndarray:
    if points.shape[0] == 0:
        return points
    order = np.lexsort(points.T[::-1])
    return points[order]


__all__ = ["BACKEND", "BACKENDS", "HAVE_NUMBA", "OVERFLOW", "box_scan", "lex_sorted",
           "orbit_tree"]
