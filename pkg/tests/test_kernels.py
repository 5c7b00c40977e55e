import importlib.util
import os
import subprocess
import sys

import numpy as np
import pytest

from sl2trunc import _kernels
from sl2trunc.rootsys import AlgebraSpec, build_root_system, dominant_representative

needs_numba = pytest.mark.skipif(not _kernels.HAVE_NUMBA, reason="numba unavailable")


def as_set(a):
    return {tuple(r) for r in a.tolist()}


@needs_numba
@pytest.mark.parametrize("text,w", [("A3", (1, 1, 1)), ("B4", (0, 1, 0, 2)), ("F4", (1, 0, 0, 1)),
                                    ("E6", (0, 0, 0, 0, 0, 1)), ("G2", (3, 1)), ("D5", (0, 0, 0, 0, 0))])
def test_orbit_backends_agree(text, w):
    rs = build_root_system(AlgebraSpec.parse(text))
    dom = np.array([int(x) for x in dominant_representative(rs, w)])
    a, na = _kernels.orbit_tree(rs.cartan_array, dom, 10**6, backend="numba")
    b, nb = _kernels.orbit_tree(rs.cartan_array, dom, 10**6, backend="numpy")
    assert na == nb == len(as_set(a)) == len(as_set(b))
    assert as_set(a) == as_set(b)


@pytest.mark.parametrize("backend", _kernels.BACKENDS)
def test_orbit_overflow_flag(backend):
    rs = build_root_system(AlgebraSpec.parse("A3"))
    pts, n = _kernels.orbit_tree(rs.cartan_array, np.array([1, 1, 1]), 23, backend=backend)
    assert n == _kernels.OVERFLOW and pts.shape[0] == 0


@needs_numba
@pytest.mark.parametrize("seed", range(10))
def test_box_backends_agree(seed):
    rng = np.random.default_rng(seed)
    r = int(rng.integers(1, 7))
    w = rng.integers(1, 30, size=r)
    lo = rng.integers(-6, 1, size=r)
    hi = lo + rng.integers(0, 6, size=r)
    target = int(rng.integers(int(w @ lo) - 3, int(w @ hi) + 4))
    a = _kernels.box_scan(w, lo, hi, target, backend="numba")
    b = _kernels.box_scan(w, lo, hi, target, backend="numpy")
    grid = np.stack(np.meshgrid(*[np.arange(x, y + 1) for x, y in zip(lo, hi)], indexing="ij"),
                    axis=-1).reshape(-1, r)
    brute = grid[grid @ w >= target]
    assert as_set(a) == as_set(b) == as_set(brute)
    assert a.shape[0] == len(as_set(a))


def test_empty_box():
    out = _kernels.box_scan(np.array([1, 2]), np.array([0, 3]), np.array([1, 2]), 0)
    assert out.shape == (0, 2)


def test_lex_sorted():
    a = np.array([[1, 0], [0, 5], [0, -1], [1, -3]])
    assert _kernels.lex_sorted(a).tolist() == [[0, -1], [0, 5], [1, -3], [1, 0]]


def test_unknown_backend():
    with pytest.raises(ValueError):
        _kernels.orbit_tree(np.eye(1, dtype=np.int64) * 2, np.array([1]), 5, backend="cuda")


def test_env_flag_selects_numpy():
    code = "from sl2trunc import _kernels; print(_kernels.BACKEND, _kernels.HAVE_NUMBA)"
    env = dict(os.environ, SL2TRUNC_DISABLE_NUMBA="1")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True,
                         check=True).stdout.split()
    assert out == ["numpy", "False"]
    env["SL2TRUNC_DISABLE_NUMBA"] = "0"
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True,
                         check=True).stdout.split()
    installed = importlib.util.find_spec("numba") is not None
    assert out[0] == ("numba" if installed else "numpy")
