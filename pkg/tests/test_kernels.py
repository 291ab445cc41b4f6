import os
import subprocess
import sys

import numpy as np
import pytest
from hypothesis import given

from linkinv import _kernels
from linkinv.bracket import bracket_contract, bracket_statesum
from linkinv.families import gen

from strategies import diagrams


def _pd(d):
    labels = sorted({e for x in d.crossings for e in x})
    idx = {e: i for i, e in enumerate(labels)}
    return np.array([[idx[e] for e in x] for x in d.crossings], dtype=np.int64), len(labels)


@pytest.mark.skipif(not _kernels.HAVE_NUMBA, reason="numba unavailable")
@given(diagrams(max_len=10))
def test_numba_matches_numpy(d):
    if d.n_crossings == 0:
        return
    pd, n = _pd(d)
    a = _kernels.state_histogram(pd, n, backend="numba")
    b = _kernels.state_histogram(pd, n, backend="numpy")
    assert np.array_equal(a, b)


@pytest.mark.parametrize("backend", ["numpy", "numba"])
def test_statesum_backends(backend):
    if backend == "numba" and not _kernels.HAVE_NUMBA:
        pytest.skip("numba unavailable")
    d = gen("Wn(B3):n=2")
    assert bracket_statesum(d, backend=backend) == bracket_contract(d)


def test_env_flag_disables_numba():
    code = "import linkinv._kernels as k; print(k.HAVE_NUMBA)"
    env = dict(os.environ, LINKINV_DISABLE_NUMBA="1")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "False"


def test_statesum_size_guard():
    pd = np.zeros((_kernels.MAX_STATESUM_CROSSINGS + 1, 4), dtype=np.int64)
    with pytest.raises(ValueError):
        _kernels.state_histogram(pd, 4)
