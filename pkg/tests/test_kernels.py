import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qbinmod import kernels
from qbinmod._accel import HAVE_NUMBA

backends = ["numpy"] + (["numba"] if HAVE_NUMBA else [])


@pytest.mark.parametrize("name", backends)
def test_partition_prefix_small(name):
    f = kernels.BACKENDS[name]["partition_prefix"]
    assert f(3, 1000, 10).tolist() == [1, 1, 2, 3, 4, 5, 7, 8, 10, 12]


@pytest.mark.parametrize("name", backends)
def test_box_mod_small(name):
    f = kernels.BACKENDS[name]["box_mod"]
    assert f(2, 2, 1000).tolist() == [1, 1, 2, 1, 1]


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 6), st.integers(2, 12), st.integers(1, 80))
def test_backends_agree_on_prefix(k, mod, length):
    a = kernels.partition_prefix_numpy(k, mod, length)
    b = kernels.BACKENDS[backends[-1]]["partition_prefix"](k, mod, length)
    assert np.array_equal(a, b)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 12), st.integers(0, 5), st.integers(2, 9))
def test_backends_agree_on_box(j, k, mod):
    a = kernels.box_mod_numpy(j, k, mod)
    b = kernels.BACKENDS[backends[-1]]["box_mod"](j, k, mod)
    assert np.array_equal(a, b)


@settings(max_examples=25, deadline=None)
@given(st.integers(1, 4), st.integers(2, 6), st.integers(0, 15), st.integers(0, 15))
def test_backends_agree_on_counts(k, mod, lo, span):
    a = kernels.residue_count_sweep_numpy(k, mod, lo, lo + span)
    b = kernels.BACKENDS[backends[-1]]["residue_count_sweep"](k, mod, lo, lo + span)
    assert np.array_equal(a, b)


@settings(deadline=None)
@given(st.lists(st.integers(0, 3), min_size=1, max_size=40))
def test_backends_agree_on_period(vals):
    arr = np.array(vals, dtype=np.int64)
    assert kernels.smallest_period_numpy(arr) == kernels.BACKENDS[backends[-1]]["smallest_period"](arr)


def test_period_of_repeated_block():
    arr = np.array([1, 0, 2] * 5, dtype=np.int64)
    for name in backends:
        assert kernels.BACKENDS[name]["smallest_period"](arr) == 3
