"""The compiled kernels and the NumPy fallback must agree exactly."""

import numpy as np
import pytest

from groupnum._core import BACKEND, pycore
from groupnum.construct import make_case_group, make_cyclic, make_heisenberg

try:
    from groupnum._core import _ccore
except ImportError:
    _ccore = None

BACKENDS = [pycore] + ([_ccore] if _ccore is not None else [])


def sample_tables():
    yield make_cyclic(24)
    yield make_heisenberg(3)
    yield make_case_group("f3", 2, 3)


@pytest.mark.parametrize("backend", BACKENDS, ids=lambda b: b.__name__.split(".")[-1])
def test_associativity_defect_none_on_groups(backend):
    for G in sample_tables():
        assert backend.associativity_defect(G.table) is None


@pytest.mark.parametrize("backend", BACKENDS, ids=lambda b: b.__name__.split(".")[-1])
def test_associativity_defect_found(backend):
    t = np.array([[0, 1, 2], [1, 2, 1], [2, 0, 1]], dtype=np.int32)
    defect = backend.associativity_defect(t)
    assert defect is not None
    i, j, k = defect
    assert t[t[i, j], k] != t[i, t[j, k]]


def test_backends_agree_on_defect_location():
    if _ccore is None:
        pytest.skip("extension not built")
    rng = np.random.default_rng(5)
    for _ in range(20):
        t = rng.integers(0, 6, size=(6, 6)).astype(np.int32)
        assert pycore.associativity_defect(t) == _ccore.associativity_defect(t)


@pytest.mark.parametrize("backend", BACKENDS, ids=lambda b: b.__name__.split(".")[-1])
def test_closure_and_commutators(backend):
    for G in sample_tables():
        for seed in ([1], [1, 2], [G.order - 1]):
            got = backend.closure(G.table, seed)
            assert G.order % got.size == 0
            ref = pycore.closure(G.table, seed)
            assert np.array_equal(got, ref)
        members = pycore.closure(G.table, [1, 2])
        assert np.array_equal(
            backend.commutator_set(G.table, G.inverse, members),
            pycore.commutator_set(G.table, G.inverse, members),
        )


@pytest.mark.parametrize("backend", BACKENDS, ids=lambda b: b.__name__.split(".")[-1])
def test_is_normal_agrees(backend):
    for G in sample_tables():
        for seed in ([1], [2], [3]):
            members = pycore.closure(G.table, seed)
            assert backend.is_normal(G.table, G.inverse, members) == pycore.is_normal(
                G.table, G.inverse, members
            )


def test_backend_label():
    assert BACKEND in ("cython", "python")
