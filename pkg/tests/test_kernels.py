import pytest
from hypothesis import given, strategies as st

from qrr import _kernels_py, kernels
from qrr.catalog import verify

compiled = pytest.mark.skipif("compiled" not in kernels.available_backends(),
                              reason="compiled kernels not built")
big = st.integers(-(10 ** 30), 10 ** 30)
vec = st.lists(big, min_size=0, max_size=40)


@compiled
@given(vec, vec, st.integers(0, 50))
def test_conv_agrees(a, b, n):
    from qrr import _ckernels
    assert _ckernels.conv(a, b, n) == _kernels_py.conv(a, b, n)


@compiled
@given(st.lists(big, min_size=1, max_size=30).filter(lambda a: a[0] != 0), st.integers(1, 30))
def test_inv_agrees(a, n):
    from qrr import _ckernels
    assert _ckernels.inv(a, n) == _kernels_py.inv(a, n)


@compiled
@given(vec, st.integers(-3, 3), st.integers(0, 45))
def test_binomials_agree(p, c, e):
    from qrr import _ckernels
    assert _ckernels.mul_binom(p, c, e) == _kernels_py.mul_binom(p, c, e)
    if e > 0:
        assert _ckernels.div_binom(p, c, e) == _kernels_py.div_binom(p, c, e)


def test_inverse_is_exact():
    c, d = _kernels_py.inv([2, 3, 5], 8)
    prod = _kernels_py.conv([2, 3, 5], c, 8)
    assert prod == [d] + [0] * 7


@pytest.mark.parametrize("backend", kernels.available_backends())
def test_catalog_entry_same_on_each_backend(backend):
    before = kernels.BACKEND
    try:
        kernels.use_backend(backend)
        r = verify("uz1", 60)
    finally:
        kernels.use_backend(before)
    assert r.passed


def test_unknown_backend():
    with pytest.raises(ValueError):
        kernels.use_backend("fortran")
