"""Both kernel backends must agree bit-for-bit on the same inputs."""

import random

import pytest

from rrseries import _backend, _kernels_py

try:
    from rrseries import _kernels as _kernels_c
except ImportError:
    _kernels_c = None

BACKENDS = [_kernels_py] + ([_kernels_c] if _kernels_c is not None else [])


def random_coeffs(rng, size, bits=64):
    return [rng.randrange(-(1 << bits), 1 << bits) for _ in range(size)]


@pytest.mark.parametrize("backend", BACKENDS, ids=lambda b: b.BACKEND_NAME)
class TestAgainstPure:
    def test_mul(self, backend):
        rng = random.Random(7)
        for size in (1, 2, 17, 64):
            a = random_coeffs(rng, size)
            b = random_coeffs(rng, size)
            assert backend.mul_trunc(a, b, size) == _kernels_py.mul_trunc(a, b, size)

    def test_mul_asymmetric_lengths(self, backend):
        rng = random.Random(11)
        a = random_coeffs(rng, 5)
        b = random_coeffs(rng, 40)
        assert backend.mul_trunc(a, b, 12) == _kernels_py.mul_trunc(a, b, 12)

    def test_invert(self, backend):
        rng = random.Random(13)
        for lead in (1, -1):
            a = [lead] + random_coeffs(rng, 63)
            got = backend.invert_trunc(a, 64)
            assert got == _kernels_py.invert_trunc(a, 64)
            assert _kernels_py.mul_trunc(a, got, 64) == [1] + [0] * 63

    def test_binomial_update(self, backend):
        rng = random.Random(17)
        base = random_coeffs(rng, 50)
        for e, coef in ((0, 1), (1, -1), (7, 3), (49, -2), (60, 5)):
            got = list(base)
            expected = list(base)
            backend.binomial_update(got, e, coef, 50)
            _kernels_py.binomial_update(expected, e, coef, 50)
            assert got == expected

    def test_huge_coefficients(self, backend):
        rng = random.Random(19)
        a = random_coeffs(rng, 24, bits=600)
        b = random_coeffs(rng, 24, bits=600)
        assert backend.mul_trunc(a, b, 24) == _kernels_py.mul_trunc(a, b, 24)


def test_active_backend_is_declared():
    assert _backend.BACKEND_NAME in ("cython", "python")
    assert _backend.mul_trunc is _backend.kernels.mul_trunc
