import random

import pytest

from invmod import _backend, _kernels_py

kernels = [_kernels_py]
try:
    from invmod import _kernels

    kernels.append(_kernels)
except ImportError:
    pass


def _rand(rng, n):
    return [rng.randint(-10**30, 10**30) if rng.random() < 0.8 else 0 for _ in range(n)]


@pytest.mark.parametrize("mod", kernels, ids=lambda m: m.__name__)
def test_matches_reference(mod):
    rng = random.Random(5)
    for _ in range(30):
        a, b = _rand(rng, rng.randint(1, 30)), _rand(rng, rng.randint(1, 30))
        n = rng.randint(0, 35)
        ref = [sum(a[i] * b[k - i] for i in range(k + 1) if i < len(a) and k - i < len(b)) for k in range(n + 1)]
        assert mod.convolve(a, b, n) == ref
        m = min(len(a), len(b))
        assert mod.axpby(3, a[:m], -7, b[:m]) == [3 * x - 7 * y for x, y in zip(a, b)]
        assert mod.scale_by_index(a, 4) == [c * i**4 for i, c in enumerate(a)]


def test_scale_by_index_is_exact_for_large_powers():
    a = [1] * 30
    for mod in kernels:
        out = mod.scale_by_index(a, 40)
        assert all(type(x) is int for x in out)
        assert out[29] == 29**40


def test_backend_exports():
    assert _backend.BACKEND in ("cython", "python")
    for name in ("convolve", "axpby", "scale_by_index"):
        assert callable(getattr(_backend, name))
