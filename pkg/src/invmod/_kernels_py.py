"""Pure-Python versions of the series kernels.

Each function takes and returns plain lists of Python ints.
"""


def convolve(a, b, n):
    """Truncated Cauchy product: out[k] = sum a[i]*b[k-i] for k <= n."""
    out = [0] * (n + 1)
    lb = len(b)
    for i, ai in enumerate(a[: n + 1]):
        if not ai:
            continue
        for j in range(min(lb, n + 1 - i)):
            bj = b[j]
            if bj:
                out[i + j] += ai * bj
    return out


def axpby(x, a, y, b):
    return [x * u + y * v for u, v in zip(a, b)]


def scale_by_index(a, power):
    return [c * i**power for i, c in enumerate(a)]
