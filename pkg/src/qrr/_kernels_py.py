"""Pure-Python integer kernels.

Every kernel takes and returns plain lists of Python ints (arbitrary
precision). The compiled module ``qrr._ckernels`` exposes the same names and
signatures and defers to these functions whenever a value leaves its fixed
width fast path.
"""

from operator import mul

__all__ = ["conv", "inv", "mul_binom", "div_binom"]


def conv(a, b, n):
    """Truncated convolution: ``c[k] = sum a[i]*b[k-i]`` for ``0 <= k < n``."""
    la, lb = len(a), len(b)
    if n <= 0:
        return []
    if la == 0 or lb == 0:
        return [0] * n
    if la > lb:
        a, b, la, lb = b, a, lb, la
    rb = b[::-1]
    top = min(n, la + lb - 1)
    out = [0] * n
    for k in range(top):
        lo = k - lb + 1
        if lo < 0:
            lo = 0
        hi = k if k < la - 1 else la - 1
        out[k] = sum(map(mul, a[lo:hi + 1], rb[lb - 1 - k + lo:lb - k + hi]))
    return out


def inv(a, n):
    """Inverse of a power series with integer coefficients and ``a[0] != 0``.

    Returns ``(c, d)`` with ``1/a == sum(c[k] q^k) / d`` modulo ``q^n``.
    """
    a0 = a[0]
    if a0 == 0:
        raise ZeroDivisionError("leading coefficient is zero")
    la = len(a)
    if a0 == 1 or a0 == -1:
        b = [a0]
        for k in range(1, n):
            hi = k if k < la - 1 else la - 1
            s = sum(map(mul, a[1:hi + 1], b[k - 1:k - hi - 1 if k - hi - 1 >= 0 else None:-1]))
            b.append(-a0 * s)
        return b[:n], 1
    # b_k = beta_k / a0^(k+1), beta_k = -sum_{j>=1} a_j beta_{k-j} a0^(j-1)
    powers = [1]
    for _ in range(1, min(n, la)):
        powers.append(powers[-1] * a0)
    beta = [1]
    for k in range(1, n):
        hi = k if k < la - 1 else la - 1
        s = 0
        for j in range(1, hi + 1):
            aj = a[j]
            if aj:
                s += aj * beta[k - j] * powers[j - 1]
        beta.append(-s)
    d = a0 ** n
    out = []
    p = 1
    for k in range(n - 1, -1, -1):
        out.append(beta[k] * p)
        p *= a0
    out.reverse()
    return out, d


def mul_binom(p, c, e):
    """Coefficients of ``p * (1 - c q^e)`` truncated to ``len(p)``; ``e >= 0``."""
    n = len(p)
    if e >= n:
        return list(p)
    if e == 0:
        f = 1 - c
        return [f * x for x in p]
    head = p[:e]
    if c == 1:
        return head + [x - y for x, y in zip(p[e:], p)]
    if c == -1:
        return head + [x + y for x, y in zip(p[e:], p)]
    return head + [x - c * y for x, y in zip(p[e:], p)]


def div_binom(p, c, e):
    """Coefficients of ``p / (1 - c q^e)`` truncated to ``len(p)``; ``e > 0``."""
    n = len(p)
    out = list(p)
    if e >= n:
        return out
    if c == 1:
        for i in range(e, n):
            out[i] += out[i - e]
    elif c == -1:
        for i in range(e, n):
            out[i] -= out[i - e]
    else:
        for i in range(e, n):
            out[i] += c * out[i - e]
    return out
