"""Kernel selection.

The compiled extension is used when it imports; set ``QRR_PURE_PYTHON=1``
to force the pure-Python kernels (the benchmark and the kernel tests flip
between both through :func:`use_backend`).
"""

import os

from qrr import _kernels_py

try:
    from qrr import _ckernels
except ImportError:  # extension not built
    _ckernels = None

_NAMES = ("conv", "inv", "mul_binom", "div_binom")

conv = inv = mul_binom = div_binom = None
BACKEND = None


def available_backends():
    return ["python"] + (["compiled"] if _ckernels is not None else [])


def use_backend(name):
    """Rebind the module-level kernels to ``"compiled"`` or ``"python"``."""
    global BACKEND
    if name == "compiled":
        if _ckernels is None:
            raise RuntimeError("compiled kernels are not built")
        mod = _ckernels
    elif name == "python":
        mod = _kernels_py
    else:
        raise ValueError(f"unknown backend {name!r}")
    g = globals()
    for attr in _NAMES:
        g[attr] = getattr(mod, attr)
    BACKEND = name


if _ckernels is not None and os.environ.get("QRR_PURE_PYTHON", "") in ("", "0"):
    use_backend("compiled")
else:
    use_backend("python")
