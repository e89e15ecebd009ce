"""JIT backend selection.

The hot kernels in :mod:`contractive.kernels` are compiled with numba when it
is importable.  Setting the environment variable ``CONTRACTIVE_DISABLE_JIT``
to ``1`` (or ``true``/``yes``/``on``) before import forces the pure
numpy/Python fallback path; the same source runs uncompiled.  See
``benchmarks/bench_backends.py`` for a timing comparison of the two paths.
"""
import os

ENV_FLAG = "CONTRACTIVE_DISABLE_JIT"


def _jit_disabled() -> bool:
    return os.environ.get(ENV_FLAG, "").strip().lower() in {"1", "true", "yes", "on"}


if _jit_disabled():
    JIT_ENABLED = False
else:
    try:
        from numba import njit as _numba_njit  # noqa: F401

        JIT_ENABLED = True
    except ImportError:
        JIT_ENABLED = False

if JIT_ENABLED:
    from numba import njit
else:

    def njit(func=None, **_kwargs):
        """Identity decorator standing in for numba.njit."""
        if func is None:
            return lambda f: f
        return func


def py_func(func):
    """Return the uncompiled Python implementation behind a jitted function."""
    return getattr(func, "py_func", func)
