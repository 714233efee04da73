"""Hot-loop kernels with two interchangeable backends.

The compiled Cython backend is preferred; the pure-Python one is selected
when the extension is missing or when SYMSIG_KERNEL=python is set.  Both
expose the same three functions and produce bit-identical results (the
compiled one works in int64 and refuses inputs that could overflow).
"""

import os


def load_backend(name: str):
    """Import a backend by name ("compiled" or "python")."""
    if name == "python":
        from symsig._kernel import _fallback

        return _fallback
    if name == "compiled":
        from symsig._kernel import _speedups

        return _speedups
    raise ValueError(f"unknown kernel backend {name!r}")


_requested = os.environ.get("SYMSIG_KERNEL", "").strip().lower()
if _requested in ("", "compiled"):
    try:
        _impl = load_backend("compiled")
        BACKEND = "compiled"
    except ImportError:
        if _requested == "compiled":
            raise
        _impl = load_backend("python")
        BACKEND = "python"
elif _requested == "python":
    _impl = load_backend("python")
    BACKEND = "python"
else:
    raise ValueError(f"SYMSIG_KERNEL must be 'compiled' or 'python', not {_requested!r}")

sl2_multiplicity_series = _impl.sl2_multiplicity_series
weight_slice_counts = _impl.weight_slice_counts
weight_slice_count = _impl.weight_slice_count
