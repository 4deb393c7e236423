"""Search kernels: the compiled extension when it is built, pure Python otherwise.

Set ``SPROUTLAB_PURE_PYTHON=1`` to force the fallback.  Both backends expose
``extrema``, ``bnb_min`` and ``unit_chain`` with identical results.
"""

import os

from . import _pykernels as python_backend

try:
    from . import _ckernels as compiled_backend
except ImportError:  # extension not built
    compiled_backend = None


def get_backend(name=None):
    """Return the kernel module named ``"compiled"`` or ``"python"`` (default: best available)."""
    if name is None:
        if os.environ.get("SPROUTLAB_PURE_PYTHON") or compiled_backend is None:
            return python_backend
        return compiled_backend
    if name == "python":
        return python_backend
    if name == "compiled":
        if compiled_backend is None:
            raise ImportError("compiled kernels are not built; run `pip install -e .`")
        return compiled_backend
    raise ValueError(f"unknown kernel backend {name!r}")


def backend_name(module=None) -> str:
    module = module or get_backend()
    return "compiled" if module is compiled_backend else "python"
