"""Select the compiled kernels when importable, else the numpy fallback.

Set ``ELLINT2_PURE_PYTHON=1`` to force the fallback.
"""

import os

if os.environ.get("ELLINT2_PURE_PYTHON"):
    from ._pykernels import eq7_core, f4_sum, tensor_sum

    BACKEND = "python"
else:
    try:
        from ._kernels import eq7_core, f4_sum, tensor_sum

        BACKEND = "cython"
    except ImportError:
        from ._pykernels import eq7_core, f4_sum, tensor_sum

        BACKEND = "python"

__all__ = ["BACKEND", "eq7_core", "f4_sum", "tensor_sum"]
