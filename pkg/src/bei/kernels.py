"""Homology kernel selection: compiled extension when importable, pure Python otherwise.

Set ``BEI_PURE_PYTHON=1`` to force the fallback.
"""

from __future__ import annotations

import os

from . import _pykernels

if os.environ.get("BEI_PURE_PYTHON"):
    _compiled = None
else:
    try:
        from . import _ckernels as _compiled
    except ImportError:  # extension not built
        _compiled = None

BACKEND = "cython" if _compiled is not None else "python"


def reduced_betti(faces, sigma, max_dim, field="gf2", backend=None):
    impl = _pick(field, backend)
    return impl.reduced_betti(faces, sigma, max_dim, field)


def pd_search(faces, sigmas, best, prune=True, field="gf2", backend=None):
    impl = _pick(field, backend)
    return impl.pd_search(faces, sigmas, best, prune, field)


def _pick(field, backend):
    if backend == "python" or field != "gf2" or _compiled is None:
        if backend == "cython" and _compiled is None:
            raise RuntimeError("compiled kernels are not available")
        return _pykernels
    return _compiled
