"""Kernel backend selection: compiled extension if built, else pure Python.

``BACKEND`` reports which implementation is active.  Both backends are
importable side by side (the compiled one only if it was built), which the
parity tests and the kernel benchmark rely on.
"""

from . import _kernels_py

try:  # pragma: no cover - depends on whether the extension was compiled
    from . import _kernels_c
except ImportError:  # pragma: no cover
    _kernels_c = None

if _kernels_c is not None:  # pragma: no cover
    BACKEND = "compiled"
    _impl = _kernels_c
else:
    BACKEND = "python"
    _impl = _kernels_py

orbit_ids2 = _impl.orbit_ids2
orbit_ids3 = _impl.orbit_ids3
face_data = _impl.face_data
bipartite3 = _impl.bipartite3
