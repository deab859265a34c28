"""Backend selection for the GF(p) hot kernels.

The compiled extension is used when importable; set NILEXT_FORCE_PURE=1 to
force the pure-Python twin (both implement the contract documented in
`_pyfallback`).
"""

from __future__ import annotations

import os

from . import _pyfallback

if os.environ.get("NILEXT_FORCE_PURE"):
    backend = _pyfallback
else:
    try:
        from . import _speedups as backend  # type: ignore[no-redef]
    except ImportError:
        backend = _pyfallback

pure = _pyfallback


def backend_name() -> str:
    return backend.BACKEND


scan_tables = backend.scan_tables
decode_table = backend.decode_table
canonical_form = backend.canonical_form
canonical_form_gl = backend.canonical_form_gl
iso_search = backend.iso_search
automorphisms = backend.automorphisms
hom_from_generator = backend.hom_from_generator


def default_threads() -> int:
    env = os.environ.get("NILEXT_THREADS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            pass
    return 1
