"""Finite lattices, formal concept analysis and weak dicomplementations."""

try:
    from wdlkit._core import *  # noqa: F401,F403  (installed layout)
    from wdlkit import _core as _impl
except ImportError:  # in-tree build: the extension sits directly on sys.path
    from _core import *  # noqa: F401,F403
    import _core as _impl

__version__ = "0.1.0"
__all__ = [name for name in dir(_impl) if not name.startswith("_")]
