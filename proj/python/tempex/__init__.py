"""Shortest temporal exploration on constantly connected temporal graphs."""

try:
    from ._tempex import *  # noqa: F401,F403  (installed layout)
    from . import _tempex as _impl
except ImportError:  # in-tree: extension built by CMake next to the sources
    from _tempex import *  # noqa: F401,F403
    import _tempex as _impl

__version__ = "0.1.0"
__all__ = [name for name in dir(_impl) if not name.startswith("_")]
