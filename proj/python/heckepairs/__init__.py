"""Exact Hecke eigenvalue angles, Selberg majorants and pair-count bounds."""

try:
    from ._core import *  # noqa: F401,F403
    from ._core import __version__  # noqa: F401
except ImportError:
    # Test-tree layout: the extension sits next to the build directory and
    # is importable as a top-level module via PYTHONPATH.
    from _core import *  # noqa: F401,F403
    from _core import __version__  # noqa: F401
