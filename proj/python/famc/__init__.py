"""Amenability constants of Fourier algebras of finite groups."""

try:
    from ._famc import *  # noqa: F401,F403
    from ._famc import __doc__ as _doc
except ImportError:  # bare module on PYTHONPATH (in-tree builds)
    from _famc import *  # noqa: F401,F403
    from _famc import __doc__ as _doc

__doc__ = _doc or __doc__
