"""Knot mosaic toolkit: validation, invariants, census, bounds and the
Gauss-code compiler, backed by the C++ core."""

try:
    from ._knotmosaic import *  # noqa: F401,F403  (installed layout)
    from ._knotmosaic import __doc__ as _doc
except ImportError:  # development layout: extension built next to the tree
    from _knotmosaic import *  # noqa: F401,F403
    from _knotmosaic import __doc__ as _doc

__doc__ = _doc or __doc__
