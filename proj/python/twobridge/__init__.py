"""Exact invariants of 2-bridge knots at parabolic SL(2) representations."""

try:
    from ._twobridge import *  # packaged extension
    from ._twobridge import __all__, __doc__
except ImportError:  # development layout: extension built next to the package
    from _twobridge import *
    from _twobridge import __all__, __doc__

__version__ = "0.1.0"
