"""Cross-Sperner family laboratory: python surface over the C++ core."""

try:
    from ._xsperner import *  # noqa: F401,F403  (installed layout)
except ImportError:
    from _xsperner import *  # noqa: F401,F403  (build-tree layout)
