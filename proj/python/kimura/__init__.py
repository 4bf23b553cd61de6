"""Exact Kimura-dimension calculus.

Thin package around the compiled ``_kimura`` extension: symmetric group
characters and central idempotents, Schur functor super-dimensions, formal
motive bookkeeping, orbit category arithmetic, and quadric fibration
decompositions.
"""

try:
    from ._kimura import *  # noqa: F401,F403
    from ._kimura import __version__  # noqa: F401
except ImportError:  # extension built out of tree (plain CMake builds)
    from _kimura import *  # noqa: F401,F403
    from _kimura import __version__  # noqa: F401
