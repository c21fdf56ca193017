"""Recoverable qubit coherence under steering.

Thin wrapper around the compiled extension. Works both installed (the
extension lives inside this package) and from an in-tree CMake build (the
extension sits on PYTHONPATH next to the build products).
"""

try:
    from ._recoh import *  # noqa: F401,F403
    from ._recoh import __version__  # noqa: F401
except ImportError:  # in-tree build
    from _recoh import *  # noqa: F401,F403
    from _recoh import __version__  # noqa: F401
