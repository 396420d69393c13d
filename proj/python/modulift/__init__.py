"""Exact ATSP solving and modular-lift optimality certificates."""

try:
    from ._modulift import *  # noqa: F401,F403
except ImportError:  # flat layout: extension sits next to the package
    from _modulift import *  # noqa: F401,F403
