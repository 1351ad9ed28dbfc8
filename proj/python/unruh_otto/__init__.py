"""Unruh quantum Otto engine with an n-fold degenerate excited level."""

from ._core import *  # noqa: F401,F403
from ._core import __version__  # noqa: F401
