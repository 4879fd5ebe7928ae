"""Exact p-adic random matrix operations and Hall-Littlewood machinery.

The heavy lifting happens in the compiled extension ``padichl._core``;
this package re-exports its surface.
"""

from padichl._core import *  # noqa: F401,F403
from padichl._core import INFINITE  # noqa: F401

__all__ = [name for name in dir() if not name.startswith("_")]
