"""Python bindings for the sokoban-lab solver core."""

from ._core import *  # noqa: F401,F403
from ._core import __version__, SokobanError  # noqa: F401
