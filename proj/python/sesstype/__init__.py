"""Session types with intersection and union types."""

from ._core import *  # noqa: F401,F403
from ._core import Error, Global, NormalForm, Process, Type

__all__ = [name for name in dir() if not name.startswith("_")]
