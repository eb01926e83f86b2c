"""Genus bounds for curves on a smooth three-dimensional quadric."""

from ._qgenus import *  # noqa: F401,F403
