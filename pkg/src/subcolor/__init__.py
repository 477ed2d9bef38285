"""2-subcolouring toolkit: exact solvers, gadget certification and the planar reduction."""

__version__ = "0.1.0"
