"""Exact small quantum cohomology of flag manifolds G/B."""
__version__ = "0.1.0"
