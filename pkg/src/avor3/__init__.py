"""Exact cohomology of the second Voronoi compactification of the moduli
space of principally polarized abelian threefolds."""

__version__ = "0.1.0"
