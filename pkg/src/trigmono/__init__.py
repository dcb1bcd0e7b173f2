"""Mod-2 monodromy of trigonal curves: presentations, transvection
representations, the Milnor lattice and branch-curve numerology."""

__version__ = "0.1.0"
