"""Crystals, Demazure atoms and non-symmetric Cauchy identities at desk scale."""

__version__ = "0.1.0"
