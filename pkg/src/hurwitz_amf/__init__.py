"""Algebraic modular forms on the Hurwitz order: exact bases, Hecke operators and applications."""

__version__ = "0.1.0"
