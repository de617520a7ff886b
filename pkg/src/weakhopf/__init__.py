"""Exact verification engine for finite groupoid algebras, their duals,
smash products, and the structural claims about the duality map between
them.  All arithmetic is exact (rationals or a prime field); every check
is exhaustive over basis tuples and reports concrete witnesses."""

__version__ = "0.1.0"
