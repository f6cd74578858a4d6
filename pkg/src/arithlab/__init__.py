"""Arithmetization laboratory for Peano Arithmetic."""
import sys

# numerals are successor chains; printing and substitution recurse through them
sys.setrecursionlimit(max(sys.getrecursionlimit(), 10_000))

__version__ = "0.1.0"
