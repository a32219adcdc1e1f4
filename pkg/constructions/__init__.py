"""
ExtWords Constructions Package
Ray pairs, torsion words, abelian towers, HNN stable letters and cdr words
"""

__version__ = "0.1.0"
