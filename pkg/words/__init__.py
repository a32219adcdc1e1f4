"""
ExtWords Words Package
Closed non-Archimedean words: blocks, factors, rotation, comparison and canonical forms
"""

__version__ = "0.1.0"
