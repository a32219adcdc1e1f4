"""
ExtWords Groups Package
Base group oracles: free, free abelian, infinite cyclic and table groups
"""

__version__ = "0.1.0"
