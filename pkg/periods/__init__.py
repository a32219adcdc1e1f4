"""
ExtWords Periods Package
Periods, proper-period lattices and stabilizers of ray patterns
"""

__version__ = "0.1.0"
