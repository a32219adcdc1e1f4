"""
ExtWords Exponents Package
Ordered exponent arithmetic over Z[t] and closed intervals
"""

__version__ = "0.1.0"
