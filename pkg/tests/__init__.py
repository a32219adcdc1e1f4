"""
ExtWords Tests Package
Test suite for the ExtWords engine
"""

__version__ = "0.1.0"
