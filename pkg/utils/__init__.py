"""
ExtWords Utils Package
Configuration, engine limits and error types
"""

__version__ = "0.1.0"
