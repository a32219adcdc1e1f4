"""
ExtWords Shell Package
Expression parser, session state, commands and the demo corpus
"""

__version__ = "0.1.0"
