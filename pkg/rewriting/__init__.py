"""
ExtWords Rewriting Package
Base-group rewriting on finite windows, reducedness checks and reduction traces
"""

__version__ = "0.1.0"
