"""
ExtWords Extension Package
Generator preprocessing, reduced degree and the word problem in Ext(A,G)
"""

__version__ = "0.1.0"
