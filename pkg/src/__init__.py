"""
FamCake: exact fair division of a one-dimensional cake among families.
"""

__version__ = "0.1.0"
