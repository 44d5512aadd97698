"""
Test suite for FamCake.
"""
