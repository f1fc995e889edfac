"""
Core algebra engines.
"""
