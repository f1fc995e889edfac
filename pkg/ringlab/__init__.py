"""
ringlab: a finite noncommutative ring localization laboratory.
"""

__version__ = "0.1.0"
