"""
Bell inequality tests with higher order intensity correlations of thermal light.
"""

__version__ = '0.1.1'
