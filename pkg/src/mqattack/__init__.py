"""Boolean polynomial system solving through Macaulay linear systems."""

__version__ = "0.1.0"
