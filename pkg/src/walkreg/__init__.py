"""Walk-regularity analysis of finite graphs."""

__version__ = "0.1.0"
