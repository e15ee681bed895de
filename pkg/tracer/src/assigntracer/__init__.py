"""assigntracer: record (name, value) pairs at every executed assignment."""

__version__ = "0.1.0"
