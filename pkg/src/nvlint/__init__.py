"""nvlint: find name-value inconsistencies by learning from runtime traces."""

__version__ = "0.1.0"
