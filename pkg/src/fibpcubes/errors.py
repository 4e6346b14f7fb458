class SizeLimitError(Exception):
    """A requested enumeration or graph materialization exceeds its cap."""
