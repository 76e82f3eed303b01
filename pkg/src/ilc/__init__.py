"""Exact verification of infinite log-concavity and its analogues."""

__version__ = "0.1.0"

from .errors import InvalidInput, ResourceLimit

__all__ = ["InvalidInput", "ResourceLimit", "__version__"]
