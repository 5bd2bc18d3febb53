"""Worker pool for data-parallel signature computation."""

from .batch_processor import SignatureProcessor

__all__ = ['SignatureProcessor']
