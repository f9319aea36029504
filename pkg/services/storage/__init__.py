"""Storage layer for certificate persistence."""

from .certificate_storage import CertificateStorage

__all__ = ["CertificateStorage"]
