"""Application layer for the split cubic toolkit."""

from .certification import (
    AppendixVerification,
    CellDiff,
    CertificationService,
    TranscendentalCertificate,
)

__all__ = [
    "AppendixVerification",
    "CellDiff",
    "CertificationService",
    "TranscendentalCertificate",
]
