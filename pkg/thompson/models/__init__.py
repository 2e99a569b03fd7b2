"""Report models."""

from .schemas import ConjugacyCertificate, CycleType, OrbitAnswer, PowerPair, PowerPairSet

__all__ = [
    "OrbitAnswer",
    "CycleType",
    "ConjugacyCertificate",
    "PowerPair",
    "PowerPairSet",
]
