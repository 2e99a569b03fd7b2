"""Pydantic report models returned by the decision procedures."""

from typing import Any, Self

from pydantic import BaseModel, ConfigDict, Field, model_validator


class OrbitAnswer(BaseModel):
    """Answer to "is v = u psi^m for some m"."""

    model_config = ConfigDict(frozen=True)

    related: bool = Field(..., description="Whether u and v share a psi-orbit")
    shift: int | None = Field(default=None, description="An m with u psi^m = v, when related")

    @model_validator(mode="after")
    def _shift_iff_related(self) -> Self:
        if self.related != (self.shift is not None):
            raise ValueError("shift must be given exactly when related")
        return self

    @classmethod
    def unrelated(cls) -> "OrbitAnswer":
        return cls(related=False)

    @classmethod
    def at(cls, shift: int) -> "OrbitAnswer":
        return cls(related=True, shift=shift)


class CycleType(BaseModel):
    """Orbit-size census of a periodic automorphism on a basis."""

    model_config = ConfigDict(frozen=True)

    entries: dict[int, int] = Field(default_factory=dict, description="Orbit size d -> multiplicity m(d)")

    @model_validator(mode="after")
    def _positive(self) -> Self:
        if any(size < 1 or count < 1 for size, count in self.entries.items()):
            raise ValueError("orbit sizes and multiplicities must be positive")
        return self

    @property
    def sizes(self) -> frozenset[int]:
        return frozenset(self.entries)

    def total(self) -> int:
        return sum(size * count for size, count in self.entries.items())

    def __str__(self) -> str:
        return " ".join(f"{size}:{self.entries[size]}" for size in sorted(self.entries))


class ConjugacyCertificate(BaseModel):
    """Outcome of a conjugacy test; rho is set exactly when conjugate."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    conjugate: bool = Field(..., description="Whether rho^-1 psi rho = phi for some rho")
    conjugator: Any = Field(default=None, description="The Automorphism rho, when conjugate")
    reason: str | None = Field(default=None, description="The failing gate, when not conjugate")

    @model_validator(mode="after")
    def _conjugator_iff_conjugate(self) -> Self:
        if self.conjugate != (self.conjugator is not None):
            raise ValueError("conjugator must be given exactly when conjugate")
        return self

    @classmethod
    def refuted(cls, reason: str) -> "ConjugacyCertificate":
        return cls(conjugate=False, reason=reason)

    @classmethod
    def witnessed(cls, conjugator: Any) -> "ConjugacyCertificate":
        return cls(conjugate=True, conjugator=conjugator)


class PowerPair(BaseModel):
    """One solution (a, b, rho) of rho^-1 psi^a rho = phi^b.

    For mixed automorphisms g records the residue that produced the pair; for
    purely regular infinite ones every multiple (ga, gb) also solves the problem
    and g is None.
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    a: int = Field(..., description="Power of psi")
    b: int = Field(..., description="Power of phi")
    g: int | None = Field(default=None, description="Residue in 1..lcm(k, m) for mixed solutions")
    conjugator: Any = Field(..., description="The Automorphism rho")


class PowerPairSet(BaseModel):
    """All generating solutions of the power conjugacy problem."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    pairs: list[PowerPair] = Field(default_factory=list, description="Solutions in sweep order")
    periodic_orders: tuple[int, int] = Field(default=(1, 1), description="Orders (k, m) of the periodic parts")
    bounds: tuple[int, int] = Field(default=(0, 0), description="(a_hat, b_hat) for the regular infinite parts")

    @property
    def solvable(self) -> bool:
        return bool(self.pairs)
