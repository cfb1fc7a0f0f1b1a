"""
Hilbert-Kunz sample models.

Measured colengths are plain integers, so samples and series are pydantic
models that serialize straight into experiment reports.

Responsibility: Data transfer objects for Frobenius-power colength samples
"""

from typing import List

from pydantic import BaseModel, ConfigDict, Field, model_validator


class HKSample(BaseModel):
    """
    One measured colength lg(R/I^[q]) with q = p^e.
    """
    model_config = ConfigDict(frozen=True)

    e: int = Field(ge=0, description="Frobenius exponent")
    q: int = Field(ge=1, description="p^e")
    length: int = Field(ge=0, description="Colength actually measured")


class HKSeries(BaseModel):
    """
    Hilbert-Kunz function samples e -> lg(R/I^[p^e]) for one (ring, ideal) pair.

    Example:
        series = HKSeries(characteristic=2, dimension=3, samples=[...])
    """
    model_config = ConfigDict(frozen=True)

    characteristic: int = Field(ge=2, description="Prime p")
    dimension: int = Field(ge=1, description="Krull dimension of the ring")
    samples: List[HKSample] = Field(default_factory=list)

    @model_validator(mode="after")
    def check_samples(self) -> "HKSeries":
        previous = -1
        for sample in self.samples:
            if sample.e <= previous:
                raise ValueError("samples must have strictly increasing e")
            if sample.q != self.characteristic ** sample.e:
                raise ValueError(f"sample q={sample.q} is not {self.characteristic}^{sample.e}")
            previous = sample.e
        return self

    @property
    def lengths(self) -> List[int]:
        return [sample.length for sample in self.samples]
