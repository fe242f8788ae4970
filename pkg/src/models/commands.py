"""Pydantic models for command-line requests."""

from pathlib import Path
from typing import ClassVar

from pydantic import BaseModel, Field, field_validator, model_validator

from src.config import (
    MAX_CLUSTER_N,
    MAX_K_POSET_K,
    MAX_K_POSET_N,
    MAX_LONG_SHELLING_N,
    MAX_PP_POSET_N,
    MAX_SERIES_ORDER,
    MAX_SHELLING_N,
    OUTPUT_FORMATS,
    REPRESENTATIONS,
)

# Largest n per subcommand, then the limit once --long is given
N_LIMITS: dict[str, tuple[int, int]] = {
    "poset": (MAX_PP_POSET_N, MAX_PP_POSET_N),
    "count": (MAX_PP_POSET_N, MAX_PP_POSET_N),
    "shelling": (MAX_SHELLING_N, MAX_LONG_SHELLING_N),
    "homology": (4, 5),
    "cluster": (MAX_CLUSTER_N, MAX_CLUSTER_N),
    "kdivisible": (MAX_K_POSET_N, MAX_K_POSET_N),
    "character-table": (4, MAX_PP_POSET_N),
    "series": (MAX_SERIES_ORDER, MAX_SERIES_ORDER),
    "verify-all": (4, 5),
}


class Command(BaseModel):
    """A parsed subcommand with its parameters."""

    VALID_COMMANDS: ClassVar[set[str]] = {"convert", *N_LIMITS}

    name: str = Field(..., min_length=1)
    n: int = Field(default=3, ge=1)
    k: int = Field(default=1, ge=1)
    ell: int | None = Field(default=None, ge=0)
    output_format: str = Field(default="csv")
    output: Path | None = None
    jobs: int = Field(default=1, ge=1)
    long: bool = False

    @field_validator("name")
    @classmethod
    def validate_name(cls, v: str) -> str:
        """Validate that the subcommand is known."""
        if v not in cls.VALID_COMMANDS:
            raise ValueError(
                f"Unknown command: {v}. Valid options: {', '.join(sorted(cls.VALID_COMMANDS))}"
            )
        return v

    @field_validator("output_format")
    @classmethod
    def validate_format(cls, v: str) -> str:
        """Validate that the output format is one of OUTPUT_FORMATS."""
        v = v.strip().lower()
        if v not in OUTPUT_FORMATS:
            raise ValueError(f"Invalid format: {v}. Valid options: {', '.join(OUTPUT_FORMATS)}")
        return v

    @model_validator(mode="after")
    def validate_ranges(self) -> "Command":
        """Keep n, k and ell inside the limits of the subcommand."""
        if self.name in N_LIMITS:
            limit = N_LIMITS[self.name][1 if self.long else 0]
            if self.n > limit:
                hint = "" if self.long or N_LIMITS[self.name][1] == limit else " (or pass --long)"
                raise ValueError(f"{self.name} accepts n <= {limit}, got {self.n}{hint}")
        if self.name == "kdivisible" and self.k > MAX_K_POSET_K:
            raise ValueError(f"kdivisible accepts k <= {MAX_K_POSET_K}, got {self.k}")
        if self.ell is not None and self.ell >= self.n:
            raise ValueError(f"Rank ell must be below n = {self.n}, got {self.ell}")
        return self


class ConvertCommand(BaseModel):
    """A conversion request between two representations."""

    source: str = Field(..., description="Representation of the input")
    target: str = Field(..., description="Representation of the output")
    text: str = Field(..., min_length=1)
    k: int = Field(default=1, ge=1)
    output: Path | None = None

    @field_validator("source", "target")
    @classmethod
    def validate_representation(cls, v: str) -> str:
        """Validate that the representation is one of REPRESENTATIONS."""
        v = v.strip().lower()
        if v not in REPRESENTATIONS:
            raise ValueError(
                f"Invalid representation: {v}. Valid options: {', '.join(REPRESENTATIONS)}"
            )
        return v

    @model_validator(mode="after")
    def validate_k(self) -> "ConvertCommand":
        """Pairs and triples exist only for k = 1."""
        if self.k > 1 and {self.source, self.target} - {"word", "tree"}:
            raise ValueError("Only words and trees carry k > 1")
        return self
