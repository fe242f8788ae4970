"""Input validation for user-provided parking objects."""

import json
from typing import Any

from pydantic import BaseModel, Field, ValidationError, field_validator

from src.config import REPRESENTATIONS
from src.nc.partitions import NoncrossingPartition, SetPartition, canonical_blocks
from src.nc.permutations import Permutation, parse_word
from src.parking.conversions import AnyParking, ConversionError, pair_to_triple
from src.parking.objects import (
    KParkingTree,
    KParkingWord,
    NC2Pair,
    NC2Triple,
    ParkingTree,
    ParkingWord,
    TreeNode,
)


class ValidationResult(BaseModel):
    """Outcome of validating a parking object."""

    valid: bool
    diagnostic: str | None = Field(default=None, description="First violated invariant")


class ObjectInput(BaseModel):
    """Raw parking object as typed on the command line or read from JSON."""

    representation: str = Field(..., description="triple, pair, word or tree")
    text: str = Field(..., min_length=1, max_length=10_000)
    k: int = Field(default=1, ge=1)

    @field_validator("representation")
    @classmethod
    def validate_representation(cls, v: str) -> str:
        """Ensure the representation name is known.

        Args:
            v: Representation name

        Returns:
            Lower-cased representation name

        Raises:
            ValueError: If the name is not one of REPRESENTATIONS
        """
        v = v.strip().lower()
        if v not in REPRESENTATIONS:
            raise ValueError(
                f"Invalid representation: {v}. Valid options: {', '.join(REPRESENTATIONS)}"
            )
        return v


def _diagnostic(e: Exception) -> str:
    if isinstance(e, ValidationError):
        first = e.errors()[0]
        return str(first["msg"]).removeprefix("Value error, ")
    return str(e)


def _tree_size(node: dict[str, Any]) -> int:
    return len(node.get("label", [])) + sum(_tree_size(c) for c in node.get("children", []))


def build_object(data: Any, representation: str, k: int = 1) -> AnyParking:
    """Build a parking object from decoded JSON or a word string.

    Args:
        data: A word (string or list of ints), a nested tree dict, or a
            {"n", "blocks", "sigma"} / {"n", "blocks", "rho", "lambda"} dict
        representation: One of REPRESENTATIONS
        k: Multiplicity for words and trees

    Returns:
        The validated object

    Raises:
        ValueError: If the data violates an invariant of the representation
    """
    if representation == "word":
        letters = parse_word(data) if isinstance(data, str) else tuple(int(a) for a in data)
        if k == 1:
            return ParkingWord(word=letters)
        return KParkingWord(word=letters, k=k)
    if representation == "tree":
        root = TreeNode.model_validate(data)
        n = _tree_size(data)
        if k == 1:
            return ParkingTree(root=root, n=n)
        return KParkingTree(root=root, n=n, k=k)
    pi = NoncrossingPartition.from_blocks(data["n"], data["blocks"])
    if "sigma" in data:
        pair = NC2Pair(pi=pi, sigma=Permutation(word=tuple(data["sigma"])))
        return pair if representation == "pair" else pair_to_triple(pair)
    if representation == "triple" and "lambda" in data:
        lam = tuple(tuple(sorted(b)) for b in data["lambda"])
        rho = SetPartition(n=data["n"], blocks=canonical_blocks(lam))
        return NC2Triple(pi=pi, rho=rho, lam=lam)
    raise ValueError(f"A {representation} needs a 'sigma' (or 'lambda') entry")


def parse_object(text: str, representation: str, k: int = 1) -> AnyParking:
    """Parse a command-line string into a parking object.

    Words may be given bare ("41112712", "11,1,9"); everything else is JSON.

    Raises:
        ValueError: If the text does not describe a valid object
    """
    raw = ObjectInput(representation=representation, text=text, k=k)
    stripped = raw.text.strip()
    if raw.representation == "word" and not stripped.startswith("["):
        return build_object(stripped, "word", raw.k)
    try:
        data = json.loads(stripped)
    except json.JSONDecodeError as e:
        raise ValueError(f"Input is not valid JSON: {e.msg}") from e
    return build_object(data, raw.representation, raw.k)


def validate(x: Any, representation: str | None = None, k: int = 1) -> ValidationResult:
    """Check a parking object, or raw data for one, without raising.

    Args:
        x: A model instance, or raw data (string, list, dict) when
            representation is given
        representation: Representation of raw data
        k: Multiplicity for raw words and trees

    Returns:
        ValidationResult with the first violated invariant as diagnostic
    """
    try:
        if isinstance(x, BaseModel):
            type(x).model_validate(x.model_dump())
        elif representation is None:
            return ValidationResult(valid=False, diagnostic="Raw input needs a representation")
        elif isinstance(x, str):
            parse_object(x, representation, k)
        else:
            build_object(x, representation, k)
    except (ValueError, KeyError, TypeError, ConversionError) as e:
        return ValidationResult(valid=False, diagnostic=_diagnostic(e))
    return ValidationResult(valid=True)


def is_valid_object(x: Any, representation: str | None = None, k: int = 1) -> bool:
    """Check validity without raising exceptions."""
    return validate(x, representation, k).valid
