"""Input validation module."""

from src.validation.inputs import (
    ObjectInput,
    ValidationResult,
    build_object,
    is_valid_object,
    parse_object,
    validate,
)

__all__ = [
    "ObjectInput",
    "ValidationResult",
    "build_object",
    "is_valid_object",
    "parse_object",
    "validate",
]
