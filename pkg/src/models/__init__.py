"""Pydantic models for command-line requests."""

from src.models.commands import N_LIMITS, Command, ConvertCommand

__all__ = ["N_LIMITS", "Command", "ConvertCommand"]
