"""Tests for Pydantic models."""

from pathlib import Path

import pytest
from pydantic import ValidationError

from src.models.commands import N_LIMITS, Command, ConvertCommand


class TestCommand:
    """Tests for Command model."""

    def test_defaults(self) -> None:
        """Test the default parameters."""
        cmd = Command(name="count")
        assert (cmd.n, cmd.k, cmd.ell, cmd.output_format, cmd.jobs) == (3, 1, None, "csv", 1)
        assert cmd.output is None

    @pytest.mark.parametrize("name", sorted(N_LIMITS))
    def test_known_commands(self, name: str) -> None:
        """Test that every subcommand accepts n = 2."""
        assert Command(name=name, n=2).name == name

    def test_unknown_command(self) -> None:
        """Test that an unknown subcommand raises."""
        with pytest.raises(ValidationError) as exc_info:
            Command(name="draw")

        assert "Unknown command" in str(exc_info.value)

    def test_format_is_normalized(self) -> None:
        """Test that the output format is stripped and lower-cased."""
        assert Command(name="poset", output_format=" JSON ").output_format == "json"

    def test_invalid_format(self) -> None:
        """Test that an unknown format raises."""
        with pytest.raises(ValidationError, match="Invalid format"):
            Command(name="poset", output_format="xml")

    def test_n_limit(self) -> None:
        """Test that the shelling limit suggests --long."""
        with pytest.raises(ValidationError, match="pass --long"):
            Command(name="shelling", n=5)

    def test_long_unlocks(self) -> None:
        """Test that --long raises the shelling limit."""
        assert Command(name="shelling", n=5, long=True).n == 5

    def test_long_has_a_limit(self) -> None:
        """Test that --long still caps n."""
        with pytest.raises(ValidationError, match="n <= 5"):
            Command(name="shelling", n=6, long=True)

    def test_kdivisible_k(self) -> None:
        """Test the k limit of the k-divisible posets."""
        with pytest.raises(ValidationError, match="k <= 3"):
            Command(name="kdivisible", k=4)

    def test_ell_below_n(self) -> None:
        """Test that the rank must be below n."""
        assert Command(name="count", n=3, ell=2).ell == 2
        with pytest.raises(ValidationError, match="below n"):
            Command(name="count", n=3, ell=3)

    @pytest.mark.parametrize("field", ["n", "k", "jobs"])
    def test_positive_fields(self, field: str) -> None:
        """Test that sizes and job counts are positive."""
        with pytest.raises(ValidationError):
            Command.model_validate({"name": "count", field: 0})

    def test_output_path(self, tmp_path: Path) -> None:
        """Test that an output path is kept."""
        target = tmp_path / "out.csv"
        assert Command(name="count", output=target).output == target


class TestConvertCommand:
    """Tests for ConvertCommand model."""

    def test_valid(self) -> None:
        """Test a word-to-tree request."""
        cmd = ConvertCommand(source="Word", target="tree", text="1325271")
        assert (cmd.source, cmd.target, cmd.k) == ("word", "tree", 1)

    def test_invalid_representation(self) -> None:
        """Test that an unknown representation raises."""
        with pytest.raises(ValidationError, match="Invalid representation"):
            ConvertCommand(source="word", target="matrix", text="11")

    def test_empty_text(self) -> None:
        """Test that the input cannot be empty."""
        with pytest.raises(ValidationError):
            ConvertCommand(source="word", target="tree", text="")

    def test_k_needs_words_or_trees(self) -> None:
        """Test that pairs and triples only exist for k = 1."""
        assert ConvertCommand(source="word", target="tree", text="135", k=2).k == 2
        with pytest.raises(ValidationError, match="k > 1"):
            ConvertCommand(source="word", target="pair", text="135", k=2)
