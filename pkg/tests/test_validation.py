"""Tests for input validation module."""

import json

import pytest
from pydantic import ValidationError

from src.parking import KParkingWord, NC2Pair, ParkingWord, convert
from src.validation.inputs import (
    ObjectInput,
    build_object,
    is_valid_object,
    parse_object,
    validate,
)

SAMPLE_PAIR_JSON = '{"n": 3, "blocks": [[1], [2, 3]], "sigma": [2, 1, 3]}'


class TestObjectInput:
    """Tests for ObjectInput validation."""

    def test_normalizes_representation(self) -> None:
        """Test that the representation is stripped and lower-cased."""
        assert ObjectInput(representation="  Tree ", text="{}").representation == "tree"

    def test_rejects_unknown_representation(self) -> None:
        """Test that an unknown representation is rejected."""
        with pytest.raises(ValidationError, match="Invalid representation"):
            ObjectInput(representation="matrix", text="11")

    def test_rejects_empty_text(self) -> None:
        """Test that empty input is rejected."""
        with pytest.raises(ValidationError):
            ObjectInput(representation="word", text="")

    def test_rejects_too_long(self) -> None:
        """Test that overly long input is rejected."""
        with pytest.raises(ValidationError):
            ObjectInput(representation="word", text="1" * 10_001)


class TestParseObject:
    """Tests for parse_object."""

    def test_bare_word(self) -> None:
        """Test a word typed as digits."""
        assert parse_object("111", "word") == ParkingWord(word=(1, 1, 1))

    def test_separated_word(self) -> None:
        """Test a word typed with commas."""
        assert parse_object("1,1,2", "word") == ParkingWord(word=(1, 1, 2))

    def test_json_word(self) -> None:
        """Test a word given as a JSON list."""
        assert parse_object("[2, 1]", "word") == ParkingWord(word=(2, 1))

    def test_k_word(self) -> None:
        """Test a 2-parking word."""
        assert parse_object("135", "word", k=2) == KParkingWord(word=(1, 3, 5), k=2)

    def test_pair(self, sample_pair: NC2Pair) -> None:
        """Test a pair given as JSON."""
        assert parse_object(SAMPLE_PAIR_JSON, "pair") == sample_pair

    def test_triple_from_sigma(self, sample_pair: NC2Pair) -> None:
        """Test that sigma also determines a triple."""
        assert parse_object(SAMPLE_PAIR_JSON, "triple") == convert(sample_pair, "triple")

    def test_triple_from_lambda(self, sample_pair: NC2Pair) -> None:
        """Test a triple given by the images of its blocks."""
        text = '{"n": 3, "blocks": [[1], [2, 3]], "lambda": [[2], [1, 3]]}'
        assert parse_object(text, "triple") == convert(sample_pair, "triple")

    def test_tree(self, sample_pair: NC2Pair) -> None:
        """Test a tree given as nested JSON."""
        tree = convert(sample_pair, "tree")
        assert parse_object(json.dumps(tree.to_json()), "tree") == tree

    def test_invalid_json(self) -> None:
        """Test that malformed JSON is reported."""
        with pytest.raises(ValueError, match="not valid JSON"):
            parse_object("{n: 3", "pair")

    def test_missing_sigma(self) -> None:
        """Test that a pair needs sigma."""
        with pytest.raises(ValueError, match="needs a 'sigma'"):
            parse_object('{"n": 3, "blocks": [[1, 2, 3]]}', "pair")

    def test_build_from_list(self) -> None:
        """Test building a word from decoded JSON."""
        assert build_object([1, 2, 1], "word") == ParkingWord(word=(1, 2, 1))


class TestValidate:
    """Tests for validate and is_valid_object."""

    def test_valid_model(self, sample_word: ParkingWord) -> None:
        """Test that a built object is valid."""
        result = validate(sample_word)
        assert result.valid
        assert result.diagnostic is None

    def test_word_bound(self) -> None:
        """Test the first violated invariant of 133."""
        result = validate("133", "word")
        assert not result.valid
        assert result.diagnostic is not None
        assert "exceeds the bound" in result.diagnostic

    def test_invalid_characters(self) -> None:
        """Test that letters are rejected."""
        result = validate("12x", "word")
        assert not result.valid
        assert "invalid characters" in str(result.diagnostic)

    def test_crossing_partition(self) -> None:
        """Test that a crossing partition is rejected."""
        data = {"n": 4, "blocks": [[1, 3], [2, 4]], "sigma": [1, 2, 3, 4]}
        result = validate(data, "pair")
        assert not result.valid
        assert "crossing" in str(result.diagnostic)

    def test_sigma_not_increasing(self) -> None:
        """Test that sigma must increase along blocks."""
        data = {"n": 2, "blocks": [[1, 2]], "sigma": [2, 1]}
        assert not is_valid_object(data, "pair")

    def test_missing_key(self) -> None:
        """Test that a missing key is reported, not raised."""
        assert not is_valid_object({"blocks": [[1]]}, "pair")

    def test_raw_needs_representation(self) -> None:
        """Test that raw data without a representation is invalid."""
        result = validate("111")
        assert not result.valid
        assert result.diagnostic == "Raw input needs a representation"

    def test_is_valid_object(self) -> None:
        """Test the boolean helper."""
        assert is_valid_object("135", "word", k=2) is True
        assert is_valid_object("135", "word") is False
