"""Pytest fixtures for parking poset tests."""

import pytest

from src.nc.partitions import NoncrossingPartition
from src.nc.permutations import Permutation
from src.parking.objects import NC2Pair, ParkingWord
from src.poset.finite import FinitePoset
from src.poset.parking_poset import build_pp_poset


@pytest.fixture
def identity3() -> Permutation:
    """Identity of S_3."""
    return Permutation.identity(3)


@pytest.fixture
def transposition3() -> Permutation:
    """The transposition (1 2) in S_3."""
    return Permutation.from_cycles(3, [(1, 2)])


@pytest.fixture
def three_cycle() -> Permutation:
    """The cycle (1 2 3)."""
    return Permutation.from_cycles(3, [(1, 2, 3)])


@pytest.fixture
def bottom3() -> NC2Pair:
    """Bottom element of the parking poset on 3 points.

    Returns:
        The pair (0_3, id)
    """
    return NC2Pair(pi=NoncrossingPartition.zero(3), sigma=Permutation.identity(3))


@pytest.fixture
def sample_pair() -> NC2Pair:
    """The pair (1|23, 213) on 3 points."""
    pi = NoncrossingPartition.from_blocks(3, [(1,), (2, 3)])
    return NC2Pair(pi=pi, sigma=Permutation(word=(2, 1, 3)))


@pytest.fixture
def sample_word() -> ParkingWord:
    """A parking word of length 7."""
    return ParkingWord(word=(1, 3, 2, 5, 2, 7, 1))


@pytest.fixture
def pp3() -> FinitePoset:
    """Parking poset on 3 points."""
    return build_pp_poset(3)
