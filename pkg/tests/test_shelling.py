"""Tests for the cover order and the exhaustive shelling checks."""

import pytest

from src.config import GuardExceededError
from src.nc.partitions import NoncrossingPartition
from src.nc.permutations import Permutation
from src.parking import NC2Pair, enumerate_parking
from src.poset import TOP
from src.shelling import (
    ChainOrder,
    ShellingOrderError,
    code,
    cover_label,
    cover_order,
    cover_stats,
    lex_compare,
    m_value,
    p0,
    p0_from_eta,
    precedes,
    recursive_atom_counterexample,
    split_block,
    verify_el_labeling,
    verify_key_lemma,
    verify_shelling,
    verify_support_lemmas,
)


@pytest.fixture
def atom() -> NC2Pair:
    """The rank-one element (1|23, 123)."""
    pi = NoncrossingPartition.from_blocks(3, [(1,), (2, 3)])
    return NC2Pair(pi=pi, sigma=Permutation.identity(3))


class TestCoverStatistics:
    """Tests for codes and the statistics of a cover."""

    def test_code_of_bottom(self, bottom3: NC2Pair) -> None:
        """Test that the identity has the zero code."""
        assert code(bottom3) == (0, 0, 0)
        assert p0(bottom3) == 3

    def test_p0_agrees_with_eta(self) -> None:
        """Test that both readings of p0 agree on every element."""
        for x in enumerate_parking(4):
            assert p0(x) == p0_from_eta(x)

    def test_split_block(self, bottom3: NC2Pair, atom: NC2Pair) -> None:
        """Test that the bottom's only block is split."""
        assert split_block(bottom3, atom) == (1, 2, 3)

    def test_split_block_needs_cover(self, bottom3: NC2Pair) -> None:
        """Test that a non-cover raises."""
        top = NC2Pair(pi=NoncrossingPartition.one(3), sigma=Permutation.identity(3))
        with pytest.raises(ShellingOrderError, match="not a cover"):
            split_block(bottom3, top)

    def test_m_value_same_sigma(self, bottom3: NC2Pair, atom: NC2Pair) -> None:
        """Test m = 0 when sigma does not change."""
        assert m_value(bottom3, atom) == 0
        stats = cover_stats(bottom3, atom)
        assert stats.m == 0
        assert stats.p0 == 3

    def test_m_value(self, bottom3: NC2Pair, sample_pair: NC2Pair) -> None:
        """Test m on the cover to (1|23, 213)."""
        assert m_value(bottom3, sample_pair) == 2

    def test_cover_label(self, bottom3: NC2Pair, sample_pair: NC2Pair) -> None:
        """Test the label: code of the upper element, then the edge label."""
        label = cover_label(bottom3, sample_pair)
        assert label.code == (0, 1, 0)
        assert label.el == (1, 2)


class TestCoverOrder:
    """Tests for the total order on upper covers."""

    def test_bottom_covers(self, bottom3: NC2Pair) -> None:
        """Test that all nine atoms are ordered, identity codes first."""
        order = cover_order(bottom3)
        assert len(order) == 9
        assert all(code(c) == (0, 0, 0) for c in order[:3])

    def test_maximal_element_goes_to_top(self) -> None:
        """Test that a maximal element is covered by TOP alone."""
        x = NC2Pair(pi=NoncrossingPartition.one(3), sigma=Permutation(word=(3, 1, 2)))
        assert cover_order(x) == [TOP]

    def test_precedes(self, bottom3: NC2Pair) -> None:
        """Test that precedes follows list order."""
        order = cover_order(bottom3)
        assert precedes(bottom3, order[0], order[1])
        assert not precedes(bottom3, order[1], order[0])

    def test_lex_compare(self, bottom3: NC2Pair) -> None:
        """Test comparison of chains at their first fork."""
        first, second = cover_order(bottom3)[:2]
        assert lex_compare([bottom3, first], [bottom3, second]) == -1
        assert lex_compare([bottom3, second], [bottom3, first]) == 1
        assert lex_compare([bottom3, first], [bottom3, first]) == 0

    def test_lex_compare_needs_common_bottom(self, bottom3: NC2Pair, atom: NC2Pair) -> None:
        """Test that chains must start together."""
        with pytest.raises(ShellingOrderError):
            lex_compare([bottom3], [atom])

    def test_chain_order_agrees(self) -> None:
        """Test that the index-level order matches cover_order."""
        order = ChainOrder(3)
        bottom = order.poset.bottom
        assert bottom is not None
        indexed = [order.poset.elements[j] for j in order.order(bottom)]
        assert indexed == cover_order(order.element(bottom))
        assert len(order.chains) == 18


class TestVerification:
    """Tests for the exhaustive checks."""

    @pytest.mark.parametrize(("n", "chains"), [(2, 2), (3, 18), (4, 384)])
    def test_shelling(self, n: int, chains: int) -> None:
        """Test that the chain order is a shelling."""
        report = verify_shelling(n)
        assert report.chains == chains
        assert report.passed
        assert report.pairs_checked == chains * (chains - 1) // 2

    def test_shelling_guard(self) -> None:
        """Test that n = 5 needs the long flag."""
        with pytest.raises(GuardExceededError):
            verify_shelling(5)

    @pytest.mark.parametrize("n", [2, 3])
    def test_key_lemma(self, n: int) -> None:
        """Test the exchange lemma over every quadruple."""
        report = verify_key_lemma(n)
        assert report.passed
        assert report.quadruples == report.lower_branch + report.upper_branch

    @pytest.mark.slow
    def test_key_lemma_parallel(self) -> None:
        """Test that worker chunks add up to the serial counts."""
        serial = verify_key_lemma(4)
        parallel = verify_key_lemma(4, jobs=2)
        assert parallel.passed
        assert parallel.quadruples == serial.quadruples

    @pytest.mark.parametrize("n", [2, 3])
    def test_support_lemmas(self, n: int) -> None:
        """Test every supporting lemma exhaustively."""
        report = verify_support_lemmas(n)
        assert report.passed, [lemma for lemma in report.lemmas if not lemma.passed]
        assert len(report.lemmas) == 8

    @pytest.mark.slow
    def test_support_lemmas_n4(self) -> None:
        """Test the supporting lemmas at n = 4."""
        assert verify_support_lemmas(4).passed

    @pytest.mark.parametrize("n", [2, 3, 4, 5])
    def test_el_labeling(self, n: int) -> None:
        """Test unique increasing chains in every interval of NC_n."""
        report = verify_el_labeling(n)
        assert report.passed
        assert report.distinct_labels

    def test_recursive_atom_counterexample(self) -> None:
        """Test the six-point configuration."""
        report = recursive_atom_counterexample()
        assert report.passed
        assert set(report.elements) == {"x", "y", "z", "y'", "z'"}
