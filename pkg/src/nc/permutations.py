"""Permutations of {1..n}: composition, cycles, codes and cycle types."""

import logging
from collections.abc import Iterable, Iterator, Sequence
from itertools import permutations

from pydantic import BaseModel, ConfigDict, Field, field_validator
from sympy.utilities.iterables import partitions as integer_partitions

from src.config import LOGGER_NAME

logger = logging.getLogger(LOGGER_NAME)


def format_word(letters: Sequence[int]) -> str:
    """Render an integer word compactly ("231", or "10,2,1" past nine)."""
    if all(0 <= a <= 9 for a in letters):
        return "".join(str(a) for a in letters)
    return ",".join(str(a) for a in letters)


def parse_word(text: str) -> tuple[int, ...]:
    """Parse "1325271" or "11,1,9" into a tuple of integers.

    Raises:
        ValueError: If the text holds anything but digits and separators
    """
    text = text.strip()
    if not text:
        raise ValueError("Word cannot be empty.")
    if "," in text or " " in text:
        parts = [p for p in text.replace(",", " ").split() if p]
        return tuple(int(p) for p in parts)
    if not text.isdigit():
        raise ValueError(f"Word contains invalid characters: {text!r}")
    return tuple(int(c) for c in text)


class Permutation(BaseModel):
    """A bijection of {1..n} stored by its one-line word sigma(1)...sigma(n)."""

    model_config = ConfigDict(frozen=True)

    word: tuple[int, ...] = Field(..., description="One-line notation")

    @field_validator("word")
    @classmethod
    def validate_bijection(cls, v: tuple[int, ...]) -> tuple[int, ...]:
        """Ensure the word is a rearrangement of 1..n."""
        if sorted(v) != list(range(1, len(v) + 1)):
            raise ValueError(f"Not a permutation of 1..{len(v)}: {v}")
        return v

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        """Return the identity of S_n."""
        return cls(word=tuple(range(1, n + 1)))

    @classmethod
    def from_cycles(cls, n: int, cycles: Iterable[Sequence[int]]) -> "Permutation":
        """Build a permutation from disjoint cycles (a1 a2 ... am): a_i -> a_{i+1}.

        Args:
            n: Size of the ground set
            cycles: Disjoint cycles; omitted points are fixed

        Returns:
            The permutation

        Raises:
            ValueError: If cycles overlap or leave {1..n}
        """
        image = list(range(1, n + 1))
        seen: set[int] = set()
        for cycle in cycles:
            for a, b in zip(cycle, [*cycle[1:], cycle[0]], strict=True):
                if a in seen or not 1 <= a <= n:
                    raise ValueError(f"Invalid cycle {tuple(cycle)} for n={n}")
                seen.add(a)
                image[a - 1] = b
        return cls(word=tuple(image))

    @property
    def n(self) -> int:
        """Size of the ground set."""
        return len(self.word)

    def __call__(self, i: int) -> int:
        return self.word[i - 1]

    def compose(self, other: "Permutation") -> "Permutation":
        """Return self o other, applying other first."""
        if other.n != self.n:
            raise ValueError(f"Size mismatch: {self.n} vs {other.n}")
        return Permutation(word=tuple(self.word[j - 1] for j in other.word))

    def __mul__(self, other: "Permutation") -> "Permutation":
        return self.compose(other)

    def inverse(self) -> "Permutation":
        """Return the inverse permutation."""
        inv = [0] * self.n
        for i, v in enumerate(self.word, start=1):
            inv[v - 1] = i
        return Permutation(word=tuple(inv))

    def cycles(self) -> list[tuple[int, ...]]:
        """Return the cycles, each starting at its minimum, sorted by minimum."""
        seen: set[int] = set()
        result: list[tuple[int, ...]] = []
        for start in range(1, self.n + 1):
            if start in seen:
                continue
            cycle = [start]
            seen.add(start)
            current = self(start)
            while current != start:
                cycle.append(current)
                seen.add(current)
                current = self(current)
            result.append(tuple(cycle))
        return result

    def cycle_count(self) -> int:
        """Number of cycles z(sigma), fixed points included."""
        return len(self.cycles())

    def cycle_type(self) -> tuple[int, ...]:
        """Cycle lengths in decreasing order."""
        return tuple(sorted((len(c) for c in self.cycles()), reverse=True))

    def image(self, values: Iterable[int]) -> tuple[int, ...]:
        """Sorted image of a set of points."""
        return tuple(sorted(self(v) for v in values))

    def __str__(self) -> str:
        return format_word(self.word)


def all_permutations(n: int) -> Iterator[Permutation]:
    """Yield every element of S_n in lexicographic order of one-line words."""
    for word in permutations(range(1, n + 1)):
        yield Permutation(word=word)


def cycle_type_representatives(n: int) -> list[Permutation]:
    """Return one permutation per cycle type of S_n, longest cycles first.

    The representative of type (l1, l2, ...) has consecutive cycles
    (1 .. l1)(l1+1 .. l1+l2)...
    """
    reps: list[Permutation] = []
    for part in integer_partitions(n):
        lengths = sorted(
            (size for size, mult in part.items() for _ in range(mult)), reverse=True
        )
        cycles: list[tuple[int, ...]] = []
        start = 1
        for length in lengths:
            cycles.append(tuple(range(start, start + length)))
            start += length
        reps.append(Permutation.from_cycles(n, cycles))
    reps.sort(key=lambda s: s.cycle_type(), reverse=True)
    return reps


def permutation_code(s: Permutation) -> tuple[int, ...]:
    """Return the code gamma(s) = c_n ... c_1.

    c_i counts the letters smaller than i standing to the right of i in the
    one-line word, i.e. #{j < i : s^-1(j) > s^-1(i)}.

    Examples:
        >>> permutation_code(Permutation(word=(1, 5, 3, 2, 4)))
        (3, 0, 1, 0, 0)
    """
    inv = s.inverse().word
    code = [
        sum(1 for j in range(1, i) if inv[j - 1] > inv[i - 1])
        for i in range(1, s.n + 1)
    ]
    return tuple(reversed(code))


def transposition_of(s: Permutation) -> tuple[int, int] | None:
    """Return (i, j), i < j, if s is the transposition (i j), else None."""
    moved = [i for i in range(1, s.n + 1) if s(i) != i]
    if len(moved) == 2 and s(moved[0]) == moved[1]:
        return moved[0], moved[1]
    return None
