"""Value types for the four views of a noncrossing 2-partition.

An element of the parking poset is a triple (pi, rho, lambda), a pair
(pi, sigma), a parking word, or a parking tree. All are frozen pydantic
models; invariants are enforced at construction.
"""

from collections.abc import Iterator
from typing import Any

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from src.nc.partitions import Block, NoncrossingPartition, SetPartition
from src.nc.permutations import Permutation, format_word


class NC2Pair(BaseModel):
    """A pair (pi, sigma) with sigma increasing along every block of pi."""

    model_config = ConfigDict(frozen=True)

    pi: NoncrossingPartition
    sigma: Permutation

    @model_validator(mode="after")
    def validate_increasing_on_blocks(self) -> "NC2Pair":
        """Ensure sizes agree and sigma(b1) < sigma(b2) < ... on each block."""
        if self.pi.n != self.sigma.n:
            raise ValueError(f"Size mismatch: pi has n={self.pi.n}, sigma n={self.sigma.n}")
        for block in self.pi.blocks:
            values = [self.sigma(b) for b in block]
            if values != sorted(values):
                raise ValueError(f"sigma={self.sigma} is not increasing on block {block}")
        return self

    @property
    def n(self) -> int:
        """Size of the ground set."""
        return self.pi.n

    @property
    def rank(self) -> int:
        """Rank |pi| - 1 in the parking poset."""
        return self.pi.num_blocks - 1

    def image(self, block: Block) -> Block:
        """lambda(B) = sigma(B) as a sorted block."""
        return self.sigma.image(block)

    def sort_key(self) -> tuple[tuple[Block, ...], tuple[int, ...]]:
        """Deterministic ordering key."""
        return self.pi.blocks, self.sigma.word

    def to_json(self) -> dict[str, Any]:
        """JSON form: the partition plus "sigma"."""
        return {**self.pi.to_json(), "sigma": list(self.sigma.word)}

    def __str__(self) -> str:
        return f"({self.pi}, {self.sigma})"


class NC2Triple(BaseModel):
    """A triple (pi, rho, lambda); lam[i] is the image of the i-th block of pi."""

    model_config = ConfigDict(frozen=True)

    pi: NoncrossingPartition
    rho: SetPartition
    lam: tuple[Block, ...] = Field(..., description="lambda(B) for B in pi.blocks")

    @model_validator(mode="after")
    def validate_block_bijection(self) -> "NC2Triple":
        """Ensure lambda is a size-preserving bijection from pi onto rho."""
        if self.pi.n != self.rho.n:
            raise ValueError("pi and rho live on different ground sets")
        if len(self.lam) != self.pi.num_blocks:
            raise ValueError("lambda must have one image per block of pi")
        for block, image in zip(self.pi.blocks, self.lam, strict=True):
            if len(block) != len(image):
                raise ValueError(f"|lambda({block})| != |{block}|")
            if tuple(sorted(image)) != image:
                raise ValueError(f"lambda({block}) = {image} is not sorted")
        if tuple(sorted(self.lam)) != self.rho.blocks:
            raise ValueError(f"lambda images {self.lam} are not the blocks of rho")
        return self

    @property
    def n(self) -> int:
        """Size of the ground set."""
        return self.pi.n

    def lam_of(self, block: Block) -> Block:
        """lambda(B) for a block B of pi."""
        return self.lam[self.pi.blocks.index(block)]

    def to_json(self) -> dict[str, Any]:
        """JSON form: the partition, rho and lambda."""
        return {
            **self.pi.to_json(),
            "rho": [list(b) for b in self.rho.blocks],
            "lambda": [list(b) for b in self.lam],
        }


class KParkingWord(BaseModel):
    """A k-parking function: sorted letters bounded by 1, k+1, 2k+1, ..."""

    model_config = ConfigDict(frozen=True)

    word: tuple[int, ...]
    k: int = Field(default=1, ge=1, description="Multiplicity")

    @model_validator(mode="after")
    def validate_parking(self) -> "KParkingWord":
        """Ensure #{i : w_i <= k(j-1)+1} >= j for every j."""
        if any(a < 1 for a in self.word):
            raise ValueError(f"Letters must be positive: {self.word}")
        for j, a in enumerate(sorted(self.word), start=1):
            if a > self.k * (j - 1) + 1:
                raise ValueError(
                    f"sorted {format_word(sorted(self.word))} exceeds the bound "
                    f"{self.k * (j - 1) + 1} at position {j}"
                )
        return self

    @property
    def n(self) -> int:
        """Length of the word."""
        return len(self.word)

    def composition(self) -> tuple[Block, ...]:
        """Weak set composition (A_1, ..., A_kn), A_i = positions holding i."""
        parts: list[list[int]] = [[] for _ in range(self.k * self.n)]
        for position, letter in enumerate(self.word, start=1):
            parts[letter - 1].append(position)
        return tuple(tuple(p) for p in parts)

    def __str__(self) -> str:
        return format_word(self.word)


class ParkingWord(KParkingWord):
    """A classical parking function (k = 1)."""

    k: int = Field(default=1, ge=1, le=1)


class TreeNode(BaseModel):
    """A plane-tree vertex; leaves carry the empty label and no children."""

    model_config = ConfigDict(frozen=True)

    label: tuple[int, ...] = ()
    children: tuple["TreeNode", ...] = ()

    @field_validator("label")
    @classmethod
    def validate_label(cls, v: tuple[int, ...]) -> tuple[int, ...]:
        """Labels are sets: distinct values, stored sorted."""
        if len(set(v)) != len(v):
            raise ValueError(f"Label {v} repeats an element")
        return tuple(sorted(v))

    @model_validator(mode="after")
    def validate_leaf(self) -> "TreeNode":
        """A vertex with the empty label must be a leaf."""
        if not self.label and self.children:
            raise ValueError("A vertex labelled by the empty set cannot have children")
        return self

    @classmethod
    def leaf(cls) -> "TreeNode":
        """The empty leaf."""
        return _LEAF

    @property
    def is_leaf(self) -> bool:
        """True for the empty leaf."""
        return not self.label

    def prefix(self) -> Iterator["TreeNode"]:
        """Vertices in prefix order, leaves included."""
        yield self
        for child in self.children:
            yield from child.prefix()

    def internal_nodes(self) -> Iterator["TreeNode"]:
        """Nonempty vertices in prefix order."""
        return (v for v in self.prefix() if not v.is_leaf)

    def relabel(self, s: Permutation) -> "TreeNode":
        """Apply s to every label."""
        if self.is_leaf:
            return self
        return TreeNode(
            label=s.image(self.label),
            children=tuple(c.relabel(s) for c in self.children),
        )

    def to_json(self) -> dict[str, Any]:
        """Nested {"label": [...], "children": [...]}."""
        return {"label": list(self.label), "children": [c.to_json() for c in self.children]}

    def __str__(self) -> str:
        if self.is_leaf:
            return "."
        inner = ",".join(str(c) for c in self.children)
        return f"{{{''.join(str(x) for x in self.label)}}}[{inner}]"


_LEAF = TreeNode()


class KParkingTree(BaseModel):
    """A k-parking tree: labels partition {1..n}, arity k times label size."""

    model_config = ConfigDict(frozen=True)

    root: TreeNode
    n: int = Field(..., ge=1)
    k: int = Field(default=1, ge=1)

    @model_validator(mode="after")
    def validate_tree(self) -> "KParkingTree":
        """Check the arity rule and that labels partition the ground set."""
        if self.root.is_leaf:
            raise ValueError("The root must carry a nonempty label")
        seen: list[int] = []
        for vertex in self.root.internal_nodes():
            if len(vertex.children) != self.k * len(vertex.label):
                raise ValueError(
                    f"Vertex {set(vertex.label)} has {len(vertex.children)} children, "
                    f"expected {self.k * len(vertex.label)}"
                )
            seen.extend(vertex.label)
        if sorted(seen) != list(range(1, self.n + 1)):
            raise ValueError(f"Labels {sorted(seen)} do not partition 1..{self.n}")
        return self

    @property
    def nonempty_count(self) -> int:
        """Number of internal vertices."""
        return sum(1 for _ in self.root.internal_nodes())

    def to_json(self) -> dict[str, Any]:
        """Nested JSON of the root."""
        return self.root.to_json()

    def __str__(self) -> str:
        return str(self.root)


class ParkingTree(KParkingTree):
    """A parking tree (k = 1): as many children as label elements."""

    k: int = Field(default=1, ge=1, le=1)


class EtaSequence(BaseModel):
    """eta(1..n): the block B with k in lambda(B); B appears |B| times."""

    model_config = ConfigDict(frozen=True)

    n: int = Field(..., ge=1)
    blocks: tuple[Block, ...]

    @model_validator(mode="after")
    def validate_multiplicity(self) -> "EtaSequence":
        """Each block occurs exactly |B| times and the sequence has length n."""
        if len(self.blocks) != self.n:
            raise ValueError(f"eta must have length {self.n}")
        for block in set(self.blocks):
            if self.blocks.count(block) != len(block):
                raise ValueError(f"Block {block} occurs {self.blocks.count(block)} times")
        return self

    def __getitem__(self, k: int) -> Block:
        return self.blocks[k - 1]


ParkingObject = NC2Pair | NC2Triple | ParkingWord | ParkingTree
