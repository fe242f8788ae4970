"""Simplicial chain complexes with exact boundary ranks.

A simplex is a tuple of vertex indices in orientation order. The empty
simplex sits in degree -1, so every homology computed here is reduced.
"""

import logging
from collections.abc import Iterable
from itertools import combinations

import numpy as np
from numpy.typing import NDArray
from sympy import QQ, ZZ, Matrix
from sympy.matrices.normalforms import invariant_factors
from sympy.polys.matrices import DomainMatrix

from src.config import LOGGER_NAME

logger = logging.getLogger(LOGGER_NAME)

Simplex = tuple[int, ...]
IntMatrix = NDArray[np.int64]


class HomologyError(Exception):
    """Raised when a complex is malformed or its homology is not as required."""

    pass


def exact_rank(matrix: IntMatrix) -> int:
    """Rank over the rationals by exact row reduction."""
    rows, cols = matrix.shape
    if rows == 0 or cols == 0 or not matrix.any():
        return 0
    domain_matrix = DomainMatrix.from_list([[int(v) for v in row] for row in matrix], ZZ)
    return int(domain_matrix.convert_to(QQ).rank())


class ChainComplex:
    """The reduced simplicial chain complex of a set of oriented simplices.

    Attributes:
        bases: Simplices of each degree, degree -1 holding the empty simplex
        boundaries: boundaries[m] maps degree m chains to degree m - 1
    """

    def __init__(self, simplices: Iterable[Simplex], name: str = "C") -> None:
        self.name = name
        bases: dict[int, list[Simplex]] = {-1: [()]}
        for simplex in sorted(set(simplices), key=lambda s: (len(s), s)):
            if simplex:
                bases.setdefault(len(simplex) - 1, []).append(simplex)
        self.bases = bases
        self.top = max(bases)
        self.boundaries: dict[int, IntMatrix] = {
            m: self._boundary(m) for m in range(0, self.top + 1)
        }
        self._ranks: dict[int, int] = {}
        logger.debug("Built chain complex %s with dimensions %s", name, self.dimensions())

    @classmethod
    def from_faces(cls, faces: Iterable[Iterable[int]], name: str = "C") -> "ChainComplex":
        """Complex of a face set, each face oriented by increasing vertex index.

        Raises:
            HomologyError: If the faces are not closed under taking subsets
        """
        simplices = {tuple(sorted(f)) for f in faces}
        for simplex in simplices:
            if len(simplex) < 2:
                continue
            missing = [f for f in combinations(simplex, len(simplex) - 1) if f not in simplices]
            if missing:
                raise HomologyError(f"Face {missing[0]} of {simplex} is missing")
        return cls(simplices, name)

    def _boundary(self, m: int) -> IntMatrix:
        rows = {s: i for i, s in enumerate(self.bases.get(m - 1, []))}
        columns = self.bases.get(m, [])
        matrix = np.zeros((len(rows), len(columns)), dtype=np.int64)
        for j, simplex in enumerate(columns):
            for i in range(len(simplex)):
                face = simplex[:i] + simplex[i + 1 :]
                if face not in rows:
                    raise HomologyError(f"Face {face} of {simplex} is missing from {self.name}")
                matrix[rows[face], j] = (-1) ** i
        return matrix

    def dimensions(self) -> dict[int, int]:
        """Number of simplices in each degree, from -1."""
        return {m: len(self.bases.get(m, [])) for m in range(-1, self.top + 1)}

    def check_boundary(self) -> None:
        """Check that consecutive boundaries compose to zero.

        Raises:
            HomologyError: If some composite is nonzero
        """
        for m in range(1, self.top + 1):
            if (self.boundaries[m - 1] @ self.boundaries[m]).any():
                logger.error("Boundary of a boundary is nonzero in degree %d of %s", m, self.name)
                raise HomologyError(f"d o d != 0 in degree {m} of {self.name}")

    def rank(self, m: int) -> int:
        """Rank of the boundary out of degree m (0 outside 0..top)."""
        if m not in self.boundaries:
            return 0
        if m not in self._ranks:
            self._ranks[m] = exact_rank(self.boundaries[m])
        return self._ranks[m]

    def homology_ranks(self) -> dict[int, int]:
        """Reduced rational Betti numbers dim ker d_m - rank d_(m+1), m = -1..top."""
        dims = self.dimensions()
        return {m: dims[m] - self.rank(m) - self.rank(m + 1) for m in dims}

    def euler_characteristic(self) -> int:
        """Reduced Euler characteristic sum (-1)^m dim C_m."""
        return sum((-1) ** m * d for m, d in self.dimensions().items())

    def concentrated_degree(self) -> int | None:
        """The single degree carrying homology, or None when there is not exactly one."""
        nonzero = [m for m, r in self.homology_ranks().items() if r]
        return nonzero[0] if len(nonzero) == 1 else None

    def smith_torsion(self, m: int) -> list[int]:
        """Invariant factors greater than one of the boundary out of degree m."""
        matrix = self.boundaries.get(m)
        if matrix is None or 0 in matrix.shape:
            return []
        factors = invariant_factors(Matrix(matrix.tolist()), domain=ZZ)
        return [abs(int(d)) for d in factors if abs(int(d)) > 1]


def homology_ranks(complex_: ChainComplex) -> dict[int, int]:
    """Reduced Betti numbers of a built complex."""
    return complex_.homology_ranks()


def smith_torsion(complex_: ChainComplex, m: int) -> list[int]:
    """Torsion coefficients of the boundary out of degree m."""
    return complex_.smith_torsion(m)
