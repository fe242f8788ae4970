"""Truncated bivariate power series and the chain-counting series C_{k,t}.

x marks the ground-set size (exponentially) and t marks the rank of the
largest element of a chain. Coefficients are kept as exact rationals in a
sympy Poly and every product is truncated at x^nx and t^nt.

Equations and reversion are solved by plain fixed-point iteration, not by
Newton steps. Each pass fixes one more power of x, so at most nx + 2
passes run.
"""

import logging
from collections.abc import Callable
from math import factorial
from typing import Any

from pydantic import BaseModel, ConfigDict, computed_field
from sympy import QQ, Poly, Rational, symbols

from src.config import LOGGER_NAME, MAX_SERIES_ORDER, check_guard
from src.enumeration.formulas import chain_count_closed
from src.nc.numbers import binomial

logger = logging.getLogger(LOGGER_NAME)

X, T = symbols("x t")


class SeriesError(Exception):
    """Raised on an invalid series operation or a fixed point that does not settle."""

    pass


class TruncatedSeries:
    """A power series in x and t over QQ, truncated at x^nx and t^nt.

    Attributes:
        poly: Polynomial holding the kept coefficients
        nx: Largest kept power of x
        nt: Largest kept power of t
    """

    def __init__(self, poly: Any, nx: int, nt: int) -> None:
        self.nx = nx
        self.nt = nt
        terms = Poly(poly, X, T, domain=QQ).as_dict()
        kept = {m: c for m, c in terms.items() if m[0] <= nx and m[1] <= nt}
        self.poly: Poly = Poly.from_dict(kept, X, T, domain=QQ) if kept else Poly(0, X, T, domain=QQ)

    @classmethod
    def x(cls, nx: int, nt: int) -> "TruncatedSeries":
        """The series x."""
        return cls(X, nx, nt)

    @classmethod
    def t(cls, nx: int, nt: int) -> "TruncatedSeries":
        """The series t."""
        return cls(T, nx, nt)

    @classmethod
    def constant(cls, value: int | Rational, nx: int, nt: int) -> "TruncatedSeries":
        """A constant series."""
        return cls(value, nx, nt)

    def _like(self, poly: Any) -> "TruncatedSeries":
        return TruncatedSeries(poly, self.nx, self.nt)

    def _operand(self, other: "TruncatedSeries | int | Rational") -> Poly:
        if isinstance(other, TruncatedSeries):
            if (other.nx, other.nt) != (self.nx, self.nt):
                raise SeriesError(
                    f"Truncation orders differ: ({self.nx}, {self.nt}) vs ({other.nx}, {other.nt})"
                )
            return other.poly
        return Poly(other, X, T, domain=QQ)

    def __add__(self, other: "TruncatedSeries | int | Rational") -> "TruncatedSeries":
        return self._like(self.poly + self._operand(other))

    def __radd__(self, other: int | Rational) -> "TruncatedSeries":
        return self + other

    def __sub__(self, other: "TruncatedSeries | int | Rational") -> "TruncatedSeries":
        return self._like(self.poly - self._operand(other))

    def __rsub__(self, other: int | Rational) -> "TruncatedSeries":
        return self._like(self._operand(other) - self.poly)

    def __neg__(self) -> "TruncatedSeries":
        return self._like(-self.poly)

    def __mul__(self, other: "TruncatedSeries | int | Rational") -> "TruncatedSeries":
        return self._like(self.poly * self._operand(other))

    def __rmul__(self, other: int | Rational) -> "TruncatedSeries":
        return self * other

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return (self.nx, self.nt) == (other.nx, other.nt) and self.poly == other.poly

    def __hash__(self) -> int:
        return hash((self.nx, self.nt, tuple(sorted(self.poly.as_dict().items()))))

    def __repr__(self) -> str:
        return f"TruncatedSeries({self.poly.as_expr()}, nx={self.nx}, nt={self.nt})"

    def coef(self, a: int, b: int) -> Rational:
        """Ordinary coefficient of x^a t^b."""
        return Rational(self.poly.as_dict().get((a, b), 0))

    def egf(self, n: int, ell: int) -> int:
        """n! [x^n t^ell], which must be an integer.

        Raises:
            SeriesError: If the normalized coefficient is not an integer
        """
        value = self.coef(n, ell) * factorial(n)
        if not value.is_integer:
            raise SeriesError(f"n! [x^{n} t^{ell}] = {value} is not an integer")
        return int(value)

    def x_valuation_positive(self) -> bool:
        """True when no term is free of x."""
        return all(a > 0 for a, _ in self.poly.as_dict())

    def _require_no_x_constant(self, operation: str) -> None:
        if not self.x_valuation_positive():
            raise SeriesError(f"{operation} needs a series without x-free terms")

    def _power_sum(self, weight: Callable[[int], Rational | int]) -> "TruncatedSeries":
        """sum_j weight(j) g^j for j = 0..nx; higher powers vanish."""
        total = self._like(0)
        power = self._like(1)
        for j in range(self.nx + 1):
            total = total + power * weight(j)
            power = power * self
        return total

    def exp(self) -> "TruncatedSeries":
        """exp(g).

        Raises:
            SeriesError: If g has x-free terms
        """
        self._require_no_x_constant("exp")
        return self._power_sum(lambda j: Rational(1, factorial(j)))

    def log1p(self) -> "TruncatedSeries":
        """ln(1 + g).

        Raises:
            SeriesError: If g has x-free terms
        """
        self._require_no_x_constant("log1p")
        return self._power_sum(lambda j: Rational((-1) ** (j + 1), j) if j else 0)

    def one_plus_pow(self, k: int) -> "TruncatedSeries":
        """(1 + g)^k for any integer k, by the binomial series.

        Raises:
            SeriesError: If g has x-free terms
        """
        self._require_no_x_constant("one_plus_pow")
        return self._power_sum(lambda j: binomial(k, j))

    def compose(self, inner: "TruncatedSeries") -> "TruncatedSeries":
        """self(inner(x, t), t).

        Raises:
            SeriesError: If inner has x-free terms
        """
        inner._require_no_x_constant("compose")
        powers = [self._like(1)]
        for _ in range(self.nx):
            powers.append(powers[-1] * inner)
        total = self._like(0)
        for (a, b), c in self.poly.as_dict().items():
            total = total + powers[a] * self._like(c * T**b)
        return total

    def reversion(self) -> "TruncatedSeries":
        """Compositional inverse g in x, with self(g(x, t), t) = x.

        Raises:
            SeriesError: If the x-linear part of self is not exactly x
        """
        linear = {m: c for m, c in self.poly.as_dict().items() if m[0] == 1}
        if linear != {(1, 0): 1}:
            raise SeriesError(f"Reversion needs linear part x, got {linear}")
        identity = TruncatedSeries.x(self.nx, self.nt)
        return fixed_point(lambda g: g + identity - self.compose(g), identity)

    def to_json(self) -> dict[str, str]:
        """Coefficient map {"a,b": "p/q"} of nonzero ordinary coefficients."""
        return {f"{a},{b}": str(c) for (a, b), c in sorted(self.poly.as_dict().items())}


def fixed_point(
    step: Callable[[TruncatedSeries], TruncatedSeries], start: TruncatedSeries
) -> TruncatedSeries:
    """Iterate step from start until it settles.

    Each step must fix one more power of x, so nx + 2 rounds always suffice.

    Raises:
        SeriesError: If the iteration is still moving after nx + 2 rounds
    """
    current = start
    for _ in range(start.nx + 2):
        following = step(current)
        if following == current:
            return current
        current = following
    logger.error("Fixed-point iteration did not settle at order %d", start.nx)
    raise SeriesError(f"Fixed-point iteration did not settle at order {start.nx}")


def _orders(k: int, nx: int, nt: int | None) -> tuple[int, int]:
    check_guard("Nx", nx, MAX_SERIES_ORDER)
    if k < 0:
        raise SeriesError(f"k must be nonnegative, got {k}")
    if nx < 1:
        raise SeriesError(f"Nx must be positive, got {nx}")
    return nx, nx - 1 if nt is None else nt


def chain_series(k: int, nx: int, nt: int | None = None) -> TruncatedSeries:
    """C_{k,t}, solving C = exp(x (tC + 1)^k) - 1.

    n! [x^n t^ell] C counts multichains phi_1 <= ... <= phi_k on n points
    whose largest element has rank ell. nt defaults to nx - 1.

    Raises:
        GuardExceededError: If nx exceeds the series guard
        SeriesError: On invalid orders or if the iteration does not settle
    """
    nx, nt = _orders(k, nx, nt)
    x, t = TruncatedSeries.x(nx, nt), TruncatedSeries.t(nx, nt)
    zero = TruncatedSeries.constant(0, nx, nt)
    return fixed_point(lambda c: (x * (t * c).one_plus_pow(k)).exp() - 1, zero)


def inverse_series(k: int, nx: int, nt: int | None = None) -> TruncatedSeries:
    """C_{k,t} as the compositional inverse of ln(1 + x)(1 + tx)^(-k).

    Raises:
        GuardExceededError: If nx exceeds the series guard
        SeriesError: On invalid orders
    """
    nx, nt = _orders(k, nx, nt)
    x, t = TruncatedSeries.x(nx, nt), TruncatedSeries.t(nx, nt)
    return (x.log1p() * (t * x).one_plus_pow(-k)).reversion()


def _species_step(
    previous: TruncatedSeries, x: TruncatedSeries, t: TruncatedSeries
) -> Callable[[TruncatedSeries], TruncatedSeries]:
    def step(c: TruncatedSeries) -> TruncatedSeries:
        return previous.compose(x * (t * c + 1))

    return step


def species_series(k: int, nx: int, nt: int | None = None) -> TruncatedSeries:
    """C_{k,t} from C_0 = e^x - 1 and C_j = C_{j-1} o (x (t C_j + 1)).

    Raises:
        GuardExceededError: If nx exceeds the series guard
        SeriesError: On invalid orders or if an iteration does not settle
    """
    nx, nt = _orders(k, nx, nt)
    x, t = TruncatedSeries.x(nx, nt), TruncatedSeries.t(nx, nt)
    current = x.exp() - 1
    for _ in range(k):
        current = fixed_point(_species_step(current, x, t), TruncatedSeries.constant(0, nx, nt))
    return current


def forest_series(k: int, nx: int, nt: int | None = None) -> TruncatedSeries:
    """F = (E - 1) o (X (tF + 1)^k) for large chains of forests.

    The series E - 1 is composed as a series, not evaluated through exp.

    Raises:
        GuardExceededError: If nx exceeds the series guard
        SeriesError: On invalid orders or if the iteration does not settle
    """
    nx, nt = _orders(k, nx, nt)
    x, t = TruncatedSeries.x(nx, nt), TruncatedSeries.t(nx, nt)
    sets = x.exp() - 1
    zero = TruncatedSeries.constant(0, nx, nt)
    return fixed_point(lambda f: sets.compose(x * (t * f).one_plus_pow(k)), zero)


def intermediate_equation_holds(k: int, nx: int, nt: int | None = None) -> bool:
    """Check C_{k,t} = C_{k-1,t} o (x (t C_{k,t} + 1)) to truncation order.

    Raises:
        SeriesError: If k < 1
    """
    if k < 1:
        raise SeriesError(f"The intermediate equation needs k >= 1, got {k}")
    current, previous = chain_series(k, nx, nt), chain_series(k - 1, nx, nt)
    x, t = TruncatedSeries.x(current.nx, current.nt), TruncatedSeries.t(current.nx, current.nt)
    return previous.compose(x * (t * current + 1)) == current


def series_counts(series: TruncatedSeries) -> dict[tuple[int, int], int]:
    """{(n, ell): n! [x^n t^ell]} for 1 <= n <= nx, 0 <= ell <= min(n - 1, nt)."""
    return {
        (n, ell): series.egf(n, ell)
        for n in range(1, series.nx + 1)
        for ell in range(min(n - 1, series.nt) + 1)
    }


class SeriesReport(BaseModel):
    """Agreement of the four computations of C_{k,t} with the closed form."""

    model_config = ConfigDict(frozen=True)

    k: int
    nx: int
    inverse_agrees: bool
    species_agrees: bool
    forest_agrees: bool
    intermediate_holds: bool
    mismatches: tuple[tuple[int, int, int, int], ...] = ()

    @computed_field  # type: ignore[prop-decorator]
    @property
    def passed(self) -> bool:
        """Every computation agrees and no coefficient differs from the closed form."""
        return (
            self.inverse_agrees
            and self.species_agrees
            and self.forest_agrees
            and self.intermediate_holds
            and not self.mismatches
        )


def verify_series(k: int, nx: int) -> SeriesReport:
    """Compare every series computation and the closed chain counts.

    Mismatches are (n, ell, series, closed).

    Raises:
        GuardExceededError: If nx exceeds the series guard
    """
    series = chain_series(k, nx)
    mismatches = tuple(
        (n, ell, value, chain_count_closed(n, k, ell))
        for (n, ell), value in series_counts(series).items()
        if value != chain_count_closed(n, k, ell)
    )
    report = SeriesReport(
        k=k,
        nx=nx,
        inverse_agrees=inverse_series(k, nx) == series,
        species_agrees=species_series(k, nx) == series,
        forest_agrees=forest_series(k, nx) == series,
        intermediate_holds=k < 1 or intermediate_equation_holds(k, nx),
        mismatches=mismatches,
    )
    logger.info("Series check k=%d Nx=%d: passed=%s", k, nx, report.passed)
    return report
