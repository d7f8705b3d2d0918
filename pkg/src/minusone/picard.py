"""Integral divisor classes on blowups of the plane and their lattice arithmetic.

A class ``d*H - m_1*E_1 - ... - m_n*E_n`` lives in the rank-(n+1) Picard
lattice with pairing ``H.H = 1``, ``E_i.E_i = -1``, ``H.E_i = 0``.  All
arithmetic is exact: integers throughout, with :class:`fractions.Fraction`
for the arithmetic genus.  Classes with fewer multiplicities than the
ambient point count are implicitly extended by zeros, so the same value can
be used on any surface with at least that many blown-up points.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable


@dataclass(frozen=True, eq=False)
class DivisorClass:
    """The class ``degree*H - sum(mults[i] * E_{i+1})``.

    Value semantics ignore trailing zero multiplicities: ``(1; 1,1)`` and
    ``(1; 1,1,0)`` are the same class on any surface that carries both.
    """

    degree: int
    mults: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "mults", tuple(int(m) for m in self.mults))

    def _key(self) -> tuple[int, tuple[int, ...]]:
        m = self.mults
        end = len(m)
        while end > 0 and m[end - 1] == 0:
            end -= 1
        return (self.degree, m[:end])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DivisorClass):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self) -> int:
        return hash(self._key())

    def __repr__(self) -> str:
        return f"DivisorClass({self.degree}; {','.join(map(str, self.mults))})"

    @property
    def npoints(self) -> int:
        return len(self.mults)

    @property
    def trimmed_mults(self) -> tuple[int, ...]:
        """Multiplicities with trailing zeros removed."""
        return self._key()[1]

    def padded(self, n: int) -> tuple[int, ...]:
        """Multiplicities extended by zeros to length at least ``n``."""
        if n <= len(self.mults):
            return self.mults
        return self.mults + (0,) * (n - len(self.mults))

    def with_padding(self, n: int) -> "DivisorClass":
        return DivisorClass(self.degree, self.padded(n))

    def __add__(self, other: "DivisorClass") -> "DivisorClass":
        n = max(len(self.mults), len(other.mults))
        return DivisorClass(
            self.degree + other.degree,
            tuple(a + b for a, b in zip(self.padded(n), other.padded(n))),
        )

    def __sub__(self, other: "DivisorClass") -> "DivisorClass":
        return self + (-other)

    def __neg__(self) -> "DivisorClass":
        return DivisorClass(-self.degree, tuple(-m for m in self.mults))


def exceptional_class(i: int, n: int | None = None) -> DivisorClass:
    """The exceptional class ``E_i`` (1-based), optionally padded to ``n``."""
    if i < 1:
        raise ValueError(f"exceptional index must be >= 1, got {i}")
    if n is not None and i > n:
        raise ValueError(f"exceptional index {i} exceeds point count {n}")
    length = n if n is not None else i
    return DivisorClass(0, tuple(-1 if j == i - 1 else 0 for j in range(length)))


@dataclass(frozen=True)
class SurfaceContext:
    """The blowup of the plane at ``n`` very general points.

    Points are never coordinatized; the context only fixes the lattice rank.
    """

    n: int

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError(f"point count must be >= 0, got {self.n}")

    @property
    def hyperplane(self) -> DivisorClass:
        return DivisorClass(1, (0,) * self.n)

    @property
    def canonical(self) -> DivisorClass:
        return DivisorClass(-3, (-1,) * self.n)

    def exceptional(self, i: int) -> DivisorClass:
        return exceptional_class(i, self.n)


@dataclass(frozen=True)
class ConditionSet:
    """Which of the four numerical conditions a class satisfies.

    ``self_intersection``: C.C = -1; ``genus``: arithmetic genus 0;
    ``anticanonical_degree``: 3d - sum(m) = 1; ``expected_dimension``: the
    unclamped polynomial count equals 1.  For any integral class, any two
    of these imply the other two.
    """

    self_intersection: bool
    genus: bool
    anticanonical_degree: bool
    expected_dimension: bool

    def as_tuple(self) -> tuple[bool, bool, bool, bool]:
        return (
            self.self_intersection,
            self.genus,
            self.anticanonical_degree,
            self.expected_dimension,
        )

    @property
    def count(self) -> int:
        return sum(self.as_tuple())

    @property
    def all_hold(self) -> bool:
        return self.count == 4


def intersect(c1: DivisorClass, c2: DivisorClass) -> int:
    """Intersection pairing ``d*d' - sum(m_i * m'_i)`` (symmetric bilinear)."""
    n = max(len(c1.mults), len(c2.mults))
    return c1.degree * c2.degree - sum(
        a * b for a, b in zip(c1.padded(n), c2.padded(n))
    )


def canonical_class(ctx: SurfaceContext | int) -> DivisorClass:
    """The canonical class ``-3H + E_1 + ... + E_n``."""
    n = ctx.n if isinstance(ctx, SurfaceContext) else int(ctx)
    if n < 0:
        raise ValueError(f"point count must be >= 0, got {n}")
    return DivisorClass(-3, (-1,) * n)


def anticanonical_degree(c: DivisorClass) -> int:
    """``3d - sum(m_i)``, the pairing of the class with -K."""
    return 3 * c.degree - sum(c.mults)


def arithmetic_genus(c: DivisorClass) -> Fraction:
    """``(2 + C.(C+K)) / 2`` as an exact rational.

    Equals ``(d-1)(d-2)/2 - sum(m_i (m_i - 1)/2)``; integral for every
    integral class.
    """
    k = canonical_class(len(c.mults))
    return Fraction(2 + intersect(c, c) + intersect(c, k), 2)


def _expected_dimension_raw(c: DivisorClass) -> int:
    # (d+2)(d+1)/2 - sum (m_i+1) m_i / 2, without clamping at zero
    return ((c.degree + 2) * (c.degree + 1) - sum((m + 1) * m for m in c.mults)) // 2


def expected_dimension(c: DivisorClass) -> int:
    """Naive count of degree-d forms vanishing to the assigned orders.

    ``max(0, (d+2)(d+1)/2 - sum((m_i+1) m_i / 2))``.  This is the dimension
    of the space of polynomials, not of its projectivization.  Only defined
    for interpolation data: degree and all multiplicities nonnegative.
    """
    if c.degree < 0:
        raise ValueError(f"expected dimension needs degree >= 0, got {c.degree}")
    if any(m < 0 for m in c.mults):
        raise ValueError(f"expected dimension needs multiplicities >= 0, got {c.mults}")
    return max(0, _expected_dimension_raw(c))


def condition_set(c: DivisorClass) -> ConditionSet:
    """Evaluate all four numerical conditions exactly.

    The expected-dimension condition uses the unclamped count, so the
    two-imply-four equivalence holds for every integral class.
    """
    return ConditionSet(
        self_intersection=intersect(c, c) == -1,
        genus=arithmetic_genus(c) == 0,
        anticanonical_degree=anticanonical_degree(c) == 1,
        expected_dimension=_expected_dimension_raw(c) == 1,
    )


def sorted_canonical_form(c: DivisorClass, n: int | None = None) -> DivisorClass:
    """Permutation normal form: multiplicities sorted nonincreasing.

    Pads to ``n`` first when given, so classes of different lengths get
    comparable representatives.  Degree, self-intersection, genus, and
    expected dimension are unchanged.
    """
    mults = c.padded(n) if n is not None else c.mults
    return DivisorClass(c.degree, tuple(sorted(mults, reverse=True)))


def orbit_size(c: DivisorClass, n: int | None = None) -> int:
    """Number of distinct multiplicity rearrangements of the padded class."""
    from math import factorial

    mults = c.padded(n) if n is not None else c.mults
    size = factorial(len(mults))
    for value in set(mults):
        size //= factorial(mults.count(value))
    return size


def expand_permutations(c: DivisorClass, n: int | None = None) -> Iterable[DivisorClass]:
    """All distinct rearrangements of the multiplicities, in lexicographic order."""
    mults = sorted(c.padded(n) if n is not None else c.mults)

    def rec(remaining: list[int]) -> Iterable[tuple[int, ...]]:
        if not remaining:
            yield ()
            return
        prev: int | None = None
        for idx, value in enumerate(remaining):
            if value == prev:
                continue
            prev = value
            rest = remaining[:idx] + remaining[idx + 1 :]
            for tail in rec(rest):
                yield (value,) + tail

    for arrangement in rec(mults):
        yield DivisorClass(c.degree, arrangement)
