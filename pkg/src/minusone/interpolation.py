"""Obstruction analysis for plane interpolation systems.

A system of degree d with assigned multiplicities m_i has a naive expected
dimension; the dimension is conjectured to exceed it exactly when some
(-1)-class meets the system in at most -2.  This module computes the
expected dimension and searches for such obstructions; it never claims an
actual dimension, only lists the obstructions found.
"""
from __future__ import annotations

from dataclasses import dataclass

from .classify import EnumerationTable, enumerate_minus_one, min_intersection_witness
from .picard import DivisorClass, expected_dimension


@dataclass(frozen=True)
class LinearSystem:
    """Interpolation data: nonnegative degree and multiplicities."""

    divisor: DivisorClass

    def __post_init__(self) -> None:
        if self.divisor.degree < 0:
            raise ValueError(f"system degree must be >= 0, got {self.divisor.degree}")
        if any(m < 0 for m in self.divisor.mults):
            raise ValueError(
                f"system multiplicities must be >= 0, got {self.divisor.mults}"
            )

    @property
    def degree(self) -> int:
        return self.divisor.degree

    @property
    def mults(self) -> tuple[int, ...]:
        return self.divisor.mults


@dataclass(frozen=True)
class Obstruction:
    """A (-1)-class meeting the system in at most -2, permuted to realise
    the minimal product against the system's own multiplicity order."""

    witness: DivisorClass
    product: int


@dataclass(frozen=True)
class ObstructionReport:
    expected_dimension: int
    obstructions: tuple[Obstruction, ...]
    conjecturally_special: bool
    search_degree_bound: int


def expected_dim(system: LinearSystem | DivisorClass) -> int:
    """Naive dimension of the system's space of polynomials."""
    divisor = system.divisor if isinstance(system, LinearSystem) else system
    return expected_dimension(divisor)


def analyze_system(
    system: LinearSystem | DivisorClass,
    degree_bound: int | None = None,
    table: EnumerationTable | None = None,
) -> ObstructionReport:
    """Expected dimension plus all obstructing (-1)-classes up to the bound.

    The default bound is the system's degree: an obstructing curve sits in
    the base locus, so its degree cannot exceed the system's.  A supplied
    table is reused when it covers enough points and degrees, and rebuilt
    otherwise.
    """
    if isinstance(system, DivisorClass):
        system = LinearSystem(system)
    divisor = system.divisor
    bound = divisor.degree if degree_bound is None else degree_bound
    if bound < 0:
        raise ValueError(f"degree bound must be >= 0, got {bound}")
    n = len(divisor.mults)
    if table is None or table.n < n or table.max_degree < bound:
        table = enumerate_minus_one(max(n, table.n if table else 0), bound)

    found: list[Obstruction] = []
    for degree in range(0, bound + 1):
        for shape in table.classes(degree):
            product, witness = min_intersection_witness(divisor, shape)
            if product <= -2:
                found.append(Obstruction(witness, product))
    found.sort(key=lambda o: (o.witness.degree, o.witness.padded(table.n)))
    return ObstructionReport(
        expected_dimension=expected_dimension(divisor),
        obstructions=tuple(found),
        conjecturally_special=bool(found),
        search_degree_bound=bound,
    )
