"""Two decision procedures for (-1)-class membership, plus exhaustive enumeration.

The descent classifier reduces a candidate through quadratic transformations
until it either reaches an exceptional class (accept) or exposes a negative
multiplicity (reject, with a transported witness).  The inductive classifier
instead checks the candidate against every lower-degree (-1)-class from an
enumeration table; the two must always agree.  Every verdict carries a
certificate that can be re-checked without trusting the classifier.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Iterator, Literal, Union

from .cremona import (
    NegativeMultiplicity,
    ReachedExceptional,
    ReductionTrace,
    descend,
    transport_witness,
)
from .picard import (
    DivisorClass,
    arithmetic_genus,
    condition_set,
    exceptional_class,
    intersect,
    orbit_size,
    sorted_canonical_form,
)


class TableCoverageError(ValueError):
    """The enumeration table does not cover the degrees or points required."""


@dataclass(frozen=True)
class ExceptionalTerminal:
    """Acceptance certificate: a descent trace ending on an exceptional class."""

    trace: ReductionTrace


@dataclass(frozen=True)
class ObstructingCurve:
    """Rejection certificate: a certified (-1)-class meeting the input negatively."""

    witness: DivisorClass
    product: int
    trace: ReductionTrace | None = None


@dataclass(frozen=True)
class ConditionFailure:
    """Rejection certificate: the self-intersection or genus equality fails."""

    failed: tuple[str, ...]
    self_intersection: int
    genus: Fraction


Certificate = Union[ExceptionalTerminal, ObstructingCurve, ConditionFailure]
Method = Literal["descent", "inductive"]


@dataclass(frozen=True)
class Verdict:
    is_minus_one: bool
    certificate: Certificate
    method: Method


@dataclass(frozen=True)
class EnumerationTable:
    """All (-1)-classes for ``n`` points up to ``max_degree``, one sorted
    representative per permutation orbit."""

    n: int
    max_degree: int
    classes_by_degree: dict[int, frozenset[DivisorClass]]

    def covers(self, degree: int) -> bool:
        return degree <= self.max_degree

    def classes(self, degree: int) -> list[DivisorClass]:
        """Representatives of the given degree, in a fixed deterministic order."""
        bucket = self.classes_by_degree.get(degree, frozenset())
        return sorted(bucket, key=lambda c: c.padded(self.n))

    def all_classes(self) -> Iterator[DivisorClass]:
        for degree in sorted(self.classes_by_degree):
            yield from self.classes(degree)

    def shape_count(self, degree: int | None = None) -> int:
        if degree is not None:
            return len(self.classes_by_degree.get(degree, ()))
        return sum(len(bucket) for bucket in self.classes_by_degree.values())

    def expanded_count(self, degree: int | None = None) -> int:
        """Class count including all multiplicity permutations."""
        if degree is not None:
            return sum(orbit_size(c, self.n) for c in self.classes(degree))
        return sum(self.expanded_count(d) for d in self.classes_by_degree)


def _condition_failure(c: DivisorClass) -> ConditionFailure | None:
    cs = condition_set(c)
    failed = tuple(
        name
        for name, ok in (
            ("self_intersection", cs.self_intersection),
            ("genus", cs.genus),
        )
        if not ok
    )
    if not failed:
        return None
    return ConditionFailure(failed, intersect(c, c), arithmetic_genus(c))


def is_minus_one_descent(c: DivisorClass) -> Verdict:
    """Classify by descent.  Never raises: every failure mode is a verdict."""
    failure = _condition_failure(c)
    if failure is not None:
        return Verdict(False, failure, "descent")
    trace = descend(c)
    if isinstance(trace.outcome, ReachedExceptional):
        return Verdict(True, ExceptionalTerminal(trace), "descent")
    if isinstance(trace.outcome, NegativeMultiplicity):
        witness = transport_witness(trace)
        return Verdict(False, ObstructingCurve(witness, intersect(witness, c), trace), "descent")
    raise AssertionError(f"descent produced no classification: {trace.outcome!r}")


def is_minus_one_inductive(c: DivisorClass, table: EnumerationTable) -> Verdict:
    """Classify by the inductive criterion.

    Accept iff self-intersection -1 and genus 0 hold, no multiplicity is
    negative (otherwise that exceptional class is an obstructing witness),
    and no (-1)-class of smaller positive degree meets the class negatively
    under any multiplicity permutation.  The permutation minimum is taken
    via sorted pairing, never by expanding orbits.  The decision never
    consults descent; accepted classes get a descent trace attached
    afterwards purely as a replayable certificate.
    """
    failure = _condition_failure(c)
    if failure is not None:
        return Verdict(False, failure, "inductive")
    if c.degree == 0:
        # Exceptional class: the equalities at degree 0 leave no other shape.
        return Verdict(True, ExceptionalTerminal(descend(c)), "inductive")
    negative = next((i + 1 for i, m in enumerate(c.mults) if m < 0), None)
    if negative is not None:
        witness = exceptional_class(negative, len(c.mults))
        return Verdict(False, ObstructingCurve(witness, intersect(witness, c)), "inductive")
    if c.degree < 0:
        raise AssertionError(f"negative degree with nonnegative multiplicities: {c!r}")
    needed_n = len(c.trimmed_mults)
    if table.n < needed_n:
        raise TableCoverageError(
            f"table covers {table.n} points, class needs {needed_n}"
        )
    if table.max_degree < c.degree - 1:
        raise TableCoverageError(
            f"table covers degrees <= {table.max_degree}, class of degree "
            f"{c.degree} needs {c.degree - 1}"
        )
    for degree in range(1, c.degree):
        best: tuple[int, DivisorClass] | None = None
        for shape in table.classes(degree):
            product, witness = min_intersection_witness(c, shape)
            if best is None or product < best[0]:
                best = (product, witness)
        if best is not None and best[0] < 0:
            return Verdict(False, ObstructingCurve(best[1], best[0]), "inductive")
    return Verdict(True, ExceptionalTerminal(descend(c)), "inductive")


def solve_sum_and_squares(
    n: int, total: int, total_sq: int, cap: int | None = None
) -> Iterator[tuple[int, ...]]:
    """Nonincreasing nonnegative integer n-tuples with the two exact sums.

    Branch and bound: a prefix survives only while the remaining sum and
    sum of squares stay achievable (slot count times the running cap, the
    Cauchy-Schwarz lower bound, matching parity of sum and square sum).
    Exact: no solution is ever pruned.
    """
    if cap is None:
        cap = isqrt(total_sq) if total_sq >= 0 else 0

    def rec(prefix: tuple[int, ...], cap: int, total: int, total_sq: int) -> Iterator[tuple[int, ...]]:
        if total == 0:
            if total_sq == 0:
                yield prefix + (0,) * (n - len(prefix))
            return
        slots = n - len(prefix)
        if slots == 0 or total < 0 or total_sq < total:
            return
        if total > cap * slots or total_sq > cap * total:
            return
        if total_sq * slots < total * total:
            return
        if (total_sq - total) % 2:
            return
        for v in range(min(cap, total, isqrt(total_sq)), 0, -1):
            yield from rec(prefix + (v,), v, total - v, total_sq - v * v)

    yield from rec((), cap, total, total_sq)


def enumerate_candidates(n: int, d: int) -> frozenset[DivisorClass]:
    """All degree-d classes on <= n points with self-intersection -1 and genus 0.

    Solves the equivalent pair of exact sums: anticanonical degree 1
    (linear) together with self-intersection -1 (quadratic).  Returns
    sorted representatives padded to length n.
    """
    if n < 0:
        raise ValueError(f"point count must be >= 0, got {n}")
    if d < 1:
        raise ValueError(f"degree must be >= 1, got {d}")
    total = 3 * d - 1
    total_sq = d * d + 1
    return frozenset(
        DivisorClass(d, shape) for shape in solve_sum_and_squares(n, total, total_sq)
    )


def enumerate_minus_one(n: int, max_degree: int) -> EnumerationTable:
    """Table of all (-1)-classes up to ``max_degree``, certified by descent."""
    if n < 0:
        raise ValueError(f"point count must be >= 0, got {n}")
    if max_degree < 0:
        raise ValueError(f"degree bound must be >= 0, got {max_degree}")
    classes_by_degree: dict[int, frozenset[DivisorClass]] = {}
    if n >= 1:
        classes_by_degree[0] = frozenset({sorted_canonical_form(exceptional_class(1), n)})
    else:
        classes_by_degree[0] = frozenset()
    for d in range(1, max_degree + 1):
        classes_by_degree[d] = frozenset(
            c for c in enumerate_candidates(n, d) if is_minus_one_descent(c).is_minus_one
        )
    return EnumerationTable(n, max_degree, classes_by_degree)


def min_intersection_sorted(a: DivisorClass, b: DivisorClass) -> int:
    """Minimum intersection over all multiplicity permutations of either input.

    For sorted representatives the minimum pairs the multiplicities in the
    same nonincreasing order (rearrangement inequality).
    """
    n = max(len(a.mults), len(b.mults))
    am = sorted(a.padded(n), reverse=True)
    bm = sorted(b.padded(n), reverse=True)
    return a.degree * b.degree - sum(x * y for x, y in zip(am, bm))


def min_intersection_witness(
    target: DivisorClass, shape: DivisorClass
) -> tuple[int, DivisorClass]:
    """Permutation of ``shape`` minimising the product against ``target``.

    Returns the minimal product and the explicitly permuted class that
    attains it against the target's actual multiplicity order.
    """
    n = max(len(target.mults), len(shape.mults))
    tm = target.padded(n)
    sm = sorted(shape.padded(n), reverse=True)
    order = sorted(range(n), key=lambda p: (-tm[p], p))
    arranged = [0] * n
    for rank, pos in enumerate(order):
        arranged[pos] = sm[rank]
    witness = DivisorClass(shape.degree, tuple(arranged))
    return intersect(target, witness), witness
