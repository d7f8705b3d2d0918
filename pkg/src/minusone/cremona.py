"""Numerical quadratic transformations and the degree-descent loop.

The transformation based at three indices is a lattice automorphism: it
fixes the canonical class, preserves intersection products, and is its own
inverse.  Descent repeatedly applies it at the three largest multiplicities
(which always exceed the degree under the hypotheses below), strictly
dropping the degree, until the class either lands on an exceptional class
or exposes a negative multiplicity at positive degree.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .picard import (
    DivisorClass,
    arithmetic_genus,
    exceptional_class,
    intersect,
)


class NoetherHypothesisError(ValueError):
    """Triple selection was asked for a class outside its hypotheses."""

    def __init__(self, reason: str):
        super().__init__(reason)
        self.reason = reason


class ConditionError(ValueError):
    """A class failed the self-intersection or genus requirement."""

    def __init__(
        self,
        failed: tuple[str, ...],
        self_intersection: int,
        genus: Fraction,
    ):
        self.failed = failed
        self.self_intersection = self_intersection
        self.genus = genus
        parts = []
        if "self_intersection" in failed:
            parts.append(f"self-intersection is {self_intersection}, required -1")
        if "genus" in failed:
            parts.append(f"arithmetic genus is {genus}, required 0")
        super().__init__("; ".join(parts))


@dataclass(frozen=True)
class TripleIndex:
    """Three strictly increasing 1-based indices of blown-up points."""

    i1: int
    i2: int
    i3: int

    def __post_init__(self) -> None:
        if self.i1 < 1:
            raise ValueError(f"indices are 1-based, got {self.i1}")
        if not self.i1 < self.i2 < self.i3:
            raise ValueError(
                f"indices must be strictly increasing, got ({self.i1},{self.i2},{self.i3})"
            )

    @property
    def positions(self) -> tuple[int, int, int]:
        """0-based positions into a multiplicity tuple."""
        return (self.i1 - 1, self.i2 - 1, self.i3 - 1)

    def __iter__(self):
        return iter((self.i1, self.i2, self.i3))

    def __str__(self) -> str:
        return f"({self.i1},{self.i2},{self.i3})"


@dataclass(frozen=True)
class ReachedExceptional:
    """Descent terminated on the exceptional class with this 1-based index."""

    index: int


@dataclass(frozen=True)
class NegativeMultiplicity:
    """A negative multiplicity at positive degree, found after ``at_step`` steps."""

    index: int
    at_step: int


@dataclass(frozen=True)
class HypothesisFailure:
    """Descent could not continue; carries the violated hypothesis."""

    reason: str


Outcome = Union[ReachedExceptional, NegativeMultiplicity, HypothesisFailure]


@dataclass(frozen=True)
class ReductionStep:
    before: DivisorClass
    triple: TripleIndex
    after: DivisorClass


@dataclass(frozen=True)
class ReductionTrace:
    """Replayable record of a descent: steps taken, final class, and outcome."""

    steps: tuple[ReductionStep, ...]
    terminal: DivisorClass
    outcome: Outcome

    @property
    def degrees(self) -> tuple[int, ...]:
        """Degree sequence from the initial class through the terminal one."""
        return tuple(s.before.degree for s in self.steps) + (self.terminal.degree,)

    @property
    def initial(self) -> DivisorClass:
        return self.steps[0].before if self.steps else self.terminal

    def verify(self) -> bool:
        """Recompute every step and the outcome from the initial class."""
        current = self.initial
        for step in self.steps:
            if step.before != current or apply_cremona(current, step.triple) != step.after:
                return False
            if step.after.degree >= step.before.degree:
                return False
            current = step.after
        if current != self.terminal:
            return False
        if isinstance(self.outcome, ReachedExceptional):
            return current.degree == 0 and current == exceptional_class(self.outcome.index)
        if isinstance(self.outcome, NegativeMultiplicity):
            pos = self.outcome.index - 1
            mults = current.mults
            return (
                self.outcome.at_step == len(self.steps)
                and pos < len(mults)
                and mults[pos] < 0
                and current.degree != 0
            )
        return True


def apply_cremona(c: DivisorClass, triple: TripleIndex) -> DivisorClass:
    """Quadratic transformation based at the triple.

    Sends ``(d; m)`` to ``(d'; m')`` with ``d' = 2d - m_i1 - m_i2 - m_i3``
    and ``m'_i = d - (sum of the other two)`` at the triple, other entries
    unchanged.  Additive in the class and involutive.
    """
    mults = list(c.padded(triple.i3))
    p1, p2, p3 = triple.positions
    delta = c.degree - mults[p1] - mults[p2] - mults[p3]
    mults[p1] += delta
    mults[p2] += delta
    mults[p3] += delta
    return DivisorClass(c.degree + delta, tuple(mults))


def noether_triple(c: DivisorClass) -> TripleIndex:
    """Indices of the three largest multiplicities, which must sum above the degree.

    Applicable to classes with positive degree, nonnegative multiplicities,
    genus zero, and self-intersection between -2 and 1 (strictly negative
    when the degree is 1).  Ties break toward smaller indices, so the
    choice is deterministic.
    """
    mults = c.padded(3)
    if c.degree <= 0:
        raise NoetherHypothesisError(f"degree must be positive, got {c.degree}")
    if any(m < 0 for m in mults):
        bad = next(i for i, m in enumerate(mults) if m < 0)
        raise NoetherHypothesisError(
            f"multiplicity {bad + 1} is negative ({mults[bad]})"
        )
    genus = arithmetic_genus(c)
    if genus != 0:
        raise NoetherHypothesisError(f"arithmetic genus is {genus}, required 0")
    self_int = intersect(c, c)
    if not -2 <= self_int <= 1:
        raise NoetherHypothesisError(
            f"self-intersection {self_int} outside [-2, 1]"
        )
    if c.degree == 1 and self_int >= 0:
        raise NoetherHypothesisError(
            f"degree 1 needs negative self-intersection, got {self_int}"
        )
    order = sorted(range(len(mults)), key=lambda p: (-mults[p], p))
    picked = sorted(order[:3])
    total = sum(mults[p] for p in picked)
    if total <= c.degree:
        # Unreachable under the hypotheses above; guard against regressions.
        raise AssertionError(
            f"three largest multiplicities sum to {total}, not above degree {c.degree}"
        )
    return TripleIndex(picked[0] + 1, picked[1] + 1, picked[2] + 1)


def descend(c: DivisorClass) -> ReductionTrace:
    """Run the descent loop on a class with self-intersection -1 and genus 0.

    Terminates in at most ``degree`` steps.  Outcomes: the class reduces to
    an exceptional class (and is one of the (-1)-classes), or a negative
    multiplicity appears at nonzero degree (and it is not).  Raises
    :class:`ConditionError` when the entry conditions fail.
    """
    self_int = intersect(c, c)
    genus = arithmetic_genus(c)
    failed = tuple(
        name
        for name, ok in (
            ("self_intersection", self_int == -1),
            ("genus", genus == 0),
        )
        if not ok
    )
    if failed:
        raise ConditionError(failed, self_int, genus)

    current = c.with_padding(max(len(c.mults), 3))
    steps: list[ReductionStep] = []
    while True:
        if current.degree == 0:
            # Self-intersection -1 and genus 0 at degree 0 force a single
            # multiplicity -1: the class is exceptional.
            index = next(
                (i + 1 for i, m in enumerate(current.mults) if m == -1), None
            )
            if index is None or intersect(current, current) != -1:
                raise AssertionError(f"degree-0 class {current!r} is not exceptional")
            outcome: Outcome = ReachedExceptional(index)
            break
        negative = next((i + 1 for i, m in enumerate(current.mults) if m < 0), None)
        if negative is not None:
            outcome = NegativeMultiplicity(negative, at_step=len(steps))
            break
        try:
            triple = noether_triple(current)
        except NoetherHypothesisError as exc:  # unreachable from valid entry
            outcome = HypothesisFailure(exc.reason)
            break
        after = apply_cremona(current, triple)
        if after.degree >= current.degree:
            raise AssertionError(
                f"degree did not decrease: {current.degree} -> {after.degree}"
            )
        steps.append(ReductionStep(current, triple, after))
        current = after
    return ReductionTrace(tuple(steps), current, outcome)


def transport_witness(trace: ReductionTrace) -> DivisorClass:
    """Carry the obstructing exceptional class back to the original basis.

    For a descent that halted on a negative multiplicity, the exceptional
    class at that index meets the reduced class negatively; re-applying the
    recorded transformations in reverse order (each is its own inverse)
    produces a (-1)-class meeting the original class negatively.
    """
    if not isinstance(trace.outcome, NegativeMultiplicity):
        raise ValueError(f"no witness to transport for outcome {trace.outcome!r}")
    witness = exceptional_class(trace.outcome.index, len(trace.terminal.mults))
    for step in reversed(trace.steps):
        witness = apply_cremona(witness, step.triple)
    return witness
