"""Brute-force oracles, deliberately independent of the minusone package.

Everything here recomputes reference data from first principles with the
dumbest viable algorithms:

* ``orbit_minus_one`` builds the set of (-1)-classes as the closure of the
  exceptional classes under all standard quadratic transformations of the
  Picard lattice (the classical description of these classes), with no
  degree-descent logic at all.
* ``candidate_classes`` scans integer partitions directly for the two
  defining equations (self-intersection -1, arithmetic genus 0), without
  the linear reformulation the package uses.
* ``min_intersection_brute`` minimises an intersection product over all
  distinct permutations of one argument.

The test suite imports these as oracles; running the module prints the
reference tables.  Nothing here may import from ``minusone``.
"""
from __future__ import annotations

from itertools import combinations, permutations
from math import isqrt

Cls = tuple[int, tuple[int, ...]]  # (degree, multiplicities)


def self_intersection(d: int, m: tuple[int, ...]) -> int:
    return d * d - sum(x * x for x in m)


def genus_doubled(d: int, m: tuple[int, ...]) -> int:
    """Twice the arithmetic genus of d*H - sum(m_i E_i)."""
    return (d - 1) * (d - 2) - sum(x * (x - 1) for x in m)


def quadratic_image(d: int, m: tuple[int, ...], triple: tuple[int, int, int]) -> Cls:
    """Standard quadratic transformation based at three slots (0-based)."""
    i, j, k = triple
    delta = d - m[i] - m[j] - m[k]
    mm = list(m)
    mm[i] += delta
    mm[j] += delta
    mm[k] += delta
    return d + delta, tuple(mm)


def orbit_minus_one(n: int, max_degree: int) -> set[Cls]:
    """All (-1)-classes on <= n points with degree <= max_degree.

    Closure of the exceptional classes under standard quadratic maps.  The
    closure runs on max(n, 3) slots so three base slots always exist, then
    keeps the classes supported on the first n slots.
    """
    if n == 0:
        return set()
    slots = max(n, 3)
    seen: set[Cls] = set()
    for i in range(slots):
        v = [0] * slots
        v[i] = -1
        seen.add((0, tuple(v)))
    frontier = list(seen)
    triples = list(combinations(range(slots), 3))
    while frontier:
        grown: list[Cls] = []
        for d, m in frontier:
            for t in triples:
                d2, m2 = quadratic_image(d, m, t)
                if 0 <= d2 <= max_degree and (d2, m2) not in seen:
                    seen.add((d2, m2))
                    grown.append((d2, m2))
        frontier = grown
    return {(d, m[:n]) for d, m in seen if all(x == 0 for x in m[n:])}


def orbit_shapes(n: int, max_degree: int) -> dict[int, set[tuple[int, ...]]]:
    """Orbit classes grouped by degree, as sorted multiplicity shapes."""
    by_degree: dict[int, set[tuple[int, ...]]] = {}
    for d, m in orbit_minus_one(n, max_degree):
        by_degree.setdefault(d, set()).add(tuple(sorted(m, reverse=True)))
    return by_degree


def candidate_classes(n: int, d: int) -> set[tuple[int, ...]]:
    """Nonincreasing nonnegative shapes of length n (trailing zeros allowed)
    with self-intersection -1 and genus 0, by direct scan."""
    found: set[tuple[int, ...]] = set()
    target = d * d + 1

    def rec(prefix: list[int], cap: int, sq_left: int) -> None:
        if sq_left == 0:
            shape = tuple(prefix) + (0,) * (n - len(prefix))
            if genus_doubled(d, shape) == 0:
                found.add(shape)
            return
        if len(prefix) == n:
            return
        for v in range(min(cap, isqrt(sq_left)), 0, -1):
            rec(prefix + [v], v, sq_left - v * v)

    rec([], isqrt(target), target)
    return found


def min_intersection_brute(a: Cls, b: Cls) -> int:
    """Minimum of the pairing over all permutations of b's multiplicities."""
    da, ma = a
    db, mb = b
    n = max(len(ma), len(mb))
    ma = ma + (0,) * (n - len(ma))
    mb = mb + (0,) * (n - len(mb))
    return min(da * db - sum(x * y for x, y in zip(ma, p)) for p in set(permutations(mb)))


def main() -> None:
    for n in range(2, 9):
        shapes = orbit_shapes(n, max_degree=8)
        expanded = len(orbit_minus_one(n, max_degree=8))
        top = max(d for d, s in shapes.items() if s)
        print(f"n={n}: expanded={expanded} top_degree={top}")
        for d in sorted(shapes):
            for shape in sorted(shapes[d], reverse=True):
                print(f"  {d}; {','.join(map(str, shape))}")
    for n, d in [(9, 3), (2, 1), (5, 2), (10, 5)]:
        sols = candidate_classes(n, d)
        print(f"candidates n={n} d={d}: {sorted(sols, reverse=True)}")


if __name__ == "__main__":
    main()
