"""Command line front end: class literals, rendering, JSON output, cache.

Class literals look like ``"5; 3,3,1^8"``: degree, semicolon, comma-separated
multiplicities, with ``v^k`` repeating a value k times.  Every command accepts
``--json`` to emit one structured document (schemas in ``OUTPUT_SCHEMAS``).
Exit codes: 0 the command ran and answered (whatever the mathematical
verdict), 2 bad input, 3 internal invariant violation.
"""
from __future__ import annotations

import argparse
import json
import os
import re
import sys
from typing import Any, Sequence

from .classify import (
    ConditionFailure,
    EnumerationTable,
    ExceptionalTerminal,
    ObstructingCurve,
    Verdict,
    enumerate_candidates,
    is_minus_one_descent,
    is_minus_one_inductive,
)
from .cremona import (
    ConditionError,
    HypothesisFailure,
    NegativeMultiplicity,
    ReachedExceptional,
    ReductionTrace,
    descend,
)
from .interpolation import LinearSystem, ObstructionReport, analyze_system
from .picard import (
    DivisorClass,
    arithmetic_genus,
    intersect,
    orbit_size,
    sorted_canonical_form,
)

SCHEMA_VERSION = 1
CACHE_HEADER = re.compile(r"^#minusone-cache v(\d+) n=(\d+) max-degree=(\d+)$")
CACHE_DIR_ENV = "MINUSONE_CACHE_DIR"

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_INTERNAL = 3


class ClassLiteralError(ValueError):
    """A class literal could not be parsed."""


class CacheError(ValueError):
    """A cache file is malformed or fails verification."""


class InternalCheckError(RuntimeError):
    """An invariant the program relies on was violated at runtime."""


# ---------------------------------------------------------------------------
# class literals

_TERM = re.compile(r"^(-?\d+)(?:\^(\d+))?$")


def parse_class_literal(text: str) -> DivisorClass:
    """Parse ``"d; m1,m2,..."`` with ``v^k`` exponent shorthand."""
    head, sep, tail = text.partition(";")
    if not sep:
        raise ClassLiteralError(f"expected 'd; m1,m2,...', got {text!r}")
    try:
        degree = int(head.strip())
    except ValueError:
        raise ClassLiteralError(f"bad degree {head.strip()!r} in {text!r}") from None
    mults: list[int] = []
    tail = tail.strip()
    if tail:
        for raw in tail.split(","):
            term = _TERM.match(raw.strip())
            if term is None:
                raise ClassLiteralError(f"bad multiplicity {raw.strip()!r} in {text!r}")
            value = int(term.group(1))
            repeat = int(term.group(2)) if term.group(2) else 1
            mults.extend([value] * repeat)
    return DivisorClass(degree, tuple(mults))


def format_class_literal(c: DivisorClass) -> str:
    """Canonical literal; inverse of :func:`parse_class_literal`."""
    if not c.mults:
        return f"{c.degree};"
    return f"{c.degree}; {','.join(str(m) for m in c.mults)}"


# ---------------------------------------------------------------------------
# JSON documents

def class_to_json(c: DivisorClass) -> dict[str, Any]:
    return {"degree": c.degree, "mults": list(c.mults)}


def _genus_int(c: DivisorClass) -> int:
    genus = arithmetic_genus(c)
    if genus.denominator != 1:
        raise InternalCheckError(f"non-integral genus {genus} for {c!r}")
    return int(genus)


def trace_to_json(trace: ReductionTrace) -> dict[str, Any]:
    outcome = trace.outcome
    if isinstance(outcome, ReachedExceptional):
        outcome_doc: dict[str, Any] = {"kind": "reached_exceptional", "index": outcome.index}
    elif isinstance(outcome, NegativeMultiplicity):
        outcome_doc = {
            "kind": "negative_multiplicity",
            "index": outcome.index,
            "at_step": outcome.at_step,
        }
    else:
        outcome_doc = {"kind": "hypothesis_failure", "reason": outcome.reason}
    return {
        "steps": [
            {
                "before": class_to_json(s.before),
                "triple": [s.triple.i1, s.triple.i2, s.triple.i3],
                "after": class_to_json(s.after),
            }
            for s in trace.steps
        ],
        "terminal": class_to_json(trace.terminal),
        "outcome": outcome_doc,
    }


def certificate_to_json(certificate: Any) -> dict[str, Any]:
    if isinstance(certificate, ExceptionalTerminal):
        return {"kind": "exceptional_terminal", "trace": trace_to_json(certificate.trace)}
    if isinstance(certificate, ObstructingCurve):
        return {
            "kind": "obstructing_curve",
            "witness": class_to_json(certificate.witness),
            "product": certificate.product,
            "trace": trace_to_json(certificate.trace) if certificate.trace else None,
        }
    if isinstance(certificate, ConditionFailure):
        return {
            "kind": "condition_failure",
            "failed": list(certificate.failed),
            "self_intersection": certificate.self_intersection,
            "genus": int(certificate.genus),
        }
    raise InternalCheckError(f"unknown certificate {certificate!r}")


def verdict_to_json(verdict: Verdict) -> dict[str, Any]:
    return {
        "method": verdict.method,
        "is_minus_one": verdict.is_minus_one,
        "certificate": certificate_to_json(verdict.certificate),
    }


def report_to_json(system: DivisorClass, report: ObstructionReport) -> dict[str, Any]:
    return {
        "schema_version": SCHEMA_VERSION,
        "command": "interpolate",
        "system": class_to_json(system),
        "expected_dimension": report.expected_dimension,
        "degree_bound": report.search_degree_bound,
        "conjecturally_special": report.conjecturally_special,
        "obstructions": [
            {"class": class_to_json(o.witness), "product": o.product}
            for o in report.obstructions
        ],
    }


def _emit_json(doc: dict[str, Any]) -> None:
    print(json.dumps(doc, indent=2, sort_keys=True))


# ---------------------------------------------------------------------------
# JSON schemas (validated by the test suite, documented in the README)

_CLASS_SCHEMA = {
    "type": "object",
    "properties": {
        "degree": {"type": "integer"},
        "mults": {"type": "array", "items": {"type": "integer"}},
    },
    "required": ["degree", "mults"],
    "additionalProperties": False,
}

_OUTCOME_SCHEMA = {
    "type": "object",
    "properties": {
        "kind": {"enum": ["reached_exceptional", "negative_multiplicity", "hypothesis_failure"]},
        "index": {"type": "integer"},
        "at_step": {"type": "integer"},
        "reason": {"type": "string"},
    },
    "required": ["kind"],
}

_TRACE_SCHEMA = {
    "type": "object",
    "properties": {
        "steps": {
            "type": "array",
            "items": {
                "type": "object",
                "properties": {
                    "before": _CLASS_SCHEMA,
                    "triple": {
                        "type": "array",
                        "items": {"type": "integer"},
                        "minItems": 3,
                        "maxItems": 3,
                    },
                    "after": _CLASS_SCHEMA,
                },
                "required": ["before", "triple", "after"],
                "additionalProperties": False,
            },
        },
        "terminal": _CLASS_SCHEMA,
        "outcome": _OUTCOME_SCHEMA,
    },
    "required": ["steps", "terminal", "outcome"],
    "additionalProperties": False,
}

_CERTIFICATE_SCHEMA = {
    "type": "object",
    "properties": {
        "kind": {"enum": ["exceptional_terminal", "obstructing_curve", "condition_failure"]},
        "trace": {"oneOf": [_TRACE_SCHEMA, {"type": "null"}]},
        "witness": _CLASS_SCHEMA,
        "product": {"type": "integer"},
        "failed": {"type": "array", "items": {"enum": ["self_intersection", "genus"]}},
        "self_intersection": {"type": "integer"},
        "genus": {"type": "integer"},
    },
    "required": ["kind"],
}

_VERDICT_SCHEMA = {
    "type": "object",
    "properties": {
        "method": {"enum": ["descent", "inductive"]},
        "is_minus_one": {"type": "boolean"},
        "certificate": _CERTIFICATE_SCHEMA,
    },
    "required": ["method", "is_minus_one", "certificate"],
    "additionalProperties": False,
}

_CONDITION_ERROR_SCHEMA = {
    "type": "object",
    "properties": {
        "kind": {"const": "condition_failure"},
        "failed": {"type": "array", "items": {"enum": ["self_intersection", "genus"]}},
        "self_intersection": {"type": "integer"},
        "genus": {"type": "integer"},
    },
    "required": ["kind", "failed", "self_intersection", "genus"],
    "additionalProperties": False,
}

OUTPUT_SCHEMAS: dict[str, dict[str, Any]] = {
    "check": {
        "type": "object",
        "properties": {
            "schema_version": {"const": SCHEMA_VERSION},
            "command": {"const": "check"},
            "class": _CLASS_SCHEMA,
            "self_intersection": {"type": "integer"},
            "genus": {"type": "integer"},
            "verdicts": {"type": "array", "items": _VERDICT_SCHEMA, "minItems": 1},
            "agree": {"type": ["boolean", "null"]},
        },
        "required": [
            "schema_version",
            "command",
            "class",
            "self_intersection",
            "genus",
            "verdicts",
            "agree",
        ],
        "additionalProperties": False,
    },
    "reduce": {
        "type": "object",
        "properties": {
            "schema_version": {"const": SCHEMA_VERSION},
            "command": {"const": "reduce"},
            "class": _CLASS_SCHEMA,
            "trace": {"oneOf": [_TRACE_SCHEMA, {"type": "null"}]},
            "error": {"oneOf": [_CONDITION_ERROR_SCHEMA, {"type": "null"}]},
        },
        "required": ["schema_version", "command", "class", "trace", "error"],
        "additionalProperties": False,
    },
    "enumerate": {
        "type": "object",
        "properties": {
            "schema_version": {"const": SCHEMA_VERSION},
            "command": {"const": "enumerate"},
            "n": {"type": "integer"},
            "max_degree": {"type": "integer"},
            "degrees": {
                "type": "array",
                "items": {
                    "type": "object",
                    "properties": {
                        "degree": {"type": "integer"},
                        "classes": {
                            "type": "array",
                            "items": {
                                "type": "object",
                                "properties": {
                                    "class": _CLASS_SCHEMA,
                                    "orbit_size": {"type": "integer"},
                                },
                                "required": ["class", "orbit_size"],
                                "additionalProperties": False,
                            },
                        },
                        "count": {"type": "integer"},
                        "orbit_count": {"type": "integer"},
                    },
                    "required": ["degree", "classes", "count", "orbit_count"],
                    "additionalProperties": False,
                },
            },
            "total": {"type": "integer"},
            "total_orbit": {"type": "integer"},
            "cache_path": {"type": ["string", "null"]},
        },
        "required": [
            "schema_version",
            "command",
            "n",
            "max_degree",
            "degrees",
            "total",
            "total_orbit",
            "cache_path",
        ],
        "additionalProperties": False,
    },
    "interpolate": {
        "type": "object",
        "properties": {
            "schema_version": {"const": SCHEMA_VERSION},
            "command": {"const": "interpolate"},
            "system": _CLASS_SCHEMA,
            "expected_dimension": {"type": "integer"},
            "degree_bound": {"type": "integer"},
            "conjecturally_special": {"type": "boolean"},
            "obstructions": {
                "type": "array",
                "items": {
                    "type": "object",
                    "properties": {
                        "class": _CLASS_SCHEMA,
                        "product": {"type": "integer"},
                    },
                    "required": ["class", "product"],
                    "additionalProperties": False,
                },
            },
        },
        "required": [
            "schema_version",
            "command",
            "system",
            "expected_dimension",
            "degree_bound",
            "conjecturally_special",
            "obstructions",
        ],
        "additionalProperties": False,
    },
}


# ---------------------------------------------------------------------------
# human rendering

def _render_trace(trace: ReductionTrace, indent: str = "  ") -> list[str]:
    lines = [f"descent trace ({len(trace.steps)} step{'s' if len(trace.steps) != 1 else ''}):"]
    for k, step in enumerate(trace.steps, start=1):
        lines.append(
            f"{indent}step {k}: apply {step.triple}: "
            f"{format_class_literal(step.before)} -> {format_class_literal(step.after)}"
        )
    outcome = trace.outcome
    if isinstance(outcome, ReachedExceptional):
        lines.append(f"{indent}reached exceptional class E{outcome.index}")
    elif isinstance(outcome, NegativeMultiplicity):
        lines.append(
            f"{indent}halted after step {outcome.at_step}: "
            f"multiplicity {outcome.index} is negative"
        )
    elif isinstance(outcome, HypothesisFailure):
        lines.append(f"{indent}halted: {outcome.reason}")
    return lines


def _render_certificate(certificate: Any) -> list[str]:
    if isinstance(certificate, ExceptionalTerminal):
        return _render_trace(certificate.trace)
    if isinstance(certificate, ObstructingCurve):
        lines = [
            f"obstructing witness: {format_class_literal(certificate.witness)}",
            f"product with witness: {certificate.product}",
        ]
        if certificate.trace is not None:
            lines.extend(_render_trace(certificate.trace))
        return lines
    if isinstance(certificate, ConditionFailure):
        lines = ["condition failure:"]
        if "self_intersection" in certificate.failed:
            lines.append(
                f"  self-intersection = {certificate.self_intersection} (required -1)"
            )
        if "genus" in certificate.failed:
            lines.append(f"  arithmetic genus = {certificate.genus} (required 0)")
        return lines
    raise InternalCheckError(f"unknown certificate {certificate!r}")


# ---------------------------------------------------------------------------
# cache files

def write_cache(table: EnumerationTable, path: str) -> None:
    """One sorted representative per line, after a parameter header."""
    lines = [f"#minusone-cache v{SCHEMA_VERSION} n={table.n} max-degree={table.max_degree}"]
    for c in table.all_classes():
        lines.append(format_class_literal(c.with_padding(table.n)))
    with open(path, "w", encoding="utf-8") as handle:
        handle.write("\n".join(lines) + "\n")


def read_cache(path: str, verify: bool = False) -> EnumerationTable:
    """Reload a cache file; with ``verify`` every record is re-certified."""
    with open(path, "r", encoding="utf-8") as handle:
        raw = handle.read().splitlines()
    if not raw:
        raise CacheError(f"{path}: empty cache file")
    header = CACHE_HEADER.match(raw[0])
    if header is None:
        raise CacheError(f"{path}: bad header {raw[0]!r}")
    version, n, max_degree = (int(g) for g in header.groups())
    if version != SCHEMA_VERSION:
        raise CacheError(f"{path}: unsupported cache version {version}")
    classes_by_degree: dict[int, set[DivisorClass]] = {
        d: set() for d in range(0, max_degree + 1)
    }
    for line in raw[1:]:
        line = line.strip()
        if not line:
            continue
        try:
            c = parse_class_literal(line)
        except ClassLiteralError as exc:
            raise CacheError(f"{path}: {exc}") from None
        if len(c.mults) != n or not 0 <= c.degree <= max_degree:
            raise CacheError(f"{path}: record {line!r} outside table parameters")
        if c != sorted_canonical_form(c, n):
            raise CacheError(f"{path}: record {line!r} not in sorted form")
        if verify and not is_minus_one_descent(c).is_minus_one:
            raise CacheError(f"{path}: record {line!r} fails descent certification")
        classes_by_degree[c.degree].add(c)
    return EnumerationTable(
        n, max_degree, {d: frozenset(s) for d, s in classes_by_degree.items()}
    )


def _default_cache_path(n: int) -> str | None:
    directory = os.environ.get(CACHE_DIR_ENV)
    if not directory:
        return None
    return os.path.join(directory, f"minusone-n{n}.cache")


def _obtain_table(
    n: int, max_degree: int, cache_path: str | None, verify: bool
) -> tuple[EnumerationTable, str | None]:
    """Load, extend, or build a table; persist it when a path is in play."""
    path = cache_path or _default_cache_path(n)
    cached: EnumerationTable | None = None
    if path and os.path.exists(path):
        cached = read_cache(path, verify=verify)
    if cached is not None and cached.n >= n and cached.max_degree >= max_degree:
        return cached, path
    if cached is not None and cached.n == n:
        # Extend an existing table to a larger degree, reusing its buckets.
        merged = dict(cached.classes_by_degree)
        for d in range(cached.max_degree + 1, max_degree + 1):
            merged[d] = frozenset(
                c for c in enumerate_candidates(n, d) if is_minus_one_descent(c).is_minus_one
            )
        table = EnumerationTable(n, max_degree, merged)
    else:
        from .classify import enumerate_minus_one

        table = enumerate_minus_one(n, max_degree)
    if path:
        write_cache(table, path)
    return table, path


# ---------------------------------------------------------------------------
# commands

def cmd_check(args: argparse.Namespace) -> int:
    c = parse_class_literal(args.cls)
    methods = ["descent", "inductive"] if args.method == "both" else [args.method]
    verdicts: list[Verdict] = []
    for method in methods:
        if method == "descent":
            verdicts.append(is_minus_one_descent(c))
        else:
            n = max(len(c.trimmed_mults), 3)
            table, _ = _obtain_table(
                n, max(c.degree - 1, 0), args.cache, args.verify_cache
            )
            verdicts.append(is_minus_one_inductive(c, table))
    agree = None
    if len(verdicts) == 2:
        agree = verdicts[0].is_minus_one == verdicts[1].is_minus_one
        if not agree:
            raise InternalCheckError(
                f"classifiers disagree on {format_class_literal(c)}: "
                f"descent={verdicts[0].is_minus_one} inductive={verdicts[1].is_minus_one}"
            )
    if args.json:
        _emit_json(
            {
                "schema_version": SCHEMA_VERSION,
                "command": "check",
                "class": class_to_json(c),
                "self_intersection": intersect(c, c),
                "genus": _genus_int(c),
                "verdicts": [verdict_to_json(v) for v in verdicts],
                "agree": agree,
            }
        )
        return EXIT_OK
    print(f"class: {format_class_literal(c)}")
    print(f"self-intersection: {intersect(c, c)}")
    print(f"arithmetic genus: {_genus_int(c)}")
    for verdict in verdicts:
        answer = "IS" if verdict.is_minus_one else "NOT"
        print(f"{verdict.method}: {answer} a (-1)-class")
    if agree is not None:
        print("methods agree: yes")
    seen_blocks: set[tuple[str, ...]] = set()
    for verdict in verdicts:
        # --method both often produces identical certificates; print each once.
        block = tuple(_render_certificate(verdict.certificate))
        if block in seen_blocks:
            continue
        seen_blocks.add(block)
        for line in block:
            print(line)
    return EXIT_OK


def cmd_reduce(args: argparse.Namespace) -> int:
    c = parse_class_literal(args.cls)
    try:
        trace = descend(c)
    except ConditionError as exc:
        if args.json:
            _emit_json(
                {
                    "schema_version": SCHEMA_VERSION,
                    "command": "reduce",
                    "class": class_to_json(c),
                    "trace": None,
                    "error": {
                        "kind": "condition_failure",
                        "failed": list(exc.failed),
                        "self_intersection": exc.self_intersection,
                        "genus": int(exc.genus),
                    },
                }
            )
            return EXIT_INPUT
        print(f"class: {format_class_literal(c)}")
        print("cannot reduce: the class fails the entry conditions")
        if "self_intersection" in exc.failed:
            print(f"  self-intersection = {exc.self_intersection} (required -1)")
        if "genus" in exc.failed:
            print(f"  arithmetic genus = {exc.genus} (required 0)")
        return EXIT_INPUT
    if args.json:
        _emit_json(
            {
                "schema_version": SCHEMA_VERSION,
                "command": "reduce",
                "class": class_to_json(c),
                "trace": trace_to_json(trace),
                "error": None,
            }
        )
        return EXIT_OK
    print(f"class: {format_class_literal(c)}")
    for line in _render_trace(trace, indent="  "):
        print(line)
    verdict = "certified (-1)-class" if isinstance(
        trace.outcome, ReachedExceptional
    ) else "not a (-1)-class"
    print(f"verdict: {verdict}")
    return EXIT_OK


def cmd_enumerate(args: argparse.Namespace) -> int:
    if args.n < 0 or args.max_degree < 0:
        raise ClassLiteralError("n and max-degree must be >= 0")
    table, path = _obtain_table(args.n, args.max_degree, args.cache, args.verify_cache)
    degrees = list(range(0, args.max_degree + 1))
    if args.json:
        _emit_json(
            {
                "schema_version": SCHEMA_VERSION,
                "command": "enumerate",
                "n": args.n,
                "max_degree": args.max_degree,
                "degrees": [
                    {
                        "degree": d,
                        "classes": [
                            {
                                "class": class_to_json(c.with_padding(table.n)),
                                "orbit_size": orbit_size(c, table.n),
                            }
                            for c in table.classes(d)
                        ],
                        "count": table.shape_count(d),
                        "orbit_count": table.expanded_count(d),
                    }
                    for d in degrees
                ],
                "total": sum(table.shape_count(d) for d in degrees),
                "total_orbit": sum(table.expanded_count(d) for d in degrees),
                "cache_path": path,
            }
        )
        return EXIT_OK
    print(f"(-1)-classes on {args.n} points up to degree {args.max_degree}")
    total = 0
    total_orbit = 0
    for d in degrees:
        count = table.shape_count(d)
        orbit = table.expanded_count(d)
        total += count
        total_orbit += orbit
        suffix = f" ({orbit} with permutations)" if args.expand_permutations else ""
        plural = "es" if count != 1 else ""
        print(f"degree {d}: {count} class{plural}{suffix}")
        for c in table.classes(d):
            print(f"  {format_class_literal(c.with_padding(table.n))}")
    suffix = f" ({total_orbit} with permutations)" if args.expand_permutations else ""
    plural = "es" if total != 1 else ""
    print(f"total: {total} class{plural}{suffix}")
    if path:
        print(f"cache written: {path}")
    return EXIT_OK


def cmd_interpolate(args: argparse.Namespace) -> int:
    c = parse_class_literal(args.system)
    system = LinearSystem(c)  # rejects negative degree or multiplicities
    table = None
    if args.cache or _default_cache_path(len(c.mults)):
        bound = c.degree if args.degree_bound is None else args.degree_bound
        table, _ = _obtain_table(
            max(len(c.mults), 1), max(bound, 0), args.cache, args.verify_cache
        )
    report = analyze_system(system, degree_bound=args.degree_bound, table=table)
    if args.json:
        _emit_json(report_to_json(c, report))
        return EXIT_OK
    print(f"system: {format_class_literal(c)}")
    print(f"expected dimension: {report.expected_dimension}")
    print(f"obstruction search up to degree {report.search_degree_bound}")
    if report.obstructions:
        print("obstructions:")
        for obstruction in report.obstructions:
            print(
                f"  {format_class_literal(obstruction.witness)}"
                f"  (product {obstruction.product})"
            )
    else:
        print("obstructions: none")
    print(f"conjecturally special: {'yes' if report.conjecturally_special else 'no'}")
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser / entry point

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="minusone",
        description="Classify (-1)-curve classes on blowups of the plane "
        "and search interpolation systems for obstructions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--json", action="store_true", help="emit one JSON document")
        p.add_argument("--cache", metavar="PATH", help="enumeration cache file")
        p.add_argument(
            "--verify-cache",
            action="store_true",
            help="re-certify every cached record on load",
        )

    p_check = sub.add_parser("check", help="classify a divisor class")
    p_check.add_argument("cls", metavar="CLASS", help='class literal, e.g. "5; 3,3,1^8"')
    p_check.add_argument(
        "--method",
        choices=["descent", "inductive", "both"],
        default="descent",
        help="classification procedure (default: descent)",
    )
    add_common(p_check)
    p_check.set_defaults(func=cmd_check)

    p_reduce = sub.add_parser("reduce", help="print the full descent trace")
    p_reduce.add_argument("cls", metavar="CLASS")
    add_common(p_reduce)
    p_reduce.set_defaults(func=cmd_reduce)

    p_enum = sub.add_parser("enumerate", help="list all (-1)-classes up to a degree")
    p_enum.add_argument("--n", type=int, required=True, help="number of blown-up points")
    p_enum.add_argument("--max-degree", type=int, required=True)
    p_enum.add_argument(
        "--expand-permutations",
        action="store_true",
        help="also count all multiplicity permutations",
    )
    add_common(p_enum)
    p_enum.set_defaults(func=cmd_enumerate)

    p_interp = sub.add_parser(
        "interpolate", help="expected dimension and obstructions of a system"
    )
    p_interp.add_argument("system", metavar="SYSTEM", help='system literal, e.g. "2; 2,2"')
    p_interp.add_argument(
        "--degree-bound",
        type=int,
        default=None,
        help="obstruction search bound (default: system degree)",
    )
    add_common(p_interp)
    p_interp.set_defaults(func=cmd_interpolate)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ClassLiteralError, CacheError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (InternalCheckError, AssertionError) as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


def console_main() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    console_main()
