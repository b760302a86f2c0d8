"""Exponent vectors: the monomial x1^a1*...*xn^an as the tuple (a1, ..., an).

All arithmetic is exact; entries are plain Python integers and may be
arbitrarily large.
"""
from __future__ import annotations

import re
from collections.abc import Iterable, Iterator, Sequence

from .errors import InputError

Vector = tuple[int, ...]

_FACTOR_RE = re.compile(r"^x(\d+)(?:\^(\d+))?$")


def as_vector(entries: Sequence[int]) -> Vector:
    """Validate and freeze a sequence of non-negative integers."""
    vec = tuple(entries)
    if not vec:
        raise InputError("exponent vector must have at least one entry")
    for e in vec:
        if not isinstance(e, int):
            raise InputError(f"exponent {e!r} is not an integer")
        if e < 0:
            raise InputError(f"negative exponent {e} not allowed")
    return vec


def check_length(vec: Vector, n: int) -> Vector:
    if len(vec) != n:
        raise InputError(f"dimension mismatch: vector {list(vec)} has length {len(vec)}, expected {n}")
    return vec


def degree(vec: Vector) -> int:
    return sum(vec)


def divides(d: Vector, m: Vector) -> bool:
    """True iff x^d divides x^m, i.e. d <= m coordinatewise."""
    if len(d) != len(m):
        raise InputError(f"dimension mismatch: {len(d)} vs {len(m)}")
    return all(a <= b for a, b in zip(d, m))


def lcm(a: Vector, b: Vector) -> Vector:
    """Least common multiple: coordinatewise maximum."""
    if len(a) != len(b):
        raise InputError(f"dimension mismatch: {len(a)} vs {len(b)}")
    return tuple(max(x, y) for x, y in zip(a, b))


def multiply(a: Vector, b: Vector) -> Vector:
    """Monomial product: coordinatewise sum."""
    if len(a) != len(b):
        raise InputError(f"dimension mismatch: {len(a)} vs {len(b)}")
    return tuple(x + y for x, y in zip(a, b))


def parse_monomial(text: str, n: int) -> Vector:
    """Parse either syntax into a length-n exponent vector.

    Vector form: ``[2,1,1]``.  Product form: ``x1^2*x2*x3`` with 1-based
    variable indices; repeated variables multiply.  ``1`` denotes the unit
    monomial.  The first character decides which parser runs.
    """
    text = text.strip()
    if not text:
        raise InputError("empty monomial")
    if text.startswith("["):
        return _parse_vector_form(text, n)
    return _parse_product_form(text, n)


def _parse_vector_form(text: str, n: int) -> Vector:
    if not text.endswith("]"):
        raise InputError(f"unterminated vector literal: {text!r}")
    body = text[1:-1].strip()
    if not body:
        raise InputError("empty exponent vector")
    try:
        entries = [int(part) for part in body.split(",")]
    except ValueError as exc:
        raise InputError(f"bad exponent vector {text!r}: {exc}") from None
    vec = as_vector(entries)
    return check_length(vec, n)


def _parse_product_form(text: str, n: int) -> Vector:
    exps = [0] * n
    if text == "1":
        return tuple(exps)
    for factor in text.split("*"):
        factor = factor.strip()
        m = _FACTOR_RE.match(factor)
        if m is None:
            raise InputError(f"bad monomial factor {factor!r} (expected x<i> or x<i>^<e>)")
        idx = int(m.group(1))
        exp = int(m.group(2)) if m.group(2) is not None else 1
        if not 1 <= idx <= n:
            raise InputError(f"variable index {idx} out of range 1..{n}")
        exps[idx - 1] += exp
    return tuple(exps)


def format_vector(vec: Vector) -> str:
    """Canonical output form, e.g. ``[2,1,1]``."""
    return "[" + ",".join(str(e) for e in vec) + "]"


def format_product(vec: Vector) -> str:
    """Human-readable product form, e.g. ``x1^2*x2*x3``; unit monomial is ``1``."""
    parts = []
    for i, e in enumerate(vec, start=1):
        if e == 1:
            parts.append(f"x{i}")
        elif e > 1:
            parts.append(f"x{i}^{e}")
    return "*".join(parts) if parts else "1"


def iter_vectors(n: int, max_degree: int) -> Iterator[Vector]:
    """All exponent vectors of length n with total degree <= max_degree,
    in lexicographic order."""
    if n < 1:
        raise InputError(f"need n >= 1, got {n}")
    if max_degree < 0:
        raise InputError(f"need max_degree >= 0, got {max_degree}")

    def rec(prefix: tuple[int, ...], budget: int, remaining: int) -> Iterator[Vector]:
        if remaining == 0:
            yield prefix
            return
        for e in range(budget + 1):
            yield from rec(prefix + (e,), budget - e, remaining - 1)

    yield from rec((), max_degree, n)


def iter_vectors_of_degree(n: int, total: int) -> Iterator[Vector]:
    """All exponent vectors of length n with total degree exactly `total`."""
    if n == 1:
        yield (total,)
        return
    for head in range(total + 1):
        for rest in iter_vectors_of_degree(n - 1, total - head):
            yield (head,) + rest


def validate_vectors(vectors: Iterable[Sequence[int]], n: int) -> list[Vector]:
    """Validate a collection of raw vectors against a common length."""
    return [check_length(as_vector(v), n) for v in vectors]
