"""Exact arithmetic on monomial ideals given by minimal generating sets.

A monomial ideal is stored as its unique minimal generating set: an
antichain of exponent vectors under coordinatewise divisibility, kept in
ascending lexicographic order so equal ideals serialize identically.
Conventions: the zero ideal has no generators; the unit ideal is generated
by the all-zeros vector.
"""
from __future__ import annotations

import re
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field

from . import _vectorized
from .errors import InputError
from .monomials import (
    Vector,
    as_vector,
    check_length,
    divides,
    format_vector,
    iter_vectors_of_degree,
    parse_monomial,
)

_N_LINE_RE = re.compile(r"^n\s*=\s*(\d+)$")


@dataclass(frozen=True)
class MonomialIdeal:
    """Immutable monomial ideal over a fixed ambient variable count.

    `gens` is normalized (validated, deduplicated, lex-sorted) on
    construction but is trusted to be an antichain; build from arbitrary
    vectors with `minimalize` / `from_gens`, which reduce first.
    """

    n: int
    gens: tuple[Vector, ...] = field(default=())

    def __post_init__(self) -> None:
        if not isinstance(self.n, int) or self.n < 1:
            raise InputError(f"ambient variable count must be a positive integer, got {self.n!r}")
        normalized = tuple(sorted({check_length(as_vector(g), self.n) for g in self.gens}))
        object.__setattr__(self, "gens", normalized)

    @classmethod
    def from_gens(cls, vectors: Iterable[Sequence[int]], n: int) -> "MonomialIdeal":
        return minimalize(vectors, n)

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def is_unit(self) -> bool:
        return len(self.gens) == 1 and not any(self.gens[0])

    def is_squarefree(self) -> bool:
        return all(e <= 1 for g in self.gens for e in g)

    def member(self, vec: Sequence[int]) -> bool:
        """True iff x^vec lies in the ideal, i.e. some generator divides it."""
        v = check_length(as_vector(vec), self.n)
        return any(divides(g, v) for g in self.gens)

    def contains(self, inner: "MonomialIdeal") -> bool:
        """True iff inner is a subset of self (every generator of inner is a member)."""
        self._check_compatible(inner)
        return all(_vectorized.any_divides_batch(self.gens, inner.gens, self.n))

    def product(self, other: "MonomialIdeal") -> "MonomialIdeal":
        self._check_compatible(other)
        gens = _vectorized.expand_minimal(self.gens, other.gens, self.n, product=True)
        return MonomialIdeal(self.n, tuple(gens))

    def power(self, m: int) -> "MonomialIdeal":
        """m-th ordinary power by repeated product; power(I, 0) is the unit ideal."""
        if not isinstance(m, int) or m < 0:
            raise InputError(f"power exponent must be a non-negative integer, got {m!r}")
        if m == 0:
            return unit_ideal(self.n)
        result = self
        for _ in range(m - 1):
            result = result.product(self)
        return result

    def intersect(self, other: "MonomialIdeal") -> "MonomialIdeal":
        """Intersection via pairwise lcm of generators, then antichain reduction."""
        self._check_compatible(other)
        gens = _vectorized.expand_minimal(self.gens, other.gens, self.n, product=False)
        return MonomialIdeal(self.n, tuple(gens))

    def __mul__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        return self.product(other)

    def __pow__(self, m: int) -> "MonomialIdeal":
        return self.power(m)

    def __and__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        return self.intersect(other)

    def _check_compatible(self, other: "MonomialIdeal") -> None:
        if self.n != other.n:
            raise InputError(f"dimension mismatch: ideals over {self.n} and {other.n} variables")


@dataclass(frozen=True)
class PrimeSupport:
    """Monomial prime ideal (x_i : i in support), indices 1-based."""

    n: int
    support: frozenset[int]

    def __post_init__(self) -> None:
        if not isinstance(self.n, int) or self.n < 1:
            raise InputError(f"ambient variable count must be a positive integer, got {self.n!r}")
        object.__setattr__(self, "support", frozenset(self.support))
        if not self.support:
            raise InputError("prime support must be non-empty")
        for i in self.support:
            if not isinstance(i, int) or not 1 <= i <= self.n:
                raise InputError(f"support index {i!r} out of range 1..{self.n}")

    @property
    def indices(self) -> tuple[int, ...]:
        return tuple(sorted(self.support))


def zero_ideal(n: int) -> MonomialIdeal:
    return MonomialIdeal(n, ())


def unit_ideal(n: int) -> MonomialIdeal:
    return MonomialIdeal(n, ((0,) * n,))


def minimalize(vectors: Iterable[Sequence[int]], n: int) -> MonomialIdeal:
    """Ideal generated by `vectors`, reduced to its minimal generating set."""
    validated = [check_length(as_vector(v), n) for v in vectors]
    gens = _vectorized.minimal_vectors(validated, n)
    return MonomialIdeal(n, tuple(gens))


def intersect_all(ideals: Sequence[MonomialIdeal]) -> MonomialIdeal:
    """Left fold of pairwise intersections; reduces after every step."""
    if not ideals:
        raise InputError("intersect_all needs at least one ideal")
    result = ideals[0]
    for other in ideals[1:]:
        result = result.intersect(other)
    return result


def is_antichain(ideal: MonomialIdeal) -> bool:
    """O(g^2) divisibility scan; True when no generator divides another."""
    gens = ideal.gens
    for i, g in enumerate(gens):
        for j, h in enumerate(gens):
            if i != j and divides(g, h):
                return False
    return True


def minimal_primes(ideal: MonomialIdeal) -> tuple[PrimeSupport, ...]:
    """Minimal primes of a squarefree ideal: the inclusion-minimal variable
    sets meeting every generator's support (minimal vertex covers of the
    support hypergraph)."""
    if ideal.is_zero or ideal.is_unit:
        raise InputError("minimal primes are defined here for proper non-zero ideals only")
    if not ideal.is_squarefree():
        raise InputError("minimal primes require a squarefree ideal (all exponents <= 1)")
    edges = sorted(
        {frozenset(i + 1 for i, e in enumerate(g) if e) for g in ideal.gens},
        key=lambda s: (len(s), sorted(s)),
    )
    covers: set[frozenset[int]] = set()

    def extend(idx: int, chosen: frozenset[int]) -> None:
        while idx < len(edges) and edges[idx] & chosen:
            idx += 1
        if idx == len(edges):
            covers.add(chosen)
            return
        for v in sorted(edges[idx]):
            extend(idx + 1, chosen | {v})

    extend(0, frozenset())
    minimal = [c for c in covers if not any(other < c for other in covers)]
    supports = sorted(minimal, key=lambda s: sorted(s))
    return tuple(PrimeSupport(ideal.n, s) for s in supports)


def prime_power_member(vec: Sequence[int], prime: PrimeSupport, k: int) -> bool:
    """Membership in prime^k: the exponent sum over the support is >= k."""
    v = check_length(as_vector(vec), prime.n)
    if not isinstance(k, int) or k < 1:
        raise InputError(f"power must be a positive integer, got {k!r}")
    return sum(v[i - 1] for i in prime.support) >= k


def prime_power_ideal(prime: PrimeSupport, k: int) -> MonomialIdeal:
    """Explicit generators of prime^k: all degree-k vectors on the support."""
    if not isinstance(k, int) or k < 1:
        raise InputError(f"power must be a positive integer, got {k!r}")
    idxs = prime.indices
    gens = []
    for comp in iter_vectors_of_degree(len(idxs), k):
        vec = [0] * prime.n
        for i, e in zip(idxs, comp):
            vec[i - 1] = e
        gens.append(tuple(vec))
    return MonomialIdeal(prime.n, tuple(gens))


def symbolic_power(ideal: MonomialIdeal, k: int) -> MonomialIdeal:
    """k-th symbolic power of a squarefree ideal: the intersection of the
    k-th powers of its minimal primes, each expanded to explicit generators."""
    if not isinstance(k, int) or k < 1:
        raise InputError(f"symbolic power index must be a positive integer, got {k!r}")
    if ideal.is_zero or ideal.is_unit:
        raise InputError("symbolic power is defined here for proper non-zero ideals only")
    if not ideal.is_squarefree():
        raise InputError("symbolic power requires a squarefree ideal (all exponents <= 1)")
    primes = minimal_primes(ideal)
    return intersect_all([prime_power_ideal(p, k) for p in primes])


def format_ideal(ideal: MonomialIdeal) -> str:
    """Ideal file format: `n=<int>` then one generator per line, canonical order."""
    lines = [f"n={ideal.n}"]
    lines.extend(format_vector(g) for g in ideal.gens)
    return "\n".join(lines) + "\n"


def parse_ideal(text: str) -> MonomialIdeal:
    """Parse the ideal file format; `#` starts a comment, blank lines ignored."""
    n: int | None = None
    vectors: list[Vector] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if n is None:
            m = _N_LINE_RE.match(line)
            if m is None:
                raise InputError(f"line {lineno}: expected header n=<int>, got {line!r}")
            n = int(m.group(1))
            if n < 1:
                raise InputError(f"line {lineno}: ambient variable count must be >= 1")
            continue
        vectors.append(parse_monomial(line, n))
    if n is None:
        raise InputError("ideal text has no n=<int> header")
    return minimalize(vectors, n)


def load_ideal(path: str) -> MonomialIdeal:
    with open(path, encoding="utf-8") as fh:
        return parse_ideal(fh.read())


def save_ideal(ideal: MonomialIdeal, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_ideal(ideal))
