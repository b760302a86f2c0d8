"""Definition-level verifiers and the containment-threshold survey.

Everything here re-derives membership and containment facts from first
principles (multiset search over generators, exhaustive enumeration) so the
inequality fast paths and the generator-expansion arithmetic can be checked
against each other on small grids.
"""
from __future__ import annotations

import csv
import io
import json
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import lru_cache

from . import _vectorized
from .axes import (
    axes_ideal,
    containment_bound,
    member_ordinary_fast,
    member_symbolic_fast,
)
from .errors import GuardRefusal, InputError, InternalError
from .ideals import MonomialIdeal, PrimeSupport, intersect_all, prime_power_ideal, symbolic_power
from .monomials import Vector, as_vector, check_length, degree, format_vector, iter_vectors

THREADS_ENV_VAR = "AXES_IDEALS_THREADS"


@dataclass(frozen=True)
class ResourceGuard:
    """Upper limits on grid parameters; exceeding them is a refusal, not a crash."""

    max_n: int = 8
    max_m: int = 10
    max_degree: int = 40

    def check(self, *, n: int | None = None, m: int | None = None, degree: int | None = None) -> None:
        if n is not None and n > self.max_n:
            raise GuardRefusal(f"n={n} exceeds the resource guard (max_n={self.max_n})")
        if m is not None and m > self.max_m:
            raise GuardRefusal(f"m={m} exceeds the resource guard (max_m={self.max_m})")
        if degree is not None and degree > self.max_degree:
            raise GuardRefusal(
                f"enumeration degree {degree} exceeds the resource guard (max_degree={self.max_degree})"
            )


DEFAULT_GUARD = ResourceGuard()


def factor_witness(a, ideal: MonomialIdeal, m: int) -> tuple[Vector, ...] | None:
    """A multiset of m generators whose product divides x^a, or None.

    Depth-first search over generators in canonical order with non-decreasing
    index (so each multiset is tried once), degree-budget pruning, and
    memoization of failed (residual, depth, start) states.
    """
    vec = check_length(as_vector(a), ideal.n)
    if not isinstance(m, int) or m < 0:
        raise InputError(f"power must be a non-negative integer, got {m!r}")
    if m == 0:
        return ()
    gens = ideal.gens
    if not gens:
        return None
    min_deg = min(degree(g) for g in gens)
    failed: set[tuple[Vector, int, int]] = set()
    path: list[Vector] = []

    def search(residual: Vector, k: int, start: int) -> bool:
        if k == 0:
            return True
        if sum(residual) < k * min_deg:
            return False
        key = (residual, k, start)
        if key in failed:
            return False
        for idx in range(start, len(gens)):
            g = gens[idx]
            if all(ge <= re for ge, re in zip(g, residual)):
                path.append(g)
                if search(tuple(re - ge for ge, re in zip(g, residual)), k - 1, idx):
                    return True
                path.pop()
        failed.add(key)
        return False

    return tuple(path) if search(vec, m, 0) else None


def member_bruteforce(a, ideal: MonomialIdeal, m: int) -> bool:
    """x^a lies in ideal^m iff some multiset of m generators divides it."""
    return factor_witness(a, ideal, m) is not None


@lru_cache(maxsize=None)
def _axes_power(n: int, m: int) -> MonomialIdeal:
    return axes_ideal(n).power(m)


@lru_cache(maxsize=None)
def _axes_symbolic(n: int, k: int) -> MonomialIdeal:
    return symbolic_power(axes_ideal(n), k)


def _check_grid_cell(n: int, m: int) -> None:
    if not isinstance(n, int) or n < 3:
        raise InputError(f"grid checks need n >= 3, got {n!r}")
    if not isinstance(m, int) or m < 1:
        raise InputError(f"grid checks need m >= 1, got {m!r}")


def check_primary_decomposition(n: int, m: int, guard: ResourceGuard = DEFAULT_GUARD) -> bool:
    """Whether the m-th power of the axes ideal equals the intersection of the
    m-th powers of its codimension-2 primes with the 2m-th power of the
    irrelevant ideal, both sides computed by generator expansion."""
    _check_grid_cell(n, m)
    guard.check(n=n, m=m)
    left = _axes_power(n, m)
    full = frozenset(range(1, n + 1))
    pieces = [
        prime_power_ideal(PrimeSupport(n, full - {i}), m) for i in range(1, n + 1)
    ]
    pieces.append(prime_power_ideal(PrimeSupport(n, full), 2 * m))
    return left == intersect_all(pieces)


def check_symbolic_lemma(n: int, m: int, guard: ResourceGuard = DEFAULT_GUARD) -> bool:
    """Whether the inequality test for the m-th symbolic power agrees with the
    explicit prime-power intersection on every monomial of degree <= 2m+2."""
    _check_grid_cell(n, m)
    guard.check(n=n, m=m, degree=2 * m + 2)
    sym = _axes_symbolic(n, m)
    if any(degree(g) > 2 * m for g in sym.gens):
        raise InternalError(
            f"symbolic power ({n},{m}) has a generator above degree {2 * m}; "
            "enumeration bound is unsafe"
        )
    vectors = list(iter_vectors(n, 2 * m + 2))
    explicit = _vectorized.any_divides_batch(sym.gens, vectors, n)
    return all(
        member_symbolic_fast(vec, m) == verdict for vec, verdict in zip(vectors, explicit)
    )


def check_engine_agreement(n: int, m: int, guard: ResourceGuard = DEFAULT_GUARD) -> bool:
    """Whether the inequality, generator-expansion, and brute-force engines
    give identical verdicts on every monomial of degree <= 2m+3."""
    _check_grid_cell(n, m)
    guard.check(n=n, m=m, degree=2 * m + 3)
    base = axes_ideal(n)
    ordinary = _axes_power(n, m)
    sym = _axes_symbolic(n, m)
    vectors = list(iter_vectors(n, 2 * m + 3))
    core_ordinary = _vectorized.any_divides_batch(ordinary.gens, vectors, n)
    core_symbolic = _vectorized.any_divides_batch(sym.gens, vectors, n)
    for vec, via_power, via_primes in zip(vectors, core_ordinary, core_symbolic):
        if member_ordinary_fast(vec, m) != via_power:
            return False
        if member_bruteforce(vec, base, m) != via_power:
            return False
        if member_symbolic_fast(vec, m) != via_primes:
            return False
    return True


def threshold_with_witness(
    n: int, m: int, guard: ResourceGuard = DEFAULT_GUARD
) -> tuple[int, Vector | None]:
    """Smallest d with symbolic power d inside ordinary power m, plus a
    monomial separating d_min - 1 from the ordinary power (None if d_min = m).

    Containment is monotone in d, so the ascending scan returns the minimum;
    the scan is capped by the guaranteed bound and overrunning it is an
    internal invariant violation.
    """
    _check_grid_cell(n, m)
    guard.check(n=n, m=m)
    ordinary = _axes_power(n, m)
    limit = containment_bound(n, m)
    witness: Vector | None = None
    for d in range(m, limit + 1):
        sym = _axes_symbolic(n, d)
        verdicts = _vectorized.any_divides_batch(ordinary.gens, sym.gens, n)
        if all(verdicts):
            return d, witness
        witness = sym.gens[verdicts.index(False)]
    raise InternalError(
        f"no d <= {limit} gave containment for (n={n}, m={m}); guaranteed bound violated"
    )


def containment_threshold(n: int, m: int, guard: ResourceGuard = DEFAULT_GUARD) -> int:
    """Smallest d >= 1 with the d-th symbolic power inside the m-th power."""
    return threshold_with_witness(n, m, guard)[0]


@dataclass(frozen=True)
class SurveyRow:
    """One survey cell; construction re-asserts m <= d_min <= paper_bound <= els_bound."""

    n: int
    m: int
    d_min: int
    paper_bound: int
    els_bound: int
    witness: Vector | None = None

    def __post_init__(self) -> None:
        if not self.m <= self.d_min <= self.paper_bound <= self.els_bound:
            raise InternalError(
                f"survey row ({self.n},{self.m}) violates the threshold sandwich: "
                f"m={self.m}, d_min={self.d_min}, paper_bound={self.paper_bound}, "
                f"els_bound={self.els_bound}"
            )
        if (self.witness is None) != (self.d_min == self.m):
            raise InternalError(
                f"survey row ({self.n},{self.m}) must carry a witness exactly when d_min > m"
            )

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "d_min": self.d_min,
            "paper_bound": self.paper_bound,
            "els_bound": self.els_bound,
            "witness": list(self.witness) if self.witness is not None else None,
        }


def _survey_cell(cell: tuple[int, int], guard: ResourceGuard) -> SurveyRow:
    n, m = cell
    d_min, witness = threshold_with_witness(n, m, guard)
    return SurveyRow(
        n=n,
        m=m,
        d_min=d_min,
        paper_bound=containment_bound(n, m),
        els_bound=2 * m,
        witness=witness,
    )


def _resolve_threads(threads: int | None) -> int:
    if threads is None:
        env = os.environ.get(THREADS_ENV_VAR)
        if env is not None:
            try:
                threads = int(env)
            except ValueError:
                raise InputError(f"{THREADS_ENV_VAR}={env!r} is not an integer") from None
        else:
            threads = min(4, os.cpu_count() or 1)
    if threads < 1:
        raise InputError(f"thread count must be >= 1, got {threads}")
    return threads


def survey(
    n_values,
    m_values,
    guard: ResourceGuard = DEFAULT_GUARD,
    threads: int | None = None,
) -> list[SurveyRow]:
    """Containment thresholds over the (n, m) grid, rows in lexicographic order.

    Cells are independent pure computations; they may run on a thread pool
    (size from `threads` or the AXES_IDEALS_THREADS variable) and the output
    is identical either way.
    """
    cells = sorted({(n, m) for n in n_values for m in m_values})
    if not cells:
        raise InputError("survey needs at least one (n, m) cell")
    for n, m in cells:
        _check_grid_cell(n, m)
        guard.check(n=n, m=m)
    workers = min(_resolve_threads(threads), len(cells))
    if workers == 1:
        return [_survey_cell(cell, guard) for cell in cells]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(lambda c: _survey_cell(c, guard), cells))


SURVEY_CSV_HEADER = ("n", "m", "d_min", "paper_bound", "els_bound", "witness")


def survey_csv(rows: list[SurveyRow]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(SURVEY_CSV_HEADER)
    for row in rows:
        witness = format_vector(row.witness) if row.witness is not None else ""
        writer.writerow([row.n, row.m, row.d_min, row.paper_bound, row.els_bound, witness])
    return buf.getvalue()


def survey_json(rows: list[SurveyRow]) -> str:
    return json.dumps([row.to_dict() for row in rows], indent=2) + "\n"
