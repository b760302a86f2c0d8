"""Fast paths for the coordinate-axes ideal in n variables, generated by all
products x_i*x_j of two distinct variables.

Membership in its ordinary and symbolic powers reduces to linear
inequalities on the exponent vector a with total degree A = sum(a):

* symbolic power m:  A - a_i >= m for every i   ("codim" family)
* ordinary power m:  the codim family plus A >= 2m  ("degree" inequality)

`greedy_certificate` turns an affirmative ordinary-membership verdict into
an explicit factorization into m quadric generators, checkable by
`verify_certificate` without trusting the construction.
"""
from __future__ import annotations

import json
from dataclasses import dataclass

from .errors import CertificateError, InputError, InternalError
from .ideals import MonomialIdeal
from .monomials import Vector, as_vector

__all__ = [
    "axes_ideal",
    "member_ordinary_fast",
    "member_symbolic_fast",
    "ordinary_violation",
    "symbolic_violation",
    "containment_bound",
    "normalize",
    "FactorizationCertificate",
    "greedy_certificate",
    "verify_certificate",
]


def _check_n(n: int) -> int:
    if not isinstance(n, int) or n < 2:
        raise InputError(f"axes ideal needs at least 2 variables, got {n!r}")
    return n


def _check_vector(a) -> Vector:
    vec = as_vector(a)
    if len(vec) < 2:
        raise InputError("axes-ideal membership needs a vector with at least 2 entries")
    return vec


def _check_m(m: int) -> int:
    if not isinstance(m, int) or m < 1:
        raise InputError(f"power must be a positive integer, got {m!r}")
    return m


def axes_ideal(n: int) -> MonomialIdeal:
    """The ideal of the union of the n coordinate axes: all x_i*x_j, i < j."""
    _check_n(n)
    gens = []
    for i in range(n):
        for j in range(i + 1, n):
            vec = [0] * n
            vec[i] = vec[j] = 1
            gens.append(tuple(vec))
    return MonomialIdeal(n, tuple(gens))


def member_symbolic_fast(a, m: int) -> bool:
    """Membership in the m-th symbolic power, in O(n) time."""
    vec = _check_vector(a)
    _check_m(m)
    total = sum(vec)
    return total - max(vec) >= m


def member_ordinary_fast(a, m: int) -> bool:
    """Membership in the m-th ordinary power, in O(n) time."""
    vec = _check_vector(a)
    _check_m(m)
    total = sum(vec)
    return total - max(vec) >= m and total >= 2 * m


def symbolic_violation(a, m: int) -> str | None:
    """First violated codim inequality, or None when a is a member."""
    vec = _check_vector(a)
    _check_m(m)
    total = sum(vec)
    for i, e in enumerate(vec, start=1):
        if total - e < m:
            return f"codim-inequality {i}: degree sum without entry {i} is {total - e} < {m}"
    return None


def ordinary_violation(a, m: int) -> str | None:
    """First violated inequality (codim family first, then degree), or None."""
    vec = _check_vector(a)
    _check_m(m)
    violation = symbolic_violation(vec, m)
    if violation is not None:
        return violation
    total = sum(vec)
    if total < 2 * m:
        return f"degree-inequality: total degree {total} < {2 * m}"
    return None


def containment_bound(n: int, m: int) -> int:
    """ceil((2 - 2/n) * m), evaluated exactly as ceil((2n-2)m / n)."""
    _check_n(n)
    _check_m(m)
    num = (2 * n - 2) * m
    return -(-num // n)


def normalize(a, m: int) -> Vector:
    """Shrink a member of the m-th ordinary power to total degree exactly 2m.

    Repeatedly decrements the maximal entry (ties: smallest index); each step
    preserves both inequality families, so the result is still a member.
    """
    vec = _check_vector(a)
    if not member_ordinary_fast(vec, m):
        raise InputError(f"{list(vec)} is not in the ordinary power m={m}; nothing to normalize")
    work = list(vec)
    total = sum(work)
    target = 2 * m
    while total > target:
        work[work.index(max(work))] -= 1
        total -= 1
    return tuple(work)


@dataclass(frozen=True)
class FactorizationCertificate:
    """Witness that x^a lies in the m-th power of the axes ideal: m index
    pairs (i, j), i < j, whose quadrics multiply to a divisor of x^a.

    Construction validates each pair structurally (1 <= i < j <= n); a pair
    count differing from m is representable but fails verification.
    """

    n: int
    m: int
    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        if not isinstance(self.n, int) or self.n < 2:
            raise CertificateError(f"certificate needs n >= 2, got {self.n!r}")
        if not isinstance(self.m, int) or self.m < 0:
            raise CertificateError(f"certificate power must be a non-negative integer, got {self.m!r}")
        normalized = []
        for pair in self.pairs:
            if len(tuple(pair)) != 2:
                raise CertificateError(f"certificate pair {pair!r} is not an index pair")
            i, j = pair
            if not (isinstance(i, int) and isinstance(j, int)):
                raise CertificateError(f"certificate pair {pair!r} has non-integer indices")
            if not (1 <= i < j <= self.n):
                raise CertificateError(f"certificate pair ({i},{j}) violates 1 <= i < j <= {self.n}")
            normalized.append((i, j))
        object.__setattr__(self, "pairs", tuple(normalized))

    def exponent_sum(self) -> Vector:
        """Exponent vector of the product of the certificate's quadrics."""
        total = [0] * self.n
        for i, j in self.pairs:
            total[i - 1] += 1
            total[j - 1] += 1
        return tuple(total)

    def to_dict(self) -> dict:
        return {"n": self.n, "m": self.m, "pairs": [list(p) for p in self.pairs]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict) -> "FactorizationCertificate":
        if not isinstance(data, dict):
            raise CertificateError("certificate must be a JSON object")
        missing = {"n", "m", "pairs"} - set(data)
        if missing:
            raise CertificateError(f"certificate is missing fields: {sorted(missing)}")
        pairs = data["pairs"]
        if not isinstance(pairs, list):
            raise CertificateError("certificate pairs must be a list")
        return cls(data["n"], data["m"], tuple(tuple(p) for p in pairs))

    @classmethod
    def from_json(cls, text: str) -> "FactorizationCertificate":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise CertificateError(f"certificate is not valid JSON: {exc}") from None
        return cls.from_dict(data)


def _top_two_indices(work: list[int]) -> tuple[int, int]:
    # two largest entries, ties broken by smallest index
    first = work.index(max(work))
    rest_best = -1
    for idx, val in enumerate(work):
        if idx == first:
            continue
        if rest_best < 0 or val > work[rest_best]:
            rest_best = idx
    return first, rest_best


def greedy_certificate(a, m: int) -> FactorizationCertificate:
    """Factor a member of the m-th ordinary power into m quadric generators.

    Normalizes to total degree 2m, then loops: once all entries are equal,
    the remaining power factors as a fixed pairing (n even) or as the cycle
    (1,2),(2,3),...,(n-1,n),(1,n) with half multiplicity (n odd, where the
    shared entry is necessarily even); otherwise it strips one quadric off
    the two largest entries and continues with m-1.  Total degree 2m is an
    invariant of the loop, so normalization happens only once.
    """
    vec = _check_vector(a)
    _check_m(m)
    if not member_ordinary_fast(vec, m):
        raise InputError(
            f"{list(vec)} is not in the ordinary power m={m}: {ordinary_violation(vec, m)}"
        )
    n = len(vec)
    work = list(normalize(vec, m))
    pairs: list[tuple[int, int]] = []
    remaining = m
    while remaining > 0:
        value = max(work)
        if min(work) == value:
            if n % 2 == 0:
                for k in range(0, n, 2):
                    pairs.extend([(k + 1, k + 2)] * value)
            else:
                if value % 2:
                    raise InternalError(
                        "equal-exponent case with odd shared entry cannot arise at total degree 2m"
                    )
                half = value // 2
                cycle = [(k, k + 1) for k in range(1, n)] + [(1, n)]
                for pair in cycle:
                    pairs.extend([pair] * half)
            remaining = 0
            break
        i, j = _top_two_indices(work)
        if work[i] == 0 or work[j] == 0:
            raise InternalError("greedy step selected an exhausted entry; membership invariant broken")
        work[i] -= 1
        work[j] -= 1
        pairs.append((min(i, j) + 1, max(i, j) + 1))
        remaining -= 1
    if len(pairs) != m:
        raise InternalError(f"greedy factorization emitted {len(pairs)} pairs, expected {m}")
    return FactorizationCertificate(n, m, tuple(pairs))


def verify_certificate(cert: FactorizationCertificate, a) -> bool:
    """Independent check: exactly cert.m pairs and their product divides x^a."""
    vec = as_vector(a)
    if len(vec) != cert.n:
        raise InputError(f"dimension mismatch: certificate n={cert.n}, vector has {len(vec)} entries")
    if len(cert.pairs) != cert.m:
        return False
    return all(used <= have for used, have in zip(cert.exponent_sum(), vec))
