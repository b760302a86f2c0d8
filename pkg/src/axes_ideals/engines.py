"""Membership engine dispatch shared by the CLI and the HTTP service.

Three engines answer the same question and must agree:

* fast:   inequality test; only defined for the coordinate-axes ideal
* core:   expand the (symbolic) power's generators and test divisibility
* oracle: brute-force search for a multiset of generators (ordinary only)
"""
from __future__ import annotations

from .axes import (
    greedy_certificate,
    member_ordinary_fast,
    member_symbolic_fast,
    ordinary_violation,
    symbolic_violation,
)
from .errors import InputError
from .ideals import MonomialIdeal, minimal_primes, prime_power_member, symbolic_power
from .monomials import Vector, divides, format_product, format_vector
from .oracle import factor_witness

ENGINES = ("fast", "core", "oracle")
MODES = ("ordinary", "symbolic")


def resolve_engine(engine: str | None, mode: str, is_axes: bool) -> str:
    """Default and validate the engine choice for an ideal source."""
    if mode not in MODES:
        raise InputError(f"unknown mode {mode!r}")
    if engine is None:
        engine = "fast" if is_axes else "core"
    if engine not in ENGINES:
        raise InputError(f"unknown engine {engine!r}")
    if engine == "fast" and not is_axes:
        raise InputError("engine 'fast' needs an axes ideal; file-loaded ideals have no inequality form")
    if engine == "oracle" and mode == "symbolic":
        raise InputError("engine 'oracle' tests ordinary powers only")
    return engine


def membership_verdict(ideal: MonomialIdeal, vec: Vector, m: int, mode: str, engine: str) -> tuple[bool, str]:
    """Verdict plus a human-readable explanation (violation or witness)."""
    if engine == "fast":
        if mode == "ordinary":
            violation = ordinary_violation(vec, m)
            if violation is not None:
                return False, violation
            cert = greedy_certificate(vec, m)
            factors = "*".join(f"(x{i}*x{j})" for i, j in cert.pairs) or "1"
            return True, f"witness factorization: {factors}"
        violation = symbolic_violation(vec, m)
        if violation is not None:
            return False, violation
        return True, "all codim-inequalities hold"

    if engine == "oracle":
        witness = factor_witness(vec, ideal, m)
        if witness is None:
            return False, f"no multiset of {m} generators divides the monomial"
        return True, "witness generators: " + ", ".join(format_product(g) for g in witness)

    if engine != "core":
        raise InputError(f"unknown engine {engine!r}")
    if mode == "ordinary":
        target = ideal.power(m)
        if target.member(vec):
            gen = next(g for g in target.gens if divides(g, vec))
            return True, f"divisible by power generator {format_vector(gen)}"
        return False, f"no generator of the {m}-th power divides the monomial"
    target = symbolic_power(ideal, m)
    if target.member(vec):
        gen = next(g for g in target.gens if divides(g, vec))
        return True, f"divisible by symbolic-power generator {format_vector(gen)}"
    for prime in minimal_primes(ideal):
        if not prime_power_member(vec, prime, m):
            idxs = ",".join(str(i) for i in prime.indices)
            return False, f"exponent sum over support {{{idxs}}} is below {m}"
    return False, "not a member"
