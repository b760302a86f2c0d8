"""Command-line front end.

Thin client over the core package: parses arguments, dispatches to library
calls, renders stable text/CSV/JSON, and maps outcomes to exit codes:

    0  affirmative answer / success
    1  negative mathematical answer
    2  usage or input error
    3  resource-guard refusal
    4  internal invariant violation
"""
from __future__ import annotations

import functools
import sys
from dataclasses import dataclass

import click

from .axes import (
    FactorizationCertificate,
    axes_ideal,
    greedy_certificate,
    member_ordinary_fast,
    ordinary_violation,
    verify_certificate,
)
from .engines import membership_verdict, resolve_engine
from .errors import GuardRefusal, InputError, InternalError
from .ideals import (
    MonomialIdeal,
    format_ideal,
    intersect_all,
    load_ideal,
    minimal_primes,
    symbolic_power,
)
from .monomials import format_vector, parse_monomial
from .oracle import (
    DEFAULT_GUARD,
    ResourceGuard,
    check_engine_agreement,
    check_primary_decomposition,
    check_symbolic_lemma,
    survey,
    survey_csv,
    survey_json,
)

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2
EXIT_GUARD = 3
EXIT_INTERNAL = 4


@dataclass
class CommandResult:
    exit_code: int
    payload: str = ""


def _mapped_errors(fn):
    """Convert library exceptions into the documented exit codes."""

    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except InputError as exc:
            click.echo(f"error: {exc}", err=True)
            sys.exit(EXIT_USAGE)
        except GuardRefusal as exc:
            click.echo(f"refused: {exc}", err=True)
            sys.exit(EXIT_GUARD)
        except InternalError as exc:
            click.echo(f"internal error: {exc}", err=True)
            sys.exit(EXIT_INTERNAL)

    return wrapper


def _finish(result: CommandResult, out: str | None = None) -> None:
    if result.payload:
        if out:
            with open(out, "w", encoding="utf-8") as fh:
                fh.write(result.payload)
        else:
            sys.stdout.write(result.payload)
            if not result.payload.endswith("\n"):
                sys.stdout.write("\n")
    sys.exit(result.exit_code)


def _resolve_source(axes: int | None, ideal_path: str | None) -> tuple[MonomialIdeal, bool]:
    if (axes is None) == (ideal_path is None):
        raise click.UsageError("provide exactly one ideal source: --axes N or --ideal FILE")
    if axes is not None:
        return axes_ideal(axes), True
    return load_ideal(ideal_path), False


def _parse_int_list(text: str, what: str) -> list[int]:
    """`3`, `3,4,5`, `1..6`, or any comma mix of the two."""
    values: set[int] = set()
    for token in text.split(","):
        token = token.strip()
        try:
            if ".." in token:
                lo, hi = token.split("..", 1)
                values.update(range(int(lo), int(hi) + 1))
            else:
                values.add(int(token))
        except ValueError:
            raise click.UsageError(f"bad {what} list {text!r}: token {token!r}") from None
    if not values:
        raise click.UsageError(f"empty {what} list")
    return sorted(values)


def _make_guard(max_n: int | None, max_m: int | None, max_degree: int | None) -> ResourceGuard:
    return ResourceGuard(
        max_n=max_n if max_n is not None else DEFAULT_GUARD.max_n,
        max_m=max_m if max_m is not None else DEFAULT_GUARD.max_m,
        max_degree=max_degree if max_degree is not None else DEFAULT_GUARD.max_degree,
    )


def _guard_options(fn):
    fn = click.option("--max-n", type=int, default=None, help="Resource-guard override for n.")(fn)
    fn = click.option("--max-m", type=int, default=None, help="Resource-guard override for m.")(fn)
    fn = click.option(
        "--max-degree", type=int, default=None, help="Resource-guard override for enumeration degree."
    )(fn)
    return fn


def _source_options(fn):
    fn = click.option("--axes", type=int, default=None, metavar="N",
                      help="Use the coordinate-axes ideal in N variables.")(fn)
    fn = click.option("--ideal", "ideal_path", type=click.Path(exists=True, dir_okay=False),
                      default=None, help="Load the ideal from a file.")(fn)
    return fn


@click.group()
@click.version_option(package_name="axes-ideals")
def cli() -> None:
    """Exact monomial-ideal arithmetic for coordinate-axes ideals."""


@cli.command()
@click.argument("monomial")
@_source_options
@click.option("-m", "--power", "m", type=int, required=True, help="Power to test against.")
@click.option("--mode", type=click.Choice(["ordinary", "symbolic"]), default="ordinary",
              show_default=True)
@click.option("--engine", type=click.Choice(["fast", "core", "oracle"]), default=None,
              help="fast: inequality test (axes only); core: generator expansion; "
                   "oracle: brute-force multiset search.  [default: fast for --axes, core otherwise]")
@click.option("--explain", is_flag=True, help="Print the violated inequality or a witness.")
@_mapped_errors
def member(monomial: str, axes: int | None, ideal_path: str | None, m: int, mode: str,
           engine: str | None, explain: bool) -> None:
    """Test membership of MONOMIAL in the m-th ordinary or symbolic power."""
    ideal, is_axes = _resolve_source(axes, ideal_path)
    engine = resolve_engine(engine, mode, is_axes)
    vec = parse_monomial(monomial, ideal.n)
    verdict, explanation = membership_verdict(ideal, vec, m, mode, engine)
    lines = ["true" if verdict else "false"]
    if explain and explanation:
        lines.append(explanation)
    _finish(CommandResult(EXIT_OK if verdict else EXIT_NEGATIVE, "\n".join(lines) + "\n"))


@cli.command()
@click.argument("monomial")
@click.option("--axes", "n", type=int, required=True, metavar="N")
@click.option("-m", "--power", "m", type=int, required=True)
@click.option("--out", type=click.Path(), default=None, help="Write the certificate here.")
@_mapped_errors
def certify(monomial: str, n: int, m: int, out: str | None) -> None:
    """Emit a JSON factorization certificate for MONOMIAL in the m-th power."""
    vec = parse_monomial(monomial, n)
    if not member_ordinary_fast(vec, m):
        click.echo(f"not a member: {ordinary_violation(vec, m)}", err=True)
        sys.exit(EXIT_NEGATIVE)
    cert = greedy_certificate(vec, m)
    _finish(CommandResult(EXIT_OK, cert.to_json() + "\n"), out)


@cli.command()
@click.argument("monomial")
@click.option("--cert", "cert_path", type=click.Path(exists=True, dir_okay=False), required=True,
              help="JSON certificate file to check.")
@_mapped_errors
def verify(monomial: str, cert_path: str) -> None:
    """Check a factorization certificate against MONOMIAL."""
    with open(cert_path, encoding="utf-8") as fh:
        cert = FactorizationCertificate.from_json(fh.read())
    vec = parse_monomial(monomial, cert.n)
    if verify_certificate(cert, vec):
        _finish(CommandResult(EXIT_OK, "valid\n"))
    _finish(CommandResult(EXIT_NEGATIVE, "invalid: certificate product does not divide the monomial\n"))


@cli.command()
@_source_options
@click.option("-m", "--power", "m", type=int, required=True)
@click.option("--out", type=click.Path(), default=None)
@_mapped_errors
def power(axes: int | None, ideal_path: str | None, m: int, out: str | None) -> None:
    """Print the m-th ordinary power in the ideal file format."""
    ideal, _ = _resolve_source(axes, ideal_path)
    _finish(CommandResult(EXIT_OK, format_ideal(ideal.power(m))), out)


@cli.command()
@_source_options
@click.option("-k", "--index", "k", type=int, required=True)
@click.option("--out", type=click.Path(), default=None)
@_mapped_errors
def symbolic(axes: int | None, ideal_path: str | None, k: int, out: str | None) -> None:
    """Print the k-th symbolic power (squarefree ideals only)."""
    ideal, _ = _resolve_source(axes, ideal_path)
    _finish(CommandResult(EXIT_OK, format_ideal(symbolic_power(ideal, k))), out)


@cli.command()
@click.argument("ideal_files", nargs=-1, type=click.Path(exists=True, dir_okay=False))
@click.option("--axes", type=int, default=None, metavar="N",
              help="Include the coordinate-axes ideal in N variables as an operand.")
@click.option("--out", type=click.Path(), default=None)
@_mapped_errors
def intersect(ideal_files: tuple[str, ...], axes: int | None, out: str | None) -> None:
    """Intersect two or more ideals (files and/or --axes)."""
    operands: list[MonomialIdeal] = []
    if axes is not None:
        operands.append(axes_ideal(axes))
    operands.extend(load_ideal(path) for path in ideal_files)
    if len(operands) < 2:
        raise click.UsageError("intersect needs at least two operands")
    _finish(CommandResult(EXIT_OK, format_ideal(intersect_all(operands))), out)


@cli.command()
@click.option("--axes", type=int, default=None, metavar="N",
              help="Compare powers of the coordinate-axes ideal in N variables.")
@click.option("-m", "--power", "m", type=int, default=None,
              help="With --axes: outer ideal is the m-th ordinary power.")
@click.option("-d", "--symbolic", "d", type=int, default=None,
              help="With --axes: inner ideal is the d-th symbolic power.")
@click.option("--outer", "outer_path", type=click.Path(exists=True, dir_okay=False), default=None)
@click.option("--inner", "inner_path", type=click.Path(exists=True, dir_okay=False), default=None)
@click.option("--explain", is_flag=True)
@_mapped_errors
def contains(axes: int | None, m: int | None, d: int | None,
             outer_path: str | None, inner_path: str | None, explain: bool) -> None:
    """Test ideal containment: outer contains inner."""
    if axes is not None:
        if m is None or d is None:
            raise click.UsageError("--axes containment needs both -m (ordinary) and -d (symbolic)")
        base = axes_ideal(axes)
        outer = base.power(m)
        inner = symbolic_power(base, d)
    elif outer_path is not None and inner_path is not None:
        outer = load_ideal(outer_path)
        inner = load_ideal(inner_path)
    else:
        raise click.UsageError("provide --axes with -m/-d, or both --outer and --inner files")
    if outer.contains(inner):
        _finish(CommandResult(EXIT_OK, "true\n"))
    lines = ["false"]
    if explain:
        witness = next(g for g in inner.gens if not outer.member(g))
        lines.append(f"witness generator outside the outer ideal: {format_vector(witness)}")
    _finish(CommandResult(EXIT_NEGATIVE, "\n".join(lines) + "\n"))


@cli.command()
@_source_options
@click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="text",
              show_default=True)
@click.option("--out", type=click.Path(), default=None)
@_mapped_errors
def primes(axes: int | None, ideal_path: str | None, fmt: str, out: str | None) -> None:
    """List the minimal primes of a squarefree ideal as variable supports."""
    ideal, _ = _resolve_source(axes, ideal_path)
    supports = minimal_primes(ideal)
    if fmt == "json":
        import json as _json

        payload = _json.dumps([list(p.indices) for p in supports]) + "\n"
    else:
        payload = "".join("{" + ",".join(str(i) for i in p.indices) + "}\n" for p in supports)
    _finish(CommandResult(EXIT_OK, payload), out)


@cli.command(name="survey")
@click.option("-n", "--n-values", "n_text", required=True, metavar="LIST",
              help="Variable counts, e.g. 3,4 or 3..6.")
@click.option("-m", "--m-values", "m_text", required=True, metavar="LIST",
              help="Powers, e.g. 1,2 or 1..6.")
@click.option("--format", "fmt", type=click.Choice(["csv", "json", "text"]), default="csv",
              show_default=True)
@click.option("--out", type=click.Path(), default=None)
@_guard_options
@_mapped_errors
def survey_cmd(n_text: str, m_text: str, fmt: str, out: str | None,
               max_n: int | None, max_m: int | None, max_degree: int | None) -> None:
    """Tabulate containment thresholds d_min against both bounds over a grid."""
    guard = _make_guard(max_n, max_m, max_degree)
    rows = survey(_parse_int_list(n_text, "n"), _parse_int_list(m_text, "m"), guard)
    if fmt == "csv":
        payload = survey_csv(rows)
    elif fmt == "json":
        payload = survey_json(rows)
    else:
        payload = "".join(
            f"n={r.n} m={r.m} d_min={r.d_min} paper_bound={r.paper_bound} "
            f"els_bound={r.els_bound} witness="
            + (format_vector(r.witness) if r.witness is not None else "-")
            + "\n"
            for r in rows
        )
    _finish(CommandResult(EXIT_OK, payload), out)


_SUITES = {
    "decomposition": (("decomposition", check_primary_decomposition),),
    "symbolic": (("symbolic", check_symbolic_lemma),),
    "engines": (("engines", check_engine_agreement),),
    "all": (
        ("decomposition", check_primary_decomposition),
        ("symbolic", check_symbolic_lemma),
        ("engines", check_engine_agreement),
    ),
}


@cli.command()
@click.option("--suite", type=click.Choice(sorted(_SUITES)), default="all", show_default=True)
@click.option("-n", "--n-values", "n_text", required=True, metavar="LIST")
@click.option("-m", "--m-values", "m_text", required=True, metavar="LIST")
@_guard_options
@_mapped_errors
def check(suite: str, n_text: str, m_text: str,
          max_n: int | None, max_m: int | None, max_degree: int | None) -> None:
    """Run consistency checks cell by cell over an (n, m) grid."""
    guard = _make_guard(max_n, max_m, max_degree)
    n_values = _parse_int_list(n_text, "n")
    m_values = _parse_int_list(m_text, "m")
    failures = 0
    lines = []
    for name, fn in _SUITES[suite]:
        for n in n_values:
            for m in m_values:
                ok = fn(n, m, guard)
                failures += 0 if ok else 1
                lines.append(f"{name} n={n} m={m} {'pass' if ok else 'FAIL'}")
    total = len(lines)
    lines.append(f"{total - failures}/{total} checks passed")
    _finish(CommandResult(EXIT_OK if failures == 0 else EXIT_NEGATIVE, "\n".join(lines) + "\n"))


@cli.command()
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", default=8000, show_default=True, type=int)
def serve(host: str, port: int) -> None:
    """Run the HTTP service (same operations over JSON)."""
    import uvicorn

    from .service.app import app

    uvicorn.run(app, host=host, port=port)


def main() -> None:
    cli()


if __name__ == "__main__":
    main()
