"""Exception hierarchy shared by the library, the CLI, and the HTTP service.

Each class maps to one CLI exit code / HTTP status, so callers can branch
on the kind of failure without parsing messages.
"""


class AxesIdealsError(Exception):
    """Base class for all errors raised by this package."""


class InputError(AxesIdealsError):
    """Malformed or inconsistent input: bad syntax, dimension mismatch,
    violated precondition (CLI exit 2, HTTP 400)."""


class CertificateError(InputError):
    """Structurally invalid factorization certificate (out-of-range pair,
    unordered indices).  Distinct from a certificate that merely fails to
    verify."""


class GuardRefusal(AxesIdealsError):
    """The requested computation exceeds the configured resource limits
    (CLI exit 3, HTTP 413)."""


class InternalError(AxesIdealsError):
    """A mathematical invariant the library guarantees was found violated.
    Always a bug, never a caller mistake (CLI exit 4, HTTP 500)."""
