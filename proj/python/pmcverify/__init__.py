"""Verification of pmc surfaces in M^n(c) x R."""

from ._core import (
    PmcError,
    Surface,
    __version__,
    catalog,
    check_gate,
    evaluate_identity,
    make_surface,
    run_cli,
    run_suite,
)

__all__ = [
    "PmcError",
    "Surface",
    "__version__",
    "catalog",
    "check_gate",
    "evaluate_identity",
    "make_surface",
    "run_cli",
    "run_suite",
]
