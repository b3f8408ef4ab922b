"""Posets with a unary operation, assigned lambda-lattices and their identities."""

import os as _os
import pathlib as _pathlib

_bundled = _pathlib.Path(__file__).parent / "fixtures"
if _bundled.is_dir():
    _os.environ.setdefault("SOMLAT_FIXTURES", str(_bundled))

from ._core import (
    CapExceeded,
    Error,
    FixtureError,
    FormatError,
    LambdaLattice,
    Poset,
    StructureError,
    SyntaxError,
    assignment_count,
    assignments,
    check_axioms,
    classify,
    congruence_properties,
    congruences,
    fixture_names,
    holds,
    induced_poset,
    is_assigned_to,
    load_fixture,
    parse_lambda,
    parse_poset,
    sample_assignments,
    verify_paper,
)

__all__ = [
    "CapExceeded",
    "Error",
    "FixtureError",
    "FormatError",
    "LambdaLattice",
    "Poset",
    "StructureError",
    "SyntaxError",
    "assignment_count",
    "assignments",
    "check_axioms",
    "classify",
    "congruence_properties",
    "congruences",
    "fixture_names",
    "holds",
    "induced_poset",
    "is_assigned_to",
    "load_fixture",
    "parse_lambda",
    "parse_poset",
    "sample_assignments",
    "verify_paper",
]
