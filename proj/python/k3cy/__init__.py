"""Verification toolkit for isotrivial elliptic K3 families and the
Calabi-Yau threefolds built from them.

Everything lives in the compiled extension; this package re-exports it.
"""

from k3cy._core import (  # noqa: F401
    DomainError,
    NumericError,
    ParseError,
    VerifyError,
    analyze_fibration,
    chi_fixed_locus,
    curve_eigenvalues,
    cy_hodge,
    disc_forms_opposite,
    discriminant_group,
    genus,
    indicial_exponents,
    intermediate_hodge,
    k3_complement_compatible,
    local_monodromy_class,
    mum_absent,
    named_lattice,
    numeric_monodromy,
    numeric_period,
    pf_abc,
    pf_certificate_ok,
    scenario_names,
    solve_eigenspace_dims,
    verify_family,
    verify_quotient,
)

__all__ = [
    "DomainError",
    "NumericError",
    "ParseError",
    "VerifyError",
    "analyze_fibration",
    "chi_fixed_locus",
    "curve_eigenvalues",
    "cy_hodge",
    "disc_forms_opposite",
    "discriminant_group",
    "genus",
    "indicial_exponents",
    "intermediate_hodge",
    "k3_complement_compatible",
    "local_monodromy_class",
    "mum_absent",
    "named_lattice",
    "numeric_monodromy",
    "numeric_period",
    "pf_abc",
    "pf_certificate_ok",
    "scenario_names",
    "solve_eigenspace_dims",
    "verify_family",
    "verify_quotient",
]
