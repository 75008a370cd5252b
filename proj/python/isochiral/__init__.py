"""Wigner-function, gauge-frame, discrete-symmetry and radial machinery for a
Dirac doublet in an embedded-Abelian monopole field."""

from ._isochiral import (  # noqa: F401
    allowed_j_values,
    allowed_j_values_bispinor,
    basis_change,
    big_d,
    boundary_value,
    check_pauli,
    chiral_u,
    classify_observable,
    composite_gibbs,
    expectation_n,
    gibbs_between,
    lowering_annihilation_residual,
    n_eigenvalue,
    n_iso_factor,
    overlap,
    phi_jm,
    recursion_residuals,
    rotation_from_gibbs,
    selection_vanishes,
    small_d,
    solve_radial,
    spinor_gauge_matrix,
    verify_all,
)

__all__ = [name for name in dir() if not name.startswith("_")]
