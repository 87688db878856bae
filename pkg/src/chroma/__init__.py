"""Crystallographic restrictions for colour lattices with modular sublattices."""
from .colouring import ColourLattice, colour_of, in_sublattice, orbit_colours
from .exactmat import (
    DimensionMismatch,
    IntMatrix,
    col_sums,
    det,
    kron,
    mat_mul,
    mat_pow,
    matrix_order,
)
from .oracle import (
    BoxSpec,
    BudgetExceeded,
    agreement_report,
    check_invariance,
    find_violation,
    valid_moduli_bruteforce,
)
from .restriction import (
    UNBOUNDED,
    ModularSystem,
    RestrictionResult,
    closed_form_N,
    derive_system,
    min_dimension,
    render_equations,
    restriction_number,
    restriction_table,
)
from .rotrep import (
    CrystallographicRestriction,
    RotationRep,
    basis_images,
    companion_prime_power,
    factorize,
    hermann_allowed,
    prime_power_entry_closed_form,
    rep,
    rep_2d,
    totient,
)

__version__ = "0.1.0"
