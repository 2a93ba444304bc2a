"""Residue arithmetic: congruences, residue classes and residues of powers."""
from .classes import (
    LeastResidues,
    ResidueClass,
    add,
    classify,
    eval_poly,
    least_residues,
    mul,
    power,
    project,
    scalar_mul,
    sub,
)
from .errors import (
    HypothesisError,
    ModulusMismatchError,
    NotPrimeError,
    ProofError,
    ResidueError,
    ScheduleError,
)
from .integers import (
    Modulus,
    congruent,
    divide_with_remainder,
    gcd,
    is_prime,
    totient,
    totient_by_count,
)
from .powers import (
    OrderResult,
    PeriodStructure,
    ProofStep,
    ProofTrace,
    binomial_proof_trace,
    check_order_divides,
    corollary_ap_minus_1,
    fermat_euler_check,
    multiplicative_order,
    period_structure,
    power_sequence,
)
from .render import LineRenderSpec, render_svg, render_text
from .systems import (
    NumberSystem,
    ResidueSystem,
    affine_image,
    affine_map,
    canonical_complete_system,
    fold_product,
    is_complete_system,
    is_reduced_system,
    reduced_system,
    reduction_schedules,
    window_representative,
)

__version__ = "0.1.0"
