"""baralt: exact structure theory for finite-dimensional baric alternative algebras."""

from .algebra import (
    Algebra,
    AlternativeWitness,
    MultOperators,
    QuotientMap,
    SubView,
    associator,
    change_basis,
    check_alternative,
    find_identity,
    ideal_generated,
    multiply,
    power,
    quotient,
)
from .baric import BaricAlgebra, bar_ideal, check_weight, is_b_ideal, quotient_baric
from .errors import BaraltError
from .fields import GF, QQ, PrimeField, Rationals
from .files import algebra_to_text, decomposition_to_text, parse_algebra_text, parse_decomposition_text
from .lifting import (
    CayleyFrame,
    LiftContext,
    MatrixUnits,
    lift_cayley,
    lift_idempotent,
    lift_matrix_algebra_sum,
    lift_matrix_units,
    lift_orthogonal_set,
    lift_trivial_part,
)
from .linalg import (
    Matrix,
    Polynomial,
    Subspace,
    complement,
    minimal_polynomial,
    rational_roots,
    rref,
    solve,
    subspace_ops,
)
from .peirce import (
    Idempotent,
    PeirceSystem,
    find_weight_one_idempotent,
    hensel_idempotent,
    peirce_set,
    peirce_single,
    principal_idempotent,
    verify_peirce_relations,
)
from .radical import (
    NilCertificate,
    RadicalReport,
    b_radical,
    ideal_power_chain,
    is_b_semisimple,
    is_nilpotent_element,
    nilradical,
    peirce_radical_check,
)
from .structure import (
    SemisimpleSplit,
    SimpleComponent,
    centroid,
    matrix_units_of_simple,
    simple_components,
    split_semisimple_bar,
    zorn_frame_of_cayley,
)
from .wedderburn import (
    Certificate,
    CheckResult,
    Decomposition,
    decompose,
    decompose_unital,
    verify_decomposition,
)

__version__ = "0.1.0"
