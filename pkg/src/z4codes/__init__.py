"""Z4-linear Hadamard codes H^{r1,r2}, extended perfect codes C^{r1,r2},
and the kernel/rank invariants that tell them apart."""

from .classify import classify_hadamard, classify_perfect, verify_suite
from .codefam import (
    BinaryCode,
    FamilyParams,
    QuaternaryCode,
    binary_image,
    contains,
    family_params_table,
    hadamard_code,
    perfect_code,
)
from .constructions import equivalence_invariant_match, plotkin_double, quadruple, recurrent_build
from .invariants import (
    even_projection,
    is_linear,
    kernel,
    min_distance,
    odd_projection,
    rank,
    weight_distribution,
)
from .qmatrix import QuaternaryMatrix, build_A, code_type, is_orthogonal, null_space, span_enumerate
from .z4core import gray_inverse, gray_map, hamming_distance, lee_distance, lee_weight, negate

__version__ = "0.1.0"
