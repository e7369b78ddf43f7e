"""Classification of extended Clifford algebras Cl(r,s|p,q) = K(r,s) (x) Cl(p,q).

>>> from extclifford import ExtSignature, classify, is_isomorphic
>>> str(classify(ExtSignature(4, 0, 3, 18)))
'(IV, M=5, N=10)'
>>> is_isomorphic(ExtSignature(4, 0, 3, 18), ExtSignature(5, 0, 11, 9))
True
"""

from .blades import (
    GeneratorSystem,
    Multivector,
    blade,
    blade_indices,
    blade_product,
    blade_square_sign,
    blade_square_signs,
    center_basis,
    mv_add,
    mv_multiply,
    structure_constants,
)
from .classify import (
    AlgebraType,
    CanonicalDecomposition,
    ClassLabel,
    DerivedParams,
    ExtSignature,
    OddFactor,
    canonical_signature,
    cartan_decompose,
    classify,
    derive_params,
    is_isomorphic,
    k_reduction,
    type_decomposition,
)
from .errors import (
    EmptyInput,
    ExtCliffordError,
    InconsistentProfile,
    InvalidLabel,
    ParseError,
    TooLarge,
    UnsupportedSystem,
)
from .oracle import (
    InvariantProfile,
    brute_profile,
    predicted_profile,
    profile_to_label,
    system_profile,
    trace_form_signature,
)
from .parser import Atom, Power, Tensor, flatten, parse, to_text
from .reps import RepSet, base_rep, canonical_rep, regular_rep, verify_relations
from .tensor import normalize_clifford_tensor, tensor_brute_system, tensor_classify, tensor_profile

__version__ = "0.1.0"
