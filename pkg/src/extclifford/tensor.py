"""Tensor products of extended Clifford algebras.

Classification happens at the level of invariant profiles: each factor's profile
is predicted from its class label, profiles are multiplied, and the product
profile is read back as a label.  :func:`tensor_brute_system` gives the
independent route, one generator system holding every factor.
"""

from __future__ import annotations

from functools import reduce
from typing import Iterable, Sequence

from .blades import SWEEP_CAP, GeneratorSystem
from .classify import ClassLabel, ExtSignature, canonical_signature, classify
from .errors import EmptyInput, InconsistentProfile, TooLarge
from .oracle import UNIT_PROFILE, InvariantProfile, predicted_profile, profile_to_label

TensorList = Sequence[ExtSignature]


def _check_nonempty(factors: TensorList):
    if len(factors) == 0:
        raise EmptyInput("tensor product needs at least one factor")


def tensor_profile(factors: TensorList) -> InvariantProfile:
    _check_nonempty(factors)
    return reduce(lambda acc, f: acc * predicted_profile(classify(f)), factors, UNIT_PROFILE)


def tensor_classify(factors: TensorList) -> ClassLabel:
    prof = tensor_profile(factors)
    try:
        return profile_to_label(prof)
    except InconsistentProfile as exc:  # pragma: no cover - closure makes this unreachable
        raise AssertionError(f"tensor product left the extended Clifford class: {exc}") from exc


def tensor_generators(factors: TensorList) -> int:
    return sum(f.generators for f in factors)


def tensor_brute_system(factors: TensorList, cap: int = SWEEP_CAP) -> GeneratorSystem:
    """All factors' generators on one system, with every cross-factor pair commuting."""
    _check_nonempty(factors)
    k = tensor_generators(factors)
    if k > cap:
        raise TooLarge("tensor brute system", k, cap)
    return GeneratorSystem.direct(GeneratorSystem.from_signature(f) for f in factors)


def normalize_clifford_tensor(factors: Iterable[tuple[int, int]]) -> ExtSignature:
    """Rewrite ``Cl(p1,q1) (x) ... (x) Cl(pk,qk)`` as a single ``Cl(r,s|p,q)``.

    With at most one odd-dimensional factor the result is a plain Clifford
    algebra (r = s = 0); otherwise the fixed representative of the class.
    """
    pairs = [(int(p), int(q)) for p, q in factors]
    if not pairs:
        raise EmptyInput("no factors")
    for p, q in pairs:
        if p < 0 or q < 0 or p + q == 0:
            raise ValueError(f"factor Cl({p},{q}) needs p, q >= 0 and p + q >= 1")
    odd = sum((p + q) % 2 for p, q in pairs)
    label = tensor_classify([ExtSignature(0, 0, p, q) for p, q in pairs])
    return canonical_signature(label, prefer_pure_clifford=odd <= 1)
