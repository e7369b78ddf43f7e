"""Brute-force isomorphism invariants.

The profile ``(log2 dim, log2 center dim, trace-form signature)`` separates the
five types: the building blocks Cl(1,1) = R(2), Cl(0,2) = H, Cl(0,1) = C and
Cl(1,0) = R+R have profiles (2,0,+2), (2,0,-2), (1,1,0), (1,1,+2), and all three
entries combine predictably under tensor products.
"""

from __future__ import annotations

from dataclasses import dataclass

from .blades import SWEEP_CAP, GeneratorSystem, blade_square_signs, center_basis
from .classify import AlgebraType, ClassLabel, ExtSignature
from .errors import InconsistentProfile, TooLarge


@dataclass(frozen=True)
class InvariantProfile:
    log2_dim: int
    log2_center: int
    trace_sig: int

    def __mul__(self, other: InvariantProfile) -> InvariantProfile:
        """Profile of the tensor product."""
        return InvariantProfile(
            self.log2_dim + other.log2_dim,
            self.log2_center + other.log2_center,
            self.trace_sig * other.trace_sig,
        )

    def as_dict(self) -> dict:
        return {"log2_dim": self.log2_dim, "log2_center": self.log2_center, "trace_sig": self.trace_sig}

    def __str__(self):
        return f"({self.log2_dim}, {self.log2_center}, {self.trace_sig:+d})"


UNIT_PROFILE = InvariantProfile(0, 0, 1)


def trace_form_signature(sys: GeneratorSystem, cap: int = SWEEP_CAP) -> int:
    """Signature of ``(x, y) -> tr(L_{xy})`` on the blade basis.

    ``tr(L_{e_A e_B})`` vanishes unless ``A == B``, so the form is diagonal with
    entries ``2^k * sign(e_A^2)`` and the signature is the sum of those signs.
    """
    if sys.count > cap:
        raise TooLarge("trace-form sweep", sys.count, cap)
    return int(blade_square_signs(sys).sum(dtype="int64"))


def system_profile(sys: GeneratorSystem, cap: int = SWEEP_CAP) -> InvariantProfile:
    if sys.count > cap:
        raise TooLarge("profile sweep", sys.count, cap)
    ncenter = len(center_basis(sys))
    log2_center = ncenter.bit_length() - 1
    if 1 << log2_center != ncenter:
        # the central blades form a subgroup, so this would be an engine bug
        raise AssertionError(f"center dimension {ncenter} is not a power of two")
    return InvariantProfile(sys.count, log2_center, trace_form_signature(sys, cap))


def brute_profile(sg: ExtSignature, cap: int = SWEEP_CAP) -> InvariantProfile:
    if sg.generators > cap:
        raise TooLarge("brute profile", sg.generators, cap)
    return system_profile(GeneratorSystem.from_signature(sg), cap)


def predicted_profile(label: ClassLabel) -> InvariantProfile:
    label.validate()
    ty, M, N = label.type, label.M, label.N
    log2_dim = M + 2 * N
    if ty is AlgebraType.I:
        return InvariantProfile(log2_dim, 0, 2**N)
    if ty is AlgebraType.II:
        return InvariantProfile(log2_dim, 0, -(2**N))
    if ty is AlgebraType.III:
        return InvariantProfile(log2_dim, M, 0)
    if ty is AlgebraType.IV:
        return InvariantProfile(log2_dim, M, 2 ** (M + N))
    return InvariantProfile(log2_dim, M, -(2 ** (M + N)))


def profile_to_label(prof: InvariantProfile) -> ClassLabel:
    M = prof.log2_center
    if M < 0 or M > prof.log2_dim:
        raise InconsistentProfile(f"{prof}: center dimension out of range")
    rest = prof.log2_dim - M
    if rest % 2:
        raise InconsistentProfile(f"{prof}: log2_dim - log2_center is odd")
    N = rest // 2
    ts = prof.trace_sig
    if ts == 0:
        if M == 0:
            raise InconsistentProfile(f"{prof}: a central simple algebra has nonzero trace signature")
        ty = AlgebraType.III
    elif M == 0:
        ty = AlgebraType.I if ts > 0 else AlgebraType.II
    else:
        ty = AlgebraType.IV if ts > 0 else AlgebraType.V
    label = ClassLabel(ty, M, N)
    if not label.is_valid:
        raise InconsistentProfile(f"{prof}: implies invalid label {label}")
    if predicted_profile(label) != prof:
        raise InconsistentProfile(f"{prof}: |trace_sig| does not match type {ty}")
    return label
