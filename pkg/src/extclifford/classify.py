"""Signatures, derived parameters, the five-type table and the isomorphism test.

An extended Clifford algebra ``Cl(r,s|p,q)`` is ``K(r,s) (x) Cl(p,q)``: ``r+s``
central generators (``r`` squaring to +1, ``s`` to -1) next to ``p+q`` pairwise
anticommuting ones.  Every such algebra is isomorphic to exactly one of

    I    Cl(1,1)^N
    II   Cl(0,2) (x) Cl(1,1)^(N-1)
    III  Cl(0,1)^M (x) Cl(1,1)^N
    IV   Cl(1,0)^M (x) Cl(1,1)^N
    V    Cl(1,0)^M (x) Cl(0,2) (x) Cl(1,1)^(N-1)

and ``(type, M, N)`` is a complete isomorphism invariant.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import NamedTuple

from .errors import EmptyInput, InvalidLabel


@dataclass(frozen=True, order=True)
class ExtSignature:
    """The quadruple naming ``Cl(r,s|p,q)``."""

    r: int = 0
    s: int = 0
    p: int = 0
    q: int = 0

    def __post_init__(self):
        for name in ("r", "s", "p", "q"):
            v = getattr(self, name)
            if not isinstance(v, int) or isinstance(v, bool) or v < 0:
                raise ValueError(f"{name} must be a nonnegative integer, got {v!r}")

    @property
    def generators(self) -> int:
        """Total generator count, i.e. log2 of the algebra dimension."""
        return self.r + self.s + self.p + self.q

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.r, self.s, self.p, self.q)

    def __str__(self):
        return f"Cl({self.r},{self.s}|{self.p},{self.q})"


def sig(r: int, s: int, p: int, q: int) -> ExtSignature:
    return ExtSignature(r, s, p, q)


@dataclass(frozen=True)
class DerivedParams:
    m: int
    n: int
    M: int
    N: int
    t: int
    sigma: int


class AlgebraType(enum.Enum):
    I = "I"
    II = "II"
    III = "III"
    IV = "IV"
    V = "V"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class ClassLabel:
    type: AlgebraType
    M: int
    N: int

    def __post_init__(self):
        if not isinstance(self.type, AlgebraType):
            object.__setattr__(self, "type", AlgebraType(self.type))

    def validate(self) -> ClassLabel:
        """Raise :class:`InvalidLabel` unless the label obeys its type's constraints."""
        if self.M < 0 or self.N < 0:
            raise InvalidLabel(f"{self}: M and N must be nonnegative")
        if self.type in (AlgebraType.I, AlgebraType.II) and self.M != 0:
            raise InvalidLabel(f"{self}: types I and II have M = 0")
        if self.type in (AlgebraType.III, AlgebraType.IV, AlgebraType.V) and self.M < 1:
            raise InvalidLabel(f"{self}: types III, IV and V need M >= 1")
        if self.type in (AlgebraType.II, AlgebraType.V) and self.N < 1:
            raise InvalidLabel(f"{self}: types II and V need N >= 1")
        return self

    @property
    def is_valid(self) -> bool:
        try:
            self.validate()
        except InvalidLabel:
            return False
        return True

    def as_dict(self) -> dict:
        return {"type": self.type.value, "M": self.M, "N": self.N}

    def __str__(self):
        return f"({self.type.value}, M={self.M}, N={self.N})"


class OddFactor(enum.Enum):
    NONE = "none"
    CL10 = "Cl(1,0)"
    CL01 = "Cl(0,1)"


@dataclass(frozen=True)
class CanonicalDecomposition:
    """``odd_factor^odd_count (x) [Cl(0,2)] (x) Cl(1,1)^count_11``."""

    count_11: int
    has_02: bool = False
    odd_factor: OddFactor = OddFactor.NONE
    odd_count: int = 0

    def __post_init__(self):
        if (self.odd_factor is OddFactor.NONE) != (self.odd_count == 0):
            raise ValueError("odd_count must be positive exactly when odd_factor is set")

    @property
    def type(self) -> AlgebraType:
        if self.odd_factor is OddFactor.NONE:
            return AlgebraType.II if self.has_02 else AlgebraType.I
        if self.odd_factor is OddFactor.CL01:
            if self.has_02:
                raise ValueError("Cl(0,1)^M (x) Cl(0,2) is not one of the five shapes")
            return AlgebraType.III
        return AlgebraType.V if self.has_02 else AlgebraType.IV

    @property
    def label(self) -> ClassLabel:
        return ClassLabel(self.type, self.odd_count, self.count_11 + int(self.has_02))

    def factors(self) -> list[ExtSignature]:
        """The decomposition as a list of small Clifford factors, in Kronecker order."""
        out = []
        if self.odd_factor is OddFactor.CL10:
            out += [ExtSignature(0, 0, 1, 0)] * self.odd_count
        elif self.odd_factor is OddFactor.CL01:
            out += [ExtSignature(0, 0, 0, 1)] * self.odd_count
        if self.has_02:
            out.append(ExtSignature(0, 0, 0, 2))
        out += [ExtSignature(0, 0, 1, 1)] * self.count_11
        return out

    def __str__(self):
        parts = []
        if self.odd_count:
            parts.append(f"{self.odd_factor.value}^{self.odd_count}")
        if self.has_02:
            parts.append("Cl(0,2)")
        if self.count_11 or not parts:
            parts.append(f"Cl(1,1)^{self.count_11}")
        return " * ".join(parts)


def derive_params(sg: ExtSignature) -> DerivedParams:
    m = sg.r + sg.s
    n = sg.p + sg.q
    sigma = n - 2 * (n // 2)
    # Python's % already returns the nonnegative residue
    t = (sg.p - sg.q) % 8
    return DerivedParams(m=m, n=n, M=m + sigma, N=n // 2, t=t, sigma=sigma)


def _table_type(r: int, s: int, t: int) -> AlgebraType:
    if s >= 1:
        return AlgebraType.III
    if t in (3, 7):
        return AlgebraType.III
    if t == 1:
        return AlgebraType.IV
    if t == 5:
        return AlgebraType.V
    if r == 0:
        return AlgebraType.I if t in (0, 2) else AlgebraType.II
    return AlgebraType.IV if t in (0, 2) else AlgebraType.V


def table_rows(r: int, s: int, t: int) -> list[AlgebraType]:
    """All rows of the type table matching ``(r, s, t)``, each row tested separately.

    Used to check that the doubled rows of III/IV/V never overlap; a total,
    unambiguous table returns exactly one entry.
    """
    rows = [
        (AlgebraType.I, lambda: r == 0 and s == 0 and t in (0, 2)),
        (AlgebraType.II, lambda: r == 0 and s == 0 and t in (4, 6)),
        (AlgebraType.III, lambda: s >= 1),
        (AlgebraType.III, lambda: s == 0 and t in (3, 7)),
        (AlgebraType.IV, lambda: s == 0 and t == 1),
        (AlgebraType.IV, lambda: r >= 1 and s == 0 and t in (0, 2)),
        (AlgebraType.V, lambda: s == 0 and t == 5),
        (AlgebraType.V, lambda: r >= 1 and s == 0 and t in (4, 6)),
    ]
    return [ty for ty, cond in rows if cond()]


def classify(sg: ExtSignature) -> ClassLabel:
    d = derive_params(sg)
    return ClassLabel(_table_type(sg.r, sg.s, d.t), d.M, d.N)


def is_isomorphic(a: ExtSignature, b: ExtSignature) -> bool:
    return classify(a) == classify(b)


def cartan_decompose(p: int, q: int) -> CanonicalDecomposition:
    """Split ``Cl(p,q)`` into Cl(1,1), Cl(0,2), Cl(1,0), Cl(0,1) factors by ``(p-q) mod 8``."""
    if p < 0 or q < 0:
        raise ValueError("p and q must be nonnegative")
    n = p + q
    t = (p - q) % 8
    if t in (0, 2):
        return CanonicalDecomposition(n // 2)
    if t in (4, 6):
        return CanonicalDecomposition((n - 2) // 2, has_02=True)
    if t in (3, 7):
        return CanonicalDecomposition((n - 1) // 2, odd_factor=OddFactor.CL01, odd_count=1)
    if t == 1:
        return CanonicalDecomposition((n - 1) // 2, odd_factor=OddFactor.CL10, odd_count=1)
    return CanonicalDecomposition((n - 3) // 2, has_02=True, odd_factor=OddFactor.CL10, odd_count=1)


def type_decomposition(label: ClassLabel) -> CanonicalDecomposition:
    """The tensor shape of a (valid) label."""
    label.validate()
    ty, M, N = label.type, label.M, label.N
    if ty is AlgebraType.I:
        return CanonicalDecomposition(N)
    if ty is AlgebraType.II:
        return CanonicalDecomposition(N - 1, has_02=True)
    if ty is AlgebraType.III:
        return CanonicalDecomposition(N, odd_factor=OddFactor.CL01, odd_count=M)
    if ty is AlgebraType.IV:
        return CanonicalDecomposition(N, odd_factor=OddFactor.CL10, odd_count=M)
    return CanonicalDecomposition(N - 1, has_02=True, odd_factor=OddFactor.CL10, odd_count=M)


def k_reduction(r: int, s: int) -> tuple[OddFactor, int]:
    """``K(r,s)`` as a power of Cl(1,0) (when s = 0) or Cl(0,1) (when s >= 1)."""
    if r < 0 or s < 0:
        raise ValueError("r and s must be nonnegative")
    if r + s == 0:
        raise EmptyInput("K(0,0) is R and has no reduction to a nonempty power")
    return (OddFactor.CL01 if s >= 1 else OddFactor.CL10), r + s


def canonical_signature(label: ClassLabel, prefer_pure_clifford: bool = False) -> ExtSignature:
    """A fixed representative ``Cl(r,s|p,q)`` whose class is ``label``.

    With ``prefer_pure_clifford`` and ``M <= 1`` the representative has r = s = 0.
    """
    label.validate()
    ty, M, N = label.type, label.M, label.N
    if prefer_pure_clifford and M == 1:
        if ty is AlgebraType.III:
            return ExtSignature(0, 0, N, N + 1)
        if ty is AlgebraType.IV:
            return ExtSignature(0, 0, N + 1, N)
        if ty is AlgebraType.V:
            return ExtSignature(0, 0, N - 1, N + 2)
    if ty is AlgebraType.I:
        return ExtSignature(0, 0, N, N)
    if ty is AlgebraType.II:
        return ExtSignature(0, 0, N - 1, N + 1)
    if ty is AlgebraType.III:
        return ExtSignature(0, M - 1, N, N + 1)
    if ty is AlgebraType.IV:
        return ExtSignature(M, 0, N, N)
    return ExtSignature(M, 0, N - 1, N + 1)
