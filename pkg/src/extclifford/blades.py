"""Exact blade arithmetic for quasi-Clifford generator systems.

A generator system fixes, for ``k`` generators, the square of each generator
(+1 or -1) and a symmetric sign matrix ``eps`` with ``e_a e_b = eps[a][b] e_b e_a``.
Blades are bit masks over generator indices (bit ``a`` set means ``e_a`` is a
factor); the blade itself is the product of its generators in increasing
index order.  Multivectors carry exact ``int``/``Fraction`` coefficients.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Mapping

import numpy as np

from .classify import ExtSignature
from .errors import TooLarge, UnsupportedSystem

STRUCTURE_CAP = 12
SWEEP_CAP = 20

Blade = int


def blade(*indices: int) -> Blade:
    """Bit mask of the blade built from the given generator indices (0-based)."""
    mask = 0
    for i in indices:
        if mask >> i & 1:
            raise ValueError(f"repeated generator index {i}")
        mask |= 1 << i
    return mask


def blade_indices(mask: Blade) -> list[int]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def _parity(x: int) -> int:
    return x.bit_count() & 1


@dataclass(frozen=True)
class GeneratorSystem:
    squares: tuple[int, ...]
    eps: tuple[tuple[int, ...], ...]
    # derived bit masks, filled in __post_init__
    _anti: tuple[int, ...] = field(init=False, repr=False, compare=False)
    _anti_below: tuple[int, ...] = field(init=False, repr=False, compare=False)
    _neg: int = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        squares = tuple(int(x) for x in self.squares)
        eps = tuple(tuple(int(x) for x in row) for row in self.eps)
        k = len(squares)
        if len(eps) != k or any(len(row) != k for row in eps):
            raise ValueError("eps must be a k x k matrix")
        if any(x not in (1, -1) for x in squares):
            raise ValueError("generator squares must be +1 or -1")
        for a in range(k):
            if eps[a][a] != 1:
                raise ValueError("eps must have unit diagonal")
            for b in range(k):
                if eps[a][b] not in (1, -1) or eps[a][b] != eps[b][a]:
                    raise ValueError("eps must be symmetric with entries +1/-1")
        object.__setattr__(self, "squares", squares)
        object.__setattr__(self, "eps", eps)
        anti = tuple(sum(1 << b for b in range(k) if eps[a][b] == -1) for a in range(k))
        object.__setattr__(self, "_anti", anti)
        # generators with a smaller index that anticommute with generator a
        object.__setattr__(self, "_anti_below", tuple(m & ((1 << a) - 1) for a, m in enumerate(anti)))
        object.__setattr__(self, "_neg", sum(1 << a for a in range(k) if squares[a] == -1))

    @property
    def count(self) -> int:
        return len(self.squares)

    @property
    def dim(self) -> int:
        return 1 << self.count

    @classmethod
    def from_signature(cls, sg: ExtSignature) -> GeneratorSystem:
        """Commuting generators first (r positive, s negative), then p positive and q negative anticommuting ones."""
        m = sg.r + sg.s
        k = sg.generators
        squares = [1] * sg.r + [-1] * sg.s + [1] * sg.p + [-1] * sg.q
        eps = [[-1 if (a != b and a >= m and b >= m) else 1 for b in range(k)] for a in range(k)]
        return cls(tuple(squares), tuple(map(tuple, eps)))

    @classmethod
    def direct(cls, systems: Iterable[GeneratorSystem]) -> GeneratorSystem:
        """Generators of all systems side by side; generators from different systems commute."""
        systems = list(systems)
        squares: list[int] = []
        k = sum(s.count for s in systems)
        eps = [[1] * k for _ in range(k)]
        off = 0
        for s in systems:
            squares.extend(s.squares)
            for a in range(s.count):
                for b in range(s.count):
                    eps[off + a][off + b] = s.eps[a][b]
            off += s.count
        return cls(tuple(squares), tuple(map(tuple, eps)))

    def permuted(self, perm: list[int]) -> GeneratorSystem:
        """The same algebra with generator ``perm[i]`` renamed to ``i``."""
        squares = tuple(self.squares[i] for i in perm)
        eps = tuple(tuple(self.eps[i][j] for j in perm) for i in perm)
        return GeneratorSystem(squares, eps)

    def anticommuting_mask(self, g: int) -> int:
        return self._anti[g]

    def two_block_clique(self) -> int:
        """Mask of the anticommuting block if the system is two-block, else raise.

        Two-block means every generator is either central or belongs to one set
        of pairwise anticommuting generators (the shape of ``Cl(r,s|p,q)``).
        """
        clique = sum(1 << a for a in range(self.count) if self._anti[a])
        for a in blade_indices(clique):
            if self._anti[a] != clique & ~(1 << a):
                raise UnsupportedSystem("generator system is not two-block")
        return clique


def blade_product(sys: GeneratorSystem, A: Blade, B: Blade) -> tuple[int, Blade]:
    """``e_A e_B = sign * e_C`` with ``C = A ^ B``."""
    parity = _parity(A & B & sys._neg)
    rest = B
    while rest:
        low = rest & -rest
        b = low.bit_length() - 1
        # b moves left past every a > b in A; eps[a][b] = -1 flips the sign
        parity ^= _parity(A & sys._anti[b] & ~((low << 1) - 1))
        rest ^= low
    return (-1 if parity else 1), A ^ B


def blade_square_sign(sys: GeneratorSystem, A: Blade) -> int:
    """Sign of ``e_A^2`` from the closed form; two-block systems only."""
    clique = sys.two_block_clique()
    ka = (A & clique).bit_count()
    parity = (ka * (ka - 1) // 2 + (A & sys._neg).bit_count()) & 1
    return -1 if parity else 1


def commutes_sign(sys: GeneratorSystem, g: int, A: Blade) -> int:
    """``e_g e_A = sign * e_A e_g``."""
    return -1 if _parity(A & sys._anti[g] & ~(1 << g)) else 1


def _all_blades(k: int) -> np.ndarray:
    return np.arange(1 << k, dtype=np.int64)


def _popcount_parity(x: np.ndarray) -> np.ndarray:
    return (np.bitwise_count(x) & 1).astype(np.int64)


def center_basis(sys: GeneratorSystem) -> list[Blade]:
    """Blades commuting with every generator; for monomial systems these span the center."""
    if sys.count > SWEEP_CAP:
        raise TooLarge("center sweep", sys.count, SWEEP_CAP)
    blades = _all_blades(sys.count)
    central = np.ones(blades.shape, dtype=bool)
    for g in range(sys.count):
        central &= _popcount_parity(blades & sys._anti[g]) == 0
    return [int(b) for b in blades[central]]


def blade_square_signs(sys: GeneratorSystem) -> np.ndarray:
    """Signs of ``e_A^2`` for every blade A, by the general reordering rule (any eps)."""
    if sys.count > SWEEP_CAP:
        raise TooLarge("blade-square sweep", sys.count, SWEEP_CAP)
    blades = _all_blades(sys.count)
    parity = _popcount_parity(blades & sys._neg)
    for b in range(sys.count):
        has_b = (blades >> b) & 1
        parity ^= has_b & _popcount_parity(blades & sys._anti_below[b])
    return (1 - 2 * parity).astype(np.int8)


def structure_constants(sys: GeneratorSystem, cap: int = STRUCTURE_CAP) -> tuple[np.ndarray, np.ndarray]:
    """Full multiplication table: ``(signs, results)``, both indexed ``[A, B]``."""
    if sys.count > cap:
        raise TooLarge("structure constants", sys.count, cap)
    k = sys.count
    a = _all_blades(k)[:, None]
    b = _all_blades(k)[None, :]
    parity = _popcount_parity(a & b & sys._neg)
    for g in range(k):
        above = sys._anti[g] & ~((2 << g) - 1)
        parity = parity ^ (((b >> g) & 1) & _popcount_parity(a & above))
    return (1 - 2 * parity).astype(np.int8), (a ^ b)


def format_structure_table(sys: GeneratorSystem, fmt: str = "text", cap: int = STRUCTURE_CAP) -> str:
    """Export the multiplication table.

    ``text``: one row ``A B sign C`` per blade pair, blades written as sorted
    0-based index lists without spaces (``[]``, ``[0,2]``).
    ``json``: ``{"generators": k, "squares": [...], "eps": [[...]], "rows": [[A, B, sign, C], ...]}``
    with the same index lists.
    """
    signs, results = structure_constants(sys, cap)
    size = sys.dim
    rows = [
        (blade_indices(A), blade_indices(B), int(signs[A, B]), blade_indices(int(results[A, B])))
        for A in range(size)
        for B in range(size)
    ]
    if fmt == "json":
        return json.dumps(
            {
                "generators": sys.count,
                "squares": list(sys.squares),
                "eps": [list(r) for r in sys.eps],
                "rows": [list(r) for r in rows],
            }
        )
    if fmt != "text":
        raise ValueError(f"unknown format {fmt!r}")

    def show(ix):
        return "[" + ",".join(map(str, ix)) + "]"

    return "\n".join(f"{show(A)} {show(B)} {s:+d} {show(C)}" for A, B, s, C in rows) + "\n"


def parse_structure_table(text: str) -> dict[tuple[Blade, Blade], tuple[int, Blade]]:
    """Read back the ``text`` export into ``{(A, B): (sign, C)}``."""
    table = {}
    for line in text.splitlines():
        if not line.strip():
            continue
        a, b, s, c = line.split()
        A, B, C = (blade(*json.loads(x)) for x in (a, b, c))
        table[A, B] = (int(s), C)
    return table


class Multivector:
    """Exact linear combination of blades over a fixed generator system."""

    __slots__ = ("sys", "coeffs")

    def __init__(self, sys: GeneratorSystem, coeffs: Mapping[Blade, int | Fraction] | None = None):
        self.sys = sys
        self.coeffs: dict[Blade, int | Fraction] = {}
        for bl, c in (coeffs or {}).items():
            if not isinstance(c, Rational):
                raise TypeError("coefficients must be exact (int or Fraction)")
            if bl < 0 or bl >= sys.dim:
                raise ValueError(f"blade {bl} out of range")
            if c:
                self.coeffs[bl] = c

    @classmethod
    def scalar(cls, sys: GeneratorSystem, c: int | Fraction = 1) -> Multivector:
        return cls(sys, {0: c})

    @classmethod
    def gen(cls, sys: GeneratorSystem, a: int) -> Multivector:
        return cls(sys, {1 << a: 1})

    def _check(self, other: Multivector):
        if other.sys != self.sys:
            raise ValueError("multivectors live over different generator systems")

    def __add__(self, other):
        if isinstance(other, Rational):
            other = Multivector.scalar(self.sys, other)
        return mv_add(self, other)

    __radd__ = __add__

    def __neg__(self):
        return Multivector(self.sys, {b: -c for b, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Rational):
            return Multivector(self.sys, {b: c * other for b, c in self.coeffs.items()})
        return mv_multiply(self.sys, self, other)

    def __rmul__(self, other):
        if isinstance(other, Rational):
            return self * other
        return NotImplemented

    def __eq__(self, other):
        if isinstance(other, Rational):
            other = Multivector.scalar(self.sys, other)
        if not isinstance(other, Multivector):
            return NotImplemented
        return self.sys == other.sys and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.sys, frozenset(self.coeffs.items())))

    def __bool__(self):
        return bool(self.coeffs)

    def __repr__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for b in sorted(self.coeffs):
            name = "".join(f"e{i}" for i in blade_indices(b)) or "1"
            terms.append(f"{self.coeffs[b]}*{name}")
        return " + ".join(terms)


def mv_add(x: Multivector, y: Multivector) -> Multivector:
    x._check(y)
    out = dict(x.coeffs)
    for b, c in y.coeffs.items():
        out[b] = out.get(b, 0) + c
    return Multivector(x.sys, out)


def mv_multiply(sys: GeneratorSystem, x: Multivector, y: Multivector) -> Multivector:
    if x.sys != sys or y.sys != sys:
        raise ValueError("multivectors live over different generator systems")
    out: dict[Blade, int | Fraction] = {}
    for a, ca in x.coeffs.items():
        for b, cb in y.coeffs.items():
            s, c = blade_product(sys, a, b)
            out[c] = out.get(c, 0) + s * ca * cb
    return Multivector(sys, out)
