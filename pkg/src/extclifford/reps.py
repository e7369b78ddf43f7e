"""Integer matrix representations.

Canonical representations are Kronecker products of four fixed base
representations, one slot per tensor factor, so generators from different
factors commute.  Regular representations act by left multiplication on the
blade basis and are stored as sparse signed permutation matrices.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from typing import Union

import numpy as np
import scipy.sparse as sp

from .blades import STRUCTURE_CAP, GeneratorSystem
from .classify import AlgebraType, ClassLabel, ExtSignature, type_decomposition
from .errors import TooLarge

REP_DIM_CAP = 1024

Matrix = Union[np.ndarray, sp.csr_array]

_BASE = {
    "Cl(1,1)": (ExtSignature(0, 0, 1, 1), [[[0, 1], [1, 0]], [[0, 1], [-1, 0]]]),
    "Cl(1,0)": (ExtSignature(0, 0, 1, 0), [[[1, 0], [0, -1]]]),
    "Cl(0,1)": (ExtSignature(0, 0, 0, 1), [[[0, -1], [1, 0]]]),
    # left multiplication by the quaternion units i, j on the basis (1, i, j, k)
    "Cl(0,2)": (
        ExtSignature(0, 0, 0, 2),
        [
            [[0, -1, 0, 0], [1, 0, 0, 0], [0, 0, 0, -1], [0, 0, 1, 0]],
            [[0, 0, -1, 0], [0, 0, 0, 1], [1, 0, 0, 0], [0, -1, 0, 0]],
        ],
    ),
}

BASE_KINDS = tuple(_BASE)


@dataclass(frozen=True, eq=False)
class RepSet:
    matrices: tuple[Matrix, ...]
    system: GeneratorSystem
    dim: int

    def dense(self) -> list[np.ndarray]:
        return [m.toarray() if sp.issparse(m) else np.asarray(m) for m in self.matrices]

    def to_json(self) -> list[list[list[int]]]:
        return [m.astype(int).tolist() for m in self.dense()]


def base_rep(kind: str) -> RepSet:
    try:
        sg, mats = _BASE[kind]
    except KeyError:
        raise ValueError(f"unknown base kind {kind!r}; expected one of {BASE_KINDS}") from None
    arrays = tuple(np.array(m, dtype=np.int64) for m in mats)
    return RepSet(arrays, GeneratorSystem.from_signature(sg), arrays[0].shape[0])


def _kind(sg: ExtSignature) -> str:
    return f"Cl({sg.p},{sg.q})"


def canonical_rep(label: ClassLabel, cap: int = REP_DIM_CAP) -> RepSet:
    """Generators of the type decomposition of ``label`` as Kronecker products."""
    factors = type_decomposition(label).factors()
    bases = [base_rep(_kind(f)) for f in factors]
    dims = [b.dim for b in bases]
    total = reduce(lambda x, y: x * y, dims, 1)
    if total > cap:
        raise TooLarge("canonical representation dimension", total, cap)
    mats = []
    for j, b in enumerate(bases):
        left = np.eye(reduce(lambda x, y: x * y, dims[:j], 1), dtype=np.int64)
        right = np.eye(reduce(lambda x, y: x * y, dims[j + 1 :], 1), dtype=np.int64)
        for g in b.matrices:
            mats.append(np.kron(np.kron(left, g), right))
    system = GeneratorSystem.direct(b.system for b in bases)
    return RepSet(tuple(mats), system, total)


def regular_rep(sys: GeneratorSystem, cap: int = STRUCTURE_CAP) -> RepSet:
    """Left multiplication by each generator on the blade basis (column D -> row g^D)."""
    if sys.count > cap:
        raise TooLarge("regular representation", sys.count, cap)
    size = sys.dim
    cols = np.arange(size, dtype=np.int64)
    mats = []
    for g in range(sys.count):
        below = sys.anticommuting_mask(g) & ((1 << g) - 1)
        parity = (np.bitwise_count(cols & below) & 1).astype(np.int64)
        if sys.squares[g] == -1:
            parity ^= (cols >> g) & 1
        data = (1 - 2 * parity).astype(np.int64)
        mats.append(sp.csr_array((data, (cols ^ (1 << g), cols)), shape=(size, size)))
    return RepSet(tuple(mats), sys, size)


def _identity_like(m: Matrix) -> Matrix:
    n = m.shape[0]
    if sp.issparse(m):
        return sp.identity(n, dtype=np.int64, format="csr")
    return np.eye(n, dtype=np.int64)


def _equal(x: Matrix, y: Matrix) -> bool:
    if sp.issparse(x) or sp.issparse(y):
        return (sp.csr_array(x) != sp.csr_array(y)).nnz == 0
    return np.array_equal(x, y)


def verify_relations(reps: RepSet) -> bool:
    """Exact check of ``G_a^2 = squares[a] I`` and ``G_a G_b = eps[a][b] G_b G_a``."""
    sys = reps.system
    mats = reps.matrices
    if len(mats) != sys.count:
        return False
    for a, g in enumerate(mats):
        if g.shape != (reps.dim, reps.dim):
            return False
        if not _equal(g @ g, sys.squares[a] * _identity_like(g)):
            return False
    for a in range(len(mats)):
        for b in range(a + 1, len(mats)):
            if not _equal(mats[a] @ mats[b], sys.eps[a][b] * (mats[b] @ mats[a])):
                return False
    return True


def regular_trace_signature(sys: GeneratorSystem, cap: int = 8) -> int:
    """Trace-form signature recomputed from regular-representation matrices.

    Builds ``L_A`` for every blade as a product of generator matrices and sums
    ``tr(L_A L_A) / 2^k``.
    """
    if sys.count > cap:
        raise TooLarge("regular trace signature", sys.count, cap)
    gens = regular_rep(sys, cap).matrices
    size = sys.dim
    total = 0
    for A in range(size):
        L = sp.identity(size, dtype=np.int64, format="csr")
        for g in range(sys.count):
            if A >> g & 1:
                L = L @ gens[g]
        tr = int((L @ L).diagonal().sum())
        if tr % size:
            raise AssertionError("trace of a blade square is not a multiple of the dimension")
        total += tr // size
    return total


def summand_structure(label: ClassLabel) -> tuple[int, int, int]:
    """``(matrix size over D, number of simple summands, real dimension of D)``.

    I: R(2^N); II: H(2^(N-1)); III: 2^(M-1) copies of C(2^N);
    IV: 2^M copies of R(2^N); V: 2^M copies of H(2^(N-1)).
    """
    label.validate()
    ty, M, N = label.type, label.M, label.N
    if ty is AlgebraType.I:
        return 2**N, 1, 1
    if ty is AlgebraType.II:
        return 2 ** (N - 1), 1, 4
    if ty is AlgebraType.III:
        return 2**N, 2 ** (M - 1), 2
    if ty is AlgebraType.IV:
        return 2**N, 2**M, 1
    return 2 ** (N - 1), 2**M, 4
