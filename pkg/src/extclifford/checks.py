"""Sweeps that cross-check the classification against the brute-force oracle.

Each check returns a :class:`CheckResult` with pass/fail counts and the first
few failing cases; ``run_all`` drives the ``selftest`` command.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from typing import Callable, Iterator

from .blades import GeneratorSystem, center_basis
from .classify import (
    AlgebraType,
    ClassLabel,
    ExtSignature,
    canonical_signature,
    cartan_decompose,
    classify,
    table_rows,
)
from .oracle import brute_profile, profile_to_label, system_profile
from .reps import canonical_rep, regular_rep, verify_relations
from .tensor import tensor_brute_system, tensor_profile


@dataclass
class CheckResult:
    name: str
    passed: int = 0
    failed: int = 0
    failures: list = field(default_factory=list)

    def record(self, ok: bool, case) -> None:
        if ok:
            self.passed += 1
        else:
            self.failed += 1
            if len(self.failures) < 5:
                self.failures.append(case)

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def __str__(self):
        status = "PASS" if self.ok else "FAIL"
        line = f"{status} {self.name}: {self.passed} passed, {self.failed} failed"
        if self.failures:
            line += f" (e.g. {self.failures[0]})"
        return line


def signatures_up_to(k: int) -> Iterator[ExtSignature]:
    """Every ExtSignature with r+s+p+q <= k."""
    for total in range(k + 1):
        for r in range(total + 1):
            for s in range(total + 1 - r):
                for p in range(total + 1 - r - s):
                    yield ExtSignature(r, s, p, total - r - s - p)


def labels_up_to(max_m: int, max_n: int) -> Iterator[ClassLabel]:
    for ty in AlgebraType:
        for M in range(max_m + 1):
            for N in range(max_n + 1):
                label = ClassLabel(ty, M, N)
                if label.is_valid:
                    yield label


def check_oracle_agreement(k: int) -> CheckResult:
    res = CheckResult(f"oracle agrees with type table (r+s+p+q <= {k})")
    for sg in signatures_up_to(k):
        res.record(profile_to_label(brute_profile(sg)) == classify(sg), str(sg))
    return res


def check_center_law(k: int) -> CheckResult:
    res = CheckResult(f"center dimension is 2^M (r+s+p+q <= {k})")
    for sg in signatures_up_to(k):
        n = len(center_basis(GeneratorSystem.from_signature(sg)))
        res.record(n == 2 ** classify(sg).M, str(sg))
    return res


def check_table_disjoint(max_rs: int = 6) -> CheckResult:
    res = CheckResult(f"type table total and disjoint (r,s <= {max_rs})")
    for r, s, t in itertools.product(range(max_rs + 1), range(max_rs + 1), range(8)):
        res.record(len(table_rows(r, s, t)) == 1, (r, s, t))
    return res


def check_round_trip(max_mn: int) -> CheckResult:
    res = CheckResult(f"classify(canonical_signature(L)) == L (M, N <= {max_mn})")
    for label in labels_up_to(max_mn, max_mn):
        for pure in (False, True):
            res.record(classify(canonical_signature(label, pure)) == label, (str(label), pure))
    return res


def check_cartan(k: int) -> CheckResult:
    res = CheckResult(f"Cartan decomposition matches brute profile (p+q <= {k})")
    for n in range(k + 1):
        for p in range(n + 1):
            dec = cartan_decompose(p, n - p)
            factors = dec.factors() or [ExtSignature()]
            ok = brute_profile(ExtSignature(0, 0, p, n - p)) == system_profile(tensor_brute_system(factors))
            ok = ok and dec.label == classify(ExtSignature(0, 0, p, n - p))
            res.record(ok, (p, n - p))
    return res


def check_tensor_pairs(k: int, samples: int, seed: int = 0) -> CheckResult:
    res = CheckResult(f"tensor profile multiplicativity ({samples} random pairs, <= {k} generators)")
    rng = random.Random(seed)
    pool = list(signatures_up_to(k))
    while res.passed + res.failed < samples:
        a, b = rng.choice(pool), rng.choice(pool)
        if a.generators + b.generators > k:
            continue
        res.record(tensor_profile([a, b]) == system_profile(tensor_brute_system([a, b])), (str(a), str(b)))
    return res


def check_canonical_reps(max_dim_log: int) -> CheckResult:
    res = CheckResult(f"canonical_rep relations (M+2N <= {max_dim_log})")
    for label in labels_up_to(max_dim_log, max_dim_log // 2):
        if label.M + 2 * label.N <= max_dim_log:
            res.record(verify_relations(canonical_rep(label)), str(label))
    return res


def check_regular_reps(k: int) -> CheckResult:
    res = CheckResult(f"regular_rep relations (k <= {k})")
    for sg in signatures_up_to(k):
        res.record(verify_relations(regular_rep(GeneratorSystem.from_signature(sg))), str(sg))
    return res


SELFTEST_CAP = 12


def run_all(max_generators: int = 8) -> list[CheckResult]:
    k = max_generators
    checks: list[Callable[[], CheckResult]] = [
        check_table_disjoint,
        lambda: check_oracle_agreement(k),
        lambda: check_center_law(k),
        lambda: check_round_trip(max(1, k // 2)),
        lambda: check_cartan(k),
        lambda: check_tensor_pairs(k, 50),
        lambda: check_canonical_reps(min(k, 8)),
        lambda: check_regular_reps(min(k, 8)),
    ]
    return [c() for c in checks]
