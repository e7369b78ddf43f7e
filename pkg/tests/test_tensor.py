import itertools
import random

import pytest

from extclifford import (
    ClassLabel,
    EmptyInput,
    ExtSignature,
    InvariantProfile,
    TooLarge,
    brute_profile,
    classify,
    normalize_clifford_tensor,
    system_profile,
    tensor_brute_system,
    tensor_classify,
    tensor_profile,
)
from extclifford.checks import signatures_up_to

R = ExtSignature(0, 0, 0, 0)
C = ExtSignature(0, 0, 0, 1)
H = ExtSignature(0, 0, 0, 2)
D = ExtSignature(0, 0, 1, 0)
M2 = ExtSignature(0, 0, 1, 1)


@pytest.mark.parametrize(
    "factors, prof",
    [
        ([H, H], (4, 0, 4)),
        ([R], (0, 0, 1)),
        ([C, C], (2, 2, 0)),
        ([D, C], (2, 2, 0)),
        ([D, H], (3, 1, -4)),
    ],
)
def test_tensor_profile_examples(factors, prof):
    assert tensor_profile(factors) == InvariantProfile(*prof)
    assert system_profile(tensor_brute_system(factors)) == InvariantProfile(*prof)


@pytest.mark.parametrize(
    "factors, label",
    [
        ([H, H], ("I", 0, 2)),
        ([D, C], ("III", 2, 0)),
        ([M2] * 3, ("I", 0, 3)),
        ([C, H], ("III", 1, 1)),
    ],
)
def test_tensor_classify_examples(factors, label):
    assert tensor_classify(factors) == ClassLabel(*label)


def test_tensor_empty():
    with pytest.raises(EmptyInput):
        tensor_profile([])


def test_brute_system_construction():
    sys = tensor_brute_system([C, C])
    assert sys.squares == (-1, -1)
    assert sys.eps == ((1, 1), (1, 1))
    sys = tensor_brute_system([M2, M2])
    assert sys.squares == (1, -1, 1, -1)
    assert sys.eps == ((1, -1, 1, 1), (-1, 1, 1, 1), (1, 1, 1, -1), (1, 1, -1, 1))
    with pytest.raises(TooLarge):
        tensor_brute_system([ExtSignature(0, 0, 11, 10)])


def test_multiplicativity_exhaustive_small():
    sigs = list(signatures_up_to(4))
    for a, b in itertools.product(sigs, repeat=2):
        if a.generators + b.generators > 6:
            continue
        pa, pb = brute_profile(a), brute_profile(b)
        combined = system_profile(tensor_brute_system([a, b]))
        assert combined == pa * pb == tensor_profile([a, b]), (a, b)


def test_closure_sweep():
    sigs = list(signatures_up_to(6))
    for a, b in itertools.product(sigs, repeat=2):
        if a.generators + b.generators <= 12:
            label = tensor_classify([a, b])
            assert label.is_valid
            assert label.M + 2 * label.N == a.generators + b.generators


def test_closure_random_long_lists():
    rng = random.Random(11)
    pool = list(signatures_up_to(12))
    for _ in range(300):
        factors = [rng.choice(pool) for _ in range(rng.randint(1, 6))]
        label = tensor_classify(factors)
        assert label.M + 2 * label.N == sum(f.generators for f in factors)


def test_order_independence():
    rng = random.Random(5)
    pool = list(signatures_up_to(5))
    for _ in range(100):
        factors = [rng.choice(pool) for _ in range(rng.randint(2, 4))]
        base = tensor_classify(factors)
        for perm in itertools.permutations(factors):
            assert tensor_classify(list(perm)) == base


def test_periodicity_against_single_algebra():
    for n in range(9):
        for p in range(n + 1):
            q = n - p
            assert tensor_classify([ExtSignature(0, 0, p, q), M2]) == classify(ExtSignature(0, 0, p + 1, q + 1))


def test_single_factor_matches_classify():
    for sg in signatures_up_to(10):
        assert tensor_classify([sg]) == classify(sg)


@pytest.mark.parametrize(
    "factors, sig",
    [
        ([(1, 1)], (0, 0, 1, 1)),
        ([(0, 1), (0, 1)], (0, 1, 0, 1)),
        ([(1, 0), (0, 2)], (0, 0, 0, 3)),
        ([(3, 0)], (0, 0, 1, 2)),
    ],
)
def test_normalize_examples(factors, sig):
    out = normalize_clifford_tensor(factors)
    assert out == ExtSignature(*sig)
    gens = [ExtSignature(0, 0, p, q) for p, q in factors]
    assert brute_profile(out) == system_profile(tensor_brute_system(gens))


def test_normalize_alternative_form_same_class():
    # (1,0|0,2) is an equally valid answer for Cl(1,0) (x) Cl(0,2)
    assert classify(ExtSignature(1, 0, 0, 2)) == classify(normalize_clifford_tensor([(1, 0), (0, 2)]))


def test_normalize_odd_factor_rules():
    pairs = [(p, q) for p in range(4) for q in range(4) if p + q]
    rng = random.Random(2)
    for _ in range(300):
        factors = [rng.choice(pairs) for _ in range(rng.randint(1, 5))]
        out = normalize_clifford_tensor(factors)
        odd = sum((p + q) % 2 for p, q in factors)
        total = sum(p + q for p, q in factors)
        assert out.generators == total
        if odd <= 1:
            assert out.r == out.s == 0
        else:
            lab = classify(out)
            # with m >= 2 odd factors the center has exactly m generators
            assert lab.M == odd
            assert out.r + out.s == lab.M - (out.p + out.q) % 2


def test_normalize_errors():
    with pytest.raises(EmptyInput):
        normalize_clifford_tensor([])
    with pytest.raises(ValueError):
        normalize_clifford_tensor([(0, 0)])
