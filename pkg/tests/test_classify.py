import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from extclifford import (
    AlgebraType,
    CanonicalDecomposition,
    ClassLabel,
    EmptyInput,
    ExtSignature,
    InvalidLabel,
    OddFactor,
    brute_profile,
    canonical_signature,
    cartan_decompose,
    classify,
    derive_params,
    is_isomorphic,
    k_reduction,
    tensor_brute_system,
    system_profile,
)
from extclifford.checks import labels_up_to, signatures_up_to
from extclifford.classify import table_rows

I, II, III, IV, V = (AlgebraType(x) for x in ("I", "II", "III", "IV", "V"))

nat = st.integers(min_value=0, max_value=40)
signatures = st.builds(ExtSignature, nat, nat, nat, nat)


@pytest.mark.parametrize(
    "sg, expected",
    [
        ((3, 0, 7, 15), dict(m=3, n=22, M=3, N=11, t=0)),
        ((0, 0, 0, 0), dict(m=0, n=0, M=0, N=0, t=0)),
        ((4, 0, 3, 18), dict(m=4, n=21, M=5, N=10, t=1)),
        ((5, 0, 11, 9), dict(m=5, n=20, M=5, N=10, t=2)),
    ],
)
def test_derive_params_examples(sg, expected):
    d = derive_params(ExtSignature(*sg))
    assert {k: getattr(d, k) for k in expected} == expected


@given(signatures)
def test_derived_params_identities(sg):
    d = derive_params(sg)
    assert 0 <= d.t <= 7
    assert (d.t - (sg.p - sg.q)) % 8 == 0
    assert d.sigma == d.n % 2
    assert d.m + d.n == d.M + 2 * d.N


def test_negative_difference_residue():
    assert derive_params(ExtSignature(0, 0, 0, 1)).t == 7
    assert derive_params(ExtSignature(0, 0, 1, 10)).t == 7


def test_signature_rejects_negative():
    with pytest.raises(ValueError):
        ExtSignature(-1, 0, 0, 0)


@pytest.mark.parametrize(
    "sg, label",
    [
        ((4, 0, 3, 18), (IV, 5, 10)),
        ((5, 0, 11, 9), (IV, 5, 10)),
        ((0, 0, 0, 0), (I, 0, 0)),
        ((0, 0, 0, 2), (II, 0, 1)),
        ((0, 0, 0, 1), (III, 1, 0)),
        ((1, 0, 0, 0), (IV, 1, 0)),
        ((0, 0, 5, 0), (V, 1, 2)),
        ((1, 0, 0, 2), (V, 1, 1)),
        ((0, 1, 0, 2), (III, 1, 1)),
    ],
)
def test_classify_examples(sg, label):
    assert classify(ExtSignature(*sg)) == ClassLabel(*label)


def test_table_total_and_disjoint():
    for r, s, t in itertools.product(range(7), range(7), range(8)):
        rows = table_rows(r, s, t)
        assert len(rows) == 1, (r, s, t, rows)
        # any (p, q) with this residue lands in the same row
        p, q = t, 0
        assert classify(ExtSignature(r, s, p, q)).type is rows[0]


def test_classify_labels_are_valid():
    for sg in signatures_up_to(10):
        assert classify(sg).is_valid


@pytest.mark.parametrize("n", range(9))
def test_complexified_algebras_share_a_label(n):
    labels = {classify(ExtSignature(0, 1, p, n - p)) for p in range(n + 1)}
    assert len(labels) == 1


def test_mod8_periodicity():
    for n in range(7):
        for p in range(n + 1):
            q = n - p
            assert classify(ExtSignature(0, 0, p + 8, q)).type == classify(ExtSignature(0, 0, p, q)).type


def test_isomorphism_examples():
    a, b, c = ExtSignature(3, 0, 7, 15), ExtSignature(4, 0, 3, 18), ExtSignature(5, 0, 11, 9)
    assert is_isomorphic(b, c)
    assert not is_isomorphic(a, b)
    assert not is_isomorphic(a, c)
    assert is_isomorphic(ExtSignature(2, 3, 1, 4), ExtSignature(2, 3, 1, 4))


def test_isomorphism_is_equivalence_relation():
    sigs = list(signatures_up_to(8))
    classes = {}
    for sg in sigs:
        classes.setdefault(classify(sg), []).append(sg)
    # reflexive and symmetric on all pairs; transitive follows from class-equality but check directly
    for sg in sigs:
        assert is_isomorphic(sg, sg)
    for members in classes.values():
        for a, b in itertools.combinations(members[:6], 2):
            assert is_isomorphic(a, b) and is_isomorphic(b, a)
    reps = [m[0] for m in classes.values()]
    for a, b in itertools.combinations(reps, 2):
        assert not is_isomorphic(a, b)
    for a, b, c in itertools.product(sigs[:40], repeat=3):
        if is_isomorphic(a, b) and is_isomorphic(b, c):
            assert is_isomorphic(a, c)


def test_isomorphic_implies_same_dimension():
    for sg in signatures_up_to(8):
        lab = classify(sg)
        assert lab.M + 2 * lab.N == sg.generators


@pytest.mark.parametrize(
    "pq, dec",
    [
        ((1, 1), CanonicalDecomposition(1)),
        ((0, 2), CanonicalDecomposition(0, has_02=True)),
        ((5, 0), CanonicalDecomposition(1, has_02=True, odd_factor=OddFactor.CL10, odd_count=1)),
        ((0, 0), CanonicalDecomposition(0)),
        ((0, 1), CanonicalDecomposition(0, odd_factor=OddFactor.CL01, odd_count=1)),
        ((1, 0), CanonicalDecomposition(0, odd_factor=OddFactor.CL10, odd_count=1)),
        ((3, 0), CanonicalDecomposition(1, odd_factor=OddFactor.CL01, odd_count=1)),
        ((4, 0), CanonicalDecomposition(1, has_02=True)),
    ],
)
def test_cartan_examples(pq, dec):
    assert cartan_decompose(*pq) == dec


def test_cartan_agrees_with_classify():
    for n in range(13):
        for p in range(n + 1):
            dec = cartan_decompose(p, n - p)
            assert dec.label == classify(ExtSignature(0, 0, p, n - p))
            gens = sum(f.generators for f in dec.factors())
            assert gens == n


def test_cartan_decomposition_brute():
    for n in range(8):
        for p in range(n + 1):
            factors = cartan_decompose(p, n - p).factors() or [ExtSignature()]
            assert brute_profile(ExtSignature(0, 0, p, n - p)) == system_profile(tensor_brute_system(factors))


@pytest.mark.parametrize(
    "label, pure, sig",
    [
        ((III, 1, 0), False, (0, 0, 0, 1)),
        ((III, 1, 0), True, (0, 0, 0, 1)),
        ((IV, 1, 0), False, (1, 0, 0, 0)),
        ((IV, 1, 0), True, (0, 0, 1, 0)),
        ((V, 1, 1), False, (1, 0, 0, 2)),
        ((V, 1, 1), True, (0, 0, 0, 3)),
        ((I, 0, 2), False, (0, 0, 2, 2)),
        ((II, 0, 1), False, (0, 0, 0, 2)),
        ((III, 3, 1), True, (0, 2, 1, 2)),
    ],
)
def test_canonical_signature_examples(label, pure, sig):
    lab = ClassLabel(*label)
    out = canonical_signature(lab, pure)
    assert out == ExtSignature(*sig)
    assert classify(out) == lab


def test_canonical_round_trip():
    for label in labels_up_to(6, 6):
        for pure in (False, True):
            sg = canonical_signature(label, pure)
            assert classify(sg) == label
            if pure and label.M <= 1:
                assert sg.r == sg.s == 0


@pytest.mark.parametrize("label", [(II, 0, 0), (V, 1, 0), (I, 1, 0), (III, 0, 2), (IV, 0, 1), (I, -1, 0)])
def test_invalid_labels(label):
    with pytest.raises(InvalidLabel):
        canonical_signature(ClassLabel(*label))


def test_k_reduction():
    assert k_reduction(3, 0) == (OddFactor.CL10, 3)
    assert k_reduction(0, 1) == (OddFactor.CL01, 1)
    assert k_reduction(2, 2) == (OddFactor.CL01, 4)
    with pytest.raises(EmptyInput):
        k_reduction(0, 0)


def test_k_reduction_matches_oracle():
    base = {OddFactor.CL10: ExtSignature(0, 0, 1, 0), OddFactor.CL01: ExtSignature(0, 0, 0, 1)}
    for r in range(6):
        for s in range(6 - r):
            if r + s == 0:
                continue
            kind, m = k_reduction(r, s)
            power = system_profile(tensor_brute_system([base[kind]] * m))
            assert brute_profile(ExtSignature(r, s, 0, 0)) == power


def test_reduction_isomorphisms():
    # Cl(1,0)^m (x) Cl(0,1) ~ Cl(0,1)^(m+1)  and  Cl(0,1) (x) Cl(0,2) ~ Cl(0,1) (x) Cl(1,1)
    d, c, h, m2 = (ExtSignature(0, 0, 1, 0), ExtSignature(0, 0, 0, 1), ExtSignature(0, 0, 0, 2), ExtSignature(0, 0, 1, 1))
    for m in range(1, 6):
        lhs = system_profile(tensor_brute_system([d] * m + [c]))
        assert lhs == system_profile(tensor_brute_system([c] * (m + 1)))
    assert system_profile(tensor_brute_system([c, h])) == system_profile(tensor_brute_system([c, m2]))
