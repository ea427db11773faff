import pytest
from fractions import Fraction
from hypothesis import given
from hypothesis import strategies as st

from oracles import sort_word
from supersmooth.gindex import (
    EMPTY,
    DomainError,
    GIndex,
    as_gindex,
    decode_rank,
    encode_rank,
    from_text,
    merge_sign,
    metric_weight,
    multi_indices,
    to_text,
)


@pytest.mark.parametrize("mu, r", [((1,), 1), ((1, 2), 3), ((3,), 4)])
def test_encode_rank_examples(mu, r):
    assert encode_rank(mu) == r


@pytest.mark.parametrize("r, mu", [(1, (1,)), (3, (1, 2)), (6, (2, 3))])
def test_decode_rank_examples(r, mu):
    assert decode_rank(r).gens == mu


def test_rank_matches_half_power_sum():
    # direct arithmetic on the defining formula, including positions past 60
    for mu in [(1,), (2, 5), (1, 3, 7), (61, 64)]:
        assert encode_rank(mu) == sum(Fraction(2**k) for k in mu) / 2


def test_rank_errors():
    with pytest.raises(DomainError):
        encode_rank(())
    for r in (0, -3):
        with pytest.raises(DomainError):
            decode_rank(r)


def test_rank_roundtrip_exhaustive():
    for r in range(1, 2**12 + 1):
        assert encode_rank(decode_rank(r)) == r


@pytest.mark.parametrize("J, K, expected", [
    ((1,), (2,), (1, (1, 2))),
    ((2,), (1,), (-1, (1, 2))),
    ((1, 3), (2,), (-1, (1, 2, 3))),
])
def test_merge_sign_examples(J, K, expected):
    sign, I = merge_sign(J, K)
    assert (sign, I.gens) == expected


def test_merge_sign_overlap_is_zero():
    assert merge_sign((1,), (1,)) is None


@pytest.mark.parametrize("I, w", [((), Fraction(1, 2)), ((1,), Fraction(1, 4)), ((1, 2), Fraction(1, 16))])
def test_metric_weight_examples(I, w):
    assert metric_weight(I) == w


subsets = st.sets(st.integers(1, 8), max_size=8).map(lambda s: tuple(sorted(s)))


@given(subsets, subsets)
def test_graded_commutativity_of_monomials(J, K):
    if set(J) & set(K):
        return
    s1, I1 = merge_sign(J, K)
    s2, I2 = merge_sign(K, J)
    assert I1 == I2
    assert s1 * s2 == (-1) ** (len(J) * len(K))
    assert I1.degree == len(J) + len(K)


@given(subsets, subsets)
def test_merge_sign_matches_sorting_oracle(J, K):
    got = merge_sign(J, K)
    want = sort_word(J + K)
    if want is None:
        assert got is None
    else:
        assert (got[0], got[1].gens) == want


@given(subsets, subsets, subsets)
def test_signed_merge_associative(J, K, M):
    def mul(a, b):
        if a is None or b is None:
            return None
        res = merge_sign(a[1], b[1])
        return None if res is None else (a[0] * b[0] * res[0], res[1])

    one = lambda g: (1, GIndex(g))
    left = mul(mul(one(J), one(K)), one(M))
    right = mul(one(J), mul(one(K), one(M)))
    assert left == right
    oracle = sort_word(J + K + M)
    assert (left is None) == (oracle is None)
    if left:
        assert (left[0], left[1].gens) == oracle


def test_text_form():
    assert to_text(GIndex((1, 3))) == "[1,3]"
    assert to_text(EMPTY) == "[]"
    assert from_text("[1, 3]") == GIndex((1, 3))
    assert from_text("[]") == EMPTY
    with pytest.raises(DomainError):
        from_text("1,3")


def test_gindex_validation():
    with pytest.raises(DomainError):
        GIndex((2, 1))
    with pytest.raises(DomainError):
        GIndex((0,))
    with pytest.raises(DomainError):
        GIndex((65,))
    assert as_gindex({3, 1}) == GIndex((1, 3))
    assert as_gindex(2) == GIndex((2,))


def test_multi_indices_order_and_count():
    alphas = multi_indices(2, 2)
    assert alphas == [(0, 0), (0, 1), (1, 0), (0, 2), (1, 1), (2, 0)]
    assert multi_indices(0, 3) == [()]
