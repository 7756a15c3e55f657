from itertools import permutations

import pytest
from hypothesis import given, strategies as st

from qcomp.compositions import Composition, compositions_of
from qcomp.permutitions import (
    A000262, NotAPartition, Permutition, canonicalize, enumerate_permutitions, enumerate_shape,
    parse_permutition, sinv_polynomial, standardize, std_suffix,
)
from qcomp.polynomials import reduced_P
from qcomp.qpoly import QPoly


def brute_force_permutitions(n):
    """Every permutation of [n] cut at every composition, keeping canonical cuttings."""
    found = set()
    for w in permutations(range(1, n + 1)):
        for I in compositions_of(n) if n else []:
            blocks, pos = [], 0
            for part in I:
                blocks.append(w[pos:pos + part])
                pos += part
            lasts = [b[-1] for b in blocks]
            if lasts == sorted(lasts):
                found.add(tuple(blocks))
    return found


def recurrence_counts(nmax):
    a = [1, 1]
    for n in range(2, nmax + 1):
        a.append((2 * n - 1) * a[n - 1] - (n - 1) * (n - 2) * a[n - 2])
    return a[: nmax + 1]


def test_canonicalize_examples():
    assert str(canonicalize([(5, 3), (4, 6, 1, 2), (9, 7, 8)])) == "(4612|53|978)"
    assert canonicalize([(2, 1)]).blocks == ((2, 1),)
    assert canonicalize([(3,), (1, 2)]).blocks == ((1, 2), (3,))


def test_canonicalize_rejects():
    with pytest.raises(NotAPartition):
        canonicalize([(1, 2), (2,)])
    with pytest.raises(NotAPartition):
        canonicalize([(1, 3)])
    with pytest.raises(NotAPartition):
        canonicalize([(1,), ()])


def test_shape_and_sinv_examples():
    pi = parse_permutition("(4612|53|978)")
    assert pi.shape() == (4, 2, 3)
    assert pi.sinv() == 4
    assert parse_permutition("12|3|4").shape() == (2, 1, 1)
    assert parse_permutition("1|2|3").shape() == (1, 1, 1)
    assert parse_permutition("12|3|4").sinv() == 0
    assert parse_permutition("21|3|4").sinv() == 1
    assert parse_permutition("1|432").sinv() == 2


def test_standardize_examples():
    assert standardize((7, 4, 2, 5, 8)) == (4, 2, 1, 3, 5)
    assert standardize((1, 2, 3)) == (1, 2, 3)
    assert standardize((3, 6, 2)) == (2, 3, 1)


def test_std_suffix_examples():
    pi = parse_permutition("361|74|258")
    assert str(std_suffix(pi, 1)) == "(42|135)"
    assert std_suffix(parse_permutition("21|3"), 0) == parse_permutition("21|3")


@given(st.permutations(list(range(1, 8))).flatmap(
    lambda w: st.lists(st.integers(-50, 50), min_size=len(w), max_size=len(w), unique=True)))
def test_standardize_order_preserving(word):
    s = standardize(word)
    assert sorted(s) == list(range(1, len(word) + 1))
    assert standardize(s) == s
    for i in range(len(word)):
        for j in range(len(word)):
            assert (word[i] < word[j]) == (s[i] < s[j])


def test_std_suffix_keeps_sinv_of_suffix():
    for pi in enumerate_permutitions(6):
        for k in range(len(pi.blocks) + 1):
            rest = Permutition(pi.blocks[k:])
            assert std_suffix(pi, k).sinv() == rest.sinv()
            assert std_suffix(pi, k).blocks == tuple(std_suffix(rest, 0).blocks)


def test_enumerate_counts_paper():
    assert [sum(1 for _ in enumerate_permutitions(n)) for n in range(5)] == [1, 1, 3, 13, 73]
    assert list(enumerate_permutitions(1)) == [Permutition(((1,),))]
    assert list(enumerate_permutitions(0)) == [Permutition(())]


def test_embedded_sequence_matches_recurrence():
    assert list(A000262) == recurrence_counts(len(A000262) - 1)


@pytest.mark.parametrize("n", range(0, 6))
def test_enumerate_matches_brute_force(n):
    got = [p.blocks for p in enumerate_permutitions(n)]
    assert len(got) == len(set(got))
    if n:
        assert set(got) == brute_force_permutitions(n)


def test_enumeration_order_is_deterministic():
    got = list(enumerate_permutitions(5))
    assert got == sorted(got, key=Permutition.sort_key)
    assert got == list(enumerate_permutitions(5))


def test_enumerate_shape_examples():
    listed = ["1|234", "1|324", "1|243", "1|423", "1|342", "1|432",
              "2|134", "2|314", "2|143", "2|413", "3|124", "3|214"]
    assert set(enumerate_shape(Composition(1, 3))) == {parse_permutition(s) for s in listed}
    assert [str(p) for p in enumerate_shape(Composition(2, 1, 1))] == \
        ["(12|3|4)", "(21|3|4)", "(31|2|4)", "(41|2|3)"]
    assert [str(p) for p in enumerate_shape(Composition(1))] == ["(1)"]
    sinvs = [parse_permutition(s).sinv() for s in listed]
    assert sinvs == [0, 0, 1, 1, 2, 2, 0, 0, 1, 1, 0, 0]


@pytest.mark.parametrize("n", range(1, 7))
def test_shapes_partition_enumeration(n):
    everything = list(enumerate_permutitions(n))
    by_shape = [p for I in compositions_of(n) for p in enumerate_shape(I)]
    assert by_shape == everything
    for I in compositions_of(n):
        pis = enumerate_shape(I)
        assert all(p.shape() == I for p in pis)
        assert max(p.sinv() for p in pis) == n - len(I)


def test_sinv_polynomial_examples():
    assert sinv_polynomial(Composition(1, 3)) == QPoly([6, 4, 2])
    assert sinv_polynomial(Composition(1, 1, 1, 1)) == QPoly([1])
    assert sinv_polynomial(Composition(2)) == QPoly([1, 1])


@pytest.mark.parametrize("n", range(1, 8))
def test_theorem(n):
    for I in compositions_of(n):
        assert sinv_polynomial(I) == reduced_P(I), I


def test_text_form_above_nine():
    pi = canonicalize([(10, 1), tuple(range(2, 10))])
    assert str(pi) == "(10,1|2,3,4,5,6,7,8,9)"
    assert parse_permutition(str(pi)) == pi


def test_json_form():
    pi = parse_permutition("21|3")
    assert pi.to_json() == {"blocks": [[2, 1], [3]]}
    assert pi.to_json(with_sinv=True) == {"blocks": [[2, 1], [3]], "sinv": 1}
