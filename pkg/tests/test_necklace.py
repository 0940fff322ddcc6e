from itertools import combinations
from math import gcd

import pytest
import sympy

from pftzeta.necklace import (
    NecklaceRep,
    beta,
    beta_mobius_sum,
    divisors,
    enumerate_omega,
    j_set,
    mobius,
    primitive_root,
    rotations,
)


def burnside_count(T):
    """Number of binary necklaces of length T, minus the all-zero one."""
    phi = lambda d: sum(1 for k in range(1, d + 1) if gcd(k, d) == 1)
    return sum(phi(d) * 2 ** (T // d) for d in divisors(T)) // T - 1


@pytest.mark.parametrize("w, root", [("1010", "10"), ("110", "110"), ("111111", "1"), ("0", "0")])
def test_primitive_root(w, root):
    assert primitive_root(w) == root


def test_omega_small():
    assert [z.bits for z in enumerate_omega(1)] == ["1"]
    assert [z.bits for z in enumerate_omega(2)] == ["10", "11"]
    assert [z.bits for z in enumerate_omega(3)] == ["100", "101", "111"]
    assert len(enumerate_omega(4)) == 5


def test_omega_by_grouping_rotations():
    # group every nonzero word by its rotation class directly
    for T in range(1, 8):
        classes = {frozenset(rotations(format(k, f"0{T}b"))) for k in range(1, 2**T)}
        reps = enumerate_omega(T)
        assert len(reps) == len(classes) == burnside_count(T)
        assert {frozenset(rotations(z.bits)) for z in reps} == classes


@pytest.mark.parametrize("tie_break", ["min", "max"])
def test_representative_fields(tie_break):
    for T in range(1, 9):
        for z in enumerate_omega(T, tie_break):
            assert z.bits[0] == "1"
            assert z.root * z.repetitions == z.bits
            assert z.root_length * z.repetitions == T
            assert primitive_root(z.root) == z.root
            assert z.root_weight >= 1


def test_max_tie_break_differs():
    assert [z.bits for z in enumerate_omega(3, "max")] == ["100", "110", "111"]


def test_rejects_bad_representatives():
    with pytest.raises(ValueError):
        NecklaceRep("01")
    with pytest.raises(ValueError):
        NecklaceRep("12")


def test_j_set_examples():
    assert j_set(NecklaceRep("10"), 0) == {0}
    assert j_set(NecklaceRep("11"), 0) == {0, 1}
    assert j_set(NecklaceRep("110"), 1) == {1, 0}
    with pytest.raises(ValueError):
        j_set(NecklaceRep("11"), 1)


@pytest.mark.parametrize("T", range(1, 7))
def test_j_set_bijection(T):
    images = [j_set(z, q) for z in enumerate_omega(T) for q in range(z.root_length)]
    assert sum(z.root_length for z in enumerate_omega(T)) == 2**T - 1
    nonempty = {frozenset(c) for k in range(1, T + 1) for c in combinations(range(T), k)}
    assert len(images) == len(set(images)) == 2**T - 1
    assert set(images) == nonempty
    for z in enumerate_omega(T):
        for q in range(z.root_length):
            assert len(j_set(z, q)) == z.repetitions * z.root_weight


def test_mobius_values():
    assert [mobius(n) for n in (1, 2, 4, 6)] == [1, -1, 0, 1]
    for n in range(1, 200):
        assert mobius(n) == sympy.mobius(n)
    with pytest.raises(ValueError):
        mobius(0)


def test_beta_closed_form_examples():
    odd, even = NecklaceRep("1010"), NecklaceRep("1111")  # W = 1 and N = 2; W = 1 and N = 4
    assert beta(odd, 1) == 1
    assert beta(odd, 2) == -2
    assert beta(NecklaceRep("110110"), 2) == 0  # W = 2
    assert beta(even, 4) == 0
    with pytest.raises(ValueError):
        beta(NecklaceRep("110"), 2)


@pytest.mark.parametrize("T", range(1, 7))
def test_beta_matches_mobius_sum(T):
    for z in enumerate_omega(T):
        for s in divisors(z.repetitions):
            assert beta(z, s) == beta_mobius_sum(z, s)
