import random
from math import gcd

import pytest
from hypothesis import given, strategies as st

from zsindex.modarith import (
    GroupContext,
    check_prime_intervals,
    euler_phi,
    factorize,
    is_prime,
    mod_inverse,
    prime_in_bertrand,
    prime_in_half_open,
    primes_up_to,
    reduce_mod,
    units,
)


def test_reduce_mod_examples():
    assert reduce_mod(7, 5) == 2
    assert reduce_mod(-3, 5) == 2
    assert reduce_mod(10, 5) == 0


def test_reduce_mod_rejects_zero_modulus():
    with pytest.raises(ValueError):
        reduce_mod(3, 0)


@given(st.integers(-(10**9), 10**9), st.integers(1, 10**6))
def test_reduce_mod_complement(x, y):
    if x % y != 0:
        assert reduce_mod(x, y) + reduce_mod(-x, y) == y


def test_mod_inverse_examples():
    assert mod_inverse(4, 25) == 19
    assert mod_inverse(6, 25) == 21
    assert mod_inverse(1, 77) == 1


def test_mod_inverse_rejects_non_unit():
    with pytest.raises(ValueError):
        mod_inverse(5, 25)


@given(st.integers(5, 2000))
def test_mod_inverse_involution(n):
    for a in random.Random(n).sample(units(n), min(8, euler_phi(n))):
        assert mod_inverse(mod_inverse(a, n), n) == a % n


def test_units_examples():
    assert units(5) == [1, 2, 3, 4]
    assert units(9) == [1, 2, 4, 5, 7, 8]
    assert len(units(25)) == 20


def test_units_closure_under_multiplication():
    rng = random.Random(7)
    for n in (25, 35, 49, 91):
        us = set(units(n))
        for _ in range(50):
            a, b = rng.sample(sorted(us), 2)
            assert a * b % n in us


def test_is_prime_small():
    assert is_prime(5)
    assert not is_prime(1)
    assert not is_prime(25)
    assert not is_prime(0)
    small = {p for p in range(2, 10000) if is_prime(p)}
    assert small == set(primes_up_to(9999))


def test_is_prime_64bit():
    assert is_prime(2**61 - 1)
    assert not is_prime(3215031751)  # strong pseudoprime to bases 2,3,5,7
    assert not is_prime((2**31 - 1) * (2**29 - 3))


def test_prime_in_bertrand_examples():
    assert prime_in_bertrand(2) == 5
    assert prime_in_bertrand(3) == 7
    assert prime_in_bertrand(10) == 23
    with pytest.raises(ValueError):
        prime_in_bertrand(1)


def test_prime_in_half_open_examples():
    assert prime_in_half_open(2) == 3
    assert prime_in_half_open(4) == 5
    assert prime_in_half_open(6) == 7
    with pytest.raises(ValueError):
        prime_in_half_open(1)


def test_prime_interval_sweep_small():
    assert check_prime_intervals(10000) == []


def test_interval_scans_agree_with_sieve():
    ps = primes_up_to(400)
    for n_val in range(2, 100):
        inside = [p for p in ps if 2 * n_val < p < 3 * n_val]
        assert prime_in_bertrand(n_val) == inside[0]
        inside = [p for p in ps if n_val + 1 <= p and 2 * p < 3 * (n_val + 1)]
        assert prime_in_half_open(n_val) == inside[0]


def test_euler_phi_and_factorize():
    assert euler_phi(25) == 20
    assert euler_phi(1) == 1
    assert factorize(360) == [(2, 3), (3, 2), (5, 1)]
    for n in range(2, 500):
        assert euler_phi(n) == sum(1 for u in range(1, n) if gcd(u, n) == 1)


def test_group_context():
    ctx = GroupContext.create(25)
    assert ctx.n == 25 and ctx.coprime6 and ctx.unit_count == 20
    assert not GroupContext.create(10).coprime6
    with pytest.raises(ValueError):
        GroupContext.create(4)
