import math

import pytest
from hypothesis import given, strategies as st

from coprimeseq.numtheory import MODULUS_CEILING, EulerSet, ModulusError, euler_set, factor
from oracles import is_prime, totatives, totient


@pytest.mark.parametrize(
    "a, factors, R, Q, phi",
    [
        (10, ((2, 1), (5, 1)), 10, 4, 4),
        (12, ((2, 2), (3, 1)), 6, 2, 4),
        (2, ((2, 1),), 2, 1, 1),
        (1024, ((2, 10),), 2, 1, 512),
        (9699690, ((2, 1), (3, 1), (5, 1), (7, 1), (11, 1), (13, 1), (17, 1), (19, 1)), 9699690, 1658880, 1658880),
    ],
)
def test_factor_examples(a, factors, R, Q, phi):
    m = factor(a)
    assert m.factors == factors
    assert (m.R, m.Q, m.phi) == (R, Q, phi)


def test_factor_large_prime_and_semiprime():
    p = 2**31 - 1
    assert factor(p).factors == ((p, 1),)
    assert factor(p * 65537).factors == ((65537, 1), (p, 1))
    assert factor(MODULUS_CEILING).a == MODULUS_CEILING


@pytest.mark.parametrize("bad", [1, 0, -7])
def test_factor_rejects_small(bad):
    with pytest.raises(ModulusError):
        factor(bad)


def test_factor_rejects_above_ceiling():
    with pytest.raises(ModulusError):
        factor(MODULUS_CEILING + 1)
    with pytest.raises(ModulusError):
        factor(1000, ceiling=999)


def test_factor_rejects_non_integer():
    with pytest.raises(TypeError):
        factor(10.0)
    with pytest.raises(TypeError):
        factor(True)


def test_a_equals_one_has_its_own_message():
    with pytest.raises(ModulusError, match="a = 1"):
        factor(1)


@given(st.integers(min_value=2, max_value=10**12))
def test_factor_invariants(a):
    m = factor(a)
    assert math.prod(p**e for p, e in m.factors) == a
    ps = m.primes
    assert list(ps) == sorted(set(ps))
    assert all(e >= 1 for _, e in m.factors)
    assert m.R == math.prod(ps)
    assert m.Q == math.prod(p - 1 for p in ps)
    assert m.phi == a // m.R * m.Q
    assert m.phi % m.Q == 0
    assert a % m.R == 0


@given(st.integers(min_value=2, max_value=10**6))
def test_factors_are_prime(a):
    assert all(is_prime(p) for p in factor(a).primes)


def test_totient_of_radical_is_Q():
    for a in range(2, 2000):
        m = factor(a)
        assert factor(m.R).phi == m.Q == totient(m.R)


@pytest.mark.parametrize(
    "m, expected",
    [(10, [1, 3, 7, 9]), (2, [1]), (30, [1, 7, 11, 13, 17, 19, 23, 29])],
)
def test_euler_set_examples(m, expected):
    assert list(euler_set(m)) == expected


def test_euler_set_matches_gcd_scan():
    for m in range(2, 600):
        assert list(euler_set(m)) == totatives(m)


def test_euler_set_sizes_up_to_10_4():
    for a in range(2, 10**4 + 1):
        m = factor(a)
        assert len(euler_set(a)) == m.phi
        assert len(euler_set(m.R)) == m.Q


@given(st.integers(min_value=3, max_value=5000))
def test_euler_set_shape(m):
    e = euler_set(m)
    assert e[0] == 1 and e[-1] == m - 1
    phi = len(e)
    assert all(e[i] + e[phi - 1 - i] == m for i in range(phi))
    assert all(x < y for x, y in zip(e, e[1:]))


def test_euler_set_errors_and_guard():
    with pytest.raises(ModulusError):
        euler_set(1)
    with pytest.raises(ModulusError):
        euler_set(0)
    with pytest.raises(ModulusError, match="ceiling"):
        euler_set(2**26)  # phi = 2**25
    with pytest.raises(ModulusError, match="ceiling"):
        euler_set(2**20, ceiling=2**18)


def test_euler_set_accepts_factored_and_membership():
    e = euler_set(factor(12))
    assert isinstance(e, EulerSet) and e.m == 12
    assert 5 in e and 6 not in e and 13 not in e
