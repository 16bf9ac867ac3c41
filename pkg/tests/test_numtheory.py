import math
import random

import pytest

from qlverify.numtheory import (
    Factorization,
    divisors,
    euler_phi,
    factorize,
    is_prime,
    multiplicative_order,
    prime_power_decomposition,
    smallest_primitive_root,
    squarefree_subsets,
)


def test_factorize_examples():
    assert factorize(1).factors == ()
    assert factorize(12).factors == ((2, 2), (3, 1))
    f = factorize(210)
    assert f.factors == ((2, 1), (3, 1), (5, 1), (7, 1))
    assert f.num_distinct_primes == 4
    assert f.radical == 210


def test_factorize_rejects_nonpositive():
    with pytest.raises(ValueError):
        factorize(0)


def test_factorization_invariants_checked():
    with pytest.raises(ValueError):
        Factorization(12, ((3, 1), (2, 2)))  # wrong prime order
    with pytest.raises(ValueError):
        Factorization(12, ((2, 1), (3, 1)))  # wrong product


def test_euler_phi_examples():
    assert euler_phi(1) == 1
    assert euler_phi(6) == 2
    assert euler_phi(12) == 4


def test_euler_phi_multiplicative():
    for m in range(1, 30):
        for n in range(1, 30):
            if math.gcd(m, n) == 1:
                assert euler_phi(m * n) == euler_phi(m) * euler_phi(n)


def test_euler_phi_against_direct_count():
    for n in range(1, 200):
        assert euler_phi(n) == sum(1 for k in range(1, n + 1) if math.gcd(k, n) == 1)


def test_squarefree_subsets_examples():
    assert squarefree_subsets([]) == [((), 1)]
    assert squarefree_subsets([2, 3]) == [
        ((), 1), ((2,), -1), ((3,), -1), ((2, 3), 1)
    ]
    signs = [s for _, s in squarefree_subsets([2, 3, 5])]
    assert signs == [1, -1, -1, -1, 1, 1, 1, -1]
    assert len(squarefree_subsets([2, 3, 5])) == 8


def test_squarefree_subsets_rejects_duplicates():
    with pytest.raises(ValueError):
        squarefree_subsets([2, 2])


def test_inclusion_exclusion_sign_sum():
    # sum of signs is 0 unless the prime list is empty
    assert sum(s for _, s in squarefree_subsets([])) == 1
    for primes in ([2], [2, 3], [2, 3, 5], [2, 3, 5, 7]):
        assert sum(s for _, s in squarefree_subsets(primes)) == 0


def test_divisors():
    assert divisors(1) == [1]
    assert divisors(12) == [1, 2, 3, 4, 6, 12]
    rng = random.Random(1)
    for _ in range(50):
        n = rng.randint(1, 500)
        assert divisors(n) == [d for d in range(1, n + 1) if n % d == 0]


def test_prime_power_decomposition():
    assert prime_power_decomposition(8) == (2, 3)
    assert prime_power_decomposition(7) == (7, 1)
    for bad in (1, 6, 12):
        with pytest.raises(ValueError):
            prime_power_decomposition(bad)


def test_is_prime_small():
    primes = [n for n in range(60) if is_prime(n)]
    assert primes == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59]


def test_multiplicative_order():
    assert multiplicative_order(4, 63) == 3
    assert multiplicative_order(2, 7) == 3
    assert multiplicative_order(1, 1) == 1
    with pytest.raises(ValueError):
        multiplicative_order(6, 63)
    rng = random.Random(2)
    for _ in range(50):
        n = rng.randint(2, 300)
        a = rng.randint(1, n)
        if math.gcd(a, n) != 1:
            continue
        d = multiplicative_order(a, n)
        assert pow(a, d, n) == 1
        assert all(pow(a, e, n) != 1 for e in range(1, d))


def test_smallest_primitive_root():
    assert smallest_primitive_root(5) == 2
    assert smallest_primitive_root(7) == 3
    assert smallest_primitive_root(9) == 2
    with pytest.raises(ValueError):
        smallest_primitive_root(8)
