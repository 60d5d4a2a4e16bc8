import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from turan_forge.errors import InvalidParameterError, SearchCapError
from turan_forge.finite_field import (
    PrimeModulus,
    discrete_log,
    factorize,
    find_congruent_prime,
    is_prime,
    is_primitive_root,
    mod_pow,
    smallest_primitive_root,
)


def sieve(limit):
    flags = np.ones(limit + 1, dtype=bool)
    flags[:2] = False
    for i in range(2, int(limit**0.5) + 1):
        if flags[i]:
            flags[i * i :: i] = False
    return flags


PRIMES_TO_3000 = np.flatnonzero(sieve(3000)).tolist()


def slow_pow(base, exp, p):
    out = 1
    for _ in range(exp):
        out = out * base % p
    return out


def multiplicative_order(g, p):
    x, k = g % p, 1
    while x != 1:
        x = x * g % p
        k += 1
    return k


class TestModPow:
    @pytest.mark.parametrize("base,exp,p,expected", [(3, 6, 7, 1), (2, 14, 29, 28)])
    def test_examples(self, base, exp, p, expected):
        assert slow_pow(base, exp, p) == expected
        assert mod_pow(base, exp, p) == expected

    @pytest.mark.parametrize("x", [1, 2, 5, 12])
    def test_zero_exponent(self, x):
        assert mod_pow(x, 0, 13) == 1

    def test_accepts_prime_modulus(self):
        assert mod_pow(2, 14, PrimeModulus.of(29)) == 28

    @given(st.integers(0, 96), st.integers(0, 300))
    def test_matches_repeated_multiplication(self, base, exp):
        assert mod_pow(base, exp, 97) == slow_pow(base, exp, 97)

    def test_negative_exponent_rejected(self):
        with pytest.raises(InvalidParameterError):
            mod_pow(2, -1, 7)


class TestPrimeModulus:
    def test_factorisation_stored(self):
        m = PrimeModulus.of(61)
        assert m.factors == ((2, 2), (3, 1), (5, 1))

    @pytest.mark.parametrize("bad", [1, 2, 4, 9, 2**31 + 11])
    def test_rejects(self, bad):
        with pytest.raises(InvalidParameterError):
            PrimeModulus.of(bad)

    def test_rejects_wrong_factorisation(self):
        with pytest.raises(InvalidParameterError):
            PrimeModulus(7, ((2, 1),))

    def test_is_prime_agrees_with_sieve(self):
        flags = sieve(3000)
        assert [n for n in range(3001) if is_prime(n)] == np.flatnonzero(flags).tolist()

    @given(st.integers(1, 10**6))
    def test_factorize_product(self, n):
        f = factorize(n)
        assert np.prod([q**k for q, k in f], dtype=object) == n
        assert all(is_prime(q) for q, _ in f)


class TestCongruentPrime:
    @pytest.mark.parametrize("m,t,expected", [(3, 2, 3), (10, 4, 13), (24, 6, 31)])
    def test_examples(self, m, t, expected):
        assert find_congruent_prime(m, t).p == expected

    @given(st.integers(3, 2500), st.sampled_from([2, 4, 6, 8, 10, 12]))
    def test_matches_sieve(self, m, t):
        expected = next(p for p in PRIMES_TO_3000 if p >= m and (p - 1) % (t - 1) == 0)
        assert find_congruent_prime(m, t).p == expected

    def test_ceiling(self):
        with pytest.raises(SearchCapError):
            find_congruent_prime(14, 4, ceiling=19)

    @pytest.mark.parametrize("m,t", [(2, 2), (10, 3), (10, 0)])
    def test_rejects(self, m, t):
        with pytest.raises(InvalidParameterError):
            find_congruent_prime(m, t)


class TestPrimitiveRoot:
    @pytest.mark.parametrize("p,expected", [(7, 3), (3, 2), (29, 2)])
    def test_examples(self, p, expected):
        assert smallest_primitive_root(p) == expected

    def test_order_oracle(self):
        assert multiplicative_order(2, 7) == 3
        assert multiplicative_order(3, 7) == 6
        assert multiplicative_order(2, 29) == 28

    @pytest.mark.parametrize("p", [p for p in PRIMES_TO_3000 if 3 <= p <= 400])
    def test_smallest_by_order(self, p):
        g = smallest_primitive_root(p)
        assert multiplicative_order(g, p) == p - 1
        assert all(multiplicative_order(h, p) < p - 1 for h in range(2, g))
        assert is_primitive_root(g, p)


class TestDiscreteLog:
    @pytest.mark.parametrize("f,g,p,expected", [(3, 3, 7, 1), (6, 3, 7, 3), (1, 3, 7, 6)])
    def test_examples(self, f, g, p, expected):
        assert discrete_log(f, g, p) == expected

    def test_zero_rejected(self):
        with pytest.raises(InvalidParameterError):
            discrete_log(0, 3, 7)

    @pytest.mark.parametrize("p", [3, 7, 29, 997, 1009, 4099, 9973])
    def test_round_trip_is_bijection(self, p):
        g = smallest_primitive_root(p)
        logs = [discrete_log(f, g, p) for f in range(1, p)]
        assert sorted(logs) == list(range(1, p))
        assert all(pow(g, k, p) == f for f, k in zip(range(1, p), logs))

    @settings(max_examples=50)
    @given(st.sampled_from([p for p in PRIMES_TO_3000 if p > 1000]), st.data())
    def test_bsgs_against_scan(self, p, data):
        g = smallest_primitive_root(p)
        k = data.draw(st.integers(1, p - 1))
        assert discrete_log(pow(g, k, p), g, p) == k

    def test_non_generator_detected(self):
        with pytest.raises(InvalidParameterError):
            discrete_log(3, 2, 7)  # 2 has order 3 mod 7
        with pytest.raises(InvalidParameterError):
            # a generator is a non-residue, so no power of the square 4 reaches it
            discrete_log(smallest_primitive_root(1009), 4, 1009)
