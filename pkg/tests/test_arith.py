import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fibval.arith import (
    Method,
    digit_sum,
    fib,
    fib_mod,
    geometric_sum,
    is_prime,
    nu,
    nu_factorial,
    nu_floor_factorial,
)

SMALL_PRIMES = (2, 3, 5, 7, 11, 13)


def legendre_sum(p: int, n: int) -> int:
    # independent partial-sum form of the factorial valuation
    total, q = 0, p
    while q <= n:
        total += n // q
        q *= p
    return total


@pytest.fixture(scope="module")
def fib_seq():
    # recurrence-built reference sequence, independent of fast doubling
    seq = [0, 1]
    for _ in range(10**4 - 1):
        seq.append(seq[-1] + seq[-2])
    return seq


def test_fib_seed_values():
    assert fib(0) == 0
    assert fib(1) == 1
    assert fib(2) == 1
    assert fib(10) == 55
    assert fib(12) == 144


def test_fib_matches_recurrence_up_to_1e4(fib_seq):
    for n, expected in enumerate(fib_seq):
        assert fib(n) == expected


def test_fib_rejects_negative():
    with pytest.raises(ValueError):
        fib(-1)


def test_fib_mod_examples():
    assert fib_mod(10, 7) == 6
    assert fib_mod(0, 5) == 0
    assert fib_mod(12, 144) == 0


def test_fib_mod_matches_fib_up_to_1e4(fib_seq):
    moduli = (2, 3, 7, 144, 1000, 999983, 10**6)
    for n, value in enumerate(fib_seq):
        for modulus in moduli:
            assert fib_mod(n, modulus) == value % modulus


def test_fib_mod_rejects_bad_modulus():
    with pytest.raises(ValueError):
        fib_mod(10, 0)


@given(st.integers(min_value=0, max_value=10**9), st.integers(min_value=1, max_value=10**9))
def test_fib_mod_modulus_one_and_range(n, modulus):
    value = fib_mod(n, modulus)
    assert 0 <= value < modulus or modulus == 1 and value == 0


def test_nu_examples():
    assert nu(2, 40) == (3, Method.FORMULA)
    assert nu(7, 21).value == 1
    assert nu(3, 4641).value == 1


def test_nu_rejects_zero():
    with pytest.raises(ValueError):
        nu(2, 0)


def test_nu_rejects_composite():
    with pytest.raises(ValueError):
        nu(6, 12)


@given(st.sampled_from(SMALL_PRIMES), st.integers(min_value=0, max_value=12),
       st.integers(min_value=1, max_value=10**6))
def test_nu_strips_exact_power(p, e, m):
    while m % p == 0:
        m //= p
    assert nu(p, p**e * m).value == e


def test_digit_sum_examples():
    assert digit_sum(2, 10) == 2
    assert digit_sum(5, 24) == 8
    assert digit_sum(7, 0) == 0


def test_digit_sum_rejects_bad_args():
    with pytest.raises(ValueError):
        digit_sum(1, 5)
    with pytest.raises(ValueError):
        digit_sum(2, -1)


@given(st.integers(min_value=2, max_value=50), st.integers(min_value=0, max_value=10**12))
def test_digit_sum_congruence(q, n):
    # casting out (q-1)s
    assert (n - digit_sum(q, n)) % (q - 1) == 0


@given(st.integers(min_value=2, max_value=50), st.integers(min_value=0, max_value=10**9))
def test_digit_sum_rebuild(q, n):
    digits = []
    x = n
    while x:
        x, r = divmod(x, q)
        digits.append(r)
    assert digit_sum(q, n) == sum(digits)


def test_nu_factorial_examples():
    assert nu_factorial(2, 10).value == 8
    assert nu_factorial(5, 25).value == 6
    assert nu_factorial(3, 1).value == 0


def test_nu_factorial_both_forms_up_to_1e5():
    for p in SMALL_PRIMES:
        for n in range(0, 10**5 + 1, 1):
            expected = legendre_sum(p, n)
            assert (n - digit_sum(p, n)) // (p - 1) == expected
            if n % 4096 == 0:  # full Valuation path sampled, identity checked above
                assert nu_factorial(p, n).value == expected


@given(st.sampled_from(SMALL_PRIMES), st.integers(min_value=0, max_value=10**7))
def test_nu_factorial_matches_legendre_sum(p, n):
    assert nu_factorial(p, n).value == legendre_sum(p, n)


def test_geometric_sum():
    assert geometric_sum(3, 0) == 0
    assert geometric_sum(3, 4) == 1 + 3 + 9 + 27
    assert geometric_sum(2, 5) == 31


def test_is_prime_spot_checks():
    assert [n for n in range(2, 40) if is_prime(n)] == \
        [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37]
    assert not is_prime(1)
    assert not is_prime(0)
    assert is_prime(2**61 - 1)
    assert not is_prime(2**62 + 1)
    with pytest.raises(ValueError):
        is_prime(2**64)


# --- floor/fraction bookkeeping -------------------------------------------
# Exact rationals as (num, den) pairs with den >= 1; floor is Python's //.

exact_pair = st.tuples(st.integers(min_value=-10**9, max_value=10**9),
                       st.integers(min_value=1, max_value=10**6))


@given(st.integers(min_value=-10**6, max_value=10**6), exact_pair)
def test_floor_shift_by_integer(k, pair):
    num, den = pair
    assert (k * den + num) // den == k + num // den
    assert (k * den + num) % den == num % den


@given(exact_pair)
def test_floor_of_negation(pair):
    num, den = pair
    total = num // den + (-num) // den
    assert total == (0 if num % den == 0 else -1)


@given(exact_pair, exact_pair)
def test_floor_of_sum(a, b):
    n1, d1 = a
    n2, d2 = b
    num, den = n1 * d2 + n2 * d1, d1 * d2
    carry = 1 if (n1 % d1) * d2 + (n2 % d2) * d1 >= den else 0
    assert num // den == n1 // d1 + n2 // d2 + carry


@given(exact_pair, st.integers(min_value=1, max_value=10**4))
def test_nested_floor_collapses(pair, k):
    num, den = pair
    assert (num // den) // k == num // (den * k)


# --- closed-form factorial valuation of floor(l * p^a / m) -----------------

def test_nu_floor_factorial_examples():
    assert nu_floor_factorial(3, 2, 1, 4).value == 0
    assert nu_floor_factorial(5, 1, 1, 4).value == 0
    assert nu_floor_factorial(3, 0, 7, 4).value == nu_factorial(3, 1).value == 0


def test_nu_floor_factorial_rejects_bad_modulus():
    # 7 is neither +1 nor -1 mod 5
    with pytest.raises(ValueError):
        nu_floor_factorial(7, 1, 3, 5)


def test_nu_floor_factorial_full_grid():
    for p in (2, 3, 7, 11, 13, 17, 19):
        for m in range(1, 21):
            if p % m != 1 % m and (p + 1) % m != 0:
                continue
            for a in range(0, 7):
                pa = p**a
                for l in range(0, 201):
                    got = nu_floor_factorial(p, a, l, m).value
                    want = nu_factorial(p, l * pa // m).value
                    assert got == want, (p, a, l, m)


@settings(max_examples=200)
@given(st.sampled_from((2, 3, 7, 11, 13, 17, 19, 23, 29)),
       st.integers(min_value=0, max_value=8),
       st.integers(min_value=0, max_value=10**4),
       st.integers(min_value=1, max_value=30))
def test_nu_floor_factorial_random(p, a, l, m):
    if p % m != 1 % m and (p + 1) % m != 0:
        return
    assert nu_floor_factorial(p, a, l, m).value == legendre_sum(p, l * p**a // m)
