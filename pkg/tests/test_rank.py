import math

import pytest

from fibval.rank import Mod5Class, congruence_class_mod5, rank_of_apparition
from fibval.arith import fib, nu


def sieve(limit: int) -> list[int]:
    flags = bytearray([1]) * (limit + 1)
    flags[0:2] = b"\x00\x00"
    for i in range(2, int(limit**0.5) + 1):
        if flags[i]:
            flags[i * i:: i] = bytearray(len(flags[i * i:: i]))
    return [i for i, f in enumerate(flags) if f]


def test_examples():
    rec = rank_of_apparition(2)
    assert (rec.z, rec.nu_fz) == (3, 1)
    rec = rank_of_apparition(7)
    assert (rec.z, rec.nu_fz) == (8, 1)
    rec = rank_of_apparition(13)
    assert (rec.z, rec.nu_fz) == (7, 1)
    rec = rank_of_apparition(5)
    assert (rec.z, rec.nu_fz) == (5, 1)


def test_rejects_composite():
    with pytest.raises(ValueError):
        rank_of_apparition(9)


def test_congruence_class_examples():
    assert congruence_class_mod5(11) is Mod5Class.PLUS_MINUS_1
    assert congruence_class_mod5(3) is Mod5Class.PLUS_MINUS_2
    assert congruence_class_mod5(5) is Mod5Class.IS_5
    assert congruence_class_mod5(2) is Mod5Class.PLUS_MINUS_2
    assert congruence_class_mod5(19) is Mod5Class.PLUS_MINUS_1


def test_side_divisibility_up_to_1e4():
    for p in sieve(10**4):
        rec = rank_of_apparition(p)
        if p == 5:
            assert rec.z == 5
            continue
        side = p + 1 if p % 5 in (2, 3) else p - 1
        assert side % rec.z == 0, p
        assert math.gcd(rec.z, p) == 1
        assert rec.nu_fz >= 1


def test_divisibility_iff_rank_divides_index():
    # p | F_m exactly at the multiples of z(p), checked through 5 periods
    for p in sieve(10**4):
        z = rank_of_apparition(p).z
        a, b = 1, 1
        for m in range(1, 5 * z + 1):
            assert (a == 0) == (m % z == 0), (p, m)
            a, b = b, (a + b) % p


def test_nu_fz_matches_exact_fibonacci():
    for p in sieve(200):
        rec = rank_of_apparition(p)
        assert rec.nu_fz == nu(p, fib(rec.z)).value
