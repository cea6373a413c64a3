"""Rank of apparition z(p): the first Fibonacci index divisible by p.

Records are cached per prime because the formula layer queries the same
handful of primes millions of times during a grid run.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from enum import Enum

from .arith import FormulaIntegrityError, fib_mod, require_prime

# Hard stop for the nu_p(F_z) exponent search.  No prime with
# nu_p(F_z(p)) >= 2 is known below 2^64, so hitting this is a bug.
_NU_FZ_CAP = 64


class Mod5Class(Enum):
    PLUS_MINUS_1 = "plus_minus_1"
    PLUS_MINUS_2 = "plus_minus_2"
    IS_5 = "is_5"


@dataclass(frozen=True, slots=True)
class RankRecord:
    p: int
    z: int       # smallest index with p | F_z
    nu_fz: int   # nu_p(F_z), always >= 1


_cache: dict[int, RankRecord] = {}
_cache_lock = threading.Lock()


def congruence_class_mod5(p: int) -> Mod5Class:
    """Residue class of p mod 5 that selects the closed-form branch."""
    require_prime(p)
    if p == 5:
        return Mod5Class.IS_5
    if p % 5 in (1, 4):
        return Mod5Class.PLUS_MINUS_1
    return Mod5Class.PLUS_MINUS_2


def rank_of_apparition(p: int) -> RankRecord:
    """RankRecord for a prime p, computed on first use and cached.

    z is found by scanning Fibonacci pairs mod p; the scan is bounded by
    p + 1 because z(p) divides p - 1 or p + 1 (and z(5) = 5).
    """
    rec = _cache.get(p)
    if rec is not None:
        return rec
    require_prime(p)
    z = _scan_rank(p)
    nu_fz = _nu_of_fz(p, z)
    rec = RankRecord(p, z, nu_fz)
    _check_record(rec)
    with _cache_lock:
        _cache.setdefault(p, rec)
    return rec


def _scan_rank(p: int) -> int:
    a, b = 1, 1  # F_1, F_2 mod p
    j = 1
    while j <= p + 1:
        if a == 0:
            return j
        a, b = b, (a + b) % p
        j += 1
    raise FormulaIntegrityError(f"no rank of apparition found for p={p} within p+1 steps")


def _nu_of_fz(p: int, z: int) -> int:
    e = 1
    modulus = p * p
    while fib_mod(z, modulus) == 0:
        e += 1
        if e >= _NU_FZ_CAP:
            raise FormulaIntegrityError(f"nu_{p}(F_{z}) reached the hard cap {_NU_FZ_CAP}")
        modulus *= p
    return e


def _check_record(rec: RankRecord) -> None:
    p, z = rec.p, rec.z
    if p == 5:
        if z != 5:
            raise FormulaIntegrityError(f"z(5) must be 5, got {z}")
        return
    if math.gcd(z, p) != 1:
        raise FormulaIntegrityError(f"gcd(z({p}), {p}) != 1")
    side = p + 1 if p % 5 in (2, 3) else p - 1
    if side % z:
        raise FormulaIntegrityError(f"z({p}) = {z} does not divide {side}")


def clear_cache() -> None:
    with _cache_lock:
        _cache.clear()
