"""Brute-force ground truth for Fibonomial valuations.

Two deliberately naive, mutually independent routes:

* tier A ("exact"): build the Fibonomial coefficient as a big integer from
  the defining product and count prime factors directly;
* tier B ("modular"): sum per-index Fibonacci valuations, each found by
  testing F_i against increasing prime powers with modular fast doubling.

Neither route knows anything about ranks of apparition or the closed-form
layer; this module must never import fibval.formulas.
"""

from __future__ import annotations

import os
import threading
from enum import Enum

from .arith import FormulaIntegrityError, Method, Valuation, _nu_int, fib, fib_mod, require_prime

EXACT_CAP_DEFAULT = 400
EXACT_CAP_ENV = "FIBVAL_EXACT_CAP"
MODULAR_CAP = 10**7
_EXPONENT_CAP = 64


class OracleTier(Enum):
    EXACT = "exact"
    MODULAR = "modular"


def exact_cap() -> int:
    """Tier-A index cap; overridable via the FIBVAL_EXACT_CAP env var."""
    raw = os.environ.get(EXACT_CAP_ENV)
    if raw is None:
        return EXACT_CAP_DEFAULT
    try:
        cap = int(raw)
    except ValueError as exc:
        raise ValueError(f"{EXACT_CAP_ENV} must be an integer, got {raw!r}") from exc
    if cap < 1:
        raise ValueError(f"{EXACT_CAP_ENV} must be >= 1, got {cap}")
    return cap


# Prefix products prod_{i<=j} F_i, grown on demand.  _fib_products[j] is the
# product over i = 1..j (index 0 holds the empty product 1).
_fib_products: list[int] = [1]
_products_lock = threading.Lock()


def _product_prefix(j: int) -> int:
    if j >= len(_fib_products):
        with _products_lock:
            while len(_fib_products) <= j:
                i = len(_fib_products)
                _fib_products.append(_fib_products[-1] * fib(i))
    return _fib_products[j]


def fibonomial_exact(m: int, k: int, cap: int | None = None) -> int:
    """The Fibonomial coefficient as an exact integer.

    The quotient of Fibonacci prefix products is asserted to divide
    exactly, witnessing integrality on every call.
    """
    if cap is None:
        cap = exact_cap()
    if not 0 <= k <= m:
        raise ValueError(f"need 0 <= k <= m, got m={m}, k={k}")
    if m > cap:
        raise ValueError(f"exact tier capped at m <= {cap}, got m={m}")
    num = _product_prefix(m)
    den = _product_prefix(k) * _product_prefix(m - k)
    q, r = divmod(num, den)
    if r:
        raise FormulaIntegrityError(f"Fibonomial product not an integer at (m={m}, k={k})")
    return q


# Per-prime prefix sums of nu_p(F_i):  _val_sums[p][j] = sum_{i<=j} nu_p(F_i).
_val_sums: dict[int, list[int]] = {}
_sums_lock = threading.Lock()


def _index_valuation(p: int, i: int) -> int:
    """nu_p(F_i) by escalating prime-power residue tests."""
    if fib_mod(i, p) != 0:
        return 0
    e = 1
    modulus = p * p
    while fib_mod(i, modulus) == 0:
        e += 1
        if e >= _EXPONENT_CAP:
            raise FormulaIntegrityError(f"nu_{p}(F_{i}) reached the hard cap {_EXPONENT_CAP}")
        modulus *= p
    return e


def _valuation_prefix(p: int, j: int) -> list[int]:
    sums = _val_sums.get(p)
    if sums is None or len(sums) <= j:
        with _sums_lock:
            sums = _val_sums.setdefault(p, [0])
            while len(sums) <= j:
                i = len(sums)
                sums.append(sums[-1] + _index_valuation(p, i))
    return sums


def nu_fibonomial_oracle(p: int, m: int, k: int, tier: OracleTier = OracleTier.MODULAR,
                         cap: int | None = None) -> Valuation:
    """Ground-truth nu_p of a Fibonomial coefficient via the chosen tier."""
    require_prime(p)
    if not 0 <= k <= m:
        raise ValueError(f"need 0 <= k <= m, got m={m}, k={k}")
    if tier is OracleTier.EXACT:
        return Valuation(_nu_int(p, fibonomial_exact(m, k, cap=cap)), Method.ORACLE_EXACT)
    if m > MODULAR_CAP:
        raise ValueError(f"modular tier capped at m <= {MODULAR_CAP}, got m={m}")
    sums = _valuation_prefix(p, m)
    total = sums[m] - sums[m - k] - sums[k]
    if total < 0:
        raise FormulaIntegrityError(
            f"negative valuation sum at (p={p}, m={m}, k={k}); integrality violated")
    return Valuation(total, Method.ORACLE_MODULAR)


def clear_caches() -> None:
    with _products_lock:
        del _fib_products[1:]
    with _sums_lock:
        _val_sums.clear()
