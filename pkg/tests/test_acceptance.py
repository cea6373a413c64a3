"""Acceptance suite: one test per criterion, one printed line per criterion.

Run with ``pytest tests/test_acceptance.py -s`` to see the PASS lines as
they complete; the slow grids share the module-scoped report below.
"""

import time

import pytest

import fibval.formulas as formulas
from fibval.arith import _nu_int
from fibval.formulas import (
    all_qualified_labels,
    divides_p_central,
    is_odd_2n,
    is_odd_4n,
    is_odd_8n,
    nu5_central,
    nu_fibonomial_formula,
)
from fibval.oracle import OracleTier, fibonomial_exact, nu_fibonomial_oracle
from fibval.rank import rank_of_apparition
from fibval.verify import VerifyConfig, run_verify

GRID_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31)
EXACT_PRIMES = (2, 3, 5, 7, 11, 13)
PM2_PRIMES = (3, 7, 13, 17, 23)
PM1_PRIMES = (11, 19, 29, 31)
INDEX_LIMIT = 10**5
MILLION = 10**6


def record(num: int, description: str, ok: bool) -> None:
    print(f"ACCEPTANCE {num}: {'PASS' if ok else 'FAIL'} - {description}")
    assert ok, f"criterion {num} failed: {description}"


@pytest.fixture(scope="module")
def grid_report():
    config = VerifyConfig(primes=GRID_PRIMES, a_max=4, n_max=INDEX_LIMIT,
                          index_cap=INDEX_LIMIT, tier=OracleTier.MODULAR)
    return run_verify(config)


def test_criterion_1_grid_equivalence(grid_report):
    ok = (grid_report.mismatches == []
          and grid_report.cells_checked > 200_000
          and grid_report.elapsed_seconds < 300)
    record(1, f"central formulas match the modular oracle on "
              f"{grid_report.cells_checked} cells "
              f"({grid_report.elapsed_seconds:.0f}s)", ok)


def test_criterion_2_exact_tier_spot_grid():
    start = time.perf_counter()
    mismatches = 0
    checked = 0
    for m in range(0, 301):
        for k in range(0, m + 1):
            value = fibonomial_exact(m, k)
            for p in EXACT_PRIMES:
                checked += 1
                if nu_fibonomial_formula(p, m, k)[0].value != _nu_int(p, value):
                    mismatches += 1
    elapsed = time.perf_counter() - start
    ok = mismatches == 0 and elapsed < 120
    record(2, f"general formula matches the exact oracle on {checked} "
              f"(p, m, k) cells ({elapsed:.0f}s)", ok)


def test_criterion_3_2n_always_even():
    exceptions = [n for n in range(2, MILLION + 1) if is_odd_2n(n)]
    record(3, f"(2n, n) Fibonomial even for all 2 <= n <= 1e6 "
              f"({len(exceptions)} exceptions)", exceptions == [])


def test_criterion_4_4n_odd_iff_power_of_two():
    found = [n for n in range(1, MILLION + 1) if is_odd_4n(n)]
    expected = [1 << k for k in range(20)]
    record(4, f"odd (4n, n) at exactly the {len(expected)} powers of 2 up to 1e6",
           found == expected)


def test_criterion_5_8n_odd_membership():
    found = [n for n in range(1, MILLION + 1) if is_odd_8n(n)]
    frozen = [1, 7, 55, 439, 3511, 28087, 224695]
    derived = []
    k = 1
    while (n := (1 + 3 * 2**k) // 7) <= MILLION:
        assert (1 + 3 * 2**k) % 7 == 0
        derived.append(n)
        k += 3
    record(5, f"odd (8n, n) at exactly {frozen} up to 1e6",
           found == frozen == derived)


def test_criterion_6_5adic_binomial_reduction():
    def legendre(n: int) -> int:
        total, q = 0, 5
        while q <= n:
            total += n // q
            q *= 5
        return total

    bad = 0
    for a in range(1, 5):
        big_factor = 5**a
        for n in range(1, 10**4 + 1):
            value = nu5_central(a, n).value
            big = big_factor * n
            if value < 1 or value != legendre(big) - legendre(n) - legendre(big - n):
                bad += 1
    record(6, "5-adic central value equals the factorial-sum binomial valuation "
              "and is >= 1 for a <= 4, n <= 1e4", bad == 0)


def test_criterion_7_divisibility_predicates():
    bad = 0
    checked = 0

    def check(p: int, a: int, n: int) -> None:
        nonlocal bad, checked
        checked += 1
        divisible = divides_p_central(p, a, n)[0]
        oracle_sign = nu_fibonomial_oracle(p, p**a * n, n).value > 0
        if divisible != oracle_sign:
            bad += 1

    for p in PM2_PRIMES:
        a = 1
        while p**a <= INDEX_LIMIT:
            for n in range(1, INDEX_LIMIT // p**a + 1):
                check(p, a, n)
            a += 1
    for p in PM1_PRIMES:
        for n in range(1, INDEX_LIMIT // p + 1):
            check(p, 1, n)
        z = rank_of_apparition(p).z
        a = 2
        while p**a <= INDEX_LIMIT:
            for n in range(z, INDEX_LIMIT // p**a + 1, z):
                check(p, a, n)
            a += 1
    record(7, f"divisibility predicate agrees with the oracle sign on "
              f"{checked} criterion-applicable cells", bad == 0)


def test_criterion_8_branch_coverage(grid_report):
    declared = set(all_qualified_labels())
    ok = (set(grid_report.expected) == declared
          and grid_report.uncovered == ()
          and min(grid_report.branch_coverage.values()) >= 1)
    record(8, "the verification grid drives every branch of every formula", ok)


def test_criterion_9_mutation_sensitivity(monkeypatch):
    slice_config = VerifyConfig(primes=(2,), a_max=4, n_max=300, index_cap=5000)
    assert run_verify(slice_config).exit_code == 0
    mutations = [
        (formulas.DELTA2_EVEN_A, 3, 0),
        (formulas.DELTA2_EVEN_A, 5, 0),
        (formulas.DELTA2_ODD_A_CONST, 5, 1),
        (formulas.DELTA2_ODD_A_CONST, 3, 0),
        (formulas.DELTA2_ODD_A_CEIL, 4, (0, 0)),
    ]
    caught = 0
    for table, key, wrong in mutations:
        with monkeypatch.context() as patch:
            patch.setitem(table, key, wrong)
            if run_verify(slice_config).exit_code != 0:
                caught += 1
    record(9, f"{caught}/{len(mutations)} seeded delta-table mutations break "
              "the verification grid", caught == len(mutations))
