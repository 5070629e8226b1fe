"""Acceptance suite.  Each test records one PASS/FAIL line shown in the terminal summary."""

import random

import pytest

from fdiff.cascade import cascade, compress_table, expand_table
from fdiff.clique import brute_force_max_clique, max_clique
from fdiff.exact import compute_d
from fdiff.formulas import greedy_bound, greedy_construct, squares_plus_two_lower_bound
from fdiff.graph import zero_neighborhood_graph
from fdiff.modular import local_density, mu_lower_scan
from fdiff.sets import ForbiddenSet, first_violation, is_x_set
from fdiff.verify import verify_formula

from conftest import FIVE_FAMILIES, record_criterion
from reference_data import (
    SHIFTED_PRIME_FREE_302, SHIFTED_PRIMES_TABLE, SQUARE_FREE_269, SQUARES_TABLE, per_n, rows_within,
)

S = ForbiddenSet.squares()
P_1 = ForbiddenSet.primes_shift(-1)


@pytest.fixture(scope="module")
def squares_150():
    return cascade(S, 1, 150)


@pytest.fixture(scope="module")
def shifted_primes_250():
    return cascade(P_1, 1, 250)


def _table_diff(records, X, reference, hi):
    got = expand_table(compress_table(records, 1, hi))
    want = per_n(rows_within(reference, 1, hi))
    bad = [n for n in range(1, hi + 1) if got.get(n) != want.get(n)]
    bad_witness = [r for r in records if len(r.witness) != r.d or not is_x_set(X, r.witness) or max(r.witness) > r.n_lo]
    return bad, bad_witness


def test_criterion_1_squares_table(squares_150):
    bad, bad_witness = _table_diff(squares_150, S, SQUARES_TABLE, 150)
    d = expand_table(compress_table(squares_150, 1, 150))
    ok = not bad and not bad_witness and d[100] == 24 and d[150] == 35
    record_criterion(1, "squares cascade N<=150 matches reference table", ok,
                     f"D(S,100)={d[100]}, D(S,150)={d[150]}, {len(bad)} differing N")
    assert ok


def test_criterion_2_shifted_primes_table(shifted_primes_250):
    bad, bad_witness = _table_diff(shifted_primes_250, P_1, SHIFTED_PRIMES_TABLE, 250)
    d = expand_table(compress_table(shifted_primes_250, 1, 250))
    ok = not bad and not bad_witness and d[104] == 10 and d[250] == 22
    record_criterion(2, "primes-1 cascade N<=250 matches reference table", ok,
                     f"D(P-1,104)={d[104]}, D(P-1,250)={d[250]}, {len(bad)} differing N")
    assert ok


def test_criterion_3_reference_witnesses():
    a = first_violation(S, SQUARE_FREE_269) is None and len(set(SQUARE_FREE_269)) == 54
    b = first_violation(P_1, SHIFTED_PRIME_FREE_302) is None and len(set(SHIFTED_PRIME_FREE_302)) == 24
    a = a and max(SQUARE_FREE_269) <= 269
    b = b and max(SHIFTED_PRIME_FREE_302) <= 302
    record_criterion(3, "54-element and 24-element witnesses validate", a and b,
                     f"squares/269: {a}, primes-1/302: {b}")
    assert a and b


def test_criterion_4_formula_checks():
    primes = verify_formula("primes", None, 1, 100)
    sq1 = verify_formula("squares+1", None, 1, 60)
    ok = primes.ok and sq1.ok and len(primes.rows) == 100 and len(sq1.rows) == 60
    record_criterion(4, "closed forms for primes (N<=100) and squares+1 (N<=60)", ok,
                     f"mismatches {len(primes.mismatches)} and {len(sq1.mismatches)}")
    assert ok


def test_criterion_5_squares_plus_two_equality():
    X = ForbiddenSet.squares_shift(2)
    report = verify_formula("squares+2-lb", X, 51, 150)
    unequal = [r.n for r in report.rows if r.status != "match"]
    at_149 = next(r for r in report.rows if r.n == 149)
    ok = report.ok and not unequal and at_149.computed_d == 38 and squares_plus_two_lower_bound(149).value == 38
    record_criterion(5, "squares+2 bound is exact on 51<=N<=150", ok,
                     f"D(S+2,149)={at_149.computed_d}, unequal at {unequal}")
    assert ok


def test_criterion_6_local_densities():
    s3 = ForbiddenSet.squares_shift(3)
    got = {
        "d_P(4)": local_density(ForbiddenSet.primes(), 4).d,
        "d_S+3(3)": local_density(s3, 3).d,
        "d_S+3(8)": local_density(s3, 8).d,
    }
    mu = mu_lower_scan(ForbiddenSet.primes(), 16).ratio
    want = {"d_P(4)": 1, "d_S+3(3)": 1, "d_S+3(8)": 2}
    ok = got == want and str(mu) == "1/4"
    record_criterion(6, "local densities and mu lower bound", ok,
                     ", ".join(f"{k}={v} (want {want[k]})" for k, v in got.items()) + f", mu_lower(P,16)={mu}")
    assert ok


def test_criterion_7_oracle_equivalence():
    bad = []
    for name, X in FIVE_FAMILIES.items():
        for n in range(1, 26):
            G = zero_neighborhood_graph(n, X)
            if max_clique(G).size != brute_force_max_clique(G).size:
                bad.append((name, n))
    record_criterion(7, "solver equals oracle for five families, N<=25", not bad, f"disagreements {bad}")
    assert not bad


def _invariant_failures(d: dict[int, int]) -> list[str]:
    out = []
    ns = sorted(d)
    for n in ns[:-1]:
        if not d[n] <= d[n + 1] <= d[n] + 1:
            out.append(f"monotone@{n}")
    for a in ns:
        for b in ns:
            if a <= b and a + b in d and d[a + b] > d[a] + d[b]:
                out.append(f"subadd@{a}+{b}")
    return out


def test_criterion_8_invariants(squares_150, shifted_primes_250):
    rng = random.Random(20261016)
    failures = []
    tables = {
        "S": expand_table(compress_table(squares_150, 1, 150)),
        "P-1": expand_table(compress_table(shifted_primes_250, 1, 250)),
    }
    for name in ("S+1", "S+2", "P"):
        tables[name] = expand_table(compress_table(cascade(FIVE_FAMILIES[name], 1, 150), 1, 150))
    for name, d in tables.items():
        failures += [f"{name}:{f}" for f in _invariant_failures(d)]

    pool = [
        S, P_1, ForbiddenSet.primes(), ForbiddenSet.powers(3),
        *(ForbiddenSet.squares_shift(c) for c in (-3, -2, -1, 1, 2, 3, 5)),
        *(ForbiddenSet.primes_shift(c) for c in (-2, 1, 2)),
        ForbiddenSet.polyz((1, 0, 1)), ForbiddenSet.polyz((2, 1, 0)),
    ]
    for _ in range(100):
        X, N = rng.choice(pool), rng.randint(2, 3000)
        res = greedy_construct(X, N)
        if res.value < greedy_bound(X, N) or not is_x_set(X, res.witness):
            failures.append(f"greedy:{X.spec}:{N}")

    for _ in range(20):
        name = rng.choice(sorted(FIVE_FAMILIES))
        N = rng.randint(20, 120)
        X = FIVE_FAMILIES[name]
        if compute_d(X, N, threads=1).d != compute_d(X, N, threads=2).d:
            failures.append(f"parallel:{name}:{N}")

    record_criterion(8, "monotonicity, subadditivity, greedy bound, parallel agreement", not failures,
                     f"{len(failures)} failures {failures[:5]}")
    assert not failures


@pytest.mark.slow
def test_stretch_squares_table_to_300():
    records = cascade(S, 1, 300)
    bad, bad_witness = _table_diff(records, S, SQUARES_TABLE, 300)
    assert not bad and not bad_witness
