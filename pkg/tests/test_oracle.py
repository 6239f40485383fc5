import dataclasses
import random

import pytest

import convcode.oracle as oracle_mod
from convcode import (
    adjacency,
    build,
    controller_form,
    enumerate_atomic,
    enumerate_molecular,
    gap_bound_check,
    omega_series,
    phi_series,
    pm,
)
from convcode.errors import LimitError
from convcode.oracle import _max_zero_run, survey

import genutil


def series_table(ls):
    return {
        (l, a): c
        for l in range(1, ls.trunc + 1)
        for a, c in ls.coeff(l).terms()
    }


def spectrum_tables(g, l_max):
    lam = adjacency(build(controller_form(g)))
    phi = phi_series(lam, l_max)
    return series_table(omega_series(phi)), series_table(phi)


def test_atomic_matches_displayed_distribution(g213):
    table = enumerate_atomic(g213, 11)
    low = {lw: c for lw, c in table.items() if lw[1] <= 9}
    assert low == {
        (5, 6): 1,
        (4, 7): 1, (6, 7): 1, (7, 7): 1,
        (6, 8): 1, (7, 8): 1, (8, 8): 1, (9, 8): 2,
        (8, 9): 4, (9, 9): 1, (10, 9): 3, (11, 9): 3,
    }


def test_single_row_code_tables(g1):
    # single atomic word per length; molecular counts grow like Fibonacci
    assert enumerate_atomic(g1, 6) == {(l, 2 * l): 1 for l in range(2, 7)}
    assert enumerate_molecular(g1, 6) == {
        (2, 4): 1, (3, 6): 1, (4, 8): 2, (5, 10): 3, (6, 12): 5,
    }


def test_short_horizon_is_empty(g213):
    res = survey(g213, 1)
    assert res.atomic == {} and res.molecular == {} and res.words == 0


def test_tables_equal_series(f2, g213, g_mixed, g1, g2):
    for g in (g213, g_mixed, g1, g2):
        res = survey(g, 8)
        omega_t, phi_t = spectrum_tables(g, 8)
        assert res.atomic == omega_t
        assert res.molecular == phi_t


def test_tables_equal_series_random(f2, f3):
    rng = random.Random(71)
    for fld, rounds in ((f2, 5), (f3, 3)):
        for _ in range(rounds):
            g = genutil.random_minimal_code(rng, fld, k_max=2, gamma_max=3)
            l_max = 6
            res = survey(g, l_max)
            omega_t, phi_t = spectrum_tables(g, l_max)
            assert res.atomic == omega_t
            assert res.molecular == phi_t


def test_gap_bound(g213, g1):
    assert gap_bound_check(g213, 11)
    assert gap_bound_check(g1, 6)
    res = survey(g1, 6)
    assert res.gap_violation is None


def test_max_zero_run_scanner():
    word = ((1, 0), (0, 0), (0, 0), (1, 1), (0, 0), (1, 0))
    assert _max_zero_run(word) == 2
    assert _max_zero_run(((1, 1), (1, 0))) == 0
    # a synthetic word violating a bound of 2 is detected by the same scan
    assert _max_zero_run(((1, 0), (0, 0), (0, 0), (0, 0), (1, 0))) > 2


def test_budget_guard(g213):
    with pytest.raises(LimitError):
        survey(g213, 11, budget=10)


def test_requires_minimal(f2):
    with pytest.raises(ValueError):
        survey(pm(f2, [[[1], [1]], [[0, 1], [0, 1]]]), 4)
    with pytest.raises(ValueError):
        survey(pm(f2, [[[1, 1], [1, 1]]]), 4)  # non-basic


def test_classifier_disagreement_is_fatal(monkeypatch, g213):
    # sabotage the register so the state criterion disagrees with splitting
    real = controller_form(g213)
    broken = dataclasses.replace(
        real, B=tuple(tuple(0 for _ in row) for row in real.B)
    )
    monkeypatch.setattr(oracle_mod, "controller_form", lambda g: broken)
    with pytest.raises(RuntimeError, match="disagree"):
        survey(g213, 5)
