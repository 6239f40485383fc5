import random

import pytest

from convcode import (
    LSeries,
    WeightEnum,
    active_burst_distances,
    adj_power,
    adjacency,
    build,
    controller_form,
    extend,
    extended_row_distances,
    free_distance,
    omega_series,
    phi_series,
    pm,
)
from convcode.errors import LimitError
from convcode.spectrum import block_omega, block_weight_enumerator, format_series

import genutil


def grid(lam):
    return tuple(tuple(dict(e.terms()) for e in row) for row in lam.entries)


def lam_of(g):
    return adjacency(build(controller_form(g)))


def series_table(ls):
    return {
        (l, a): c
        for l in range(1, ls.trunc + 1)
        for a, c in ls.coeff(l).terms()
    }


# frozen: the 8x8 adjacency matrix of the memory-3 example
E213_GRID = (
    ({}, {}, {}, {}, {2: 1}, {}, {}, {}),
    ({2: 1}, {}, {}, {}, {0: 1}, {}, {}, {}),
    ({}, {2: 1}, {}, {}, {}, {0: 1}, {}, {}),
    ({}, {0: 1}, {}, {}, {}, {2: 1}, {}, {}),
    ({}, {}, {1: 1}, {}, {}, {}, {1: 1}, {}),
    ({}, {}, {1: 1}, {}, {}, {}, {1: 1}, {}),
    ({}, {}, {}, {1: 1}, {}, {}, {}, {1: 1}),
    ({}, {}, {}, {1: 1}, {}, {}, {}, {1: 1}),
)

# frozen: the displayed weight distribution through W^9
E213_OMEGA_LOW = {
    (5, 6): 1,
    (4, 7): 1, (6, 7): 1, (7, 7): 1,
    (6, 8): 1, (7, 8): 1, (8, 8): 1, (9, 8): 2,
    (8, 9): 4, (9, 9): 1, (10, 9): 3, (11, 9): 3,
}


def test_weight_enum_basics():
    a = WeightEnum({2: 1})
    b = WeightEnum({1: 2, 3: 1})
    assert str(a + b) == "2W + W^2 + W^3"
    assert (a * b).terms() == ((3, 2), (5, 1))
    assert (a - a) == WeightEnum.zero()
    assert not WeightEnum.zero()
    assert WeightEnum.one().coeff(0) == 1
    assert b.min_weight() == 1 and b.max_weight() == 3 and b.count() == 3


def test_adjacency_mixed_degrees(g_mixed):
    assert grid(lam_of(g_mixed)) == (
        ({2: 1}, {1: 2}),
        ({2: 2}, {1: 1, 3: 1}),
    )


def test_adjacency_memory_three(g213):
    assert grid(lam_of(g213)) == E213_GRID


def test_adjacency_shifted_code(g2):
    assert grid(lam_of(g2)) == (({}, {1: 1}), ({3: 1}, {2: 1}))


def test_row_sums_count_edges(g213, g_mixed, g1):
    for g in (g213, g_mixed, g1):
        lam = lam_of(g)
        q, k = lam.q, controller_form(g).k
        for i, row in enumerate(lam.entries):
            total = sum(e.count() for e in row)
            assert total == q**k - (1 if i == 0 else 0)
        gam = extend(lam)
        assert all(
            sum(e.count() for e in row) == q**k for row in gam.entries
        )


def test_adj_power(g1):
    lam = lam_of(g1)
    assert adj_power(lam, 1) == lam
    sq = adj_power(lam, 2)
    assert dict(sq.entry(0, 0).terms()) == {4: 1}
    gam_sq = adj_power(extend(lam), 2)
    assert sum(1 for e in gam_sq.row(0) if e) == 2
    with pytest.raises(ValueError):
        adj_power(lam, 0)


def test_phi_series(g1, g213):
    phi = phi_series(lam_of(g1), 8)
    fib = [1, 1, 2, 3, 5, 8, 13]
    assert dict(phi.coeff(0).terms()) == {0: 1}
    assert dict(phi.coeff(1).terms()) == {}
    for l in range(2, 9):
        assert dict(phi.coeff(l).terms()) == {2 * l: fib[l - 2]}

    phi213 = phi_series(lam_of(g213), 6)
    assert phi213.coeff(1) == WeightEnum.zero()
    assert phi213.coeff(5).coeff(6) == 1  # one molecular word of weight 6, length 5

    with pytest.raises(ValueError):
        phi_series(extend(lam_of(g1)), 4)


def test_omega_matches_displayed_series(g213):
    omega = omega_series(phi_series(lam_of(g213), 12))
    low = {lw: c for lw, c in series_table(omega).items() if lw[1] <= 9}
    assert low == E213_OMEGA_LOW


def test_omega_geometric_series(g1, g2):
    for g in (g1, g2):
        omega = omega_series(phi_series(lam_of(g), 8))
        assert series_table(omega) == {(l, 2 * l): 1 for l in range(2, 9)}


def test_omega_of_trivial_phi():
    assert omega_series(LSeries.one(5)) == LSeries.zero(5)
    bad = LSeries(2, [WeightEnum.monomial(1), WeightEnum.zero(), WeightEnum.zero()])
    with pytest.raises(ValueError):
        omega_series(bad)


def test_phi_times_one_minus_omega_is_one(f2, f3):
    rng = random.Random(83)
    for fld in (f2, f3):
        for _ in range(6):
            g = genutil.random_minimal_code(rng, fld, gamma_max=3)
            phi = phi_series(lam_of(g), 7)
            omega = omega_series(phi)
            assert phi * (LSeries.one(7) - omega) == LSeries.one(7)
            assert all(c.is_nonnegative() for c in omega.coeffs)
            for l in range(8):
                assert omega.coeff(l).coeff(0) == 0
                mx = omega.coeff(l).max_weight()
                assert mx is None or mx <= g.n * l
                assert phi.coeff(l).coeff(0) == (1 if l == 0 else 0)


def test_free_distance(g213, g1):
    omega = omega_series(phi_series(lam_of(g213), 26))
    fd = free_distance(omega, atomic_gap=5)  # memory 3 + right-inverse degree 2
    assert fd.value == 6 and fd.certified

    fd = free_distance(omega_series(phi_series(lam_of(g213), 12)), atomic_gap=5)
    assert fd.value == 6 and not fd.certified

    fd = free_distance(omega_series(phi_series(lam_of(g1), 8)), atomic_gap=1)
    assert fd.value == 4 and fd.certified

    with pytest.raises(LimitError):
        free_distance(omega_series(phi_series(lam_of(g213), 1)))


def test_extended_row_distances(g213, g1):
    omega = omega_series(phi_series(lam_of(g213), 9))
    assert extended_row_distances(omega) == (None, None, None, 7, 6, 7, 7, 8, 8)
    omega1 = omega_series(phi_series(lam_of(g1), 6))
    assert extended_row_distances(omega1) == (None, 4, 6, 8, 10, 12)
    assert extended_row_distances(LSeries.zero(3)) == (None, None, None)


def test_active_burst_distances(g213, g1):
    phi1 = phi_series(lam_of(g1), 8)
    assert active_burst_distances(phi1) == (None, 4, 6, 8, 10, 12, 14, 16)
    phi = phi_series(lam_of(g213), 12)
    bursts = [d for d in active_burst_distances(phi) if d is not None]
    assert min(bursts) == 6  # agrees with the free distance
    assert active_burst_distances(LSeries.zero(0)) == ()


def test_block_code_degeneration(f2):
    g = pm(f2, [[[1], [1], [0]], [[0], [1], [1]]])
    lam = block_weight_enumerator(g)
    assert dict(lam.terms()) == {2: 3}
    omega = block_omega(g, 4)
    assert dict(omega.coeff(1).terms()) == {2: 3}
    assert all(not omega.coeff(l) for l in (0, 2, 3, 4))
    with pytest.raises(ValueError):
        block_weight_enumerator(pm(f2, [[[1], [0, 1]]]))


def test_format_series(g1):
    omega = omega_series(phi_series(lam_of(g1), 4))
    assert format_series(omega) == "L^2 W^4 + L^3 W^6 + L^4 W^8"
    assert format_series(LSeries.zero(3)) == "0"
