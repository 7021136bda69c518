"""End-to-end acceptance checks, one test per criterion.

Each test prints a single pass or fail line so a log of the run reads as a
checklist.  Everything is exact: a criterion passes only when every compared
entry matches on the nose.
"""

import itertools
import random
import time
from contextlib import contextmanager
from fractions import Fraction

import pytest

from gsf import matrices
from gsf.combinatorics import (color_positions, gon_factor_labels,
                               gon_positions_closed, gon_positions_enumerated,
                               gon_positions_from_parity, gon_sequences,
                               propagate_gon_indices, simplex_positions,
                               simplex_positions_closed)
from gsf.field import RationalField, field_create
from gsf.grassmann import gf4_point, random_point
from gsf.solutions import build_A, build_R, build_Z, reduce_matrix
from gsf.verify import (green_spectrum, verify_colors, verify_gon,
                        verify_intertwining, verify_ranks, verify_reduction,
                        verify_simplex)

F = RationalField()

POINTS_PER_RANK = 100


@contextmanager
def criterion(number, label):
    try:
        yield
    except BaseException:
        print("criterion %2d  %-52s fail" % (number, label))
        raise
    print("criterion %2d  %-52s pass" % (number, label))


@pytest.fixture(scope="module")
def rational_points():
    """100 seeded points per rank, shared by the equation criteria."""
    return {n: [random_point(n, F, seed=10000 * n + s)
                for s in range(POINTS_PER_RANK)]
            for n in (1, 2, 3, 4)}


def test_criterion_01_polygon_equation(rational_points):
    with criterion(1, "polygon equation, 100 rational points per rank"):
        start = time.monotonic()
        for n in (1, 2, 3, 4):
            for point in rational_points[n]:
                report = verify_gon(point)
                assert report.status == "pass", (n, report.witness)
                assert report.params["dim"] == n * (n + 1) // 2
            if n == 3:
                assert time.monotonic() - start < 60
        assert time.monotonic() - start < 300


def test_criterion_02_simplex_equation(rational_points):
    with criterion(2, "simplex equation, same points, dims 3/10/21/36"):
        start = time.monotonic()
        dims = {1: 3, 2: 10, 3: 21, 4: 36}
        for n in (1, 2, 3, 4):
            for point in rational_points[n]:
                report = verify_simplex(point)
                assert report.status == "pass", (n, report.witness)
                assert report.params["dim"] == dims[n]
            if n == 3:
                assert time.monotonic() - start < 60
        assert time.monotonic() - start < 300


def test_criterion_03_characteristic_two_fixture():
    with criterion(3, "four-element field fixture, characteristic 2"):
        point = gf4_point()
        assert point.field.characteristic == 2
        assert len(point.table.entries) == 10
        assert point.table.all_nonzero()
        assert verify_gon(point).status == "pass"
        assert verify_simplex(point).status == "pass"
        green = green_spectrum(point)
        assert green.status == "pass"
        assert green.params["ranks"] == "skipped in characteristic 2"


def test_criterion_04_trigon_closed_forms():
    with criterion(4, "trigon closed forms on 1000 points"):
        for seed in range(1000):
            point = random_point(1, F, seed=seed)
            p12 = point.table[(1, 2)]
            p13 = point.table[(1, 3)]
            p23 = point.table[(2, 3)]
            a1 = build_A(point, 1)[0][0]
            a2 = build_A(point, 2)[0][0]
            a3 = build_A(point, 3)[0][0]
            assert a1 == -p13 / p12
            assert a2 == p23 / p12
            assert a3 == -p23 / p13
            assert a1 * a3 == a2


def test_criterion_05_green_spectrum():
    with criterion(5, "green block ranks (0,1), (1,3), (3,6)"):
        expected = {1: (0, 1), 2: (1, 3), 3: (3, 6)}
        for descriptor in ("q", "gf(11)"):
            field = field_create(descriptor)
            for n in (1, 2, 3):
                for seed in range(3):
                    point = random_point(n, field, seed=5000 + 10 * n + seed)
                    report = green_spectrum(point)
                    assert report.status == "pass", report.witness
                    minus, plus = expected[n]
                    assert report.params["ranks"] == {"minus": minus,
                                                      "plus": plus}


def test_criterion_06_three_color_decomposition(rational_points):
    with criterion(6, "three-color block decomposition"):
        for n in (1, 2, 3):
            for point in rational_points[n][:5]:
                report = verify_colors(point)
                assert report.status == "pass", (n, report.witness)
        field = field_create("gf(11)")
        for n in (1, 2, 3):
            point = random_point(n, field, seed=600 + n)
            assert verify_colors(point).status == "pass"


def test_criterion_07_intertwining_relations():
    with criterion(7, "intertwining relations, 20 points per field"):
        grid = [("q", (1, 2, 3)), ("gf(11)", (1, 2, 3)),
                ("gf(97)", (1, 2, 3)), ("gf(2,2;1,1,1)", (1, 2)),
                ("gf(3,2;1,0,1)", (1, 2, 3))]
        for descriptor, ranks in grid:
            field = field_create(descriptor)
            for n in ranks:
                for seed in range(20):
                    point = random_point(n, field, seed=7000 + 100 * n + seed)
                    report = verify_intertwining(point)
                    assert report.status == "pass", \
                        (descriptor, n, seed, report.witness)


def test_criterion_08_rank_suite(rational_points):
    with criterion(8, "span ranks n, n, n(n+1)/2, n(n+1)/2, n(n-1)/2"):
        for n in (1, 2, 3):
            for point in rational_points[n][:5]:
                report = verify_ranks(point)
                assert report.status == "pass", (n, report.witness)
        field = field_create("gf(11)")
        for n in (1, 2, 3):
            point = random_point(n, field, seed=800 + n)
            assert verify_ranks(point).status == "pass"


def test_criterion_09_position_tables():
    with criterion(9, "position tables: closed forms, n=2 verbatim, flow"):
        for n in range(1, 7):
            big = 2 * n
            for q in range(1, big + 2):
                assert simplex_positions_closed(big, q) == \
                    simplex_positions(big, q)
            for q in range(1, 2 * n + 2):
                enumerated = gon_positions_enumerated(n, q)
                assert gon_positions_closed(n, q) == enumerated
                assert gon_positions_from_parity(n, q) == enumerated
        assert {q: gon_positions_closed(2, q) for q in range(1, 6)} == \
            {1: [1, 2], 2: [1, 2], 3: [1, 3], 4: [2, 3], 5: [2, 3]}
        assert {q: simplex_positions(4, q) for q in range(1, 6)} == \
            {1: [1, 2, 3, 4], 2: [1, 5, 6, 7], 3: [2, 5, 8, 9],
             4: [3, 6, 8, 10], 5: [4, 7, 9, 10]}
        for n in range(1, 7):
            initial, final = (tuple(s) for s in gon_sequences(n))
            # both sides of the equation drive the pairs to the final state
            for labels in gon_factor_labels(n):
                states, _ = propagate_gon_indices(n, labels)
                assert states[0] == initial
                assert states[-1] == final
            trace = color_positions(n)
            assert len(trace.rows) == 2 * n + 2


def test_criterion_10_reductions():
    with criterion(10, "reduced operators satisfy the smaller equations"):
        rng = random.Random(10)
        for n in (2, 3):
            point = random_point(n, F, seed=1000 + n)
            field = point.field
            lam_random = field.zero
            while lam_random == field.zero:
                lam_random = field.random(rng)
            lambdas = [field.zero, field.one, lam_random]
            report = verify_reduction(point, lambdas=lambdas, depth=1)
            assert report.status == "pass", report.witness
            for q in range(1, 2 * n + 1):
                for lam in lambdas:
                    closed = build_Z(point, q, lam)
                    eliminated = reduce_matrix(field, build_R(point, q), lam)
                    assert matrices.mat_eq(closed, eliminated)
        point = random_point(3, F, seed=1003)
        report = verify_reduction(point, lambdas=[Fraction(2, 3)], depth=2)
        assert report.status == "pass", report.witness


def test_criterion_11_mutation_sensitivity(rational_points):
    with criterion(11, "any single sign flip breaks an equation"):
        point = rational_points[2][0]
        assert verify_gon(point).status == "pass"
        assert verify_simplex(point).status == "pass"
        for key in itertools.combinations(range(1, 6), 3):
            bad = point.table.with_entry(key, -point.table[key])
            gon = verify_gon(bad)
            simplex = verify_simplex(bad)
            assert "fail" in (gon.status, simplex.status), key
            witnesses = [r.witness for r in (gon, simplex)
                         if r.status == "fail"]
            assert witnesses and all(w is not None for w in witnesses), key
