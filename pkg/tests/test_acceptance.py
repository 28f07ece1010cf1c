"""Acceptance suite: one test per criterion, each at its stated tolerance."""

import time

import pytest

from oracles import (
    EX31_C,
    EX31_FILLINGS,
    EX31_J_LARGE,
    EX31_J_SMALL,
    EX31_NON_FILLING,
    EX31_R,
    EX32_C,
    EX32_J,
    EX32_R,
    EX32_R_W,
    EX32_W,
    FIG3_E0,
    FIG3_RECT,
    ISO_RECT_DRAWN,
    ISO_RECT_STATED,
    SLR_LAMBDA,
    SLR_PATH_FILLING,
    SLR_PATHS,
    SLR_RECT,
    SLR_S0MAX,
    SLR_Z_Q_EXPONENT,
    iso_lambda,
    iso_mu,
    iso_q_exponent,
)

from hecke2b.errors import InconsistentRegion
from hecke2b.hecke import (
    RANK2_FAMILIES,
    HeckeParams,
    build_calibrated,
    compare_spectra,
    fixture_regions,
    generalized_weight_spaces,
    is_calibrated,
    is_irreducible,
    rank2_characters,
    rank2_induced,
    tau_square_check,
    tau_weyl_check,
    verify_relations,
)
from hecke2b.regions import (
    ContentVector,
    LocalRegion,
    configuration,
    count_standard_fillings,
    filling_from_w,
    fixture_local_regions,
    is_standard_filling,
    standard_fillings,
    standard_tableaux,
    w_from_filling,
)
from hecke2b.scalar import parse_scalar
from hecke2b.schurweyl import (
    Partition,
    RectPair,
    bratteli,
    count_paths,
    dim_gl,
    dimension_identity,
    lambda_to_zcJ,
    path_from_filling,
    path_to_w,
    rect_tensor,
    ssyt_count,
    verify_path_module,
)
from hecke2b.weyl import SignedPermutation, inversion_set

PARAMS = HeckeParams(parse_scalar("2"), parse_scalar("3"), parse_scalar("5"))
Q = parse_scalar("2")


def test_criterion_01_relations_hold_exactly_on_fixture_set():
    start = time.perf_counter()
    regions = fixture_regions(PARAMS, max_k=3)
    assert len(regions) >= 20
    assert {r.k for r in regions} == {1, 2, 3}
    for region in regions:
        module = build_calibrated(parse_scalar("7/3"), region, PARAMS)
        report = verify_relations(module)
        bad = [r["relation"] for r in report if r["status"] != "PASS exact"]
        assert not bad, (region.labels, sorted(map(str, region.J)), bad)
    assert time.perf_counter() - start < 30


def test_criterion_02_partition_to_region_regression():
    p = RectPair(*SLR_RECT)
    zcj = lambda_to_zcJ(SLR_LAMBDA, p, 12)
    assert zcj.z == Q ** SLR_Z_Q_EXPONENT
    assert zcj.c == ContentVector.from_values(EX32_C, *EX32_R)
    assert zcj.J == EX32_J and len(zcj.J) == 11
    path = path_from_filling(SLR_S0MAX, SLR_PATH_FILLING)
    assert path.shape == Partition(SLR_LAMBDA)
    w = path_to_w(path, p)
    assert w == SignedPermutation(EX32_W)
    assert inversion_set(w) == EX32_R_W


def _iso_check(rect, k, check_generic):
    p = RectPair(*rect)
    left = lambda_to_zcJ(iso_lambda(k), p, k, check_generic=check_generic)
    right = lambda_to_zcJ(iso_mu(k), p, k, check_generic=check_generic)
    return left, right


@pytest.mark.parametrize("k", [1, 2, 3])
def test_criterion_03_isomorphic_partitions(k):
    left, right = _iso_check(ISO_RECT_STATED, k, check_generic=True)
    assert (left.z, left.c, left.J) == (right.z, right.c, right.J)
    assert left.c.c2 == tuple(2 * (11 + i) for i in range(k))
    assert left.J == frozenset()
    assert left.z == Q ** iso_q_exponent(k)


@pytest.mark.parametrize("k", [1, 2, 3])
def test_criterion_03_companion_at_drawn_rectangles(k):
    left, right = _iso_check(ISO_RECT_DRAWN, k, check_generic=False)
    assert (left.z, left.c, left.J) == (right.z, right.c, right.J)
    assert left.c.c2 == tuple(2 * (11 + i) for i in range(k))
    assert left.J == frozenset()
    assert left.z == (-1) ** k * Q ** iso_q_exponent(k)


def test_criterion_04_level_zero_and_one_labels():
    a, c = FIG3_RECT[0], FIG3_RECT[1]
    p = RectPair(*FIG3_RECT)
    level0 = rect_tensor(p)
    assert {v.e0 for v in level0} == FIG3_E0
    expected = {
        4 * a: [-c, a + 2, a - 2],
        3 * a - c: [a, -c + 1, -c - 1, a + 2, a - 2],
        2 * (a - c + 1): [a - 1, -c - 1, a + 2, -c + 2],
        2 * (a - c - 1): [a + 1, -c + 1, a - 2, -c - 2],
        a - 3 * c: [a + 1, a - 1, -c, -c + 2, -c - 2],
        -4 * c: [a, -c + 2, -c - 2],
    }
    diagram = bratteli(p, 1)
    for vertex in level0:
        labels = sorted(lab for _, lab in diagram.out_edges(0, vertex.shape))
        assert labels == sorted(expected[vertex.e0]), vertex
    assert [diagram.vertex_count(x) for x in (-1, 0, 1)] == [1, 6, 18]


def test_criterion_05_path_modules_at_6_1_3_1():
    start = time.perf_counter()
    p = RectPair(6, 1, 3, 1)
    params = p.params()
    assert params.a1 == Q ** 12 and params.a2 == Q ** -2
    assert params.b1 == Q ** 6 and params.b2 == Q ** -2 and params.t_half == Q
    checked = 0
    for k in range(0, 4):
        for lam in bratteli(p, k).levels[k]:
            report = verify_path_module(lam, p, k)
            assert all(r["status"] == "PASS exact" for r in report["relations"]), lam
            assert report["irreducible"], lam
            assert report["max_weight_space_dim"] <= 1, lam
            assert report["weights_match"], lam
            checked += 1
    assert checked == 4 + 8 + 15 + 25
    assert time.perf_counter() - start < 120


def _partitions(n, cap=None):
    if n == 0:
        yield ()
        return
    for first in range(min(n, cap or n), 0, -1):
        for rest in _partitions(n - first, first):
            yield (first,) + rest


def test_criterion_06_dimension_identity():
    for size in range(0, 7):
        for lam in _partitions(size):
            for n in range(max(1, len(lam)), 5):
                assert dim_gl(lam, n) == ssyt_count(lam, n), (lam, n)
    for a, c, b, d, n, k in [(2, 1, 1, 1, 6, 2), (2, 2, 2, 1, 8, 2), (6, 1, 3, 1, 10, 3)]:
        result = dimension_identity(RectPair(a, c, b, d), n, k)
        assert result["lhs"] == result["rhs"], (a, c, b, d, n, k)


def test_criterion_07_fillings_bijection_and_examples():
    for region in fixture_local_regions(max_k=3):
        tableaux = standard_tableaux(region)
        try:
            kappa = configuration(region)
        except InconsistentRegion:
            assert not tableaux
            continue
        fillings = standard_fillings(kappa)
        assert len(fillings) == len(tableaux)
        assert {w_from_filling(kappa, s) for s in fillings} == tableaux
        assert all(filling_from_w(kappa, w_from_filling(kappa, s)) == s for s in fillings)
        assert all(w_from_filling(kappa, filling_from_w(kappa, w)) == w for w in tableaux)

    small = ContentVector.from_values(EX31_C, *EX31_R)
    kappa = configuration(LocalRegion(small, EX31_J_SMALL))
    values = {s.values for s in standard_fillings(kappa)}
    assert set(EX31_FILLINGS) <= values
    assert EX31_NON_FILLING not in values and (1, 2, 3) not in values
    large_kappa = configuration(LocalRegion(small, EX31_J_LARGE))
    assert (1, 2, 3) not in {s.values for s in standard_fillings(large_kappa)}

    big = configuration(LocalRegion(ContentVector.from_values(EX32_C, *EX32_R), EX32_J))
    s = filling_from_w(big, SignedPermutation(EX32_W))
    assert s.values == EX32_W and is_standard_filling(big, s)
    assert count_standard_fillings(big) == SLR_PATHS == count_paths(RectPair(*SLR_RECT), SLR_LAMBDA, 12)


def test_criterion_08_rank_two_suite():
    expected_dims = {
        "(0,r1)": [2, 2],
        "(0,r2)": [2, 2],
        "(1/2,1/2)": [2, 2],
        "(r1,r1)": [1, 1, 2],
        "(r2,r2)": [1, 1, 2],
        "(0,1)": [1, 1, 2],
    }
    assert set(RANK2_FAMILIES) == set(expected_dims)
    for key, dims in expected_dims.items():
        for sign in "+-":
            module = rank2_induced(key, sign, PARAMS)
            assert module.dim == 4
            assert all(r["status"] == "PASS exact" for r in verify_relations(module))
            assert sorted(len(b) for _, b in generalized_weight_spaces(module)) == dims
            assert is_irreducible(module)
            assert not is_calibrated(module)
    rows = {}
    for entry in rank2_characters(PARAMS):
        rows.setdefault(entry["tag"], []).append(tuple(map(str, entry["gamma"])))
    assert rows["table row 1"] == [("2", "2"), ("-2", "-2")]
    assert rows["table row 2"] == [("15", "15"), ("-5/3", "-5/3")]
    assert rows["table row 3"] == [("1", "4"), ("-1", "-4")]
    assert rows["table row 4"] == [("1", "15"), ("-1", "15"), ("1", "-5/3"), ("-1", "-5/3")]
    assert rows["item (a)"] == [("1", "1")]


def test_criterion_09_intertwiner_identities():
    for region in fixture_regions(PARAMS, max_k=3):
        module = build_calibrated(1, region, PARAMS)
        for entry in tau_square_check(module) + tau_weyl_check(module, bound=2):
            assert entry["status"] == "PASS exact", (region.labels, entry["relation"])


def test_criterion_10_backends_agree():
    regions = fixture_regions(PARAMS, max_k=2)
    assert regions
    for region in regions:
        exact = build_calibrated(1, region, PARAMS)
        approx = build_calibrated(1, region, PARAMS, normalization="symmetric_float")
        for entry in compare_spectra(exact, approx, rel=1e-9):
            assert entry["status"] == "PASS tol=1e-9", (region.labels, entry)
            assert entry["max_residual"] <= 1e-9
