import itertools

import pytest

from oracles import (
    EX31_C,
    EX31_FILLINGS,
    EX31_J_LARGE,
    EX31_J_SMALL,
    EX31_NON_FILLING,
    EX31_P,
    EX31_R,
    EX31_SMALL_MARK3,
    EX31_SMALL_POSITIONS,
    EX31_Z,
    EX32_C,
    EX32_J,
    EX32_P,
    EX32_R,
    EX32_W,
    SLR_PATHS,
    roots,
)

from hecke2b.errors import DomainError, InconsistentRegion, NotInRegion
from hecke2b.regions import (
    ContentVector,
    LocalRegion,
    StandardFilling,
    configuration,
    count_standard_fillings,
    filling_from_w,
    fixture_local_regions,
    is_skew,
    is_standard_filling,
    p_set,
    standard_fillings,
    standard_tableaux,
    w_from_filling,
    z_set,
)
from hecke2b.weyl import SignedPermutation, enumerate_group, identity, inversion_set


def cv(c, r1, r2):
    return ContentVector.from_values(c, r1, r2)


EX31 = cv(EX31_C, *EX31_R)
EX32 = cv(EX32_C, *EX32_R)


def test_content_vector_parity_and_markings():
    with pytest.raises(DomainError):
        cv([1, "1/2"], 1, 2)
    with pytest.raises(DomainError):
        cv([1], 2, 2)
    assert cv([1], -3, 2).r1 == 6


def test_z_set_examples():
    assert z_set(EX31) == EX31_Z
    assert z_set(cv([1, 2], 5, 7)) == frozenset()
    assert z_set(cv([0, 0], 5, 7)) == roots("e1 e2 e2-e1 e2+e1")


def test_p_set_examples():
    assert p_set(EX31) == EX31_P
    assert p_set(EX32) == EX32_P
    assert len(EX32_P) == 20
    assert p_set(cv([5, 9], 1, 2)) == frozenset()


def test_region_rejects_j_outside_p():
    with pytest.raises(DomainError, match="J not subset of P"):
        LocalRegion(EX31, roots("e1"))


def test_regular_region_is_whole_group():
    region = LocalRegion(cv([1, 3], 5, 7))
    assert standard_tableaux(region) == frozenset(enumerate_group(2))


def test_two_walls_cut_four_regions():
    c = cv([2, 3], 3, 7)
    assert p_set(c) == roots("e2 e2-e1")
    seen = []
    for J in [frozenset(), roots("e2"), roots("e2-e1"), roots("e2 e2-e1")]:
        seen.extend(standard_tableaux(LocalRegion(c, J)))
    assert len(standard_tableaux(LocalRegion(c))) == 3
    assert standard_tableaux(LocalRegion(c, roots("e2"))) == {SignedPermutation([-2, -1])}
    assert standard_tableaux(LocalRegion(c, roots("e2-e1"))) == {SignedPermutation([2, 1])}
    assert sorted(seen) == sorted(enumerate_group(2))


@pytest.mark.parametrize("c", [(0, 1, 1), (1, 2, 3), ("1/2", "1/2", "3/2"), (0, 0, 2)])
def test_regions_partition_the_z_avoiding_chambers(c):
    vec = cv(c, 3, 5) if isinstance(c[0], int) else cv(c, "3/2", "7/2")
    z, p = z_set(vec), sorted(p_set(vec))
    union = []
    for size in range(len(p) + 1):
        for J in itertools.combinations(p, size):
            union.extend(standard_tableaux(LocalRegion(vec, frozenset(J))))
    assert sorted(union) == sorted(w for w in enumerate_group(len(c)) if not inversion_set(w) & z)


def test_skew_examples():
    assert not is_skew(LocalRegion(cv([0, 1], "3/2", 5)))
    assert not is_skew(LocalRegion(EX31, EX31_J_SMALL))
    assert is_skew(LocalRegion(EX32, EX32_J))


def test_configuration_small_example_geometry():
    kappa = configuration(LocalRegion(EX31, EX31_J_SMALL))
    assert {x: kappa.position(("b", x)) for x in EX31_SMALL_POSITIONS} == EX31_SMALL_POSITIONS
    assert kappa.position(("m", 6)) == EX31_SMALL_MARK3
    assert kappa.is_nw(3, 2) and kappa.position(("b", 3))[1] == kappa.position(("b", 2))[1]
    assert kappa.marking_side(3) == "SE"
    assert kappa.reconstruct() == (EX31_Z, EX31_P, EX31_J_SMALL)


def test_configuration_large_example_relations():
    kappa = configuration(LocalRegion(EX31, EX31_J_LARGE))
    assert kappa.is_nw(3, 2) and kappa.is_nw(3, 1)
    assert kappa.marking_side(3) == "NW"
    assert kappa.reconstruct() == (EX31_Z, EX31_P, EX31_J_LARGE)


def test_configuration_symmetry():
    kappa = configuration(LocalRegion(EX32, EX32_J))
    for i in range(1, 13):
        assert kappa.diagonal(-i) == -kappa.diagonal(i)
        assert kappa.depth[("b", -i)] == -kappa.depth[("b", i)]
    assert kappa.reconstruct() == (z_set(EX32), EX32_P, EX32_J)


def test_single_free_box():
    kappa = configuration(LocalRegion(cv([5], 1, 2)))
    assert kappa.box_edges() == []
    assert kappa.marking_side(1) is None
    assert len(standard_fillings(kappa)) == 2


def test_small_example_fillings():
    kappa = configuration(LocalRegion(EX31, EX31_J_SMALL))
    fillings = {s.values for s in standard_fillings(kappa)}
    for f in EX31_FILLINGS:
        assert f in fillings
    assert EX31_NON_FILLING not in fillings
    assert (1, 2, 3) not in fillings
    assert (1, 2, 3) not in {s.values for s in standard_fillings(configuration(LocalRegion(EX31, EX31_J_LARGE)))}


@pytest.mark.parametrize("J", [frozenset(), roots("e2+e1")])
def test_half_diagonal_pairs_have_two_fillings(J):
    region = LocalRegion(cv(["1/2", "1/2"], "3/2", "7/2"), J)
    assert len(standard_fillings(configuration(region))) == 2


def test_large_example_filling():
    kappa = configuration(LocalRegion(EX32, EX32_J))
    w = SignedPermutation(EX32_W)
    s = filling_from_w(kappa, w)
    assert s.values == EX32_W
    assert s.value(-1) == 9 and s.value(12) == -12
    assert is_standard_filling(kappa, s)
    assert w_from_filling(kappa, s) == w
    assert count_standard_fillings(kappa) == SLR_PATHS


def test_identity_round_trip():
    kappa = configuration(LocalRegion(cv([1, 3], 5, 7)))
    s = filling_from_w(kappa, identity(2))
    assert s.values == (1, 2)
    assert w_from_filling(kappa, s) == identity(2)


def test_maps_reject_outsiders():
    kappa = configuration(LocalRegion(EX31, EX31_J_SMALL))
    with pytest.raises(NotInRegion):
        filling_from_w(kappa, identity(3))
    with pytest.raises(NotInRegion):
        w_from_filling(kappa, StandardFilling(EX31_NON_FILLING))


def test_fixture_bijection():
    regions = fixture_local_regions()
    assert len(regions) >= 200
    built = 0
    for region in regions:
        tableaux = standard_tableaux(region)
        try:
            kappa = configuration(region)
        except InconsistentRegion:
            assert not tableaux
            continue
        built += 1
        fillings = standard_fillings(kappa)
        assert len(fillings) == len(tableaux) == count_standard_fillings(kappa)
        assert {w_from_filling(kappa, s) for s in fillings} == tableaux
        assert all(w_from_filling(kappa, filling_from_w(kappa, w)) == w for w in tableaux)
        assert kappa.reconstruct() == (z_set(region.c), p_set(region.c), region.J)
        assert is_skew(region) == is_skew(region, tableaux)
    assert built >= 150


def test_tableaux_via_fillings_matches_brute_force():
    for region in fixture_local_regions(max_k=2):
        try:
            configuration(region)
        except InconsistentRegion:
            continue
        assert standard_tableaux(region, via="fillings") == standard_tableaux(region)
