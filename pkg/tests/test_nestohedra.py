import itertools
from collections import Counter

import pytest

from toricg import nestohedra, parking, perms, polyvec, words
from toricg.errors import (
    BuildingSetError,
    CapacityError,
    ChordalityError,
    PreconditionError,
)
from toricg.nestohedra import BuildingSet


def powerset_building_set(m: int) -> BuildingSet:
    sets = [
        s for k in range(1, m + 1) for s in itertools.combinations(range(1, m + 1), k)
    ]
    return BuildingSet(m, sets)


def test_validate_examples():
    assert nestohedra.validate(powerset_building_set(3)) == (True, True)
    intervals = nestohedra.named_family("associahedron_intervals", 2)
    assert nestohedra.validate(intervals) == (True, True)
    four_cycle = nestohedra.graphical(4, [(1, 2), (2, 3), (3, 4), (1, 4)])
    report = nestohedra.validate(four_cycle)
    assert report.connected and not report.chordal


def test_validate_witnesses():
    with pytest.raises(BuildingSetError) as err:
        nestohedra.validate(BuildingSet(3, [[1], [2], [3], [1, 2], [2, 3]]))
    assert err.value.witness == ((1, 2), (2, 3))
    with pytest.raises(BuildingSetError) as err:
        nestohedra.validate(BuildingSet(2, [[1], [1, 2]]))
    assert err.value.witness == (2,)


def test_graphical_examples():
    path = nestohedra.graphical(3, [(1, 2), (2, 3)])
    assert path.members() == ((1,), (2,), (1, 2), (3,), (2, 3), (1, 2, 3))
    complete = nestohedra.graphical(3, [(1, 2), (1, 3), (2, 3)])
    assert complete == powerset_building_set(3)
    empty = nestohedra.graphical(2, [])
    assert empty.members() == ((1,), (2,))
    assert not nestohedra.validate(empty).connected


def test_restrict_and_components():
    full = powerset_building_set(3)
    assert nestohedra.restrict(full, (1, 3)) == ((1,), (3,), (1, 3))
    assert nestohedra.components(full, (1, 3)) == ((1, 3),)
    intervals4 = nestohedra.named_family("associahedron_intervals", 3)
    assert nestohedra.components(intervals4, (1, 3)) == ((1,), (3,))
    assert nestohedra.restrict(full, ()) == ()


def test_b_permutations_examples():
    assert len(nestohedra.b_permutations(nestohedra.named_family("permutahedron", 2))) == 6
    sp = nestohedra.b_permutations(nestohedra.named_family("stanley_pitman", 2))
    assert sp == [(1, 2, 3), (1, 3, 2), (2, 3, 1), (3, 2, 1)]
    iv = nestohedra.b_permutations(nestohedra.named_family("associahedron_intervals", 2))
    assert len(iv) == words.catalan(3) == 5
    assert (3, 1, 2) not in iv


@pytest.mark.parametrize("n", range(1, 6))
def test_b_permutation_characterizations(n):
    m = n + 1
    everyone = list(itertools.permutations(range(1, m + 1)))

    def is_312_avoiding(p):
        return not any(
            p[j] < p[k] < p[i]
            for i in range(m)
            for j in range(i + 1, m)
            for k in range(j + 1, m)
        )

    def is_unimodal(p):
        top = p.index(max(p))
        return all(p[i] < p[i + 1] for i in range(top)) and all(
            p[i] > p[i + 1] for i in range(top, m - 1)
        )

    assert nestohedra.b_permutations(nestohedra.named_family("permutahedron", n)) == everyone
    assert nestohedra.b_permutations(
        nestohedra.named_family("associahedron_intervals", n)
    ) == [p for p in everyone if is_312_avoiding(p)]
    assert nestohedra.b_permutations(
        nestohedra.named_family("stanley_pitman", n)
    ) == [p for p in everyone if is_unimodal(p)]


def test_h_gamma_examples():
    sp2 = nestohedra.named_family("stanley_pitman", 2)
    assert nestohedra.h_chordal(sp2) == (1, 2, 1)
    assert nestohedra.gamma_chordal(sp2) == (1, 0)
    pm2 = nestohedra.named_family("permutahedron", 2)
    assert nestohedra.h_chordal(pm2) == (1, 4, 1)
    assert nestohedra.gamma_chordal(pm2) == (1, 2)
    iv4 = nestohedra.named_family("associahedron_intervals", 4)
    assert nestohedra.gamma_chordal(iv4) == (1, 6, 2)


def test_non_chordal_is_rejected():
    four_cycle = nestohedra.graphical(4, [(1, 2), (2, 3), (3, 4), (1, 4)])
    with pytest.raises(ChordalityError):
        nestohedra.h_chordal(four_cycle)
    with pytest.raises(ChordalityError):
        nestohedra.toric_g_direct(four_cycle)


@pytest.mark.parametrize("n", range(1, 6))
def test_pipeline_consistency(n):
    family_sets = [
        nestohedra.named_family("permutahedron", n),
        nestohedra.named_family("stanley_pitman", n),
        nestohedra.named_family("associahedron_intervals", n),
    ] + [nestohedra.named_family("interpolation", n, r) for r in range(1, n + 1)]
    for bs in family_sets:
        h = nestohedra.h_chordal(bs)
        assert polyvec.is_palindromic(h)
        gamma = nestohedra.gamma_chordal(bs)
        assert polyvec.h_to_gamma(h) == gamma
        assert nestohedra.toric_g_chordal(bs) == polyvec.toric_g_from_h(n, h)


def test_toric_g_examples():
    assert nestohedra.toric_g_chordal(
        nestohedra.named_family("permutahedron", 2)
    ) == polyvec.IntPoly([1, 3])
    assert nestohedra.toric_g_direct(
        nestohedra.named_family("stanley_pitman", 3)
    ) == polyvec.g_contrib(3, 0)
    assert nestohedra.toric_g_direct(
        nestohedra.named_family("associahedron_intervals", 4)
    ) == polyvec.IntPoly([1, 37, 10])


@pytest.mark.parametrize("n", range(1, 5))
def test_direct_route_agreement(n):
    for kind in ("permutahedron", "stanley_pitman", "associahedron_intervals"):
        bs = nestohedra.named_family(kind, n)
        assert nestohedra.toric_g_direct(bs) == nestohedra.toric_g_chordal(bs)
    for r in range(1, n + 1):
        bs = nestohedra.named_family("interpolation", n, r)
        assert nestohedra.toric_g_direct(bs) == nestohedra.toric_g_chordal(bs)


@pytest.mark.parametrize("n", range(1, 6))
def test_gamma_by_tree_forks(n):
    for kind in ("permutahedron", "stanley_pitman", "associahedron_intervals"):
        bs = nestohedra.named_family(kind, n)
        allowed = set(nestohedra.b_permutations(bs))
        hist: Counter = Counter()
        for tree, forks in perms.enumerate_increasing_012(n + 1):
            if perms.fs_inorder(perms.plane_to_fs(tree)) in allowed:
                hist[forks] += 1
        assert tuple(hist.get(j, 0) for j in range(n // 2 + 1)) == nestohedra.gamma_chordal(bs)


@pytest.mark.parametrize("n", range(1, 6))
def test_dfs_restriction_gives_associahedron(n):
    bs = nestohedra.named_family("associahedron_intervals", n)
    expected = polyvec.toric_g_from_gamma(n, polyvec.gamma_family("associahedron", n))
    assert nestohedra.toric_g_direct(bs, dfs_only=True) == expected


def test_permutahedron_brute_force_over_parking_trees():
    """Unpruned oracle: sweep every parking tree and keep those encoding a
    123-avoiding parking function; ascents give the toric g coefficients."""
    for n in range(1, 6):
        hist: Counter = Counter()
        for t in parking.enumerate_parking_trees(n):
            if parking.is_123_parking_tree(t):
                hist[parking.fn_ascents(parking.tree_to_function(t))] += 1
        got = polyvec.IntPoly([hist.get(k, 0) for k in range(max(hist) + 1)])
        expected = polyvec.toric_g_from_gamma(n, polyvec.gamma_family("permutahedron", n))
        assert got == expected


def test_permutahedron_direct_n6():
    bs = nestohedra.named_family("permutahedron", 6)
    expected = polyvec.toric_g_from_gamma(6, polyvec.gamma_family("permutahedron", 6))
    assert nestohedra.toric_g_direct(bs) == expected


@pytest.mark.parametrize("n", range(1, 6))
def test_cyclohedron_function_statistic(n):
    expected = polyvec.toric_g_from_gamma(n, polyvec.gamma_family("cyclohedron", n))
    got = nestohedra.ascent_polynomial(parking.iter_123_avoiding_functions(n))
    assert got == expected


def test_interpolation_family():
    for n in range(1, 6):
        assert nestohedra.named_family("interpolation", n, 1) == nestohedra.named_family(
            "permutahedron", n
        )
    stell = nestohedra.named_family("interpolation", 3, 3)
    assert ((1,) in stell) and ((2,) in stell) and ((3,) in stell)
    assert (1, 2) not in stell
    assert (1, 4) in stell
    report = nestohedra.validate(stell)
    assert report.connected and report.chordal
    with pytest.raises(PreconditionError):
        nestohedra.named_family("interpolation", 3)
    with pytest.raises(PreconditionError):
        nestohedra.named_family("interpolation", 3, 4)


def test_random_chordal_graphical_building_sets():
    """Random graphs on <= 6 vertices whose graphical building set happens
    to be connected and chordal must give palindromic h-vectors agreeing
    with the gamma route."""
    import random

    rng = random.Random(20240817)
    tested = 0
    while tested < 12:
        m = rng.randint(2, 6)
        edges = [
            (i, j)
            for i in range(1, m + 1)
            for j in range(i + 1, m + 1)
            if rng.random() < 0.6
        ]
        bs = nestohedra.graphical(m, edges)
        report = nestohedra.validate(bs)
        if not (report.connected and report.chordal):
            continue
        tested += 1
        h = nestohedra.h_chordal(bs)
        assert polyvec.is_palindromic(h)
        assert polyvec.h_to_gamma(h) == nestohedra.gamma_chordal(bs)
        n = m - 1
        assert nestohedra.toric_g_chordal(bs) == polyvec.toric_g_from_h(n, h)


def test_stanley_pitman_members():
    assert nestohedra.named_family("stanley_pitman", 2).members() == (
        (1,), (2,), (3,), (2, 3), (1, 2, 3),
    )


def test_b_permutations_capacity():
    with pytest.raises(CapacityError):
        nestohedra.b_permutations(powerset_building_set(10))


def test_json_round_trip():
    bs = nestohedra.named_family("stanley_pitman", 3)
    data = bs.to_json()
    assert BuildingSet.from_json(data) == bs
    with pytest.raises(BuildingSetError):
        BuildingSet.from_json({"sets": [[1]]})
    with pytest.raises(BuildingSetError):
        BuildingSet(2, [[1], [2], [3]])
    with pytest.raises(BuildingSetError):
        BuildingSet(2, [[1], [2], []])
