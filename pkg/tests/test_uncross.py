import pytest

from pfaflab.diagrams import enumerate_matchings, enumerate_tl, matching, sym_diagram, tl_diagram
from pfaflab.uncross import (ChordMap, embed_nu_d, embed_nu_pi, enumerate_uncrossings,
                             f_coefficient, g_coefficient, g_tilde_coefficient, z_count)

D2 = lambda *edges: sym_diagram(2, edges)


def test_single_edge_census():
    cmap = embed_nu_pi(matching([(1, 2)]), 1)
    assert cmap.census() == {"crossings": 1, "unpaired": 1, "paired_orbits": 0}
    uns = enumerate_uncrossings(cmap)
    assert len(uns) == 2
    assert {u.diagram.key(): u.weight for u in uns} == {"V[]": 1, "V[(1,2)]": -1}


def test_nested_pair_census_and_table():
    pi = matching([(1, 4), (2, 3)])
    for seed in (0, 1):
        cmap = embed_nu_pi(pi, 2, seed)
        assert cmap.census() == {"crossings": 6, "unpaired": 2, "paired_orbits": 2}
        assert len(enumerate_uncrossings(cmap)) == 16
        table = {D.key(): w for D, w in f_coefficient(pi, 2, seed).items()}
        assert table == {"V[]": 1, "V[(1,2)]": -1, "V[(3,4)]": -1,
                         "V[(1,2)(3,4)]": 2, "V[(2,3)]": 0, "V[(1,4)(2,3)]": -1}


def test_disjoint_pair_census():
    pi = matching([(1, 2), (3, 4)])
    cmap = embed_nu_pi(pi, 2)
    assert cmap.census() == {"crossings": 2, "unpaired": 2, "paired_orbits": 0}
    table = {D.key(): w for D, w in f_coefficient(pi, 2).items()}
    assert table == {"V[]": 1, "V[(1,2)]": -1, "V[(3,4)]": -1, "V[(1,2)(3,4)]": 1}


def test_n1_f_table_consistent_with_decomposition():
    table = {D.key(): w for D, w in f_coefficient(matching([(1, 2)]), 1).items()}
    assert table == {"V[]": 1, "V[(1,2)]": -1}


def test_crossing_free_doubled_tl_diagram():
    d = tl_diagram(2, [(1, 2), (3, 4)])  # all cups and caps
    cmap = embed_nu_d(d, 2)
    assert cmap.census()["crossings"] == 0
    table = g_coefficient(d, 2)
    assert len(table) == 1
    ((D, w),) = table.items()
    assert w == 1 and D.order == 2


def test_doubled_tl_mirror_symmetry():
    for n in (2, 3):
        for d in enumerate_tl(n):
            cmap = embed_nu_d(d, n)
            mirror = {tuple(sorted((cmap.mirror_pos(p), cmap.mirror_pos(q))))
                      for p, q in cmap.chords}
            assert mirror == set(cmap.chords)
            for kind in cmap.class_kind:
                assert kind in ("unpaired", "paired")


def test_seed_independence_exhaustive():
    for n in (1, 2, 3):
        for pi in enumerate_matchings(n):
            assert f_coefficient(pi, n, 0) == f_coefficient(pi, n, 1)
        for d in enumerate_tl(n):
            assert g_coefficient(d, n, 0) == g_coefficient(d, n, 1)


def test_weight_multiset_seed_invariant():
    pi = matching([(1, 4), (2, 3)])
    multisets = []
    for seed in (0, 1):
        uns = enumerate_uncrossings(embed_nu_pi(pi, 2, seed))
        multisets.append(sorted(u.weight for u in uns))
    assert multisets[0] == multisets[1]


def test_paired_orbit_inequality_clause():
    # for every paired orbit between chords (q, p') and (s, r'), the
    # inequalities q < s and r < p agree in truth value
    for n in (1, 2, 3):
        for pi in enumerate_matchings(n):
            cmap = embed_nu_pi(pi, n)
            for orbit, members in enumerate(cmap.classes):
                if cmap.class_kind[orbit] != "paired":
                    continue
                cr = cmap.crossings[members[0]]
                c1, c2 = (cmap.chords[c] for c in cr.chords)
                q, p = c1[0], 4 * n + 1 - c1[1]
                s, r = c2[0], 4 * n + 1 - c2[1]
                assert (q < s) == (r < p), (pi, c1, c2)


def test_class_bound():
    pi = matching([(1, 4), (2, 3)])
    with pytest.raises(ValueError):
        f_coefficient(pi, 2, class_bound=2)


def test_z_count_and_tilde_sign():
    d_cups = tl_diagram(2, [(1, 2), (3, 4)])
    d_through = tl_diagram(2, [(1, 4), (2, 3)])
    assert z_count(d_cups, 2) == 1
    assert z_count(d_through, 2) == 0
    # n even: tilde never flips the sign
    assert g_tilde_coefficient(d_cups, 2) == g_coefficient(d_cups, 2)
    # n odd with one cup: global sign flip
    d3 = tl_diagram(3, [(1, 2), (3, 6), (4, 5)])
    assert z_count(d3, 3) == 1
    flipped = {D: -w for D, w in g_coefficient(d3, 3).items()}
    assert g_tilde_coefficient(d3, 3) == flipped


def test_boundary_partition_validation():
    with pytest.raises(ValueError):
        ChordMap(1, [(1, 2), (3, 3)])
