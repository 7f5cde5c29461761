import pytest

from pfaflab.diagrams import (enumerate_sym_tl, enumerate_sym_tl_even, is_compatible,
                              removal_closure, sym_diagram)
from pfaflab.networks import (InvalidNetworkError, Network, construct_network_of_diagram,
                              hat_pfaf, hat_pfaf_prime, marked_subnetworks, network_from_json,
                              network_to_json, path_weight_matrix, q_i_weight,
                              random_fence_network, verify_network_equality)
from pfaflab.pfaffian import complementary_pfaffian
from pfaflab.pfaffinants import even_subsets, tl_pfaffinant
from pfaflab.poly import Poly


def test_validation_rejects_bad_networks():
    with pytest.raises(InvalidNetworkError):
        Network({"u1": (0, 1), "u2": (0, 0), "w1": (1, 1)},
                [("w1", "u1", 1)], ["u1", "u2"], ["w1"])  # decreasing x
    with pytest.raises(InvalidNetworkError):
        # two edges crossing away from any vertex
        Network({"u1": (0, 2), "u2": (0, 0), "w1": (2, 0), "w2": (2, 2)},
                [("u1", "w1", 1), ("u2", "w2", 1)], ["u1", "u2"], ["w2", "w1"])


def test_two_rails():
    D = sym_diagram(1, [])
    N = construct_network_of_diagram(D)
    A = path_weight_matrix(N)
    assert A.upper(1, 2).render() == "x[1]*x[2]"
    assert q_i_weight(N, [1, 2]) == A.upper(1, 2)


def test_single_vertical_edge_network():
    D = sym_diagram(1, [(1, 2)])
    N = construct_network_of_diagram(D)
    subs = marked_subnetworks(N)
    assert len(subs) == 1  # only one triple-free marked subnetwork
    assert subs[0].type == D and subs[0].mult == 1


def test_brute_force_pair_matrix():
    N = random_fence_network(1, 3, seed=5)
    A = path_weight_matrix(N)
    paths = [N.paths_from(u) for u in N.sources]
    for i in range(2):
        for j in range(i + 1, 2):
            total = Poly.zero()
            for p in paths[i]:
                for q in paths[j]:
                    if not set(p[0]) & set(q[0]):
                        total = total + N.path_weight(p) * N.path_weight(q)
            assert A.upper(i + 1, j + 1) == total


def test_path_pfaffian_identity_n2():
    for D in enumerate_sym_tl(2):
        N = construct_network_of_diagram(D)
        A = path_weight_matrix(N)
        for I in even_subsets(4):
            assert q_i_weight(N, I) == complementary_pfaffian(A, I)


def test_separating_network_types():
    for n in (1, 2, 3):
        for D in enumerate_sym_tl(n):
            N = construct_network_of_diagram(D)
            subs = marked_subnetworks(N)
            full = [s for s in subs
                    if s.kept == frozenset(range(len(N.edges))) and not s.marked]
            assert len(full) == 1 and full[0].type == D


def test_separator_isolates_its_diagram():
    for D in enumerate_sym_tl(2):
        N = construct_network_of_diagram(D)
        subs = marked_subnetworks(N)
        assert not hat_pfaf_prime(N, D, subs).is_zero()
        for Dp in removal_closure(D) - {D}:
            assert hat_pfaf_prime(N, Dp, subs).is_zero()


def test_covering_family_counts():
    # |families covering a marked subnetwork that are I-compatible| is mult or 0
    for D in enumerate_sym_tl(2):
        N = construct_network_of_diagram(D)
        subs = marked_subnetworks(N)
        from pfaflab.networks import _families, _triple_free
        fams = [f for f in _families(N, lambda *a: True) if _triple_free(f)]
        for s in subs:
            for I in even_subsets(4):
                count = 0
                for fam in fams:
                    use = {}
                    for p in fam:
                        for k in p[1]:
                            use[k] = use.get(k, 0) + 1
                    if frozenset(use) != s.kept:
                        continue
                    if frozenset(k for k, c in use.items() if c == 2) != s.marked:
                        continue
                    ok = all(not (set(fam[i][0]) & set(fam[j][0]))
                             for i in range(4) for j in range(i + 1, 4)
                             if ((i + 1) in I) == ((j + 1) in I))
                    count += ok
                assert count == (s.mult if is_compatible(s.type, I) else 0)


def test_network_equality_n2():
    for D0 in enumerate_sym_tl(2):
        N = construct_network_of_diagram(D0)
        for D in enumerate_sym_tl_even(2):
            verify_network_equality(N, D)


def test_network_equality_on_fences():
    for seed in range(3):
        N = random_fence_network(2, 6, seed=seed)
        subs = marked_subnetworks(N)
        A = path_weight_matrix(N)
        for D in enumerate_sym_tl_even(2):
            assert tl_pfaffinant(D, A) == hat_pfaf(N, D, subs)


def test_tl_positivity_on_positive_weights():
    for n, seeds in ((2, range(3)), (3, range(1))):
        for seed in seeds:
            N = random_fence_network(n, 5, seed=10 + seed)
            A = path_weight_matrix(N)
            for D in enumerate_sym_tl_even(n):
                val = tl_pfaffinant(D, A)
                assert all(c >= 0 for c in val.terms.values())


def test_json_round_trip():
    N = random_fence_network(2, 4, seed=1)
    text = network_to_json(N)
    N2 = network_from_json(text)
    assert network_to_json(N2) == text
    Ns = construct_network_of_diagram(sym_diagram(2, [(1, 4), (2, 3)]))
    text = network_to_json(Ns)
    assert network_to_json(network_from_json(text)) == text


def test_symbolic_fence():
    N = random_fence_network(1, 2, seed=0, symbolic=True)
    A = path_weight_matrix(N)
    for I in even_subsets(2):
        assert q_i_weight(N, I) == complementary_pfaffian(A, I)
