import itertools

import pytest

from cograph_hc import (Graph, InjectionChooser, NotACographError,
                        NotHcColoringError, alg1_color, alg2_color,
                        build_cotree, count_hc_total, count_hc_wrt,
                        g_injections, is_hc_coloring, is_recursively_minimal,
                        newick_read, realizes, reconstruct_cotree, to_binary,
                        verify_hc)
from cograph_hc.cotree import align_to_graph
from cograph_hc.oracle import (all_binary_cotrees, brute_chromatic,
                               enumerate_alg1_outputs, proper_partitions)


def test_chooser_validation():
    with pytest.raises(ValueError, match="unknown chooser strategy"):
        InjectionChooser("bogus")
    with pytest.raises(ValueError, match="needs a callback"):
        InjectionChooser("exhaustive-callback")


def test_alg1_singleton():
    c, t = alg1_color(Graph(1))
    assert c == {0: 1} and t.is_leaf(t.root)


def test_alg1_reference_trace(k2_k1_k1, coloring_a):
    c, t = alg1_color(k2_k1_k1, InjectionChooser("identity-prefix"))
    assert c == coloring_a
    assert realizes(t, k2_k1_k1)


def test_alg1_rejects_non_cograph():
    p4 = Graph(4, [(0, 1), (1, 2), (2, 3)])
    with pytest.raises(NotACographError):
        alg1_color(p4)


def test_alg1_seeded_random_deterministic(k2_k1_k1):
    runs = [alg1_color(k2_k1_k1, InjectionChooser("seeded-random", seed=11))[0]
            for _ in range(3)]
    assert runs[0] == runs[1] == runs[2]
    assert is_recursively_minimal(k2_k1_k1, runs[0])


def test_alg1_sound_on_small_corpus(small_cographs):
    for g in small_cographs:
        for chooser in (InjectionChooser("identity-prefix"),
                        InjectionChooser("seeded-random", seed=3)):
            c, _ = alg1_color(g, chooser)
            assert is_recursively_minimal(g, c)
            assert len(set(c.values())) == brute_chromatic(g)


def test_alg2_matches_alg1_on_discriminating_tree(k2_k1_k1):
    t = build_cotree(k2_k1_k1)
    assert alg2_color(k2_k1_k1, t) == alg1_color(k2_k1_k1)[0]


def test_alg2_respects_given_cotree(k2_k1_k1):
    cat = to_binary(build_cotree(k2_k1_k1), "left-comb")
    c = alg2_color(k2_k1_k1, cat)
    assert verify_hc(k2_k1_k1, cat, c).accepted
    with pytest.raises(ValueError, match="cotree-graph-mismatch"):
        alg2_color(k2_k1_k1, newick_read("((a,b)0,(c,d)0)0;"))


def test_alg2_join_rooted_skips_recoloring():
    k3 = Graph(3, [(0, 1), (0, 2), (1, 2)])
    c = alg2_color(k3, build_cotree(k3))
    assert c == {0: 1, 1: 2, 2: 3}


def test_reconstruct_cotree(k2_k1_k1, coloring_a):
    t = reconstruct_cotree(k2_k1_k1, coloring_a)
    assert realizes(t, k2_k1_k1)
    assert verify_hc(k2_k1_k1, t, coloring_a).accepted
    leaf = reconstruct_cotree(Graph(1), {0: 1})
    assert leaf.is_leaf(leaf.root)


def test_reconstruct_cotree_rejects_non_hc():
    with pytest.raises(NotHcColoringError) as exc:
        reconstruct_cotree(Graph(2), {0: 1, 1: 2})
    assert exc.value.certificate == (frozenset({1}), frozenset({2}))


def test_reconstruct_agrees_with_is_hc(small_cographs):
    for g in small_cographs:
        if g.n > 4:
            break
        for c in proper_partitions(g):
            expect = is_hc_coloring(g, c).accepted
            try:
                t = reconstruct_cotree(g, c)
            except NotHcColoringError:
                assert not expect
            else:
                assert expect
                assert verify_hc(g, t, c).accepted


def test_g_injections():
    assert g_injections(1, 1) == 1
    assert g_injections(1, 2) == 2
    assert g_injections(2, 3) == 6
    assert g_injections(0, 5) == 1
    with pytest.raises(ValueError, match="injection-size-order"):
        g_injections(3, 2)


def test_count_hc_wrt_reference_values(k2_k1_k1):
    k2 = Graph(2, [(0, 1)], names=("a", "b"))
    rep = count_hc_wrt(build_cotree(k2))
    assert rep.root_partitions == 1 and rep.labeled_total == 2

    cat = to_binary(build_cotree(k2_k1_k1), "left-comb")
    rep = count_hc_wrt(cat)
    assert rep.root_partitions == 4
    assert rep.labeled_total == 8
    # inner union node over {a,b,c} counts 2 partitions
    by_path = {nc.path: nc for nc in rep.per_node}
    assert by_path["((a,b)1,c)0"].partitions == 2
    assert by_path["((a,b)1,c)0"].colors == 2

    other = align_to_graph(newick_read("((c,d)0,(a,b)1)0;"), k2_k1_k1)
    assert count_hc_wrt(other).root_partitions == 2


def test_count_hc_wrt_requires_binary(k2_k1_k1):
    with pytest.raises(ValueError, match="cotree-not-binary"):
        count_hc_wrt(build_cotree(k2_k1_k1))


def test_count_report_render(k2_k1_k1):
    cat = to_binary(build_cotree(k2_k1_k1), "left-comb")
    text = count_hc_wrt(cat).render()
    assert text.endswith("labeled_total 8\n")
    assert "node (((a,b)1,c)0,d)0 N 4 s 2" in text


def test_count_hc_total(k2_k1_k1):
    assert count_hc_total(Graph(1)).labeled_total == 1
    assert count_hc_total(Graph(2, [(0, 1)])).labeled_total == 2
    assert count_hc_total(Graph(2)).labeled_total == 1
    assert count_hc_total(k2_k1_k1).labeled_total == 8
    p4 = Graph(4, [(0, 1), (1, 2), (2, 3)])
    with pytest.raises(NotACographError):
        count_hc_total(p4)


def test_count_matches_brute_force_per_tree(small_cographs):
    import math
    for g in small_cographs:
        if g.n > 4:
            break
        parts = proper_partitions(g)
        chi_fact = math.factorial(brute_chromatic(g))
        for t in all_binary_cotrees(g):
            brute = sum(1 for c in parts
                        if verify_hc(g, t, c, check_tree=False).accepted)
            assert count_hc_wrt(t).labeled_total == brute * chi_fact


def test_exhaustive_outputs_cover_hc_set(k2_k1_k1):
    def key(c):
        blocks = {}
        for v, col in c.items():
            blocks.setdefault(col, set()).add(v)
        return frozenset(frozenset(b) for b in blocks.values())

    produced = {key(c) for c in enumerate_alg1_outputs(k2_k1_k1)}
    hc = {key(c) for c in proper_partitions(k2_k1_k1)
          if is_hc_coloring(k2_k1_k1, c).accepted}
    assert produced == hc
    assert len(produced) == 4
