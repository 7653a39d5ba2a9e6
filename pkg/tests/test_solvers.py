import random
from itertools import combinations

import pytest

from isobound import (
    CertificateError,
    Graph,
    SizeCapError,
    gamma,
    iota,
    iota_lower_bound,
    ir,
    is_dominating,
    is_k_isolating,
    is_maximal_irredundant,
)
from isobound.families import gen_five_thirds

import oracles
from graphgen import connected_trees


def complete(n):
    return Graph(n, [(a, b) for a in range(n) for b in range(a + 1, n)])


def path(n):
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n):
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


class TestGamma:
    def test_known_values(self):
        assert gamma(complete(5)).value == 1
        assert gamma(path(7)).value == 3
        assert gamma(cycle(6)).value == 2
        assert gamma(Graph(4, [(0, 1), (0, 2), (0, 3)])).value == 1
        assert gamma(Graph(3)).value == 3

    def test_empty_graph(self):
        res = gamma(Graph(0))
        assert res.value == 0 and res.witness == ()

    def test_witness_dominates(self, corpus_by_order):
        for line, g in corpus_by_order[7][:150]:
            res = gamma(g)
            assert is_dominating(g, res.witness)
            assert len(res.witness) == res.value

    def test_lex_least_witness(self, corpus_by_order):
        for line, g in corpus_by_order[6][:50]:
            res = gamma(g)
            size, brute = oracles.brute_gamma(g)
            assert res.value == size
            assert res.witness == brute  # combinations() yields lex order


class TestIr:
    def test_known_values(self):
        assert ir(complete(5)).value == 1
        assert ir(path(7)).value == 3
        assert ir(cycle(6)).value == 2
        assert ir(path(4)).value == 2

    def test_against_oracle(self, corpus_by_order):
        for line, g in corpus_by_order[6][:80]:
            res = ir(g)
            size, brute = oracles.brute_ir(g)
            assert res.value == size, line
            assert res.witness == brute
            assert is_maximal_irredundant(g, res.witness)

    def test_ir_at_most_gamma(self, corpus_by_order):
        for line, g in corpus_by_order[7][:200]:
            assert ir(g).value <= gamma(g).value

    def test_order_cap(self):
        big = complete(33)
        with pytest.raises(SizeCapError):
            ir(big)
        assert ir(big, force=True).value == 1

    def test_five_thirds_instance(self):
        inst = gen_five_thirds()
        assert ir(inst.graph).value == 6
        assert gamma(inst.graph).value == 10

    def test_trees_strict_bound(self):
        for n in range(2, 10):
            for t in connected_trees(n):
                edges = [tuple(sorted(e)) for e in t.edges()]
                g = Graph(n, edges)
                assert 2 * gamma(g).value < 3 * ir(g).value


class TestIota:
    def test_known_values(self):
        assert iota(complete(5), 5).value == 1
        assert iota(cycle(6), 2).value == 2
        assert iota(path(7), 2).value == 2
        # triangle-free graph never holds a 3-clique
        res = iota(cycle(6), 3)
        assert res.value == 0 and res.witness == ()

    def test_iota_one_is_gamma(self, corpus_by_order):
        for line, g in corpus_by_order[6][:80]:
            assert iota(g, 1).value == gamma(g).value

    def test_against_oracle(self, corpus_by_order):
        for line, g in corpus_by_order[6][:60]:
            for k in (2, 3):
                res = iota(g, k)
                size, brute = oracles.brute_iota(g, k)
                assert res.value == size
                assert res.witness == brute
                assert is_k_isolating(g, res.witness, k)

    def test_monotone_in_k(self, corpus_by_order):
        for line, g in corpus_by_order[7][:100]:
            delta = g.max_degree()
            vals = [iota(g, k).value for k in range(1, delta + 2)]
            assert all(a >= b for a, b in zip(vals, vals[1:]))

    def test_k_must_be_positive(self):
        with pytest.raises(ValueError):
            iota(path(3), 0)


class TestPackingBound:
    def test_greedy_on_disjoint_triangles(self):
        g = Graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
        bound, cert = iota_lower_bound(g, 3)
        assert bound == 2
        assert len(cert.cliques) == 2
        assert iota(g, 3).value == 2

    def test_designated_validation(self):
        g = Graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
        bound, cert = iota_lower_bound(g, 3, designated=[(0, 1, 2), (3, 4, 5)])
        assert bound == 2
        with pytest.raises(CertificateError):
            iota_lower_bound(g, 3, designated=[(0, 1, 3)])  # not a clique
        with pytest.raises(CertificateError):
            # shared closed neighborhood: both triangles touch vertex 2's edge
            iota_lower_bound(
                Graph(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]),
                3,
                designated=[(0, 1, 2), (2, 3, 4)],
            )

    def test_bound_never_exceeds_optimum(self, corpus_by_order):
        for line, g in corpus_by_order[6][:80]:
            for k in (2, 3):
                bound, _ = iota_lower_bound(g, k)
                assert bound <= iota(g, k).value


class TestSolveResult:
    def test_explored_positive(self):
        res = gamma(path(5))
        assert res.explored > 0

    def test_witness_tuple_sorted(self):
        res = gamma(cycle(9))
        assert list(res.witness) == sorted(res.witness)
