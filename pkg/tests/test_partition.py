import pytest

from isobound import (
    Graph,
    MachineryError,
    PreconditionError,
    RegimeError,
    check_delta_regime,
    compute_partition,
    is_maximal_irredundant,
    refine_pairs,
    refine_twins,
    representatives_dominate,
    undominated_witnesses,
)

import oracles


def p4():
    return Graph(4, [(0, 1), (1, 2), (2, 3)])


def c6():
    return Graph(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)])


def complete(n):
    return Graph(n, [(a, b) for a in range(n) for b in range(a + 1, n)])


class TestComputePartition:
    def test_path_example(self):
        part = compute_partition(p4(), (1, 2))
        assert part.i == (1, 2)
        assert part.u == ()
        assert part.p == (0, 3)
        assert part.s == ()
        assert part.z == ()
        assert part.a == (1, 2)
        assert part.q == (1, 2)
        assert part.b == ()
        assert part.nset == () and part.m == ()
        assert part.pn == {1: (0,), 2: (3,)}

    def test_cycle_isolated_members(self):
        part = compute_partition(c6(), (0, 3))
        assert part.z == (0, 3)
        assert part.a == ()
        assert part.p == (1, 2, 4, 5)
        assert part.u == () and part.s == ()
        assert part.pn[0] == (0, 1, 5)

    def test_complete_graph(self):
        part = compute_partition(complete(4), (0,))
        assert part.i == (0,)
        assert part.z == (0,)
        assert part.p == (1, 2, 3)
        assert part.u == () and part.s == ()

    def test_rejects_non_maximal(self):
        with pytest.raises(PreconditionError):
            compute_partition(c6(), (0,))

    def test_rejects_redundant(self):
        with pytest.raises(PreconditionError):
            compute_partition(p4(), (0, 1, 2))

    def test_exhaustive_invariants(self, corpus_by_order):
        for n in (2, 3, 4, 5, 6):
            for line, g in corpus_by_order[n]:
                for iset in oracles.maximal_irredundant_sets(g):
                    part = compute_partition(g, iset)
                    everyone = sorted(part.i + part.u + part.p + part.s)
                    assert everyone == list(range(g.n)), line
                    assert sorted(part.z + part.a) == sorted(part.i)
                    assert sorted(part.b + part.q) == sorted(part.a)
                    assert sorted(part.nset + part.m) == sorted(part.b)
                    assert len(part.nhat) == len(part.nset)
                    for x in part.i:
                        assert set(part.pn[x]) == oracles.privates(g, iset, x), line
                    for v in part.s:
                        hits = sum(1 for y in part.i if g.has_edge(v, y))
                        assert hits >= 2
                    if part.u:
                        assert part.b, line


class TestUndominatedWitnesses:
    def test_empty_when_dominating(self):
        assert undominated_witnesses(p4(), (1, 2)) == ()

    def test_witness_structure_exhaustive(self, corpus_by_order):
        for n in (4, 5, 6):
            for line, g in corpus_by_order[n]:
                for iset in oracles.maximal_irredundant_sets(g):
                    part = compute_partition(g, iset)
                    wits = undominated_witnesses(g, iset, part)
                    assert len(wits) == len(part.u)
                    for wit in wits:
                        assert wit.u in part.u
                        assert wit.x in part.b
                        # the designated member's privates sit in N(u)
                        assert set(part.pn[wit.x]) <= oracles.nbrs(g, wit.u)
                        for x1, x2, y1, y2 in wit.pairs:
                            assert x1 < x2
                            assert not g.has_edge(x1, x2)
                            assert {x1, x2} <= set(part.pn[wit.x])

    def test_representatives_dominate_exhaustive(self, corpus_by_order):
        for n in (4, 5, 6):
            for line, g in corpus_by_order[n]:
                for iset in oracles.maximal_irredundant_sets(g):
                    part = compute_partition(g, iset)
                    assert representatives_dominate(g, part), line


class TestDeltaRegime:
    def test_wrong_k_rejected(self):
        part = compute_partition(p4(), (1, 2))
        with pytest.raises(RegimeError):
            check_delta_regime(p4(), part, 1)  # delta is 2

    def test_exhaustive_clean(self, corpus_by_order):
        for n in (2, 3, 4, 5, 6):
            for line, g in corpus_by_order[n]:
                delta = g.max_degree()
                for iset in oracles.maximal_irredundant_sets(g):
                    part = compute_partition(g, iset)
                    check_delta_regime(g, part, delta)


class TestRefinePairs:
    def test_requires_matching_k(self):
        g = complete(4)
        part = compute_partition(g, (0,))
        with pytest.raises(RegimeError):
            refine_pairs(g, (0,), part, 3)  # delta - 1 is 2

    def test_unknown_reading_rejected(self):
        g = c6()
        part = compute_partition(g, (0, 3))
        with pytest.raises(ValueError):
            refine_pairs(g, (0, 3), part, 1, sprime_reading="nope")

    def test_readings_agree_exhaustive(self, corpus_by_order):
        for n in (3, 4, 5, 6):
            for line, g in corpus_by_order[n]:
                delta = g.max_degree()
                if delta < 2:
                    continue
                for iset in oracles.maximal_irredundant_sets(g):
                    part = compute_partition(g, iset)
                    a = refine_pairs(g, iset, part, delta - 1, "i-adjacency")
                    b = refine_pairs(g, iset, part, delta - 1, "g-adjacency")
                    assert a.sprime == b.sprime, line
                    assert a.s_param == b.s_param
                    assert 0 <= a.s_param <= max(0, delta - 2)
                    if a.s_param == 0:
                        assert a.x == ()

    def test_pair_fields(self, corpus_by_order):
        for line, g in corpus_by_order[6][:60]:
            delta = g.max_degree()
            if delta < 2:
                continue
            from isobound.solvers import ir

            iset = ir(g).witness
            part = compute_partition(g, iset)
            ref = refine_pairs(g, iset, part, delta - 1)
            assert sorted(ref.mprime + ref.mtilde) == sorted(part.m)
            for x, lo, hi in ref.pairs:
                assert x in ref.mprime
                assert lo < hi
                assert part.pn[x] == (lo, hi)
            assert ref.y == tuple(lo for _, lo, _ in ref.pairs)


class TestRefineTwins:
    def test_requires_matching_k(self):
        g = complete(4)
        part = compute_partition(g, (0,))
        with pytest.raises(RegimeError):
            refine_twins(g, (0,), part, 3)  # delta - 2 is 1

    def test_low_degree_rejected(self):
        g = c6()
        part = compute_partition(g, (0, 3))
        with pytest.raises(RegimeError):
            refine_twins(g, (0, 3), part, 1)

    def test_exhaustive_clean(self, corpus_by_order):
        for n in (4, 5, 6):
            for line, g in corpus_by_order[n]:
                delta = g.max_degree()
                if delta < 3:
                    continue
                for iset in oracles.maximal_irredundant_sets(g):
                    part = compute_partition(g, iset)
                    ref = refine_twins(g, iset, part, delta - 2)
                    assert sorted(ref.mprime + ref.mdouble + ref.mbar) == sorted(part.m)
                    assert sorted(ref.qprime + ref.qtilde) == sorted(part.q)
                    assert ref.isolated_count + ref.twin_count == len(ref.clusters)
                    assert len(ref.x) == len(ref.clusters)
                    assert len(ref.mhat) == len(ref.mprime) + len(ref.mdouble)
                    assert len(ref.qhat) == len(ref.qprime)


class TestMachineryGuard:
    def test_machinery_error_is_runtime_error(self):
        assert issubclass(MachineryError, RuntimeError)
