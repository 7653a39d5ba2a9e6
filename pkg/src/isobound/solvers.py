"""Exact solvers for domination, k-isolation and irredundance numbers.

All three return the invariant value together with the lexicographically
least optimal witness (as a sorted tuple) and a count of explored search
nodes. Exactness is non-negotiable here; the solvers are the ground truth
the rest of the package is checked against, so they favor simple provably
complete branching over cleverness.
"""

from dataclasses import dataclass

from .errors import CertificateError, SizeCapError
from .graph import bits, closed_mask, enumerate_k_cliques
from .predicates import is_k_isolating_mask

IR_ORDER_CAP = 32


@dataclass(frozen=True)
class SolveResult:
    value: int
    witness: tuple
    explored: int


@dataclass(frozen=True)
class PackingCertificate:
    """Pairwise disjoint closed neighborhoods of k-cliques.

    Every k-isolating set must take a vertex inside each region, so the
    number of regions is a lower bound on the k-isolation number. For k=1
    this is the classical disjoint-closed-neighborhood bound on domination.
    """

    k: int
    cliques: tuple
    regions: tuple


def _clique_targets(g, k):
    """(vertex mask, closed-neighborhood mask) per k-clique, lex order."""
    targets = []
    for c in enumerate_k_cliques(g, k):
        vmask = 0
        cover = 0
        for v in c:
            vmask |= 1 << v
            cover |= g.clo[v]
        targets.append((vmask, cover))
    return targets


def _isolation_solve(g, k):
    targets = _clique_targets(g, k)
    explored = [0]
    if not targets:
        return SolveResult(0, (), 0)

    def greedy_packing():
        used = 0
        count = 0
        for vmask, cover in targets:
            if not cover & used:
                used |= cover
                count += 1
        return count

    def dfs(budget, covered, allowed):
        explored[0] += 1
        best_cando = None
        best_size = None
        for vmask, cover in targets:
            if vmask & covered:
                continue
            cando = cover & allowed
            size = cando.bit_count()
            if size == 0:
                return False
            if best_size is None or size < best_size:
                best_cando, best_size = cando, size
                if size == 1:
                    break
        if best_cando is None:
            # nothing left to kill; pad up to the exact target size
            return allowed.bit_count() >= budget
        if budget == 0:
            return False
        for v in bits(best_cando):
            if dfs(budget - 1, covered | g.clo[v], allowed & ~(1 << v)):
                return True
        return False

    def feasible(size, forced, min_free):
        budget = size - forced.bit_count()
        if budget < 0:
            return False
        allowed = (g.full >> min_free << min_free) & ~forced
        return dfs(budget, closed_mask(g, forced), allowed)

    value = None
    for size in range(greedy_packing(), g.n + 1):
        if feasible(size, 0, 0):
            value = size
            break
    assert value is not None, "the full vertex set is always isolating"
    witness = []
    forced = 0
    start = 0
    for _ in range(value):
        for v in range(start, g.n):
            trial = forced | (1 << v)
            if feasible(value, trial, v + 1):
                forced = trial
                witness.append(v)
                start = v + 1
                break
    assert is_k_isolating_mask(g, forced, k)
    return SolveResult(value, tuple(witness), explored[0])


def gamma(g):
    """Domination number with its lex-least minimum dominating set."""
    return _isolation_solve(g, 1)


def iota(g, k):
    """k-isolation number: fewest vertices whose closed neighborhood removal
    leaves the graph k-clique-free."""
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    return _isolation_solve(g, k)


def ir(g, force=False):
    """Irredundance lower number: smallest maximal irredundant set.

    The search walks irredundant sets in ascending lexicographic order per
    size (irredundance is hereditary, so prefix pruning is exact) and tests
    maximality literally, by attempting every one-vertex extension. The first
    hit at the smallest feasible size is the lex-least witness.

    Refuses n > 32 unless force=True; the enumeration is exponential and the
    cap keeps accidental huge inputs from hanging.
    """
    if g.n > IR_ORDER_CAP and not force:
        raise SizeCapError(
            f"ir solve on n={g.n} exceeds cap {IR_ORDER_CAP}; pass force=True"
        )
    if g.n == 0:
        return SolveResult(0, (), 0)
    explored = [0]

    def maximal(smask, pns, union_closed):
        for w in bits(g.full & ~smask):
            if not g.clo[w] & ~union_closed:
                continue  # w would lose its own private neighbor
            if all(pn & ~g.clo[w] for pn in pns):
                return False
        return True

    def dfs(start, smask, members, pns, union_closed, need):
        explored[0] += 1
        if need == 0:
            return maximal(smask, pns, union_closed)
        for u in range(start, g.n - need + 1):
            cu = g.clo[u]
            pn_u = cu & ~union_closed
            if not pn_u:
                continue
            new_pns = []
            ok = True
            for pn in pns:
                np = pn & ~cu
                if not np:
                    ok = False
                    break
                new_pns.append(np)
            if not ok:
                continue
            new_pns.append(pn_u)
            members.append(u)
            if dfs(
                u + 1, smask | (1 << u), members, new_pns, union_closed | cu, need - 1
            ):
                return True
            members.pop()
        return False

    for size in range(1, g.n + 1):
        members = []
        if dfs(0, 0, members, [], 0, size):
            return SolveResult(size, tuple(members), explored[0])
    raise AssertionError("every nonempty graph has a maximal irredundant set")


def iota_lower_bound(g, k, designated=None):
    """Packing lower bound on iota(g, k) with its certificate.

    With designated cliques the certificate is validated (each must be a
    k-clique, closed neighborhoods pairwise disjoint) and its size returned;
    otherwise a deterministic greedy packing over the lex clique order is
    built.
    """
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    cliques = []
    regions = []
    used = 0
    if designated is not None:
        for c in designated:
            cs = tuple(sorted(c))
            vmask = 0
            for v in cs:
                if not 0 <= v < g.n:
                    raise CertificateError(f"clique vertex {v} out of range")
                vmask |= 1 << v
            if vmask.bit_count() != k or len(cs) != k:
                raise CertificateError(f"designated set {cs} is not a {k}-clique")
            for v in cs:
                if vmask & ~g.clo[v]:
                    raise CertificateError(f"designated set {cs} is not a {k}-clique")
            cover = closed_mask(g, vmask)
            if cover & used:
                raise CertificateError(
                    f"closed neighborhood of {cs} overlaps an earlier region"
                )
            used |= cover
            cliques.append(cs)
            regions.append(tuple(bits(cover)))
    else:
        for vmask, cover in _clique_targets(g, k):
            if not cover & used:
                used |= cover
                cliques.append(tuple(bits(vmask)))
                regions.append(tuple(bits(cover)))
    cert = PackingCertificate(k=k, cliques=tuple(cliques), regions=tuple(regions))
    return len(cliques), cert
