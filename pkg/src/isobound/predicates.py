"""Vertex-set predicates: domination, irredundance, clique isolation.

Public functions take iterables of vertex indices and validate their input.
The _mask variants work on raw bit masks without validation; solvers and the
partition machinery call those in hot loops.
"""

from .graph import bits, closed_mask, has_k_clique, mask_of


def _check_set(g, s):
    smask = mask_of(s)
    if smask & ~g.full:
        raise ValueError("vertex out of range")
    return smask


def private_neighbors_mask(g, smask, x):
    """PN(x, S) = N[x] \\ N[S \\ {x}] as a mask. x is in its own PN iff it is
    isolated in G[S]."""
    return g.clo[x] & ~closed_mask(g, smask & ~(1 << x))


def private_neighbors(g, s, x):
    """The private neighborhood of x with respect to s.

    x must be a member of s; vertices of s \\ {x} never qualify, and x itself
    qualifies exactly when it has no neighbor inside s.
    """
    smask = _check_set(g, s)
    if not smask >> x & 1:
        raise ValueError(f"vertex {x} is not in the set")
    return tuple(bits(private_neighbors_mask(g, smask, x)))


def is_dominating_mask(g, smask):
    return closed_mask(g, smask) == g.full


def is_dominating(g, s):
    """Whether N[s] covers every vertex."""
    return is_dominating_mask(g, _check_set(g, s))


def is_irredundant_mask(g, smask):
    for x in bits(smask):
        if not private_neighbors_mask(g, smask, x):
            return False
    return True


def is_irredundant(g, s):
    """Whether every member of s keeps a nonempty private neighborhood.

    The empty set is irredundant.
    """
    return is_irredundant_mask(g, _check_set(g, s))


def is_maximal_irredundant_mask(g, smask):
    if not is_irredundant_mask(g, smask):
        return False
    for u in bits(g.full & ~smask):
        if is_irredundant_mask(g, smask | (1 << u)):
            return False
    return True


def is_maximal_irredundant(g, s):
    """Irredundant and not extendable by any single outside vertex."""
    return is_maximal_irredundant_mask(g, _check_set(g, s))


def is_k_isolating_mask(g, smask, k):
    return not has_k_clique(g, k, within=g.full & ~closed_mask(g, smask))


def is_k_isolating(g, s, k):
    """Whether G - N[s] contains no k-clique.

    k=1 coincides with domination. Any k above the largest clique order makes
    every set (including the empty one) isolating.
    """
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    return is_k_isolating_mask(g, _check_set(g, s), k)
