"""Connected-graph corpus generation by vertex extension.

Every connected graph on n vertices arises from a connected graph on n - 1
vertices by attaching a new vertex to a nonempty subset (spanning trees have
at least two leaves, so a removable non-cut vertex always exists). Duplicate
isomorphs are folded through a Weisfeiler-Lehman hash bucket followed by an
exact VF2 check, so hash collisions cost time but never correctness.

The corpus file is written with networkx's graph6 encoder, keeping it an
artifact independent of the package codec it later exercises.

Run as a script to regenerate the committed corpus:

    python3 tests/graphgen.py tests/data/connected_upto8.g6
"""

import sys
from itertools import combinations

import networkx as nx

CONNECTED_COUNTS = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853, 8: 11117}
TREE_COUNTS = {1: 1, 2: 1, 3: 1, 4: 2, 5: 3, 6: 6, 7: 11, 8: 23, 9: 47}
CUBIC_COUNTS = {4: 1, 6: 2, 8: 5, 10: 19}


class _Pool:
    """Isomorphism-class set: WL-hash buckets resolved exactly by VF2."""

    def __init__(self):
        self.buckets = {}
        self.count = 0

    def add(self, graph):
        key = (
            graph.number_of_edges(),
            tuple(sorted(d for _, d in graph.degree())),
            nx.weisfeiler_lehman_graph_hash(graph, iterations=2),
        )
        bucket = self.buckets.setdefault(key, [])
        for rep in bucket:
            if nx.is_isomorphic(rep, graph):
                return False
        bucket.append(graph)
        self.count += 1
        return True

    def graphs(self):
        for bucket in self.buckets.values():
            yield from bucket


def _extend(graph, subset):
    child = graph.copy()
    new = graph.number_of_nodes()
    child.add_node(new)
    child.add_edges_from((u, new) for u in subset)
    return child


def connected_graphs(n):
    """All connected graphs on exactly n vertices, one per isomorphism class."""
    if n < 1:
        return []
    level = [nx.Graph([(0, 0)])]
    level[0].remove_edge(0, 0)
    for m in range(2, n + 1):
        pool = _Pool()
        for parent in level:
            for size in range(1, m):
                for subset in combinations(range(m - 1), size):
                    pool.add(_extend(parent, subset))
        level = list(pool.graphs())
    return level


def connected_trees(n):
    """All trees on exactly n vertices, grown leaf by leaf."""
    if n < 1:
        return []
    level = [nx.Graph([(0, 0)])]
    level[0].remove_edge(0, 0)
    for m in range(2, n + 1):
        pool = _Pool()
        for parent in level:
            for u in range(m - 1):
                pool.add(_extend(parent, (u,)))
        level = list(pool.graphs())
    return level


def cubic_graphs(n):
    """All connected 3-regular graphs on exactly n vertices.

    Grows degree-capped connected graphs, pruning any intermediate whose
    degree deficiencies cannot be absorbed by the vertices still to come:
    with r vertices left, a vertex may still gain at most r edges, the
    total deficiency D satisfies D <= 3r, and D - 3r must be even since
    edges among the new vertices soak up deficiency in pairs.
    """
    if n < 4 or n % 2:
        return []
    level = [nx.Graph([(0, 0)])]
    level[0].remove_edge(0, 0)
    for m in range(2, n + 1):
        pool = _Pool()
        remaining = n - m
        for parent in level:
            open_slots = [u for u, d in parent.degree() if d < 3]
            for size in range(1, min(3, len(open_slots)) + 1):
                for subset in combinations(open_slots, size):
                    child = _extend(parent, subset)
                    deficiency = sum(3 - d for _, d in child.degree())
                    if deficiency > 3 * remaining or (deficiency - 3 * remaining) % 2:
                        continue
                    if any(3 - d > remaining for _, d in child.degree()):
                        continue
                    pool.add(child)
        level = list(pool.graphs())
    return [g for g in level if all(d == 3 for _, d in g.degree())]


def graph6_line(graph):
    return nx.to_graph6_bytes(graph, header=False).strip().decode()


def write_corpus(path, max_n=8):
    total = 0
    with open(path, "w") as fh:
        for n in range(1, max_n + 1):
            graphs = connected_graphs(n)
            assert len(graphs) == CONNECTED_COUNTS[n], (n, len(graphs))
            for line in sorted(graph6_line(g) for g in graphs):
                fh.write(line + "\n")
            total += len(graphs)
    return total


if __name__ == "__main__":
    target = sys.argv[1] if len(sys.argv) > 1 else "tests/data/connected_upto8.g6"
    count = write_corpus(target)
    print(f"wrote {count} graphs to {target}")
