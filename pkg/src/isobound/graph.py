"""Immutable bitset graphs, the graph6 codec, clique enumeration, classification.

Vertices are integers 0..n-1. Adjacency lives in Python ints used as bit
masks, which keeps the set algebra the rest of the package runs on (private
neighborhoods, domination closures, clique residuals) branch-light. The
supported order cap is n <= 512.
"""

from dataclasses import dataclass

from .errors import Graph6ParseError, OrderCapError

ORDER_CAP = 512

GRAPH6_HEADER = ">>graph6<<"


def bits(mask):
    """Iterate set bit positions of mask in ascending order."""
    while mask:
        b = mask & -mask
        yield b.bit_length() - 1
        mask ^= b


def mask_of(vertices):
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


class Graph:
    """Undirected simple graph over vertices 0..n-1.

    adj[v] is the open neighborhood of v as a bit mask; clo[v] additionally
    contains v itself. Both are plain ints, so subset tests are single
    operations regardless of n.
    """

    __slots__ = ("n", "adj", "clo", "full")

    def __init__(self, n, edges=()):
        if n < 0 or n > ORDER_CAP:
            raise OrderCapError(f"order {n} outside supported range 0..{ORDER_CAP}")
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self.n = n
        self.adj = tuple(adj)
        self.clo = tuple(a | (1 << v) for v, a in enumerate(adj))
        self.full = (1 << n) - 1

    @classmethod
    def from_adj(cls, adj_masks):
        g = cls.__new__(cls)
        n = len(adj_masks)
        if n > ORDER_CAP:
            raise OrderCapError(f"order {n} outside supported range 0..{ORDER_CAP}")
        g.n = n
        g.adj = tuple(adj_masks)
        g.clo = tuple(a | (1 << v) for v, a in enumerate(adj_masks))
        g.full = (1 << n) - 1
        return g

    def degree(self, v):
        return self.adj[v].bit_count()

    def max_degree(self):
        return max((a.bit_count() for a in self.adj), default=0)

    def edge_count(self):
        return sum(a.bit_count() for a in self.adj) // 2

    def has_edge(self, u, v):
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v):
        return tuple(bits(self.adj[v]))

    def edges(self):
        for u in range(self.n):
            for v in bits(self.adj[u] >> (u + 1) << (u + 1)):
                yield (u, v)

    def induced(self, vertex_mask):
        """Induced subgraph plus the map from new indices to original ones."""
        keep = list(bits(vertex_mask))
        pos = {v: i for i, v in enumerate(keep)}
        adj = [0] * len(keep)
        for i, v in enumerate(keep):
            for w in bits(self.adj[v] & vertex_mask):
                adj[i] |= 1 << pos[w]
        return Graph.from_adj(adj), tuple(keep)

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self):
        return hash((self.n, self.adj))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.edge_count()})"


# ---------------------------------------------------------------------------
# graph6 codec
# ---------------------------------------------------------------------------


def _parse_order(data, pos):
    """Decode the N(n) prefix, returning (n, next_pos)."""
    if pos >= len(data):
        raise Graph6ParseError("empty graph6 record", pos)
    c = data[pos]
    if not 63 <= c <= 126:
        raise Graph6ParseError(f"byte {c} outside graph6 range 63..126", pos)
    if c != 126:
        return c - 63, pos + 1
    # long form: '~' then 3 bytes, or '~~' then 6 bytes
    if pos + 1 >= len(data):
        raise Graph6ParseError("truncated long-form order", pos + 1)
    if data[pos + 1] == 126:
        span, start = 6, pos + 2
    else:
        span, start = 3, pos + 1
    if start + span > len(data):
        raise Graph6ParseError("truncated long-form order", len(data))
    n = 0
    for i in range(start, start + span):
        c = data[i]
        if not 63 <= c <= 126:
            raise Graph6ParseError(f"byte {c} outside graph6 range 63..126", i)
        n = n << 6 | (c - 63)
    return n, start + span


def parse_graph6(text):
    """Decode one graph6 record (str or bytes, optional format header).

    Raises Graph6ParseError with the byte offset of the first offending byte
    for malformed input, and OrderCapError when the encoded order exceeds the
    supported cap.
    """
    if isinstance(text, str):
        data = text.encode("ascii", errors="surrogateescape")
    else:
        data = bytes(text)
    data = data.rstrip(b"\r\n")
    pos = 0
    if data.startswith(GRAPH6_HEADER.encode()):
        pos = len(GRAPH6_HEADER)
    n, pos = _parse_order(data, pos)
    if n > ORDER_CAP:
        raise OrderCapError(f"graph6 order {n} exceeds supported cap {ORDER_CAP}")
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(data) - pos < nbytes:
        raise Graph6ParseError(
            f"body needs {nbytes} bytes, found {len(data) - pos}", len(data)
        )
    if len(data) - pos > nbytes:
        raise Graph6ParseError("trailing data after graph6 body", pos + nbytes)
    adj = [0] * n
    bit = 0
    i, j = 0, 1  # upper triangle, column order
    for off in range(pos, pos + nbytes):
        c = data[off]
        if not 63 <= c <= 126:
            raise Graph6ParseError(f"byte {c} outside graph6 range 63..126", off)
        group = c - 63
        for shift in (5, 4, 3, 2, 1, 0):
            if bit >= nbits:
                if group >> shift & 1:
                    raise Graph6ParseError("nonzero padding bits", off)
                continue
            if group >> shift & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            bit += 1
            i += 1
            if i == j:
                i, j = 0, j + 1
    return Graph.from_adj(adj)


def encode_graph6(g):
    """Encode a Graph as a canonical graph6 string (no header, no newline)."""
    n = g.n
    if n > ORDER_CAP:
        raise OrderCapError(f"order {n} exceeds supported cap {ORDER_CAP}")
    out = bytearray()
    if n <= 62:
        out.append(n + 63)
    else:
        out.append(126)
        out.extend(((n >> s) & 63) + 63 for s in (12, 6, 0))
    group, filled = 0, 0
    for j in range(1, n):
        col = g.adj[j]
        for i in range(j):
            group = group << 1 | (col >> i & 1)
            filled += 1
            if filled == 6:
                out.append(group + 63)
                group, filled = 0, 0
    if filled:
        out.append((group << (6 - filled)) + 63)
    return out.decode("ascii")


# ---------------------------------------------------------------------------
# neighborhoods
# ---------------------------------------------------------------------------


def closed_mask(g, smask):
    """N[S] as a mask."""
    m = 0
    for v in bits(smask):
        m |= g.clo[v]
    return m


def closed_neighborhood(g, s):
    """N[S]: s together with every vertex adjacent to it."""
    smask = mask_of(s)
    if smask & ~g.full:
        raise ValueError("vertex out of range")
    return set(bits(closed_mask(g, smask)))


def remove_closed_neighborhood(g, s):
    """Induced subgraph on V \\ N[S] plus the map back to original indices."""
    smask = mask_of(s)
    if smask & ~g.full:
        raise ValueError("vertex out of range")
    return g.induced(g.full & ~closed_mask(g, smask))


# ---------------------------------------------------------------------------
# cliques
# ---------------------------------------------------------------------------


def enumerate_k_cliques(g, k, within=None):
    """All k-cliques, each a sorted tuple, in ascending lexicographic order.

    within restricts the search to an induced vertex mask. Emission order is
    the tuple order itself: the DFS extends prefixes by ascending vertex and
    never revisits smaller indices.
    """
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    allowed = g.full if within is None else within
    out = []
    prefix = []

    def extend(cand, need):
        if need == 0:
            out.append(tuple(prefix))
            return
        while cand:
            if cand.bit_count() < need:
                return
            b = cand & -cand
            v = b.bit_length() - 1
            cand ^= b
            prefix.append(v)
            extend(cand & g.adj[v], need - 1)
            prefix.pop()

    extend(allowed, k)
    return out


def has_k_clique(g, k, within=None):
    """Whether any k-clique exists (early-exit variant)."""
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    allowed = g.full if within is None else within

    def extend(cand, need):
        if need == 0:
            return True
        while cand:
            if cand.bit_count() < need:
                return False
            b = cand & -cand
            v = b.bit_length() - 1
            cand ^= b
            if extend(cand & g.adj[v], need - 1):
                return True
        return False

    return extend(allowed, k)


# ---------------------------------------------------------------------------
# classification
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class GraphClass:
    n: int
    m: int
    max_degree: int
    components: int
    is_connected: bool
    is_tree: bool
    is_cactus: bool
    is_block_graph: bool
    is_claw_free: bool
    cyclomatic_number: int


def components_masks(g):
    """Vertex masks of the connected components, ordered by least vertex."""
    seen = 0
    comps = []
    for v in range(g.n):
        if seen >> v & 1:
            continue
        comp = 1 << v
        frontier = g.adj[v] & ~comp
        while frontier:
            comp |= frontier
            nxt = 0
            for w in bits(frontier):
                nxt |= g.adj[w]
            frontier = nxt & ~comp
        comps.append(comp)
        seen |= comp
    return comps


def _biconnected_blocks(g):
    """Edge lists of the biconnected blocks (bridges come out as 1-edge blocks)."""
    n = g.n
    depth = [0] * n
    low = [0] * n
    blocks = []
    estack = []
    t = 0
    for root in range(n):
        if depth[root]:
            continue
        t += 1
        depth[root] = low[root] = t
        frames = [[root, -1, list(bits(g.adj[root])), 0]]
        while frames:
            fr = frames[-1]
            v, parent, nbrs, idx = fr[0], fr[1], fr[2], fr[3]
            if idx < len(nbrs):
                fr[3] += 1
                w = nbrs[idx]
                if w == parent:
                    continue
                if not depth[w]:
                    t += 1
                    depth[w] = low[w] = t
                    estack.append((v, w))
                    frames.append([w, v, list(bits(g.adj[w])), 0])
                elif depth[w] < depth[v]:
                    estack.append((v, w))
                    if depth[w] < low[v]:
                        low[v] = depth[w]
            else:
                frames.pop()
                if not frames:
                    continue
                u = frames[-1][0]
                if low[v] < low[u]:
                    low[u] = low[v]
                if low[v] >= depth[u]:
                    blk = []
                    while estack[-1] != (u, v):
                        blk.append(estack.pop())
                    blk.append(estack.pop())
                    blocks.append(blk)
    return blocks


def _is_claw_free(g):
    for v in range(g.n):
        nbrs = list(bits(g.adj[v]))
        for ai, a in enumerate(nbrs):
            for b in nbrs[ai + 1 :]:
                if g.adj[a] >> b & 1:
                    continue
                # third leaf: neighbor of v avoiding N[a] and N[b]
                if g.adj[v] & ~g.clo[a] & ~g.clo[b]:
                    return False
    return True


def classify(g):
    """Structural summary used by the theorem harness to route subclass checks."""
    n = g.n
    m = g.edge_count()
    comps = components_masks(g)
    ncomp = len(comps)
    connected = ncomp <= 1
    blocks = _biconnected_blocks(g)
    cactus = True
    block_graph = True
    for blk in blocks:
        vs = set()
        for u, v in blk:
            vs.add(u)
            vs.add(v)
        ne, nv = len(blk), len(vs)
        if ne > 1 and ne != nv:
            cactus = False
        if ne != nv * (nv - 1) // 2:
            block_graph = False
    return GraphClass(
        n=n,
        m=m,
        max_degree=g.max_degree(),
        components=ncomp,
        is_connected=connected,
        is_tree=connected and m == n - 1,
        is_cactus=cactus,
        is_block_graph=block_graph,
        is_claw_free=_is_claw_free(g),
        cyclomatic_number=m - n + ncomp,
    )
