"""Bit-row graphs, the graph6 codec, and exact isomorphism utilities.

A :class:`Graph` stores one integer bitmask per vertex: bit ``w`` of row
``v`` is set iff ``vw`` is an edge.  Graphs are immutable values; every
operation returns a fresh instance, so they are safe to share between
worker processes.  Vertex counts are capped at 64 to keep each row in a
single machine word.

Canonical labeling is an exhaustive minimum-bitstring search (no external
labeler), exact for any size but intended for graphs of at most ~10
vertices.  The bitstring order matches graph6's column order, which is
what makes orderly generation in :mod:`reedcheck.corpus` correct: the
prefix of a minimal string is itself minimal.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence

MAX_VERTICES = 64

_G6_HEADER = ">>graph6<<"


class Graph6Error(ValueError):
    """Malformed graph6 input; ``offset`` is the 0-based byte position."""

    def __init__(self, message: str, offset: int | None = None):
        if offset is not None:
            message = f"{message} (byte offset {offset})"
        super().__init__(message)
        self.offset = offset


class Graph:
    """Immutable undirected simple graph on vertices ``0..n-1``."""

    __slots__ = ("n", "adj")

    def __init__(self, n: int, adj: Sequence[int]):
        adj = tuple(adj)
        if not 0 <= n <= MAX_VERTICES:
            raise ValueError(f"vertex count {n} outside 0..{MAX_VERTICES}")
        if len(adj) != n:
            raise ValueError(f"expected {n} adjacency rows, got {len(adj)}")
        full = (1 << n) - 1
        for v, row in enumerate(adj):
            if row & ~full:
                raise ValueError(f"row {v} has bits set beyond vertex {n - 1}")
            if (row >> v) & 1:
                raise ValueError(f"loop at vertex {v}")
        for v in range(n):
            for w in range(v + 1, n):
                if ((adj[v] >> w) & 1) != ((adj[w] >> v) & 1):
                    raise ValueError(f"asymmetric adjacency between {v} and {w}")
        self.n = n
        self.adj = adj

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        rows = [0] * n
        for v, w in edges:
            if v == w:
                raise ValueError(f"loop at vertex {v}")
            rows[v] |= 1 << w
            rows[w] |= 1 << v
        return cls(n, rows)

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, [0] * n)

    @classmethod
    def complete(cls, n: int) -> "Graph":
        full = (1 << n) - 1
        return cls(n, [full ^ (1 << v) for v in range(n)])

    @classmethod
    def cycle(cls, n: int) -> "Graph":
        if n < 3:
            raise ValueError("a cycle needs at least 3 vertices")
        return cls.from_edges(n, [(v, (v + 1) % n) for v in range(n)])

    @classmethod
    def path(cls, n: int) -> "Graph":
        return cls.from_edges(n, [(v, v + 1) for v in range(n - 1)])

    @property
    def m(self) -> int:
        """Number of edges."""
        return sum(row.bit_count() for row in self.adj) // 2

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def has_edge(self, v: int, w: int) -> bool:
        return bool((self.adj[v] >> w) & 1)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(iter_bits(self.adj[v]))

    def edges(self) -> Iterable[tuple[int, int]]:
        for v in range(self.n):
            row = self.adj[v] >> (v + 1)
            w = v + 1
            while row:
                if row & 1:
                    yield (v, w)
                row >>= 1
                w += 1

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={list(self.edges())})"

    def __reduce__(self):
        return (Graph, (self.n, self.adj))


def iter_bits(mask: int) -> Iterable[int]:
    """Indices of set bits, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def complement(g: Graph) -> Graph:
    """Edge vw present iff v != w and vw absent in ``g``."""
    full = (1 << g.n) - 1
    return Graph(g.n, [full ^ row ^ (1 << v) for v, row in enumerate(g.adj)])


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> Graph:
    """Subgraph induced by ``vertices``, relabeled 0.. in index order."""
    keep = sorted(set(vertices))
    if keep and not 0 <= keep[0] <= keep[-1] < g.n:
        raise ValueError(f"vertex set not within 0..{g.n - 1}")
    pos = {v: i for i, v in enumerate(keep)}
    rows = [0] * len(keep)
    for v in keep:
        for w in iter_bits(g.adj[v]):
            if w in pos:
                rows[pos[v]] |= 1 << pos[w]
    return Graph(len(keep), rows)


# ---------------------------------------------------------------------------
# graph6 codec
# ---------------------------------------------------------------------------

def graph_to_graph6(g: Graph) -> str:
    """Encode as one-line graph6: length byte n+63, then upper-triangle bits
    in column order x(0,1), x(0,2), x(1,2), x(0,3), ... in 6-bit groups."""
    if g.n > 62:
        raise Graph6Error(f"graph6 single-byte sizes stop at 62 vertices, got {g.n}")
    out = [chr(63 + g.n)]
    acc = 0
    nbits = 0
    for j in range(1, g.n):
        for i in range(j):
            acc = (acc << 1) | ((g.adj[i] >> j) & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(63 + acc))
                acc = 0
                nbits = 0
    if nbits:
        out.append(chr(63 + (acc << (6 - nbits))))
    return "".join(out)


def graph_from_graph6(text: str) -> Graph:
    """Decode a one-line graph6 string (optional ``>>graph6<<`` header)."""
    s = text.rstrip("\r\n")
    base = 0
    if s.startswith(_G6_HEADER):
        base = len(_G6_HEADER)
        s = s[base:]
    if not s:
        raise Graph6Error("missing length byte", offset=base)
    c0 = ord(s[0])
    if c0 == 126:
        raise Graph6Error("multi-byte vertex counts (n > 62) unsupported", offset=base)
    if not 63 <= c0 <= 125:
        raise Graph6Error(f"bad length byte {s[0]!r}", offset=base)
    n = c0 - 63
    npairs = n * (n - 1) // 2
    need = (npairs + 5) // 6
    body = s[1:]
    if len(body) < need:
        raise Graph6Error(
            f"truncated: expected {need} data bytes, found {len(body)}",
            offset=base + 1 + len(body),
        )
    if len(body) > need:
        raise Graph6Error("trailing garbage after graph data", offset=base + 1 + need)
    rows = [0] * n
    pairs = ((i, j) for j in range(1, n) for i in range(j))
    bitpos = 0
    for idx, ch in enumerate(body):
        c = ord(ch)
        if not 63 <= c <= 126:
            raise Graph6Error(f"character {ch!r} out of graph6 range", offset=base + 1 + idx)
        group = c - 63
        for shift in range(5, -1, -1):
            bit = (group >> shift) & 1
            if bitpos < npairs:
                if bit:
                    i, j = next(pairs)
                    rows[i] |= 1 << j
                    rows[j] |= 1 << i
                else:
                    next(pairs)
            elif bit:
                raise Graph6Error("nonzero padding bits", offset=base + 1 + idx)
            bitpos += 1
    return Graph(n, rows)


# ---------------------------------------------------------------------------
# canonical labeling (exhaustive minimum-bitstring, graph6 column order)
# ---------------------------------------------------------------------------

def _column_bits(adj: Sequence[int], n: int) -> list[int]:
    # column j = adjacency of j to 0..j-1, vertex 0 in the most significant bit
    cols = []
    for j in range(n):
        b = 0
        for i in range(j):
            b = (b << 1) | ((adj[i] >> j) & 1)
        cols.append(b)
    return cols


def is_min_labeled(adj: Sequence[int], n: int) -> bool:
    """True iff no relabeling gives a lexicographically smaller column string.

    This is the rejection test behind orderly generation: a graph is kept
    iff its current labeling already is the canonical one.
    """
    target = _column_bits(adj, n)
    placed: list[int] = []

    def dfs(depth: int, used: int) -> bool:
        if depth == n:
            return True
        t = target[depth]
        for v in range(n):
            if (used >> v) & 1:
                continue
            b = 0
            for p in placed:
                b = (b << 1) | ((adj[p] >> v) & 1)
            if b > t:
                continue
            if b < t:
                return False
            placed.append(v)
            ok = dfs(depth + 1, used | (1 << v))
            placed.pop()
            if not ok:
                return False
        return True

    return dfs(0, 0)


def canonical_form(g: Graph) -> Graph:
    """Relabeling of ``g`` with the minimum column bitstring.

    Exact for every size; the frontier search collapses equivalent partial
    orderings, which keeps symmetric graphs tractable, but cost still grows
    quickly past ~10 vertices.
    """
    n = g.n
    if n <= 1:
        return g
    adj = g.adj
    frontier: list[tuple[tuple[int, ...], int]] = [((), 0)]
    for _ in range(n):
        best = None
        extended: list[tuple[tuple[int, ...], int]] = []
        for placed, used in frontier:
            for v in range(n):
                if (used >> v) & 1:
                    continue
                b = 0
                for p in placed:
                    b = (b << 1) | ((adj[p] >> v) & 1)
                if best is None or b < best:
                    best = b
                    extended = [(placed + (v,), used | (1 << v))]
                elif b == best:
                    extended.append((placed + (v,), used | (1 << v)))
        # orderings with identical adjacency profiles to the unplaced rest
        # have identical futures; keep one representative of each
        seen = set()
        frontier = []
        for placed, used in extended:
            profile = []
            for w in range(n):
                if (used >> w) & 1:
                    continue
                b = 0
                for p in placed:
                    b = (b << 1) | ((adj[p] >> w) & 1)
                profile.append(b)
            key = (used, tuple(profile))
            if key not in seen:
                seen.add(key)
                frontier.append((placed, used))
    perm = frontier[0][0]
    rows = [0] * n
    for i in range(n):
        for j in range(n):
            if i != j and (adj[perm[i]] >> perm[j]) & 1:
                rows[i] |= 1 << j
    return Graph(n, rows)


def canonical_code(g: Graph) -> str:
    """Total-order key equal across all relabelings of ``g``.

    The key is the graph6 encoding of the canonical form, so equal codes
    mean isomorphic graphs and codes sort by (n, edge bitstring).
    """
    return graph_to_graph6(canonical_form(g))


def is_isomorphic(a: Graph, b: Graph) -> bool:
    """Exact isomorphism test by backtracking over degree-compatible maps."""
    if a.n != b.n or a.m != b.m:
        return False
    n = a.n
    dega = [a.degree(v) for v in range(n)]
    degb = [b.degree(v) for v in range(n)]
    if sorted(dega) != sorted(degb):
        return False
    image = [-1] * n
    used = [False] * n

    def extend(v: int) -> bool:
        if v == n:
            return True
        for w in range(n):
            if used[w] or dega[v] != degb[w]:
                continue
            ok = True
            for u in range(v):
                if ((a.adj[v] >> u) & 1) != ((b.adj[w] >> image[u]) & 1):
                    ok = False
                    break
            if ok:
                image[v] = w
                used[w] = True
                if extend(v + 1):
                    return True
                used[w] = False
        return False

    return extend(0)
