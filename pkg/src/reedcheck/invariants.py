"""Exact graph invariants: maximum degree, clique number, chromatic number,
independence number, and the Reed bound ceil((delta + omega + 1) / 2).

Everything here is exact and deterministic.  The clique solver is a
bitset branch-and-bound with greedy-coloring upper bounds; the chromatic
solver decides k-colorability by backtracking with color classes
introduced in vertex order, trying k upward from the clique number.
Both are sized for desk-scale graphs (n <= ~10), where exactness is cheap.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass

from .graphs import Graph, complement


def max_degree(g: Graph) -> int:
    if g.n == 0:
        return 0
    return max(row.bit_count() for row in g.adj)


def clique_number(g: Graph) -> int:
    """Exact size of a maximum clique."""
    n = g.n
    if n == 0:
        return 0
    adj = g.adj
    # static descending-degree order improves the greedy coloring bound
    by_degree = sorted(range(n), key=lambda v: adj[v].bit_count(), reverse=True)
    best = 1

    def expand(size: int, cand: int) -> None:
        nonlocal best
        if size > best:
            best = size
        order: list[int] = []
        bound: list[int] = []
        uncolored = cand
        k = 0
        while uncolored:
            k += 1
            cls = uncolored
            for v in by_degree:
                if not (cls >> v) & 1:
                    continue
                order.append(v)
                bound.append(k)
                uncolored &= ~(1 << v)
                cls &= ~(adj[v] | (1 << v))
        for i in range(len(order) - 1, -1, -1):
            if size + bound[i] <= best:
                return
            v = order[i]
            expand(size + 1, cand & adj[v])
            cand &= ~(1 << v)

    expand(0, (1 << n) - 1)
    return best


def _k_colorable(adj: tuple[int, ...], n: int, k: int) -> bool:
    class_masks = [0] * k

    def assign(v: int, used: int) -> bool:
        if v == n:
            return True
        limit = min(used + 1, k)
        for c in range(limit):
            if class_masks[c] & adj[v]:
                continue
            class_masks[c] |= 1 << v
            if assign(v + 1, max(used, c + 1)):
                return True
            class_masks[c] &= ~(1 << v)
        return False

    return assign(0, 0)


def chromatic_number(g: Graph) -> int:
    """Exact chromatic number, searched upward from the clique number."""
    if g.n == 0:
        return 0
    k = clique_number(g)
    while not _k_colorable(g.adj, g.n, k):
        k += 1
    return k


def independence_number(g: Graph) -> int:
    """Largest pairwise non-adjacent vertex set, via the complement clique."""
    return clique_number(complement(g))


def reed_bound(delta: int, omega: int) -> int:
    """ceil((delta + omega + 1) / 2) with exact integer arithmetic."""
    if delta < 0 or omega < 0:
        raise ValueError("delta and omega must be nonnegative")
    return (delta + omega + 2) // 2


@dataclass(frozen=True)
class InvariantBundle:
    """All exact invariants of one graph plus its Reed-bound slack.

    ``slack = reed_bound - chi`` is nonnegative on every graph of a
    verified family; it is not asserted here for arbitrary graphs.
    """

    n: int
    m: int
    delta: int
    omega: int
    chi: int
    alpha: int
    reed_bound: int
    slack: int

    def __post_init__(self):
        if not (self.omega <= self.chi <= max(self.n, 0)):
            raise ValueError(f"impossible invariants: omega={self.omega}, chi={self.chi}")
        if self.chi > self.delta + 1:
            raise ValueError(f"chi={self.chi} exceeds delta+1={self.delta + 1}")

    def to_json(self) -> dict:
        return asdict(self)


def invariant_bundle(g: Graph) -> InvariantBundle:
    delta = max_degree(g)
    omega = clique_number(g)
    chi = chromatic_number(g)
    bound = reed_bound(delta, omega)
    return InvariantBundle(
        n=g.n,
        m=g.m,
        delta=delta,
        omega=omega,
        chi=chi,
        alpha=independence_number(g),
        reed_bound=bound,
        slack=bound - chi,
    )
