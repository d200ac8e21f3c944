"""Forbidden-pattern catalog and induced-subgraph detection.

Hereditary families are specified by a list of forbidden induced
patterns; a host belongs to the family iff none of the patterns occurs
as an induced subgraph (edges AND non-edges must match).  The catalog
carries the five-vertex banner (a 4-cycle with one pendant vertex) under
the name ``FlagC`` together with its complement ``Flag``, plus the usual
small patterns P5, C4, C5, 2K2, 3K1 and P3+K1.

Detection is exhaustive backtracking over injective vertex maps with
degree and adjacency pruning; patterns here have at most 10 vertices, so
exhaustive search is instant and returns the lexicographically least
witness, which keeps certificates reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph, complement

_FLAGC = Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4)])

_CATALOG: dict[str, Graph] = {
    "P5": Graph.path(5),
    "FlagC": _FLAGC,
    "Flag": complement(_FLAGC),
    "C4": Graph.cycle(4),
    "C5": Graph.cycle(5),
    "TwoK2": Graph.from_edges(4, [(0, 1), (2, 3)]),
    "ThreeK1": Graph.empty(3),
    "P3uK1": Graph.from_edges(4, [(0, 1), (1, 2)]),
}

_ALIASES = {"2K2": "TwoK2", "3K1": "ThreeK1"}


def catalog_names() -> tuple[str, ...]:
    return tuple(_CATALOG)


def builtin_pattern(name: str) -> Graph:
    """Look up a catalog pattern by name (aliases 2K2 and 3K1 accepted)."""
    key = _ALIASES.get(name, name)
    if key not in _CATALOG:
        valid = ", ".join(sorted(_CATALOG) + sorted(_ALIASES))
        raise ValueError(f"unknown pattern {name!r}; valid names: {valid}")
    return _CATALOG[key]


def has_induced(host: Graph, pattern: Graph) -> tuple[int, ...] | None:
    """Lexicographically least induced embedding of ``pattern`` in ``host``.

    Returns the ordered host vertices that the pattern vertices 0..k-1 map
    to, or None when no induced copy exists.
    """
    k = pattern.n
    if k > host.n:
        return None
    if k == 0:
        return ()
    hadj = host.adj
    padj = pattern.adj
    pdeg = [padj[v].bit_count() for v in range(k)]
    hdeg = [hadj[v].bit_count() for v in range(host.n)]
    image: list[int] = []
    used = 0

    def extend(v: int) -> bool:
        nonlocal used
        for w in range(host.n):
            if (used >> w) & 1 or hdeg[w] < pdeg[v]:
                continue
            ok = True
            for u in range(v):
                if ((padj[v] >> u) & 1) != ((hadj[w] >> image[u]) & 1):
                    ok = False
                    break
            if not ok:
                continue
            image.append(w)
            used |= 1 << w
            if v + 1 == k or extend(v + 1):
                return True
            image.pop()
            used &= ~(1 << w)
        return False

    if extend(0):
        return tuple(image)
    return None


@dataclass(frozen=True)
class FamilySpec:
    """A hereditary family defined by forbidden induced patterns."""

    name: str
    forbidden: tuple[tuple[str, Graph], ...]

    def __post_init__(self):
        for label, pattern in self.forbidden:
            if not 1 <= pattern.n <= 10:
                raise ValueError(f"pattern {label!r} must have 1..10 vertices")


@dataclass(frozen=True)
class FamilyCheck:
    """Membership verdict; on rejection carries the violating witness."""

    member: bool
    pattern: str | None = None
    witness: tuple[int, ...] | None = None


def in_family(g: Graph, family: FamilySpec) -> FamilyCheck:
    """Membership test: true iff no forbidden pattern occurs induced."""
    for label, pattern in family.forbidden:
        witness = has_induced(g, pattern)
        if witness is not None:
            return FamilyCheck(member=False, pattern=label, witness=witness)
    return FamilyCheck(member=True)


def family_from_names(name: str) -> FamilySpec:
    """One of the five built-in families by its CLI name."""
    if name not in FAMILIES:
        raise ValueError(f"unknown family {name!r}; valid: {', '.join(sorted(FAMILIES))}")
    return FAMILIES[name]


FAMILIES: dict[str, FamilySpec] = {
    "p5-flagc": FamilySpec("p5-flagc", (("P5", _CATALOG["P5"]), ("FlagC", _CATALOG["FlagC"]))),
    "p5-c4": FamilySpec("p5-c4", (("P5", _CATALOG["P5"]), ("C4", _CATALOG["C4"]))),
    "3k1": FamilySpec("3k1", (("ThreeK1", _CATALOG["ThreeK1"]),)),
    "p3k1": FamilySpec("p3k1", (("P3uK1", _CATALOG["P3uK1"]),)),
    "2k2-c4": FamilySpec("2k2-c4", (("TwoK2", _CATALOG["TwoK2"]), ("C4", _CATALOG["C4"]))),
}


def odd_hole_lengths(g: Graph) -> tuple[int, ...]:
    """Sorted multiset of induced odd cycle lengths >= 5.

    Exhaustive: grows chordless paths from each minimal start vertex and
    records closures back to it.  Sized for n <= 12.
    """
    if g.n > 12:
        raise ValueError("odd hole enumeration is limited to 12 vertices")
    adj = g.adj
    lengths: list[int] = []

    def grow(start: int, path: list[int], path_mask: int) -> None:
        last = path[-1]
        first_step = len(path) == 1
        for w in range(start + 1, g.n):
            if (path_mask >> w) & 1 or not (adj[last] >> w) & 1:
                continue
            if first_step:
                path.append(w)
                grow(start, path, path_mask | (1 << w))
                path.pop()
                continue
            # w may touch the path only at `last`, except a final hop to start
            inner = path_mask & ~(1 << start) & ~(1 << last)
            if adj[w] & inner:
                continue
            if (adj[w] >> start) & 1:
                cycle_len = len(path) + 1
                if cycle_len >= 5 and cycle_len % 2 == 1 and path[1] < w:
                    lengths.append(cycle_len)
                continue
            path.append(w)
            grow(start, path, path_mask | (1 << w))
            path.pop()

    for v in range(g.n):
        grow(v, [v], 1 << v)
    return tuple(sorted(lengths))
