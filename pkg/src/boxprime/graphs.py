"""Unlabeled simple graphs: canonical forms, products, and enumeration.

A graph is a vertex count plus an upper-triangular edge bit vector in
row-major order, packed into a single integer so that the (0,1) pair sits
at the most significant position.  Integer comparison of two packed vectors
then agrees with lexicographic comparison of the bit strings, and the
canonical form of a graph is the isomorph whose packed vector is minimal
over all vertex relabelings.

Module-level enumeration caches are guarded by a lock; results are
deterministic (sorted by canonical key) regardless of caller threading.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from functools import cached_property, lru_cache

from .errors import CapacityError, DomainError

DEFAULT_CANON_CAP = 24
DEFAULT_ENUM_CAP = 8


def _pair_count(n: int) -> int:
    return n * (n - 1) // 2


def _pair_rank(i: int, j: int, n: int) -> int:
    # row-major rank of the pair (i, j), valid only for i < j
    return i * (2 * n - i - 3) // 2 + j - 1


def pair_bit(i: int, j: int, n: int) -> int:
    """Packed-vector bit for the unordered pair {i, j} of an order-n graph."""
    if i == j:
        raise DomainError("self loops are not representable")
    if i > j:
        i, j = j, i
    if not 0 <= i < j < n:
        raise DomainError(f"pair ({i}, {j}) out of range for order {n}")
    return 1 << (_pair_count(n) - 1 - _pair_rank(i, j, n))


@dataclass(frozen=True, order=True)
class Graph:
    """Simple graph on vertices 0..n-1 with packed upper-triangular edges."""

    n: int
    bits: int = 0

    def __post_init__(self) -> None:
        if self.n < 0:
            raise DomainError("vertex count must be nonnegative")
        if not 0 <= self.bits < 1 << _pair_count(self.n):
            raise DomainError(f"edge bits out of range for order {self.n}")

    @cached_property
    def rows(self) -> tuple[int, ...]:
        """Neighbor bitmask for each vertex."""
        n = self.n
        masks = [0] * n
        bits = self.bits
        pos = _pair_count(n) - 1
        for i in range(n):
            for j in range(i + 1, n):
                if (bits >> pos) & 1:
                    masks[i] |= 1 << j
                    masks[j] |= 1 << i
                pos -= 1
        return tuple(masks)

    @property
    def edge_count(self) -> int:
        return self.bits.bit_count()

    def has_edge(self, i: int, j: int) -> bool:
        return bool(self.bits & pair_bit(i, j, self.n))

    def edges(self) -> list[tuple[int, int]]:
        n = self.n
        out = []
        pos = _pair_count(n) - 1
        bits = self.bits
        for i in range(n):
            for j in range(i + 1, n):
                if (bits >> pos) & 1:
                    out.append((i, j))
                pos -= 1
        return out

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted((m.bit_count() for m in self.rows), reverse=True))


def from_edges(n: int, edges) -> Graph:
    """Graph on n vertices with the given edge pairs (duplicates collapse)."""
    bits = 0
    for i, j in edges:
        bits |= pair_bit(i, j, n)
    return Graph(n, bits)


def empty_graph(n: int) -> Graph:
    return Graph(n, 0)


def complete_graph(n: int) -> Graph:
    return Graph(n, (1 << _pair_count(n)) - 1)


def path_graph(n: int) -> Graph:
    return from_edges(n, ((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise DomainError("cycles need at least 3 vertices")
    return from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(n: int) -> Graph:
    return from_edges(n, ((0, i) for i in range(1, n)))


def complement(g: Graph) -> Graph:
    return Graph(g.n, g.bits ^ ((1 << _pair_count(g.n)) - 1))


def relabel(g: Graph, perm) -> Graph:
    """Apply the relabeling old -> perm[old]."""
    if sorted(perm) != list(range(g.n)):
        raise DomainError("relabeling must be a permutation of the vertices")
    return from_edges(g.n, ((perm[i], perm[j]) for i, j in g.edges()))


def disjoint_union(g1: Graph, g2: Graph, cap: int = DEFAULT_CANON_CAP) -> Graph:
    n = g1.n + g2.n
    if n > cap:
        raise CapacityError(f"union of order {n} exceeds cap {cap}")
    shift = g1.n
    edges = g1.edges()
    edges.extend((i + shift, j + shift) for i, j in g2.edges())
    return from_edges(n, edges)


def cartesian_product(g1: Graph, g2: Graph, cap: int = DEFAULT_CANON_CAP) -> Graph:
    """Box product: (u1,u2)~(v1,v2) iff equal in one slot, adjacent in the other.

    Vertex (u1, u2) maps to index u1 * g2.n + u2.
    """
    n = g1.n * g2.n
    if n > cap:
        raise CapacityError(f"product of order {n} exceeds cap {cap}")
    n2 = g2.n
    edges = []
    for a, b in g2.edges():
        for u in range(g1.n):
            base = u * n2
            edges.append((base + a, base + b))
    for a, b in g1.edges():
        for u in range(n2):
            edges.append((a * n2 + u, b * n2 + u))
    return from_edges(n, edges)


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        raise DomainError("connectivity is undefined for the empty graph")
    rows = g.rows
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        while frontier:
            low = frontier & -frontier
            frontier ^= low
            nxt |= rows[low.bit_length() - 1]
        frontier = nxt & ~seen
        seen |= nxt
    return seen == (1 << g.n) - 1


def _component_masks(g: Graph) -> list[int]:
    rows = g.rows
    left = (1 << g.n) - 1
    comps = []
    while left:
        start = left & -left
        seen = start
        frontier = start
        while frontier:
            nxt = 0
            while frontier:
                low = frontier & -frontier
                frontier ^= low
                nxt |= rows[low.bit_length() - 1]
            frontier = nxt & ~seen
            seen |= nxt
        comps.append(seen)
        left &= ~seen
    return comps


def induced_subgraph(g: Graph, vertex_mask: int) -> Graph:
    """Subgraph on the masked vertices, relabeled in increasing order."""
    verts = []
    m = vertex_mask
    while m:
        low = m & -m
        m ^= low
        verts.append(low.bit_length() - 1)
    index = {v: k for k, v in enumerate(verts)}
    rows = g.rows
    edges = []
    for k, v in enumerate(verts):
        nb = rows[v] & vertex_mask
        while nb:
            low = nb & -nb
            nb ^= low
            w = low.bit_length() - 1
            if w > v:
                edges.append((k, index[w]))
    return from_edges(len(verts), edges)


def connected_components(g: Graph) -> tuple[Graph, ...]:
    """Canonical components, sorted; the multiset determines g up to isomorphism."""
    if g.n == 0:
        return ()
    return tuple(sorted(canonical_form(induced_subgraph(g, m)) for m in _component_masks(g)))


def _canonical_bits(n: int, rows) -> int:
    """Minimal packed edge vector over all relabelings.

    Branch and bound over ordered partitions: vertices in one block are
    indistinguishable by everything placed so far, so position k must take a
    vertex from the first block, its row within the current block order is
    forced (non-neighbors before neighbors), and each placement refines the
    partition.  Candidates that are interchangeable (equal open or closed
    neighborhoods within the unplaced set) explore identical subtrees and are
    deduplicated.
    """
    if n <= 1:
        return 0
    total = _pair_count(n)
    best = None

    def place(blocks, remaining, prefix, done):
        nonlocal best
        first = blocks[0]
        rest = blocks[1:]
        width = remaining.bit_count() - 1
        ndone = done + width
        shift = total - ndone
        seen_open = set()
        seen_closed = set()
        scored = []
        m = first
        while m:
            v = m & -m
            m ^= v
            nb = rows[v.bit_length() - 1]
            key_open = nb & (remaining ^ v)
            key_closed = (nb | v) & remaining
            if key_open in seen_open or key_closed in seen_closed:
                continue
            seen_open.add(key_open)
            seen_closed.add(key_closed)
            row = 0
            new_blocks = []
            fb = first ^ v
            if fb:
                hi = fb & nb
                row = (row << fb.bit_count()) | ((1 << hi.bit_count()) - 1)
                lo = fb ^ hi
                if lo:
                    new_blocks.append(lo)
                if hi:
                    new_blocks.append(hi)
            for b in rest:
                hi = b & nb
                row = (row << b.bit_count()) | ((1 << hi.bit_count()) - 1)
                lo = b ^ hi
                if lo:
                    new_blocks.append(lo)
                if hi:
                    new_blocks.append(hi)
            scored.append((row, v, new_blocks))
        scored.sort(key=lambda t: t[0])
        for row, v, new_blocks in scored:
            pref = (prefix << width) | row
            if best is not None and pref > (best >> shift):
                continue
            if not new_blocks:
                if best is None or pref < best:
                    best = pref
            else:
                place(new_blocks, remaining ^ v, pref, ndone)

    full = (1 << n) - 1
    place([full], full, 0, 0)
    return best


@lru_cache(maxsize=1 << 16)
def _canonical_bits_for(n: int, bits: int) -> int:
    return _canonical_bits(n, Graph(n, bits).rows)


def canonical_form(g: Graph, cap: int = DEFAULT_CANON_CAP) -> Graph:
    """The isomorph of g with the lexicographically minimal edge bit vector."""
    if g.n > cap:
        raise CapacityError(f"canonical form of order {g.n} exceeds cap {cap}")
    if g.n <= 1:
        return g
    return Graph(g.n, _canonical_bits_for(g.n, g.bits))


def canonical_key(g: Graph, cap: int = DEFAULT_CANON_CAP) -> tuple[int, int]:
    """(n, canonical bits); equal keys hold exactly for isomorphic graphs."""
    c = canonical_form(g, cap)
    return (c.n, c.bits)


def are_isomorphic(g1: Graph, g2: Graph) -> bool:
    if g1.n != g2.n or g1.edge_count != g2.edge_count:
        return False
    if g1.degree_sequence() != g2.degree_sequence():
        return False
    return canonical_form(g1).bits == canonical_form(g2).bits


_ENUM_LOCK = threading.Lock()
_ENUM_ALL: dict[int, tuple[Graph, ...]] = {}
_ENUM_CONNECTED: dict[int, tuple[Graph, ...]] = {}


def _enumerate_locked(n: int) -> tuple[Graph, ...]:
    if n in _ENUM_ALL:
        return _ENUM_ALL[n]
    if n == 0:
        out = (Graph(0, 0),)
    else:
        parents = _enumerate_locked(n - 1)
        topbit = 1 << (n - 1)
        seen = set()
        for parent in parents:
            prows = parent.rows
            for s in range(1 << (n - 1)):
                rows = list(prows)
                rows.append(s)
                t = s
                while t:
                    low = t & -t
                    t ^= low
                    rows[low.bit_length() - 1] |= topbit
                seen.add(_canonical_bits(n, rows))
        out = tuple(Graph(n, b) for b in sorted(seen))
    _ENUM_ALL[n] = out
    return out


def enumerate_graphs(n: int, cap: int = DEFAULT_ENUM_CAP) -> tuple[Graph, ...]:
    """All unlabeled graphs of order n, canonical and sorted by key.

    Every isomorphism class of order n contains a one-vertex extension of a
    canonical graph of order n-1, so augmenting each parent with every
    neighbor subset and canonicalizing covers the class list.
    """
    if n < 0:
        raise DomainError("order must be nonnegative")
    if n > cap:
        raise CapacityError(f"enumeration of order {n} exceeds cap {cap}")
    with _ENUM_LOCK:
        return _enumerate_locked(n)


def enumerate_connected(n: int, cap: int = DEFAULT_ENUM_CAP) -> tuple[Graph, ...]:
    """Connected unlabeled graphs of order n, canonical and sorted by key."""
    if n < 1:
        raise DomainError("connected enumeration needs order >= 1")
    if n > cap:
        raise CapacityError(f"enumeration of order {n} exceeds cap {cap}")
    with _ENUM_LOCK:
        if n not in _ENUM_CONNECTED:
            _ENUM_CONNECTED[n] = tuple(g for g in _enumerate_locked(n) if is_connected(g))
        return _ENUM_CONNECTED[n]
