"""Multigraphs on dense integer vertices, named generators, and the
structural queries shared by the cut, invariant, and chip-firing layers.

Vertices of an n-vertex graph are always 0..n-1.  Parallel edges are
stored as integer multiplicities on unordered pairs; self-loops are
rejected everywhere.  Instances are treated as immutable after
construction, so values can be shared freely.

Counts that may be infinite (girth of a forest, connectivity of a graph
that cannot be split) use the float ``INF`` sentinel; every finite count
is a plain int.
"""

import random

INF = float("inf")


def fmt_count(value):
    """Format a possibly-infinite count for text output."""
    return "inf" if value == INF else str(int(value))


def count_to_json(value):
    """Tagged JSON form of a possibly-infinite count."""
    if value == INF:
        return {"finite": False, "value": None}
    return {"finite": True, "value": int(value)}


class InputFormatError(ValueError):
    """Malformed input document; carries the offending 1-based line number."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class EdgeListError(InputFormatError):
    pass


def _bits(mask):
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Multigraph:
    """Undirected multigraph with integer edge multiplicities.

    Built from an iterable of endpoint pairs; repeating a pair raises its
    multiplicity.  Adjacency is stored per vertex as a dict from
    neighbour to multiplicity with keys in ascending order, so every
    iteration over the graph is deterministic.
    """

    __slots__ = ("n", "_adj", "_mask", "_val", "_edge_count")

    def __init__(self, n, edges=()):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        adj = [{} for _ in range(n)]
        for pair in edges:
            u, v = pair
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for {n} vertices")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            adj[u][v] = adj[u].get(v, 0) + 1
            adj[v][u] = adj[v].get(u, 0) + 1
        self.n = n
        self._adj = [dict(sorted(d.items())) for d in adj]
        self._mask = [sum(1 << w for w in d) for d in self._adj]
        self._val = tuple(sum(d.values()) for d in self._adj)
        self._edge_count = sum(self._val) // 2

    # -- basic queries -------------------------------------------------

    @property
    def edge_count(self):
        """Number of edges counted with multiplicity."""
        return self._edge_count

    def mult(self, u, v):
        """Multiplicity of the edge class between u and v (0 if absent)."""
        self._check_vertex(u)
        self._check_vertex(v)
        return self._adj[u].get(v, 0)

    def neighbors(self, v):
        """Neighbours of v in ascending order."""
        self._check_vertex(v)
        return tuple(self._adj[v])

    def valence(self, v):
        """Number of edge endpoints at v, counting multiplicity."""
        self._check_vertex(v)
        return self._val[v]

    def min_valence(self):
        if self.n == 0:
            raise ValueError("graph has no vertices")
        return min(self._val)

    def edges(self):
        """Yield (u, v, multiplicity) with u < v, in ascending order."""
        for u in range(self.n):
            for v, m in self._adj[u].items():
                if u < v:
                    yield u, v, m

    def edge_list(self):
        """All edges as endpoint pairs, parallel edges repeated."""
        out = []
        for u, v, m in self.edges():
            out.extend([(u, v)] * m)
        return out

    def is_simple(self):
        return all(m == 1 for _, _, m in self.edges())

    def __eq__(self, other):
        if not isinstance(other, Multigraph):
            return NotImplemented
        return self.n == other.n and self._adj == other._adj

    def __repr__(self):
        return f"Multigraph(n={self.n}, m={self.edge_count})"

    def _check_vertex(self, v):
        if not 0 <= v < self.n:
            raise ValueError(f"vertex {v} out of range for {self.n} vertices")

    def _vertex_mask(self, subset):
        mask = 0
        for v in subset:
            self._check_vertex(v)
            mask |= 1 << v
        return mask

    # -- connectivity --------------------------------------------------

    def _component_of(self, start, within_mask):
        """Bitmask of the component of ``start`` inside ``within_mask``."""
        comp = 1 << start
        frontier = comp
        while frontier:
            grown = 0
            for v in _bits(frontier):
                grown |= self._mask[v]
            frontier = grown & within_mask & ~comp
            comp |= frontier
        return comp

    def _mask_connected(self, mask):
        if mask == 0:
            return False
        start = (mask & -mask).bit_length() - 1
        return self._component_of(start, mask) == mask

    def is_connected(self):
        if self.n <= 1:
            return True
        return self._mask_connected((1 << self.n) - 1)

    def is_connected_set(self, subset):
        """Whether the induced subgraph on ``subset`` is connected."""
        mask = self._vertex_mask(subset)
        if mask == 0:
            raise ValueError("empty vertex set")
        return self._mask_connected(mask)

    def connected_components(self, subset=None):
        """Components of the induced subgraph, ordered by smallest member.

        With ``subset`` omitted the whole vertex set is used.
        """
        if subset is None:
            mask = (1 << self.n) - 1
        else:
            mask = self._vertex_mask(subset)
        comps = []
        remaining = mask
        while remaining:
            start = (remaining & -remaining).bit_length() - 1
            comp = self._component_of(start, remaining)
            comps.append(frozenset(_bits(comp)))
            remaining &= ~comp
        return comps

    # -- edge counts across a split ------------------------------------

    def _outdegree_mask(self, mask):
        total = 0
        for v in _bits(mask):
            for w, m in self._adj[v].items():
                if not mask >> w & 1:
                    total += m
        return total

    def outdegree(self, subset):
        """Edges leaving ``subset``, counting multiplicity.

        The set must be a nonempty proper subset of the vertices.
        """
        mask = self._vertex_mask(subset)
        if mask == 0:
            raise ValueError("empty vertex set")
        if mask == (1 << self.n) - 1:
            raise ValueError("subset must be proper")
        return self._outdegree_mask(mask)

    # -- girth and bipartiteness ---------------------------------------

    def girth(self):
        """Length of a shortest cycle; a parallel pair counts as a
        2-cycle and forests have girth INF.

        Simple case: for each edge, the shortest cycle through it is one
        plus the distance between its endpoints with that edge removed.
        """
        if any(m >= 2 for _, _, m in self.edges()):
            return 2
        best = INF
        for u, v, _ in self.edges():
            d = self._dist_avoiding(u, v)
            if d is not None and d + 1 < best:
                best = d + 1
                if best == 3:
                    return 3
        return best

    def _dist_avoiding(self, s, t, skip=None):
        """BFS distance from s to t ignoring the edge class {s, t}."""
        dist = {s: 0}
        queue = [s]
        while queue:
            nxt = []
            for a in queue:
                for b in self._adj[a]:
                    if a == s and b == t:
                        continue
                    if b not in dist:
                        dist[b] = dist[a] + 1
                        if b == t:
                            return dist[b]
                        nxt.append(b)
            queue = nxt
        return dist.get(t)

    def bipartition(self):
        """Two-colouring as a pair of frozensets, or None on an odd cycle.

        Each component is coloured with its smallest vertex on the first
        side, so the result is deterministic.
        """
        color = [None] * self.n
        for root in range(self.n):
            if color[root] is not None:
                continue
            color[root] = 0
            queue = [root]
            while queue:
                nxt = []
                for a in queue:
                    for b in self._adj[a]:
                        if color[b] is None:
                            color[b] = 1 - color[a]
                            nxt.append(b)
                        elif color[b] == color[a]:
                            return None
                queue = nxt
        side0 = frozenset(v for v in range(self.n) if color[v] == 0)
        side1 = frozenset(range(self.n)) - side0
        return side0, side1


# -- connected subset enumeration --------------------------------------


def enumerate_connected_subsets(G, k):
    """All connected k-vertex subsets, each exactly once, sorted
    lexicographically by ascending vertex tuple.

    Grows sets from their minimum vertex; a candidate frontier restricted
    to unseen higher-numbered vertices guarantees uniqueness.
    """
    n = G.n
    if not 1 <= k <= n:
        raise ValueError(f"subset size {k} out of range for {n} vertices")
    nbr = G._mask
    found = []

    for root in range(n):
        above = -1 << (root + 1)
        sub0 = 1 << root
        ext0 = nbr[root] & above

        def extend(sub, size, ext, seen):
            if size == k:
                found.append(sub)
                return
            while ext:
                wbit = ext & -ext
                ext ^= wbit
                w = wbit.bit_length() - 1
                fresh = nbr[w] & above & ~seen
                extend(sub | wbit, size + 1, ext | fresh, seen | fresh)

        extend(sub0, 1, ext0, sub0 | ext0)

    ordered = sorted(tuple(_bits(mask)) for mask in found)
    return [frozenset(t) for t in ordered]


# -- edge-list documents ------------------------------------------------


def parse_edge_list(text):
    """Parse an edge-list document into a Multigraph.

    Line 1 holds ``n m``; the next m lines hold one ``u v`` pair each.
    Repeated pairs raise multiplicity.  Blank lines and lines starting
    with ``#`` are ignored.  Errors carry 1-based line numbers.
    """
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        rows.append((lineno, stripped.split()))

    if not rows:
        raise EdgeListError("no content lines")
    head_line, head = rows[0]
    if len(head) != 2:
        raise EdgeListError("header must be 'n m'", head_line)
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError:
        raise EdgeListError("header must hold two integers", head_line) from None
    if n < 0 or m < 0:
        raise EdgeListError("vertex and edge counts must be non-negative", head_line)

    body = rows[1:]
    if len(body) > m:
        raise EdgeListError(f"expected {m} edge lines, found more", body[m][0])
    if len(body) < m:
        raise EdgeListError(f"expected {m} edge lines, found {len(body)}")

    edges = []
    for lineno, tokens in body:
        if len(tokens) != 2:
            raise EdgeListError("edge line must hold two integers", lineno)
        try:
            u, v = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise EdgeListError("edge line must hold two integers", lineno) from None
        if not (0 <= u < n and 0 <= v < n):
            raise EdgeListError(f"edge ({u}, {v}) out of range", lineno)
        if u == v:
            raise EdgeListError(f"self-loop at vertex {u}", lineno)
        edges.append((u, v))
    return Multigraph(n, edges)


def format_edge_list(G):
    """Edge-list document for G; parses back to an equal graph."""
    lines = [f"{G.n} {G.edge_count}"]
    for u, v in G.edge_list():
        lines.append(f"{u} {v}")
    return "\n".join(lines) + "\n"


# -- named generators ----------------------------------------------------


def hypercube(d):
    """d-dimensional hypercube; vertex i is the length-d binary string of i."""
    if d < 0:
        raise ValueError("hypercube dimension must be non-negative")
    n = 1 << d
    edges = [(v, v ^ (1 << i)) for v in range(n) for i in range(d) if v < v ^ (1 << i)]
    return Multigraph(n, edges)


def folded_cube(d):
    """Hypercube of dimension d with an edge added between antipodes."""
    if d < 1:
        raise ValueError("folded cube dimension must be at least 1")
    n = 1 << d
    full = n - 1
    edges = [(v, v ^ (1 << i)) for v in range(n) for i in range(d) if v < v ^ (1 << i)]
    edges.extend((v, v ^ full) for v in range(n) if v < v ^ full)
    return Multigraph(n, edges)


def crown(m):
    """Complete bipartite graph on m+m vertices minus a perfect matching.

    Vertices 0..m-1 form the first side, m..2m-1 the second; i and m+j
    are adjacent exactly when i != j.
    """
    if m < 3:
        raise ValueError("crown parameter must be at least 3")
    edges = [(i, m + j) for i in range(m) for j in range(m) if i != j]
    return Multigraph(2 * m, edges)


def complete_bipartite(a, b):
    if a < 1 or b < 1:
        raise ValueError("both sides must be nonempty")
    edges = [(i, a + j) for i in range(a) for j in range(b)]
    return Multigraph(a + b, edges)


def complete_graph(n):
    if n < 1:
        raise ValueError("complete graph needs at least one vertex")
    edges = [(u, v) for u in range(n) for v in range(u + 1, n)]
    return Multigraph(n, edges)


def cycle_graph(n):
    if n < 3:
        raise ValueError("cycle needs at least three vertices")
    return Multigraph(n, [(v, (v + 1) % n) for v in range(n)])


def path_graph(n):
    if n < 1:
        raise ValueError("path needs at least one vertex")
    return Multigraph(n, [(v, v + 1) for v in range(n - 1)])


_HERSCHEL_EDGES = (
    (0, 2), (0, 3), (0, 4),
    (1, 2), (1, 3), (1, 5),
    (2, 6), (2, 7),
    (3, 8), (3, 9),
    (4, 6), (4, 8),
    (5, 7), (5, 9),
    (6, 10), (7, 10), (8, 10), (9, 10),
)


def herschel_graph():
    """The 11-vertex, 18-edge bipartite polyhedral graph with parts of
    size 6 and 5; eight vertices have valence 3 and three have valence 4.
    """
    return Multigraph(11, _HERSCHEL_EDGES)


_FAMILIES = {
    "hypercube": (hypercube, 1),
    "folded-cube": (folded_cube, 1),
    "crown": (crown, 1),
    "complete-bipartite": (complete_bipartite, 2),
    "complete": (complete_graph, 1),
    "cycle": (cycle_graph, 1),
    "path": (path_graph, 1),
    "herschel": (herschel_graph, 0),
}


def generate(family, params=()):
    """Build a named graph; ``family`` is one of the generator names."""
    if family not in _FAMILIES:
        known = ", ".join(sorted(_FAMILIES))
        raise ValueError(f"unknown family {family!r} (known: {known})")
    fn, arity = _FAMILIES[family]
    params = tuple(params)
    if len(params) != arity:
        raise ValueError(f"family {family!r} takes {arity} parameter(s), got {len(params)}")
    return fn(*params)


def random_connected_multigraph(rng, n, extra_edges=0, allow_parallel=False):
    """Seeded random connected graph: a random spanning tree plus
    ``extra_edges`` attempts at additional random pairs.

    With ``allow_parallel`` the extra pairs may duplicate existing edge
    classes; otherwise duplicates are skipped.  Deterministic for a given
    ``random.Random`` state.
    """
    if n < 1:
        raise ValueError("need at least one vertex")
    edges = [(rng.randrange(v), v) for v in range(1, n)]
    present = {(min(u, v), max(u, v)) for u, v in edges}
    for _ in range(extra_edges):
        if n < 2:
            break
        u = rng.randrange(n)
        v = rng.randrange(n)
        if u == v:
            continue
        key = (min(u, v), max(u, v))
        if not allow_parallel and key in present:
            continue
        present.add(key)
        edges.append(key)
    return Multigraph(n, edges)
