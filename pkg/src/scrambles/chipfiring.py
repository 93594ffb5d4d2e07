"""Divisors (chip configurations) on multigraphs: firing moves, the
canonical q-reduced form via the burning process, positive-rank testing,
exhaustive gonality search, and separator-based upper bounds.

A divisor is a plain tuple of n ints, one chip count per vertex.
"""

from dataclasses import dataclass

from .graphs import INF, InputFormatError, _bits
from .invariants import max_component_independent_set


class DivisorFileError(InputFormatError):
    pass


def degree(D):
    """Total number of chips."""
    return sum(D)


def _check_divisor(G, D):
    if len(D) != G.n:
        raise ValueError(f"divisor has {len(D)} entries for a {G.n}-vertex graph")


def fire_vertex(G, D, v):
    """Send one chip along every edge at v to its other endpoint."""
    G._check_vertex(v)
    _check_divisor(G, D)
    out = list(D)
    for w, m in G._adj[v].items():
        out[v] -= m
        out[w] += m
    return tuple(out)


def fire_subset(G, D, subset):
    """Fire every vertex of the set at once: chips move only across the
    boundary, one per crossing edge."""
    _check_divisor(G, D)
    mask = G._vertex_mask(subset)
    if mask == 0:
        raise ValueError("empty vertex set")
    if mask == (1 << G.n) - 1:
        raise ValueError("subset must be proper")
    out = list(D)
    for v in _bits(mask):
        for w, m in G._adj[v].items():
            if not mask >> w & 1:
                out[v] -= m
                out[w] += m
    return tuple(out)


# -- q-reduction ---------------------------------------------------------


def _bfs_order(G, q):
    """Vertices by BFS layer from q, ascending index inside a layer."""
    order = [q]
    seen = {q}
    queue = [q]
    while queue:
        nxt = []
        for a in queue:
            for b in G._adj[a]:
                if b not in seen:
                    seen.add(b)
                    nxt.append(b)
        nxt.sort()
        order.extend(nxt)
        queue = nxt
    return order


def _reduce_along(G, D, q, order):
    """q-reduction given a BFS order starting at q.

    Debt clearing walks the order outside-in: a vertex in debt is paid by
    firing the whole prefix before it, which only adds chips to every
    vertex at or beyond it.  One pass leaves all of V - q non-negative.

    Then the burning loop: start a fire at q; a vertex burns once its
    edges to burnt vertices outnumber its chips.  While some set survives
    the fire, firing that set keeps everything outside q non-negative and
    moves chips toward q; the fixpoint where everything burns is the
    canonical representative.
    """
    n = G.n
    adj = G._adj
    chips = list(D)
    pos = [0] * n
    for i, v in enumerate(order):
        pos[v] = i

    for i in range(n - 1, 0, -1):
        v = order[i]
        if chips[v] >= 0:
            continue
        gain = sum(m for w, m in adj[v].items() if pos[w] < i)
        rounds = (-chips[v] + gain - 1) // gain
        for j in range(i):
            u = order[j]
            for w, m in adj[u].items():
                if pos[w] >= i:
                    chips[u] -= rounds * m
                    chips[w] += rounds * m

    cap = 4 * n * (abs(sum(D)) + G.edge_count)
    rounds = 0
    while True:
        burnt = [False] * n
        burnt[q] = True
        incoming = [0] * n
        stack = [q]
        burnt_count = 1
        while stack:
            u = stack.pop()
            for w, m in adj[u].items():
                if not burnt[w]:
                    incoming[w] += m
                    if incoming[w] > chips[w]:
                        burnt[w] = True
                        stack.append(w)
                        burnt_count += 1
        if burnt_count == n:
            return tuple(chips)
        rounds += 1
        if rounds > cap:
            raise RuntimeError("internal error: burning loop failed to converge")
        for v in range(n):
            if not burnt[v] and incoming[v]:
                chips[v] -= incoming[v]
                for w, m in adj[v].items():
                    if burnt[w]:
                        chips[w] += m


def q_reduce(G, D, q):
    """The unique divisor equivalent to D that is non-negative outside q
    and survives no burning round."""
    _check_divisor(G, D)
    G._check_vertex(q)
    if not G.is_connected():
        raise ValueError("graph must be connected")
    return _reduce_along(G, D, q, _bfs_order(G, q))


def is_equivalent(G, D1, D2):
    """Whether D1 and D2 differ by a sequence of firings."""
    _check_divisor(G, D1)
    _check_divisor(G, D2)
    if not G.is_connected():
        raise ValueError("graph must be connected")
    if sum(D1) != sum(D2):
        return False
    order = _bfs_order(G, 0)
    return _reduce_along(G, D1, 0, order) == _reduce_along(G, D2, 0, order)


def has_positive_rank(G, D):
    """Whether D stays effective after removing one chip anywhere: the
    q-reduced form must keep at least one chip on q for every q."""
    _check_divisor(G, D)
    if not G.is_connected():
        raise ValueError("graph must be connected")
    if sum(D) < 0:
        return False
    for q in range(G.n):
        if _reduce_along(G, D, q, _bfs_order(G, q))[q] < 1:
            return False
    return True


# -- gonality ------------------------------------------------------------


def effective_divisors(n, d):
    """All length-n tuples of non-negative ints summing to d, in
    ascending lexicographic order."""
    if n == 1:
        yield (d,)
        return
    for first in range(d + 1):
        for rest in effective_divisors(n - 1, d - first):
            yield (first,) + rest


@dataclass(frozen=True)
class GonalityResult:
    """``value``/``witness`` are set when the search found a divisor;
    ``exceeded_cap`` reports running out of degrees instead."""

    value: object
    witness: object
    exceeded_cap: bool
    max_degree: int


def gonality_bruteforce(G, max_degree=None):
    """Smallest degree of a positive-rank divisor, by exhaustive search
    over effective divisors of ascending degree.

    Returns the lexicographically first witness of the minimal degree.
    The default degree cap is n, which is never the binding constraint on
    a connected graph.
    """
    if not G.is_connected():
        raise ValueError("graph must be connected")
    cap = G.n if max_degree is None else max_degree
    if cap < 0:
        raise ValueError("degree cap must be non-negative")
    orders = [_bfs_order(G, q) for q in range(G.n)]
    for d in range(cap + 1):
        for D in effective_divisors(G.n, d):
            ok = True
            for q in range(G.n):
                if _reduce_along(G, D, q, orders[q])[q] < 1:
                    ok = False
                    break
            if ok:
                return GonalityResult(d, D, False, cap)
    return GonalityResult(None, None, True, cap)


# -- strong separators ---------------------------------------------------


@dataclass(frozen=True)
class StrongSeparatorReport:
    separator: frozenset
    valid: bool
    violating_component: object


def check_strong_separator(G, subset):
    """Check the two separator conditions: every component left after
    removing the set is a tree, and each separator vertex sends at most
    one edge (counting multiplicity) into any single component."""
    sep = frozenset(subset)
    if not sep:
        raise ValueError("separator must be nonempty")
    for v in sep:
        G._check_vertex(v)
    rest = [v for v in range(G.n) if v not in sep]
    for comp in G.connected_components(rest):
        internal = sum(
            m for v in comp for w, m in G._adj[v].items() if w in comp and v < w
        )
        if internal != len(comp) - 1:
            return StrongSeparatorReport(sep, False, comp)
        for v in sorted(sep):
            into = sum(m for w, m in G._adj[v].items() if w in comp)
            if into > 1:
                return StrongSeparatorReport(sep, False, comp)
    return StrongSeparatorReport(sep, True, None)


@dataclass(frozen=True)
class SeparatorBound:
    size: int
    separator: frozenset
    component_limit: int


def gonality_upper_by_separator(G):
    """Upper bound on gonality from a strong separator.

    Complements of component-bounded independent sets are strong
    separators as long as the component bound stays below girth - 1;
    the largest admissible bound gives the smallest separator.
    """
    if G.n == 0:
        raise ValueError("graph has no vertices")
    g = G.girth()
    top = G.n - 1 if g == INF else min(int(g) - 2, G.n - 1)
    for limit in range(top, -1, -1):
        independent = max_component_independent_set(G, limit)
        sep = frozenset(range(G.n)) - independent
        if not sep:
            continue
        if check_strong_separator(G, sep).valid:
            return SeparatorBound(len(sep), sep, limit)
    raise RuntimeError("internal error: no valid separator found")


# -- divisor documents ---------------------------------------------------


def parse_divisor(text, n):
    """A single content line of n whitespace-separated integers."""
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        rows.append((lineno, stripped.split()))
    if not rows:
        raise DivisorFileError("no content lines")
    if len(rows) > 1:
        raise DivisorFileError("expected a single line of chip counts", rows[1][0])
    lineno, tokens = rows[0]
    if len(tokens) != n:
        raise DivisorFileError(f"expected {n} chip counts, found {len(tokens)}", lineno)
    try:
        return tuple(int(tok) for tok in tokens)
    except ValueError:
        raise DivisorFileError("chip counts must be integers", lineno) from None


def format_divisor(D):
    return " ".join(str(c) for c in D)
