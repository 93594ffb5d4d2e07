"""Scrambles: collections of connected vertex sets (eggs) on a shared
graph, with their hitting numbers, egg-cut numbers, and orders.

The hitting search runs as iterative deepening on the answer.  For each
candidate size s it solves the decision problem "is there a hitting set
of size at most s" with a depth-capped branch and bound, so a run cut
short by a time budget still ends with a proven lower bound.
"""

import time
from dataclasses import dataclass

from .flow import min_separating_cut
from .graphs import INF, InputFormatError, _bits
from .invariants import component_independence_number, restricted_edge_connectivity


class ScrambleFileError(InputFormatError):
    pass


@dataclass(frozen=True, eq=False)
class Scramble:
    """Eggs stored deduplicated and sorted by ascending vertex tuple."""

    graph: object
    eggs: tuple

    def __len__(self):
        return len(self.eggs)


def make_scramble(G, eggs):
    """Validate eggs against G (nonempty, in range, connected) and build
    the canonical scramble."""
    cleaned = set()
    for egg in eggs:
        egg = frozenset(egg)
        if not egg:
            raise ValueError("eggs must be nonempty")
        if not G.is_connected_set(egg):
            raise ValueError(f"egg {sorted(egg)} does not induce a connected subgraph")
        cleaned.add(egg)
    ordered = sorted(cleaned, key=sorted)
    return Scramble(G, tuple(ordered))


def uniform_scramble(G, k):
    """The scramble whose eggs are all connected k-vertex subsets."""
    from .graphs import enumerate_connected_subsets

    return Scramble(G, tuple(enumerate_connected_subsets(G, k)))


def parse_scramble(text, G):
    """One egg per line as whitespace-separated vertex indices; ``#``
    lines are comments.  Eggs are validated against G on load."""
    eggs = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        try:
            vertices = [int(tok) for tok in stripped.split()]
        except ValueError:
            raise ScrambleFileError("egg line must hold integers", lineno) from None
        if len(set(vertices)) != len(vertices):
            raise ScrambleFileError("repeated vertex in egg", lineno)
        for v in vertices:
            if not 0 <= v < G.n:
                raise ScrambleFileError(f"vertex {v} out of range", lineno)
        egg = frozenset(vertices)
        if not egg:
            raise ScrambleFileError("empty egg line", lineno)
        if not G.is_connected_set(egg):
            raise ScrambleFileError("egg does not induce a connected subgraph", lineno)
        eggs.append(egg)
    return make_scramble(G, eggs)


def _egg_masks(S):
    return [S.graph._vertex_mask(egg) for egg in S.eggs]


# -- hitting number ------------------------------------------------------


@dataclass
class HittingSearchResult:
    """Outcome of the iterative-deepening hitting search.

    ``proved_lower`` always holds (the hitting number is at least this);
    ``optimum``/``witness`` are set when the search finished.
    """

    proved_lower: int
    optimum: object
    witness: object
    complete: bool
    elapsed: float
    nodes: int


class _Deadline(Exception):
    pass


def hitting_search(S, target=None, budget=None, progress=None):
    """Prove lower bounds on the hitting number until the optimum is
    found, ``target`` is reached, or ``budget`` seconds run out.

    Each decision level branches on the uncovered egg with the fewest
    allowed vertices; a greedy packing of disjoint uncovered eggs prunes
    subtrees that cannot fit the size cap.
    """
    if not S.eggs:
        raise ValueError("empty scramble")
    start = time.monotonic()
    deadline = None if budget is None else start + budget
    masks = _egg_masks(S)
    all_idx = list(range(len(masks)))

    def greedy_cover():
        chosen = []
        uncovered = all_idx
        while uncovered:
            counts = {}
            for i in uncovered:
                for v in _bits(masks[i]):
                    counts[v] = counts.get(v, 0) + 1
            pick = max(sorted(counts), key=counts.get)
            chosen.append(pick)
            bit = 1 << pick
            uncovered = [i for i in uncovered if not masks[i] & bit]
        return chosen

    def packing_bound(indices, banned):
        packed = 0
        count = 0
        for i in indices:
            cands = masks[i] & ~banned
            if cands and not cands & packed:
                packed |= cands
                count += 1
        return count

    greedy = greedy_cover()
    upper = len(greedy)
    nodes = [0]
    ping = [start + 5.0]

    def decide(size_cap):
        """A hitting set of size <= size_cap, or None if none exists."""

        def walk(uncovered, banned, chosen):
            nodes[0] += 1
            if deadline is not None or progress is not None:
                now = time.monotonic()
                if deadline is not None and now > deadline:
                    raise _Deadline
                if progress is not None and now >= ping[0]:
                    ping[0] = now + 5.0
                    progress(
                        f"searching for size {size_cap}: {nodes[0]} nodes, "
                        f"{now - start:.0f}s"
                    )
            if not uncovered:
                return list(chosen)
            if len(chosen) == size_cap:
                return None
            pick_cands = 0
            pick_count = None
            packed = 0
            bound = 0
            for i in uncovered:
                cands = masks[i] & ~banned
                cnt = cands.bit_count()
                if cnt == 0:
                    return None
                if pick_count is None or cnt < pick_count:
                    pick_count, pick_cands = cnt, cands
                if not cands & packed:
                    packed |= cands
                    bound += 1
            if len(chosen) + bound > size_cap:
                return None
            local_ban = banned
            cands = pick_cands
            while cands:
                vbit = cands & -cands
                cands ^= vbit
                chosen.append(vbit.bit_length() - 1)
                hit = walk([i for i in uncovered if not masks[i] & vbit], local_ban, chosen)
                if hit is not None:
                    return hit
                chosen.pop()
                local_ban |= vbit
            return None

        return walk(all_idx, 0, [])

    proved = max(packing_bound(all_idx, 0), 1)
    optimum = None
    witness = None
    complete = False
    try:
        while True:
            if target is not None and proved >= target:
                break
            if proved >= upper:
                optimum = upper
                witness = frozenset(greedy)
                complete = True
                break
            hit = decide(proved)
            if hit is not None:
                optimum = proved
                witness = frozenset(hit)
                complete = True
                break
            proved += 1
            if progress is not None:
                progress(
                    f"no hitting set of size {proved - 1}: number is >= {proved} "
                    f"({nodes[0]} nodes, {time.monotonic() - start:.1f}s)"
                )
    except _Deadline:
        pass
    return HittingSearchResult(
        proved_lower=proved,
        optimum=optimum,
        witness=witness,
        complete=complete,
        elapsed=time.monotonic() - start,
        nodes=nodes[0],
    )


def hitting_number(S):
    """Smallest number of vertices meeting every egg."""
    return hitting_search(S).optimum


def minimum_hitting_set(S):
    """A smallest vertex set meeting every egg."""
    return hitting_search(S).witness


# -- egg cuts and orders -------------------------------------------------


def has_finite_egg_cut(S, _masks=None):
    """Whether two disjoint eggs exist; returns (flag, witness pair).

    Only a split with whole eggs on both sides counts as an egg cut, so
    pairwise-overlapping scrambles have no finite one.
    """
    if not S.eggs:
        raise ValueError("empty scramble")
    masks = _egg_masks(S) if _masks is None else _masks
    for i in range(len(masks)):
        for j in range(i + 1, len(masks)):
            if not masks[i] & masks[j]:
                return True, (S.eggs[i], S.eggs[j])
    return False, None


def egg_cut_number(S):
    """Minimum edges crossing any split that leaves whole eggs on both
    sides; INF when no two eggs are disjoint.

    Runs the collapsed two-set cut over all disjoint egg pairs, pruning
    each flow at the best cut seen so far.
    """
    if not S.eggs:
        raise ValueError("empty scramble")
    G = S.graph
    masks = _egg_masks(S)
    best = INF
    for i in range(len(masks)):
        for j in range(i + 1, len(masks)):
            if masks[i] & masks[j]:
                continue
            limit = None if best == INF else best
            cut = min_separating_cut(G, S.eggs[i], S.eggs[j], limit=limit)
            if cut < best:
                best = cut
    return best


def scramble_order(S):
    """min(hitting number, egg-cut number).

    When the egg-cut number is finite the hitting search only needs to
    reach it as a lower bound, so the search is capped there.
    """
    e = egg_cut_number(S)
    if e == INF:
        return hitting_number(S)
    result = hitting_search(S, target=e)
    if result.optimum is not None:
        return min(result.optimum, e)
    return e


def uniform_order_via_invariants(G, k):
    """Order of the uniform k-scramble computed from graph invariants
    alone: min of the k-restricted edge connectivity and n minus the
    (k-1)-component independence number."""
    if not 1 <= k <= G.n:
        raise ValueError(f"egg size {k} out of range")
    if not G.is_connected():
        raise ValueError("graph must be connected")
    lam = restricted_edge_connectivity(G, k)
    alpha = component_independence_number(G, k - 1)
    return min(lam, G.n - alpha)
