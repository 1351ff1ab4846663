"""Undirected graphs, general-graph maximum matching, and structure queries.

Vertices are dense ids ``0..n-1`` throughout.  The matching engine is an
augmenting-path search with blossom contraction; vertices are scanned in
ascending id order and adjacency lists are sorted, so every result is
deterministic and reproducible.

All values are immutable after construction and safe to share across
threads; the module keeps no mutable global state apart from bounded
memoisation caches keyed by graph value.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Optional

from .errors import InputError, InvariantError


def _norm_edge(e) -> tuple[int, int]:
    u, v = e
    if u == v:
        raise InputError(f"self-loop at vertex {u}")
    return (u, v) if u < v else (v, u)


class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    No self-loops, no parallel edges.  Hashable and comparable by value so
    graphs can key memoisation caches.
    """

    __slots__ = ("n", "edges", "edge_set", "adj", "_hash")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise InputError("vertex count must be non-negative")
        es = sorted({_norm_edge(e) for e in edges})
        adj: list[list[int]] = [[] for _ in range(n)]
        for u, v in es:
            if not (0 <= u < n and 0 <= v < n):
                raise InputError(f"edge ({u},{v}) out of range for n={n}")
            adj[u].append(v)
            adj[v].append(u)
        self.n = n
        self.edges = tuple(es)
        self.edge_set = frozenset(es)
        self.adj = tuple(tuple(sorted(a)) for a in adj)
        self._hash = hash((n, self.edges))

    def has_edge(self, u: int, v: int) -> bool:
        return _norm_edge((u, v)) in self.edge_set

    def __eq__(self, other):
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self.edges == other.edges
        )

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Graph(n={self.n}, m={len(self.edges)})"


class Matching:
    """A set of pairwise vertex-disjoint edges plus its covered vertex set."""

    __slots__ = ("edges", "edge_set", "covered", "_hash")

    def __init__(self, edges: Iterable[tuple[int, int]] = ()):
        es = sorted({_norm_edge(e) for e in edges})
        seen: set[int] = set()
        for u, v in es:
            if u in seen or v in seen:
                raise InputError(f"edges are not vertex-disjoint at ({u},{v})")
            seen.add(u)
            seen.add(v)
        self.edges = tuple(es)
        self.edge_set = frozenset(es)
        self.covered = frozenset(seen)
        self._hash = hash(self.edges)

    @property
    def size(self) -> int:
        return len(self.edges)

    def partner_map(self) -> dict[int, int]:
        d: dict[int, int] = {}
        for u, v in self.edges:
            d[u] = v
            d[v] = u
        return d

    def validate_for(self, g: Graph) -> None:
        for e in self.edges:
            if e not in g.edge_set:
                raise InputError(f"matching edge {e} is not a graph edge")

    def __eq__(self, other):
        return isinstance(other, Matching) and self.edges == other.edges

    def __hash__(self):
        return self._hash

    def __iter__(self):
        return iter(self.edges)

    def __len__(self):
        return len(self.edges)

    def __repr__(self):
        return f"Matching({list(self.edges)})"


@dataclass(frozen=True)
class GallaiEdmonds:
    """Structure of a graph relative to its maximum matchings.

    ``cut_set`` separates the even part from the odd components; every
    odd component is hypomatchable; every maximum matching exposes exactly
    ``len(odd_components) - len(cut_set)`` vertices, all in distinct odd
    components.
    """

    cut_set: frozenset[int]
    even_part: frozenset[int]
    odd_components: tuple[frozenset[int], ...]
    witness: Matching


class AlternatingForest:
    """Vertices reachable from an exposed root by even alternating paths.

    A vertex is *even-reachable* when some alternating path from the root
    ends at it with a matching edge (the root itself counts, via the empty
    path).  ``path_to`` reconstructs one such path.
    """

    __slots__ = ("root", "even_set", "_match", "_parent")

    def __init__(self, root: int, even: frozenset[int], match: list[int], parent: list[int]):
        self.root = root
        self.even_set = even
        self._match = match
        self._parent = parent

    def path_to(self, v: int) -> list[int]:
        """Alternating path (vertex sequence) from the root to ``v``."""
        if v not in self.even_set:
            raise InputError(f"vertex {v} is not even-reachable from {self.root}")
        if v == self.root:
            return [self.root]
        seq = [v]
        u = self._match[v]
        limit = len(self._match) + 2
        while True:
            seq.append(u)
            w = self._parent[u]
            seq.append(w)
            if w == self.root:
                break
            u = self._match[w]
            if len(seq) > limit:
                raise InvariantError("alternating path extraction did not terminate")
        seq.reverse()
        if len(set(seq)) != len(seq):
            raise InvariantError("alternating path extraction produced a non-simple path")
        return seq


def _match_array(n: int, m: Matching) -> list[int]:
    match = [-1] * n
    for u, v in m.edges:
        match[u] = v
        match[v] = u
    return match


def _lca(match, base, parent, a, b):
    marked = set()
    v = a
    while True:
        v = base[v]
        marked.add(v)
        if match[v] == -1:
            break
        v = parent[match[v]]
    v = b
    while True:
        v = base[v]
        if v in marked:
            return v
        v = parent[match[v]]


def _mark_path(match, base, parent, blossom, v, b, child):
    while base[v] != b:
        blossom[base[v]] = True
        blossom[base[match[v]]] = True
        parent[v] = child
        child = match[v]
        v = parent[match[v]]


def _blossom_search(adj, match, root, augment: bool):
    """Edmonds search from an exposed root.

    With ``augment`` True, flips the matching along the first augmenting
    path found and returns True.  Otherwise explores exhaustively and
    returns ``(even_vertices, parent)`` for path reconstruction.
    """
    n = len(adj)
    parent = [-1] * n
    base = list(range(n))
    used = [False] * n
    used[root] = True
    queue = deque([root])
    while queue:
        v = queue.popleft()
        for to in adj[v]:
            if base[v] == base[to] or match[v] == to:
                continue
            if to == root or (match[to] != -1 and parent[match[to]] != -1):
                cur = _lca(match, base, parent, v, to)
                blossom = [False] * n
                _mark_path(match, base, parent, blossom, v, cur, to)
                _mark_path(match, base, parent, blossom, to, cur, v)
                for i in range(n):
                    if blossom[base[i]]:
                        base[i] = cur
                        if not used[i]:
                            used[i] = True
                            queue.append(i)
            elif parent[to] == -1:
                parent[to] = v
                if match[to] == -1:
                    if augment:
                        u = to
                        while u != -1:
                            pv = parent[u]
                            ppv = match[pv]
                            match[u] = pv
                            match[pv] = u
                            u = ppv
                        return True
                    # reach mode: an exposed vertex is a dead end (it has no
                    # matched edge to continue on and can never turn even)
                else:
                    w = match[to]
                    if not used[w]:
                        used[w] = True
                        queue.append(w)
    if augment:
        return False
    return used, parent


def max_matching(g: Graph, seed_matching: Optional[Matching] = None) -> Matching:
    """Maximum-cardinality matching; never uncovers a seed-covered vertex.

    Augmenting paths only join two exposed vertices, so everything the seed
    covers stays covered while the matching grows to maximum size.
    """
    if seed_matching is not None:
        seed_matching.validate_for(g)
        match = _match_array(g.n, seed_matching)
    else:
        match = [-1] * g.n
    for root in range(g.n):
        if match[root] == -1:
            _blossom_search(g.adj, match, root, augment=True)
    return Matching((v, match[v]) for v in range(g.n) if match[v] > v)


def perfect_matching_exists(g: Graph) -> tuple[bool, Optional[Matching]]:
    """Whether every vertex can be covered, with a witness when true."""
    m = max_matching(g)
    if 2 * m.size == g.n:
        return True, m
    return False, None


def matching_missing_exactly(g: Graph, k: int) -> Optional[Matching]:
    """A matching covering exactly ``n - k`` vertices, if one exists.

    When the maximum matching covers more, edges are removed greedily
    (each removal uncovers exactly two vertices); a parity mismatch means
    no such matching exists.
    """
    if k < 0:
        raise InputError("k must be non-negative")
    target = g.n - k
    if target < 0 or target % 2 != 0:
        return None
    m = max_matching(g)
    covered = 2 * m.size
    if covered < target:
        return None
    if covered == target:
        return m
    return Matching(m.edges[: target // 2])


def alternating_reach(g: Graph, m: Matching, root: int) -> AlternatingForest:
    """All vertices reachable from ``root`` by alternating paths that end
    with a matching edge, with blossom handling (correct on non-bipartite
    graphs)."""
    m.validate_for(g)
    match = _match_array(g.n, m)
    if not (0 <= root < g.n):
        raise InputError(f"root {root} out of range")
    if match[root] != -1:
        raise InputError(f"root {root} is covered by the matching")
    used, parent = _blossom_search(g.adj, match, root, augment=False)
    even = frozenset(i for i in range(g.n) if used[i])
    return AlternatingForest(root, even, match, parent)


def induced_subgraph(g: Graph, keep: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Induced subgraph on ``keep`` with dense relabeling.

    Returns the subgraph and ``to_old`` such that ``to_old[new_id]`` is the
    original id.
    """
    to_old = tuple(sorted(set(keep)))
    for v in to_old:
        if not (0 <= v < g.n):
            raise InputError(f"vertex {v} out of range")
    to_new = {v: i for i, v in enumerate(to_old)}
    edges = [
        (to_new[u], to_new[v])
        for u, v in g.edges
        if u in to_new and v in to_new
    ]
    return Graph(len(to_old), edges), to_old


@lru_cache(maxsize=512)
def gallai_edmonds(g: Graph) -> GallaiEdmonds:
    """Decomposition into cut set, even part, and hypomatchable components.

    The odd components collect exactly the vertices exposed by at least one
    maximum matching; the cut set is their outside neighborhood.
    """
    m = max_matching(g)
    match = _match_array(g.n, m)
    exposable: set[int] = set()
    for root in range(g.n):
        if match[root] == -1:
            used, _ = _blossom_search(g.adj, match, root, augment=False)
            exposable.update(i for i in range(g.n) if used[i])
    cut = {u for v in exposable for u in g.adj[v]} - exposable
    even = frozenset(range(g.n)) - exposable - cut
    # connected components of the subgraph induced by the exposable part
    comps: list[frozenset[int]] = []
    seen: set[int] = set()
    for v in sorted(exposable):
        if v in seen:
            continue
        comp = {v}
        stack = [v]
        while stack:
            x = stack.pop()
            for y in g.adj[x]:
                if y in exposable and y not in comp:
                    comp.add(y)
                    stack.append(y)
        seen |= comp
        comps.append(frozenset(comp))
    comps.sort(key=min)
    for comp in comps:
        if len(comp) % 2 == 0:
            raise InvariantError("even-sized component in the deficient part")
    if len(comps) - len(cut) != g.n - 2 * m.size:
        raise InvariantError("deficiency identity violated")
    return GallaiEdmonds(
        cut_set=frozenset(cut),
        even_part=even,
        odd_components=tuple(comps),
        witness=m,
    )


def _aux_cover_graph(g: Graph, ge: GallaiEdmonds) -> tuple[Graph, tuple[int, ...]]:
    """Bipartite contact graph: cut vertices on the left, odd components on
    the right, an edge when the graph joins the cut vertex to the component."""
    cut = tuple(sorted(ge.cut_set))
    comp_index = {}
    for j, comp in enumerate(ge.odd_components):
        for v in comp:
            comp_index[v] = j
    edges = set()
    for i, a in enumerate(cut):
        for b in g.adj[a]:
            j = comp_index.get(b)
            if j is not None:
                edges.add((i, len(cut) + j))
    return Graph(len(cut) + len(ge.odd_components), edges), cut


def _flip_along(match_edges: set[tuple[int, int]], path: list[int]) -> None:
    for i in range(len(path) - 1):
        e = _norm_edge((path[i], path[i + 1]))
        if e in match_edges:
            match_edges.remove(e)
        else:
            match_edges.add(e)


def _cover_targets(aux: Graph, targets: list[int], optional_from: int) -> tuple[set[tuple[int, int]], set[int]]:
    """Maximize coverage of ``targets`` (in order) in the contact graph.

    Targets before index ``optional_from`` must be coverable (invariant
    violation otherwise); later ones may fail.  Returns the matching edge
    set and the set of targets left uncovered.  Coverable subsets of a
    fixed vertex set form a matroid, so fixing earlier targets and greedily
    exchanging exposure onto non-target vertices is exact.
    """
    target_set = set(targets)
    match_edges = set(max_matching(aux).edges)
    failed: set[int] = set()
    for idx, t in enumerate(targets):
        m = Matching(match_edges)
        if t in m.covered:
            continue
        forest = alternating_reach(aux, m, t)
        swap = None
        for y in sorted(forest.even_set):
            if y != t and y not in target_set:
                swap = y
                break
        if swap is None:
            if idx < optional_from:
                raise InvariantError("cut vertex not coverable in contact graph")
            failed.add(t)
            continue
        _flip_along(match_edges, forest.path_to(swap))
    return match_edges, failed


def _assemble_witness(
    g: Graph,
    ge: GallaiEdmonds,
    cut: tuple[int, ...],
    aux_edges: set[tuple[int, int]],
    avoid: frozenset[int],
) -> Matching:
    """Expand a contact-graph matching into a real maximum matching.

    Components matched to a cut vertex are fully covered; every other
    component exposes one vertex, chosen outside ``avoid`` when possible.
    """
    edges: list[tuple[int, int]] = []
    if ge.even_part:
        sub, to_old = induced_subgraph(g, ge.even_part)
        ok, pm = perfect_matching_exists(sub)
        if not ok:
            raise InvariantError("even part is not perfectly matchable")
        edges.extend((to_old[u], to_old[v]) for u, v in pm.edges)
    matched_comp: dict[int, int] = {}
    for u, v in aux_edges:
        i, j = (u, v) if u < v else (v, u)
        matched_comp[j - len(cut)] = cut[i]
    for j, comp in enumerate(ge.odd_components):
        if j in matched_comp:
            a = matched_comp[j]
            q = min(v for v in comp if v in set(g.adj[a]))
            edges.append((a, q))
            rest = comp - {q}
        else:
            outside = sorted(comp - avoid)
            expose = outside[0] if outside else min(comp)
            rest = comp - {expose}
        if rest:
            sub, to_old = induced_subgraph(g, rest)
            ok, pm = perfect_matching_exists(sub)
            if not ok:
                raise InvariantError("odd component is not hypomatchable")
            edges.extend((to_old[u], to_old[v]) for u, v in pm.edges)
    return Matching(edges)


def coverable(g: Graph, x: Iterable[int]) -> Optional[Matching]:
    """A matching covering all of ``x``, or None.

    Decision: in the contact graph between the cut set and the odd
    components, some matching must cover every cut vertex and every odd
    component that lies entirely inside ``x``; components with an outside
    vertex can always expose one.  The witness is assembled from the even
    part's perfect matching, per-component near-perfect matchings, and the
    contact matching.
    """
    xset = frozenset(x)
    for v in xset:
        if not (0 <= v < g.n):
            raise InputError(f"vertex {v} out of range")
    ge = gallai_edmonds(g)
    aux, cut = _aux_cover_graph(g, ge)
    required = [
        len(cut) + j
        for j, comp in enumerate(ge.odd_components)
        if comp <= xset
    ]
    targets = list(range(len(cut))) + required
    aux_edges, failed = _cover_targets(aux, targets, len(cut))
    if failed:
        return None
    witness = _assemble_witness(g, ge, cut, aux_edges, xset)
    if not xset <= witness.covered:
        raise InvariantError("assembled witness does not cover the requested set")
    return witness


@lru_cache(maxsize=1 << 17)
def coverage_rank(g: Graph, y: frozenset[int]) -> int:
    """Largest number of vertices of ``y`` a single matching can cover.

    Equals the rank of ``y`` in the matroid whose independent sets are the
    coverable vertex sets.
    """
    for v in y:
        if not (0 <= v < g.n):
            raise InputError(f"vertex {v} out of range")
    ge = gallai_edmonds(g)
    aux, cut = _aux_cover_graph(g, ge)
    required = [
        len(cut) + j
        for j, comp in enumerate(ge.odd_components)
        if comp <= y
    ]
    targets = list(range(len(cut))) + required
    _, failed = _cover_targets(aux, targets, len(cut))
    return len(y) - len(failed)


def bipartition(g: Graph) -> Optional[tuple[frozenset[int], frozenset[int]]]:
    """A 2-coloring of the graph, or None if it has an odd cycle."""
    color = [-1] * g.n
    for s in range(g.n):
        if color[s] != -1:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for w in g.adj[v]:
                if color[w] == -1:
                    color[w] = 1 - color[v]
                    queue.append(w)
                elif color[w] == color[v]:
                    return None
    return (
        frozenset(v for v in range(g.n) if color[v] == 0),
        frozenset(v for v in range(g.n) if color[v] == 1),
    )
