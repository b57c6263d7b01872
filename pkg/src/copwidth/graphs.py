"""Immutable directed graphs with dense integer ids and bitset adjacency.

The graph type is the shared substrate for the game solvers, the family
generators and the cliquewidth evaluator.  Vertices are identified by ids
0..vertex_count-1 and carry unique non-empty names.  Self-loops are allowed;
duplicate edges are rejected.  Successor lists are kept sorted, and each
vertex additionally exposes its successor/predecessor sets as int bitmasks
because the solvers spend nearly all their time in reachability queries.
"""

from __future__ import annotations

import json
from typing import Iterable, Iterator


class GraphError(ValueError):
    """Raised for malformed graphs, ids out of range, or bad serialized input."""


class Graph:
    """A finite directed graph; immutable once constructed."""

    __slots__ = ("names", "succs", "succ_masks", "pred_masks", "_ids")

    def __init__(self, names: Iterable[str], edges: Iterable[tuple[int, int]]):
        names = tuple(names)
        ids: dict[str, int] = {}
        for i, nm in enumerate(names):
            if not isinstance(nm, str) or not nm:
                raise GraphError(f"vertex {i} has an empty or non-string name")
            if nm in ids:
                raise GraphError(f"duplicate vertex name {nm!r}")
            ids[nm] = i
        n = len(names)
        succ_sets: list[set[int]] = [set() for _ in range(n)]
        for u, w in edges:
            if not (0 <= u < n and 0 <= w < n):
                raise GraphError(f"edge ({u},{w}) has a dangling endpoint (vertex_count={n})")
            if w in succ_sets[u]:
                raise GraphError(f"duplicate edge ({u},{w})")
            succ_sets[u].add(w)
        succ_masks = []
        pred_masks = [0] * n
        for u in range(n):
            m = 0
            for w in succ_sets[u]:
                m |= 1 << w
                pred_masks[w] |= 1 << u
            succ_masks.append(m)
        object.__setattr__(self, "names", names)
        object.__setattr__(self, "succs", tuple(tuple(sorted(s)) for s in succ_sets))
        object.__setattr__(self, "succ_masks", tuple(succ_masks))
        object.__setattr__(self, "pred_masks", tuple(pred_masks))
        object.__setattr__(self, "_ids", ids)

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    @property
    def vertex_count(self) -> int:
        return len(self.names)

    @property
    def edge_count(self) -> int:
        return sum(len(s) for s in self.succs)

    @property
    def full_mask(self) -> int:
        """Bitmask with one bit per vertex."""
        return (1 << len(self.names)) - 1

    def successors(self, v: int) -> tuple[int, ...]:
        self._check(v)
        return self.succs[v]

    def has_edge(self, u: int, w: int) -> bool:
        self._check(u)
        self._check(w)
        return bool(self.succ_masks[u] >> w & 1)

    def edges(self) -> list[tuple[int, int]]:
        """All edges, sorted lexicographically."""
        return [(u, w) for u in range(len(self.names)) for w in self.succs[u]]

    def id_of(self, name: str) -> int:
        try:
            return self._ids[name]
        except KeyError:
            raise GraphError(f"unknown vertex name {name!r}") from None

    def name_of(self, v: int) -> str:
        self._check(v)
        return self.names[v]

    def _check(self, v: int) -> None:
        if not (0 <= v < len(self.names)):
            raise GraphError(f"vertex id {v} out of range (vertex_count={len(self.names)})")

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.names == other.names and self.succs == other.succs

    def __hash__(self) -> int:
        return hash((self.names, self.succs))

    def __repr__(self) -> str:
        return f"Graph({len(self.names)} vertices, {self.edge_count} edges)"


# A VertexSet is a plain set/frozenset of vertex ids over a specific graph.
VertexSet = frozenset


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def bits_of(mask: int) -> Iterator[int]:
    """Iterate set bit positions in ascending order."""
    while mask:
        b = mask & -mask
        yield b.bit_length() - 1
        mask ^= b


def reach_mask(graph: Graph, blocked_mask: int, sources_mask: int) -> int:
    """Bitmask core of `reachable`; sources inside blocked contribute nothing."""
    succ_masks = graph.succ_masks
    seen = sources_mask & ~blocked_mask
    frontier = seen
    while frontier:
        nxt = 0
        m = frontier
        while m:
            b = m & -m
            nxt |= succ_masks[b.bit_length() - 1]
            m ^= b
        frontier = nxt & ~blocked_mask & ~seen
        seen |= frontier
    return seen


def reachable(graph: Graph, blocked: Iterable[int], sources: Iterable[int]) -> set[int]:
    """Vertices reachable from `sources` along directed paths avoiding `blocked`.

    A source that is itself blocked contributes nothing; an unblocked source is
    always in the result.
    """
    bm = 0
    for v in blocked:
        graph._check(v)
        bm |= 1 << v
    sm = 0
    for v in sources:
        graph._check(v)
        sm |= 1 << v
    return set(bits_of(reach_mask(graph, bm, sm)))


def symmetric_closure(graph: Graph) -> Graph:
    """Same vertices, edge set E union reversed E."""
    edges = set()
    for u in range(graph.vertex_count):
        for w in graph.succs[u]:
            edges.add((u, w))
            edges.add((w, u))
    return Graph(graph.names, sorted(edges))


def sccs(graph: Graph) -> list[list[int]]:
    """Strongly connected components in topological order of the condensation.

    Iterative Tarjan; components are emitted in reverse topological order and
    the final list is reversed, so every edge goes within a component or from
    an earlier to a later one.  Vertices within a component are sorted.
    """
    n = graph.vertex_count
    index = [-1] * n
    low = [0] * n
    on_stack = [False] * n
    stack: list[int] = []
    out: list[list[int]] = []
    counter = 0
    for root in range(n):
        if index[root] != -1:
            continue
        # explicit DFS stack: (vertex, iterator position into succs)
        work = [(root, 0)]
        while work:
            v, pi = work.pop()
            if pi == 0:
                index[v] = low[v] = counter
                counter += 1
                stack.append(v)
                on_stack[v] = True
            recurse = False
            succ = graph.succs[v]
            while pi < len(succ):
                w = succ[pi]
                pi += 1
                if index[w] == -1:
                    work.append((v, pi))
                    work.append((w, 0))
                    recurse = True
                    break
                if on_stack[w]:
                    low[v] = min(low[v], index[w])
            if recurse:
                continue
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp.append(w)
                    if w == v:
                        break
                comp.sort()
                out.append(comp)
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])
    out.reverse()
    return out


def induced_subgraph(graph: Graph, keep: Iterable[int]) -> Graph:
    """Subgraph on `keep`, re-indexed densely preserving relative id order."""
    kept = sorted(set(keep))
    for v in kept:
        graph._check(v)
    remap = {v: i for i, v in enumerate(kept)}
    names = [graph.names[v] for v in kept]
    edges = [
        (remap[u], remap[w])
        for u in kept
        for w in graph.succs[u]
        if w in remap
    ]
    return Graph(names, edges)


def is_acyclic(graph: Graph) -> bool:
    """True iff no directed cycle; a self-loop counts as a cycle."""
    for comp in sccs(graph):
        if len(comp) > 1:
            return False
        v = comp[0]
        if graph.succ_masks[v] >> v & 1:
            return False
    return True


def serialize_graph(graph: Graph) -> bytes:
    """Canonical JSON encoding; edges sorted; byte-exact for a given graph."""
    doc = {
        "vertices": [{"id": i, "name": nm} for i, nm in enumerate(graph.names)],
        "edges": [[u, w] for u, w in graph.edges()],
    }
    return json.dumps(doc, separators=(",", ":"), ensure_ascii=False).encode("utf-8")


def parse_graph(data: bytes | str) -> Graph:
    """Inverse of serialize_graph; rejects malformed input naming the offender."""
    if isinstance(data, bytes):
        data = data.decode("utf-8")
    try:
        doc = json.loads(data)
    except json.JSONDecodeError as exc:
        raise GraphError(f"invalid JSON: {exc}") from None
    if not isinstance(doc, dict) or "vertices" not in doc or "edges" not in doc:
        raise GraphError("graph document must be an object with 'vertices' and 'edges'")
    verts = doc["vertices"]
    if not isinstance(verts, list):
        raise GraphError("'vertices' must be a list")
    names: list[str] = []
    for i, entry in enumerate(verts):
        if not isinstance(entry, dict) or "id" not in entry or "name" not in entry:
            raise GraphError(f"vertex entry {i} must have 'id' and 'name'")
        if entry["id"] != i:
            raise GraphError(f"vertex ids must be dense 0..n-1; entry {i} has id {entry['id']!r}")
        names.append(entry["name"])
    edges = []
    n = len(names)
    for e in doc["edges"]:
        if not (isinstance(e, list) and len(e) == 2 and all(isinstance(x, int) for x in e)):
            raise GraphError(f"edge {e!r} must be a pair of vertex ids")
        u, w = e
        if not (0 <= u < n and 0 <= w < n):
            raise GraphError(f"edge [{u},{w}] has a dangling endpoint (vertex_count={n})")
        edges.append((u, w))
    return Graph(names, edges)


def _dot_quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(graph: Graph) -> str:
    """GraphViz text form; deterministic, one node and one edge per line."""
    lines = ["digraph {"]
    for i, nm in enumerate(graph.names):
        lines.append(f"  {i} [label={_dot_quote(nm)}];")
    for u, w in graph.edges():
        lines.append(f"  {u} -> {w};")
    lines.append("}")
    return "\n".join(lines) + "\n"
