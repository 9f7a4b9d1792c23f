"""Mutable undirected simple graph with node removal and BFS primitives.

Node ids are dense integers 0..n-1 and stay stable for the lifetime of a
graph: removing a node marks it dead, nothing is ever renumbered. Neighbor
iteration is always in ascending id order so that any tie-breaking built on
top of it is reproducible.

Heavy queries (components, 2-core, detour BFS) run on a frozen CSR snapshot
of the adjacency shared with the numba kernels in ``_kernels``; the snapshot
stays valid across node removals because kernels skip dead endpoints.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

import numpy as np

from . import _kernels


class GraphError(ValueError):
    """Base class for graph contract violations."""


class SelfLoopError(GraphError):
    pass


class DuplicateEdgeError(GraphError):
    pass


class DeadEndpointError(GraphError):
    pass


class AlreadyDeadError(GraphError):
    pass


class NoSuchEdgeError(GraphError):
    pass


class EmptyGraphError(GraphError):
    """Raised by queries that need at least one alive node."""


class TooLargeError(GraphError):
    """Raised by brute-force oracles when the graph exceeds their size cap."""


class Graph:
    """Undirected simple graph on a fixed id space with removal support."""

    __slots__ = ("_n", "_alive", "_n_alive", "_adj", "_deg", "_m_alive",
                 "_indptr", "_indices", "_rev", "_csr_stale")

    def __init__(self, n: int):
        if n < 0:
            raise ValueError("node count must be non-negative")
        self._n = n
        self._alive = np.ones(n, dtype=np.bool_)
        self._n_alive = n
        self._adj: list[set[int]] = [set() for _ in range(n)]
        self._deg = np.zeros(n, dtype=np.int64)
        self._m_alive = 0
        self._indptr: np.ndarray | None = None
        self._indices: np.ndarray | None = None
        self._rev: np.ndarray | None = None
        self._csr_stale = True

    # -- basic queries ----------------------------------------------------

    @property
    def n_total(self) -> int:
        """Number of ever-created nodes (alive + dead)."""
        return self._n

    @property
    def alive_count(self) -> int:
        return self._n_alive

    @property
    def m_alive(self) -> int:
        """Current number of live edges."""
        return self._m_alive

    def is_alive(self, i: int) -> bool:
        return bool(self._alive[i])

    def degree(self, i: int) -> int:
        """Alive-neighbor count; 0 for dead nodes."""
        return int(self._deg[i])

    def degrees(self) -> np.ndarray:
        """Copy of the per-id degree array (dead ids hold 0)."""
        return self._deg.copy()

    def neighbors(self, i: int) -> list[int]:
        return sorted(self._adj[i])

    def has_edge(self, i: int, j: int) -> bool:
        return j in self._adj[i]

    def alive_nodes(self) -> np.ndarray:
        return np.flatnonzero(self._alive)

    def alive_mask(self) -> np.ndarray:
        return self._alive.copy()

    def edges(self):
        """Yield live edges as (u, v) with u < v, ascending lexicographic."""
        for u in range(self._n):
            if not self._alive[u]:
                continue
            for v in sorted(self._adj[u]):
                if v > u:
                    yield (u, v)

    # -- mutation ----------------------------------------------------------

    def _check_id(self, i: int) -> None:
        if not 0 <= i < self._n:
            raise GraphError(f"node id {i} out of range [0, {self._n})")

    def add_edge(self, i: int, j: int) -> None:
        self._check_id(i)
        self._check_id(j)
        if i == j:
            raise SelfLoopError(f"self-loop at node {i}")
        if not (self._alive[i] and self._alive[j]):
            raise DeadEndpointError(f"edge ({i}, {j}) touches a dead node")
        if j in self._adj[i]:
            raise DuplicateEdgeError(f"edge ({i}, {j}) already present")
        self._adj[i].add(j)
        self._adj[j].add(i)
        self._deg[i] += 1
        self._deg[j] += 1
        self._m_alive += 1
        self._csr_stale = True

    def remove_node(self, i: int) -> None:
        self._check_id(i)
        if not self._alive[i]:
            raise AlreadyDeadError(f"node {i} is already dead")
        for j in self._adj[i]:
            self._adj[j].discard(i)
            self._deg[j] -= 1
        self._m_alive -= int(self._deg[i])
        self._adj[i].clear()
        self._deg[i] = 0
        self._alive[i] = False
        self._n_alive -= 1
        # CSR snapshot stays valid: kernels skip dead endpoints.

    def copy(self) -> "Graph":
        g = Graph.__new__(Graph)
        g._n = self._n
        g._alive = self._alive.copy()
        g._n_alive = self._n_alive
        g._adj = [s.copy() for s in self._adj]
        g._deg = self._deg.copy()
        g._m_alive = self._m_alive
        # The CSR snapshot is immutable once built; safe to share.
        g._indptr = self._indptr
        g._indices = self._indices
        g._rev = self._rev
        g._csr_stale = self._csr_stale
        return g

    # -- CSR snapshot for kernels -------------------------------------------

    def csr(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        """(indptr, indices, rev) snapshot; rebuilt only after add_edge."""
        if self._csr_stale:
            indptr = np.zeros(self._n + 1, dtype=np.int64)
            for i in range(self._n):
                indptr[i + 1] = indptr[i] + len(self._adj[i])
            indices = np.empty(indptr[-1], dtype=np.int64)
            pos_of: dict[tuple[int, int], int] = {}
            for i in range(self._n):
                row = sorted(self._adj[i])
                base = indptr[i]
                for off, j in enumerate(row):
                    indices[base + off] = j
                    pos_of[(i, j)] = base + off
            rev = np.empty(indptr[-1], dtype=np.int64)
            for (i, j), e in pos_of.items():
                rev[e] = pos_of[(j, i)]
            self._indptr, self._indices, self._rev = indptr, indices, rev
            self._csr_stale = False
        return self._indptr, self._indices, self._rev

    # -- invariants (used by tests and debug checks) -------------------------

    def check_invariants(self) -> None:
        deg_sum = 0
        for i in range(self._n):
            if not self._alive[i]:
                if self._adj[i] or self._deg[i] != 0:
                    raise AssertionError(f"dead node {i} still has adjacency")
                continue
            for j in self._adj[i]:
                if i == j:
                    raise AssertionError(f"self-loop at {i}")
                if not self._alive[j]:
                    raise AssertionError(f"edge ({i},{j}) to dead node")
                if i not in self._adj[j]:
                    raise AssertionError(f"asymmetric edge ({i},{j})")
            if self._deg[i] != len(self._adj[i]):
                raise AssertionError(f"degree cache wrong at {i}")
            deg_sum += len(self._adj[i])
        if deg_sum != 2 * self._m_alive:
            raise AssertionError("handshake violated: sum(deg) != 2*m_alive")


@dataclass(frozen=True)
class ComponentReport:
    """Connected-component partition of the alive nodes.

    ``labels[i]`` is the component label of alive node i (-1 for dead nodes);
    ``label_sizes[c]`` the size of component c (labels in discovery order by
    ascending seed id); ``sizes`` the same sizes sorted descending.
    """

    labels: np.ndarray
    label_sizes: np.ndarray
    sizes: tuple[int, ...]
    lcc_size: int

    @property
    def n_components(self) -> int:
        return len(self.sizes)


def components(g: Graph) -> ComponentReport:
    """BFS partition of the alive nodes; LCC size is 0 for an empty graph."""
    indptr, indices, _ = g.csr()
    labels, label_sizes = _kernels.components_labels(indptr, indices, g._alive)
    sizes = tuple(sorted((int(s) for s in label_sizes), reverse=True))
    lcc = sizes[0] if sizes else 0
    return ComponentReport(labels=labels, label_sizes=label_sizes,
                           sizes=sizes, lcc_size=lcc)


def lcc_size(g: Graph) -> int:
    indptr, indices, _ = g.csr()
    _, label_sizes = _kernels.components_labels(indptr, indices, g._alive)
    return int(label_sizes.max()) if label_sizes.size else 0


def two_core(g: Graph) -> set[int]:
    """Nodes surviving iterated stripping of degree <= 1; empty for forests."""
    indptr, indices, _ = g.csr()
    mask = _kernels.two_core_mask(indptr, indices, g._alive)
    return {int(v) for v in np.flatnonzero(mask)}


def shortest_path_len_excluding_edge(g: Graph, i: int, j: int) -> int | None:
    """BFS hop count from i to j with the live edge (i, j) masked.

    Returns None when no alternative path exists (the edge is a bridge).
    The graph is not mutated.
    """
    if not (g.is_alive(i) and g.is_alive(j) and g.has_edge(i, j)):
        raise NoSuchEdgeError(f"no live edge ({i}, {j})")
    indptr, indices, _ = g.csr()
    eu = np.array([i], dtype=np.int64)
    ev = np.array([j], dtype=np.int64)
    loop_len = _kernels.shortest_loop_lengths(indptr, indices, g._alive, eu, ev)
    return int(loop_len[0]) - 1 if loop_len[0] > 0 else None


# -- edge-list text format -------------------------------------------------

_HEADER_RE = re.compile(r"^# nodes=(\d+) edges=(\d+)$")


def to_edgelist_text(g: Graph) -> str:
    """Serialize: ``# nodes=<N> edges=<M>`` then ``u v`` lines, u < v ascending."""
    lines = [f"# nodes={g.n_total} edges={g.m_alive}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def from_edgelist_text(text: str) -> Graph:
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines:
        raise ValueError("empty edge-list text")
    m = _HEADER_RE.match(lines[0])
    if not m:
        raise ValueError(f"bad edge-list header: {lines[0]!r}")
    n, n_edges = int(m.group(1)), int(m.group(2))
    g = Graph(n)
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise ValueError(f"bad edge line: {ln!r}")
        u, v = int(parts[0]), int(parts[1])
        if not u < v:
            raise ValueError(f"edge line not in u < v form: {ln!r}")
        g.add_edge(u, v)
    if g.m_alive != n_edges:
        raise ValueError(f"header says {n_edges} edges, file has {g.m_alive}")
    return g


def write_edgelist(g: Graph, path) -> None:
    with open(path, "w", encoding="ascii", newline="") as fh:
        fh.write(to_edgelist_text(g))


def read_edgelist(path) -> Graph:
    with open(path, "r", encoding="ascii") as fh:
        return from_edgelist_text(fh.read())
