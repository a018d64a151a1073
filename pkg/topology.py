"""Network topologies: who receives whose pulses.

Edges are directed, (i, j) meaning oscillator j receives i's pulses.
Indices are 1-based. Bidirectional topologies are built from edge pairs.
"""

from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, List, Optional, Sequence, Tuple, Union

import networkx as nx
import numpy as np


Edge = Tuple[int, int]


class TopologyError(ValueError):
    """Raised for invalid graphs or graphs a simulation refuses to run on."""


@dataclass(frozen=True)
class Graph:
    """Immutable directed graph over oscillators 1..n.

    Attributes:
        n: Number of oscillators.
        out_edges: out_edges[i - 1] holds the sorted recipients of oscillator i.
    """
    n: int
    out_edges: Tuple[Tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise TopologyError(f"n must be at least 1, got {self.n}")
        if len(self.out_edges) != self.n:
            raise TopologyError("out_edges must hold one entry per oscillator")
        for source, targets in enumerate(self.out_edges, start=1):
            for target in targets:
                _check_edge(self.n, (source, target))

    def neighbors(self, i: int) -> Tuple[int, ...]:
        """Recipients of oscillator i's pulses."""
        return self.out_edges[i - 1]

    def out_degree(self, i: int) -> int:
        return len(self.out_edges[i - 1])

    @property
    def edges(self) -> List[Edge]:
        return [
            (source, target)
            for source, targets in enumerate(self.out_edges, start=1)
            for target in targets
        ]

    @property
    def edge_count(self) -> int:
        return sum(len(targets) for targets in self.out_edges)

    def to_networkx(self) -> nx.DiGraph:
        """The graph as a networkx DiGraph with nodes 1..n."""
        digraph = nx.DiGraph()
        digraph.add_nodes_from(range(1, self.n + 1))
        digraph.add_edges_from(self.edges)
        return digraph


def _check_edge(n: int, edge: Edge) -> None:
    source, target = edge
    if not (1 <= source <= n and 1 <= target <= n):
        raise TopologyError(f"edge {edge} has an index outside 1..{n}")
    if source == target:
        raise TopologyError(f"self-edge {edge} is not allowed")


def from_edges(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    """Build a graph from explicit edges. Duplicates are dropped.

    Raises:
        TopologyError: For an index outside 1..n or a self-edge.
    """
    if n < 1:
        raise TopologyError(f"n must be at least 1, got {n}")
    targets: List[set] = [set() for _ in range(n)]
    for raw in edges:
        if len(raw) != 2:
            raise TopologyError(f"edge {tuple(raw)} must have exactly two indices")
        edge = (int(raw[0]), int(raw[1]))
        _check_edge(n, edge)
        targets[edge[0] - 1].add(edge[1])
    return Graph(n=n, out_edges=tuple(tuple(sorted(t)) for t in targets))


def all_to_all(n: int) -> Graph:
    """Every oscillator hears every other one."""
    if n < 1:
        raise TopologyError(f"all_to_all needs n >= 1, got {n}")
    return from_edges(n, ((i, j) for i in range(1, n + 1) for j in range(1, n + 1) if i != j))


def ring(n: int) -> Graph:
    """Bidirectional ring: i talks to i - 1 and i + 1 (mod n)."""
    if n < 2:
        raise TopologyError(f"ring needs n >= 2, got {n}")
    edges: List[Edge] = []
    for i in range(1, n + 1):
        j = i % n + 1
        edges.extend([(i, j), (j, i)])
    return from_edges(n, edges)


def is_strongly_connected(graph: Graph) -> bool:
    """True when every oscillator can reach every other one along directed edges."""
    if graph.n == 1:
        return True
    return bool(nx.is_strongly_connected(graph.to_networkx()))


def parse_edge_list(text: str) -> List[Edge]:
    """Parse `i j` pairs, one per line. Blank lines and `#` comments are skipped.

    Raises:
        TopologyError: For a malformed line, with its line number.
    """
    edges: List[Edge] = []
    for line_number, line in enumerate(text.splitlines(), start=1):
        content = line.split("#", 1)[0].strip()
        if not content:
            continue
        parts = content.split()
        if len(parts) != 2:
            raise TopologyError(f"line {line_number}: expected 'i j', got {line.strip()!r}")
        try:
            edges.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise TopologyError(f"line {line_number}: indices must be integers, got {line.strip()!r}")
    return edges


def read_edge_list(path: Union[str, Path]) -> List[Edge]:
    """Read an edge-list file (see parse_edge_list)."""
    return parse_edge_list(Path(path).read_text(encoding="utf-8"))


def random_strongly_connected(
    n: int,
    rng: np.random.Generator,
    extra_edge_probability: float = 0.3,
) -> Graph:
    """Random strongly connected digraph.

    A directed cycle through a random permutation guarantees strong
    connectivity; every other ordered pair is added with the given probability.
    """
    if n < 2:
        raise TopologyError(f"random_strongly_connected needs n >= 2, got {n}")
    order = [int(i) + 1 for i in rng.permutation(n)]
    edges: List[Edge] = [(order[k], order[(k + 1) % n]) for k in range(n)]
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i != j and rng.random() < extra_edge_probability:
                edges.append((i, j))
    return from_edges(n, edges)


def describe(graph: Graph, name: Optional[str] = None) -> str:
    """Short human-readable description, used in reports."""
    label = name or "custom"
    return f"{label} (n={graph.n}, edges={graph.edge_count})"
