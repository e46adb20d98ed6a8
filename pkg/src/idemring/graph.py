"""The idempotent digraph: vertices are idempotents, e -> f iff e*f = 0."""
from __future__ import annotations

import json
from dataclasses import dataclass, field

import numpy as np

from .errors import BadVertex, SizeExceeded
from .idempotents import Kind, central_flags, enumerate_idempotents, partition_in, partition_out
from .rings import Ring

MAX_VERTICES = 16384


@dataclass(frozen=True, eq=False)
class IdempotentDigraph:
    ring: Ring
    vertices: np.ndarray  # ring indices; position = vertex id
    adjacency: np.ndarray = field(repr=False)  # bool (V, V), row = out-neighbours
    central: np.ndarray = field(repr=False)

    def __len__(self):
        return len(self.vertices)

    def vertex_of(self, x: int) -> int:
        pos = int(np.searchsorted(self.vertices, x))
        if pos >= len(self.vertices) or self.vertices[pos] != x:
            raise BadVertex(f"{x} is not an idempotent of {self.ring.descriptor}")
        return pos

    def _check(self, v):
        if not 0 <= v < len(self.vertices):
            raise BadVertex(f"vertex id {v} out of range [0, {len(self.vertices)})")

    def out_neighbours(self, v: int):
        self._check(v)
        return [int(j) for j in np.flatnonzero(self.adjacency[v])]

    def in_neighbours(self, v: int):
        self._check(v)
        return [int(j) for j in np.flatnonzero(self.adjacency[:, v])]

    def edges(self):
        return [(int(i), int(j)) for i, j in np.argwhere(self.adjacency)]


def build_graph(R: Ring, workers: int = 1, bound=None) -> IdempotentDigraph:
    verts = np.asarray(enumerate_idempotents(R, workers=workers, bound=bound), dtype=np.int64)
    if len(verts) > MAX_VERTICES:
        raise SizeExceeded(len(verts), MAX_VERTICES)
    prod = R.mul(verts[:, None], verts[None, :])
    adj = prod == R.zero
    central = central_flags(R, verts)
    for arr in (verts, adj, central):
        arr.setflags(write=False)
    return IdempotentDigraph(R, verts, adj, central)


def out_neighbours(g: IdempotentDigraph, v: int):
    return g.out_neighbours(v)


def in_neighbours(g: IdempotentDigraph, v: int):
    return g.in_neighbours(v)


def _group_rows(rows):
    groups = {}
    for v, row in enumerate(np.packbits(rows, axis=1)):
        groups.setdefault(row.tobytes(), []).append(v)
    return sorted(groups.values())


def graph_partition_out(g: IdempotentDigraph):
    """Vertex ids grouped by equal out-neighbour sets, listed by smallest id."""
    return _group_rows(g.adjacency)


def graph_partition_in(g: IdempotentDigraph):
    return _group_rows(g.adjacency.T)


@dataclass
class EquivalenceReport:
    passed: bool
    mismatches: list  # (kind, graph-side class, algebra-side class) as ring indices


def check_class_equivalence(R: Ring, g: IdempotentDigraph) -> EquivalenceReport:
    """Compare neighbour-set partitions of g with the relation-scan classes of R."""
    mismatches = []
    for kind, graph_side, algebra_side in (
        (Kind.OUT, graph_partition_out(g), partition_out(R)),
        (Kind.IN, graph_partition_in(g), partition_in(R)),
    ):
        graph_sets = sorted(tuple(int(g.vertices[v]) for v in cls) for cls in graph_side)
        algebra_sets = sorted(cls.members for cls in algebra_side)
        if graph_sets != algebra_sets:
            only_graph = [s for s in graph_sets if s not in algebra_sets]
            only_alg = [s for s in algebra_sets if s not in graph_sets]
            mismatches.append((kind.value, only_graph[:1], only_alg[:1]))
    return EquivalenceReport(not mismatches, mismatches)


def to_dot(g: IdempotentDigraph) -> str:
    lines = ["digraph idem {"]
    for v in range(len(g)):
        attrs = f' [label="{g.ring.format(int(g.vertices[v]))}"'
        attrs += ", shape=doublecircle]" if g.central[v] else "]"
        lines.append(f'  "v{v}"{attrs};')
    for i, j in g.edges():
        lines.append(f'  "v{i}" -> "v{j}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_json(g: IdempotentDigraph) -> str:
    R = g.ring
    doc = {
        "vertices": [
            {"id": v, "index": int(x), "coords": list(R.coords(int(x))), "central": bool(g.central[v])}
            for v, x in enumerate(g.vertices)
        ],
        "edges": [list(e) for e in g.edges()],
        "out_classes": graph_partition_out(g),
        "in_classes": graph_partition_in(g),
    }
    return json.dumps(doc, separators=(",", ":")) + "\n"
