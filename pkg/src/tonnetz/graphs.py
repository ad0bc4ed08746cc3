"""The Tonnetz and its dual chicken-wire torus, with deterministic exports.

The Tonnetz here is the abstract quotient graph on the 12 pitch classes:
an edge for every perfect fifth, major third, and minor third, and a
triangular face for every consonant triad.  Its dual graph — one vertex
per face, one edge per shared Tonnetz edge — is rebuilt from scratch and
compared against the chicken-wire graph built directly from the P/L/R
operations.  The edge-label correspondence (shared fifth means P, shared
minor third means L, shared major third means R) is validated against the
operations themselves, so it is a checked theorem rather than a table.

No geometric embedding is attempted; both graphs live on a torus but are
treated purely combinatorially.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Optional

from .pitchspace import PITCH_NAMES
from .transforms import LETTER_OPS
from .triads import TRIADS, ConsonantTriad, triad_with_pitch_classes

EDGE_FIFTH = "fifth"
EDGE_MAJOR_THIRD = "majorThird"
EDGE_MINOR_THIRD = "minorThird"

#: Which triad-preserving operation corresponds to each shared interval.
SHARED_EDGE_OPERATION = {
    EDGE_FIFTH: "P",
    EDGE_MINOR_THIRD: "L",
    EDGE_MAJOR_THIRD: "R",
}


class GraphStructureError(RuntimeError):
    """A structural mismatch found while verifying graph duality."""


@dataclass(frozen=True, order=True)
class Edge:
    """An undirected labeled edge; endpoints are stored low-to-high."""

    a: int
    b: int
    label: str

    def __post_init__(self) -> None:
        if self.a == self.b:
            raise ValueError(f"self-loop at vertex {self.a}")
        if self.a > self.b:
            a, b = self.b, self.a
            object.__setattr__(self, "a", a)
            object.__setattr__(self, "b", b)

    @property
    def pair(self) -> tuple[int, int]:
        return (self.a, self.b)


@dataclass(frozen=True)
class Face:
    """A triangular face, tagged with the triad it spells."""

    vertices: tuple[int, int, int]
    label: str

    @property
    def vertex_set(self) -> frozenset[int]:
        return frozenset(self.vertices)


@dataclass(frozen=True)
class LabeledGraph:
    """An undirected graph with labeled vertices and edges, maybe faces."""

    name: str
    vertex_labels: tuple[str, ...]
    edges: tuple[Edge, ...]
    faces: Optional[tuple[Face, ...]] = None

    def __post_init__(self) -> None:
        n = len(self.vertex_labels)
        pairs = set()
        for e in self.edges:
            if not (0 <= e.a < n and 0 <= e.b < n):
                raise ValueError(f"edge {e} references a missing vertex")
            if e.pair in pairs:
                raise ValueError(f"duplicate edge between {e.a} and {e.b}")
            pairs.add(e.pair)
        ordered = tuple(sorted(self.edges, key=lambda e: (e.a, e.b, e.label)))
        object.__setattr__(self, "edges", ordered)
        if self.faces is not None:
            edge_pairs = {e.pair for e in self.edges}
            for f in self.faces:
                for u, v in ((f.vertices[0], f.vertices[1]),
                             (f.vertices[1], f.vertices[2]),
                             (f.vertices[0], f.vertices[2])):
                    if (min(u, v), max(u, v)) not in edge_pairs:
                        raise ValueError(f"face {f} has a side that is not an edge")

    @property
    def vertex_count(self) -> int:
        return len(self.vertex_labels)

    def degree(self, vertex: int) -> int:
        return sum(1 for e in self.edges if vertex in e.pair)

    def edge_between(self, u: int, v: int) -> Optional[Edge]:
        key = (min(u, v), max(u, v))
        for e in self.edges:
            if e.pair == key:
                return e
        return None

    def faces_at(self, vertex: int) -> tuple[Face, ...]:
        if self.faces is None:
            return ()
        return tuple(f for f in self.faces if vertex in f.vertex_set)


def build_tonnetz() -> LabeledGraph:
    """The 12-vertex interval graph with its 24 triangular triad faces."""
    edges = []
    for x in range(12):
        edges.append(Edge(x, (x + 7) % 12, EDGE_FIFTH))
        edges.append(Edge(x, (x + 4) % 12, EDGE_MAJOR_THIRD))
        edges.append(Edge(x, (x + 3) % 12, EDGE_MINOR_THIRD))
    faces = [
        Face(tuple(int(t) for t in triad.tones), triad.name())
        for triad in TRIADS
    ]
    return LabeledGraph(
        name="tonnetz",
        vertex_labels=tuple(PITCH_NAMES),
        edges=tuple(edges),
        faces=tuple(faces),
    )


def build_chickenwire() -> LabeledGraph:
    """One vertex per triad; edges P, L, R directly from the operations."""
    edges = []
    seen = set()
    for triad in TRIADS:
        for letter, op in LETTER_OPS.items():
            other = op(triad)
            key = (min(triad.index, other.index), max(triad.index, other.index))
            if key in seen:
                continue
            seen.add(key)
            edges.append(Edge(key[0], key[1], letter))
    return LabeledGraph(
        name="chickenwire",
        vertex_labels=tuple(t.name() for t in TRIADS),
        edges=tuple(edges),
    )


def dual_of_tonnetz() -> LabeledGraph:
    """Rebuild the chicken-wire graph as the face-dual of the Tonnetz.

    Every pair of faces sharing an edge becomes an edge of the dual, and
    the dual label is derived from the shared edge's interval via
    SHARED_EDGE_OPERATION.  Both that labeling and the final graph are
    verified: each derived edge must agree with the operation applied to
    the face's triad, and the result must match build_chickenwire() edge
    for edge.  A GraphStructureError pinpoints the first discrepancy.
    """
    tonnetz = build_tonnetz()
    assert tonnetz.faces is not None
    # Identify each face with its triad through the unordered tone set.
    face_triads = {f: triad_with_pitch_classes(f.vertices) for f in tonnetz.faces}
    faces = sorted(tonnetz.faces, key=lambda f: face_triads[f].index)
    dual_edges = []
    for i, f1 in enumerate(faces):
        for f2 in faces[i + 1:]:
            shared = f1.vertex_set & f2.vertex_set
            if len(shared) != 2:
                continue
            u, v = sorted(shared)
            edge = tonnetz.edge_between(u, v)
            if edge is None:
                raise GraphStructureError(
                    f"faces {f1.label} and {f2.label} share tones {u},{v} "
                    "that are not a Tonnetz edge"
                )
            letter = SHARED_EDGE_OPERATION[edge.label]
            y, z = face_triads[f1], face_triads[f2]
            if LETTER_OPS[letter](y) != z:
                raise GraphStructureError(
                    f"shared {edge.label} edge between faces {f1.label} and "
                    f"{f2.label} does not realize the operation {letter}"
                )
            dual_edges.append(Edge(y.index, z.index, letter))
    dual = LabeledGraph(
        name="chickenwire",
        vertex_labels=tuple(face_triads[f].name() for f in faces),
        edges=tuple(dual_edges),
    )
    direct = build_chickenwire()
    if dual.vertex_labels != direct.vertex_labels:
        raise GraphStructureError("dual vertex labels disagree with the triad table")
    if dual.edges != direct.edges:
        extra = set(dual.edges) ^ set(direct.edges)
        first = min(extra)
        raise GraphStructureError(
            f"dual and direct chicken-wire graphs disagree at edge "
            f"{first.a}--{first.b} [{first.label}]"
        )
    return dual


def beethoven_path(graph: LabeledGraph) -> tuple[tuple[int, ...], tuple[str, ...]]:
    """Walk the alternating R, L cycle from C major along chicken-wire edges.

    Returns the 25 vertex indices (first and last both C major) and the 24
    edge labels.  Each step is checked against the supplied graph, so
    passing anything but the chicken-wire graph fails loudly.
    """
    current = TRIADS[0]
    vertices = [current.index]
    labels = []
    for step in range(24):
        letter = "R" if step % 2 == 0 else "L"
        nxt = LETTER_OPS[letter](current)
        edge = graph.edge_between(current.index, nxt.index)
        if edge is None or edge.label != letter:
            raise GraphStructureError(
                f"step {step + 1}: no {letter}-edge between "
                f"{current.name()} and {nxt.name()}"
            )
        vertices.append(nxt.index)
        labels.append(letter)
        current = nxt
    return tuple(vertices), tuple(labels)


def export_dot(graph: LabeledGraph) -> str:
    """Graphviz text with stable ordering: vertices by index, edges sorted."""
    lines = [f"graph {graph.name} {{"]
    for i, label in enumerate(graph.vertex_labels):
        lines.append(f'  {i} [label="{label}"];')
    for e in graph.edges:
        lines.append(f'  {e.a} -- {e.b} [label="{e.label}"];')
    if graph.faces is not None:
        for f in graph.faces:
            verts = " ".join(str(v) for v in f.vertices)
            lines.append(f"  // face {f.label}: {verts}")
    lines.append("}")
    return "\n".join(lines)


def export_json(graph: LabeledGraph) -> str:
    """Canonical JSON (sorted keys, two-space indent) for diff-friendly output."""
    payload = {
        "name": graph.name,
        "vertices": [
            {"id": i, "label": label} for i, label in enumerate(graph.vertex_labels)
        ],
        "edges": [{"a": e.a, "b": e.b, "label": e.label} for e in graph.edges],
        "faces": [
            {"vertices": list(f.vertices), "label": f.label}
            for f in (graph.faces or ())
        ],
    }
    return json.dumps(payload, sort_keys=True, indent=2)
