"""Finite acyclic quivers and their path algebras.

A quiver is a finite directed multigraph with vertices 0..n-1 and labelled
arrows.  Acyclicity makes the path algebra finite-dimensional (and left
hereditary, left perfect, right coherent), which is the standing hypothesis
for everything downstream.  Paths are enumerated once per algebra in a
canonical order so that all derived module constructions are reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple, Optional, Sequence, Tuple

from .errors import CyclicQuiverError
from .linalg import FieldSpec


class Arrow(NamedTuple):
    source: int
    target: int
    label: str


class Path(NamedTuple):
    """A directed path: start vertex, end vertex, arrow indices in traversal order."""

    start: int
    end: int
    arrows: Tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.arrows)


@dataclass(frozen=True)
class Quiver:
    """A finite directed multigraph.  Cycles are rejected at algebra build time."""

    vertex_count: int
    arrows: Tuple[Arrow, ...]

    def __post_init__(self):
        if self.vertex_count < 0:
            raise ValueError("negative vertex count")
        arrows = tuple(Arrow(*a) for a in self.arrows)
        object.__setattr__(self, "arrows", arrows)
        labels = [a.label for a in arrows]
        if len(set(labels)) != len(labels):
            raise ValueError("arrow labels must be unique")
        for a in arrows:
            if not (0 <= a.source < self.vertex_count and 0 <= a.target < self.vertex_count):
                raise ValueError(f"arrow {a.label} endpoints out of range")

    def arrows_from(self, v: int) -> list:
        return [i for i, a in enumerate(self.arrows) if a.source == v]

    def arrows_into(self, v: int) -> list:
        return [i for i, a in enumerate(self.arrows) if a.target == v]

    def topological_order(self) -> Tuple[int, ...]:
        """Vertices in a topological order; raises CyclicQuiverError on a cycle."""
        indeg = [0] * self.vertex_count
        for a in self.arrows:
            indeg[a.target] += 1
        ready = sorted(v for v in range(self.vertex_count) if indeg[v] == 0)
        order = []
        while ready:
            v = ready.pop(0)
            order.append(v)
            for i in self.arrows_from(v):
                t = self.arrows[i].target
                indeg[t] -= 1
                if indeg[t] == 0:
                    ready.append(t)
            ready.sort()
        if len(order) != self.vertex_count:
            raise CyclicQuiverError("quiver has a directed cycle")
        return tuple(order)

    def opposite(self) -> "Quiver":
        return Quiver(self.vertex_count,
                      tuple(Arrow(a.target, a.source, a.label) for a in self.arrows))


def _path_sort_key(q: Quiver, path: Path):
    labels = tuple(q.arrows[i].label for i in path.arrows)
    return (path.length, labels, path.start)


@dataclass(frozen=True, eq=False)
class Algebra:
    """The path algebra of an acyclic quiver over a prime field.

    paths holds every directed path, including the length-0 path at each
    vertex, sorted by (length, arrow labels, start vertex); the algebra
    dimension is len(paths).
    """

    quiver: Quiver
    field: FieldSpec
    paths: Tuple[Path, ...] = field(default=(), compare=False)
    topo_order: Tuple[int, ...] = field(default=(), compare=False)

    def __post_init__(self):
        topo = self.quiver.topological_order()
        all_paths = []
        for v in range(self.quiver.vertex_count):
            frontier = [Path(v, v, ())]
            while frontier:
                path = frontier.pop()
                all_paths.append(path)
                for i in self.quiver.arrows_from(path.end):
                    frontier.append(Path(v, self.quiver.arrows[i].target,
                                         path.arrows + (i,)))
        all_paths.sort(key=lambda pth: _path_sort_key(self.quiver, pth))
        object.__setattr__(self, "paths", tuple(all_paths))
        object.__setattr__(self, "topo_order", topo)

    @property
    def dim(self) -> int:
        return len(self.paths)

    @property
    def vertex_count(self) -> int:
        return self.quiver.vertex_count

    def paths_between(self, start: int, end: int) -> list:
        """Paths start -> end in the canonical order."""
        return [pth for pth in self.paths if pth.start == start and pth.end == end]

    def opposite(self) -> "Algebra":
        return Algebra(self.quiver.opposite(), self.field)

    def __eq__(self, other) -> bool:
        if self is other:
            return True
        if not isinstance(other, Algebra):
            return NotImplemented
        return self.quiver == other.quiver and self.field == other.field

    def __hash__(self) -> int:
        return hash((self.quiver, self.field))


def build_algebra(quiver: Quiver, fieldspec: FieldSpec) -> Algebra:
    """Validate acyclicity and enumerate the canonical path basis."""
    return Algebra(quiver, fieldspec)


# Named quivers used throughout the test corpus and the CLI.

def linear_quiver(n: int) -> Quiver:
    """A_n with arrows 0 -> 1 -> ... -> n-1, labels a0, a1, ..."""
    return Quiver(n, tuple(Arrow(i, i + 1, f"a{i}") for i in range(n - 1)))


def kronecker_quiver() -> Quiver:
    """Two vertices, double arrow 0 -> 1 (labels a, b)."""
    return Quiver(2, (Arrow(0, 1, "a"), Arrow(0, 1, "b")))


NAMED_QUIVERS = {
    "A2": lambda: linear_quiver(2),
    "A3": lambda: linear_quiver(3),
    "Kronecker": kronecker_quiver,
}


def named_quiver(name: str) -> Quiver:
    try:
        return NAMED_QUIVERS[name]()
    except KeyError:
        raise ValueError(f"unknown quiver name {name!r}; known: {sorted(NAMED_QUIVERS)}")
