"""Canonical modules over an acyclic path algebra.

Indecomposable projectives and injectives are built from the canonical
path enumeration, so their matrices are reproducible across runs.  The
radical is computed from arrow images (for acyclic path algebras the arrow
ideal is the Jacobson radical), and projective covers lift a canonical
basis of the top.
"""

from __future__ import annotations

from functools import lru_cache
from typing import List, NamedTuple

import numpy as np

from .linalg import Matrix, hstack, image_basis, quotient_data, rank, solve
from .quiver import Algebra
from .rep import (
    Morphism,
    Representation,
    direct_sum,
    path_action,
    zero_representation,
)


@lru_cache(maxsize=1024)
def projective(algebra: Algebra, v: int) -> Representation:
    """The indecomposable projective at v: basis at w = paths v -> w,
    arrows acting by path composition."""
    if not (0 <= v < algebra.vertex_count):
        raise ValueError(f"vertex {v} out of range")
    field = algebra.field
    paths_at = [algebra.paths_between(v, w) for w in range(algebra.vertex_count)]
    index_at = [{pth.arrows: i for i, pth in enumerate(paths)} for paths in paths_at]
    dims = [len(paths) for paths in paths_at]
    maps = []
    for i, a in enumerate(algebra.quiver.arrows):
        m = np.zeros((dims[a.target], dims[a.source]), dtype=np.int64)
        for c, pth in enumerate(paths_at[a.source]):
            r = index_at[a.target][pth.arrows + (i,)]
            m[r, c] = 1
        maps.append(Matrix._wrap(field, m))
    return Representation(algebra, dims, maps)


@lru_cache(maxsize=1024)
def injective(algebra: Algebra, v: int) -> Representation:
    """The indecomposable injective at v: basis at w = paths w -> v,
    arrows acting by the transpose of precomposition."""
    if not (0 <= v < algebra.vertex_count):
        raise ValueError(f"vertex {v} out of range")
    field = algebra.field
    paths_at = [algebra.paths_between(w, v) for w in range(algebra.vertex_count)]
    index_at = [{pth.arrows: i for i, pth in enumerate(paths)} for paths in paths_at]
    dims = [len(paths) for paths in paths_at]
    maps = []
    for i, a in enumerate(algebra.quiver.arrows):
        # precompose by a: paths(target -> v) -> paths(source -> v)
        pre = np.zeros((dims[a.source], dims[a.target]), dtype=np.int64)
        for c, pth in enumerate(paths_at[a.target]):
            r = index_at[a.source][(i,) + pth.arrows]
            pre[r, c] = 1
        maps.append(Matrix._wrap(field, pre.T.copy()))
    return Representation(algebra, dims, maps)


@lru_cache(maxsize=1024)
def simple(algebra: Algebra, v: int) -> Representation:
    """The simple at v: one-dimensional at v, zero elsewhere."""
    if not (0 <= v < algebra.vertex_count):
        raise ValueError(f"vertex {v} out of range")
    dims = [1 if w == v else 0 for w in range(algebra.vertex_count)]
    maps = [Matrix.zeros(algebra.field, dims[a.target], dims[a.source])
            for a in algebra.quiver.arrows]
    return Representation(algebra, dims, maps)


@lru_cache(maxsize=256)
def regular_module(algebra: Algebra) -> Representation:
    """The algebra as a module over itself: the direct sum of all P(v)."""
    parts = [projective(algebra, v) for v in range(algebra.vertex_count)]
    return direct_sum(parts, algebra=algebra).rep


class RadicalResult(NamedTuple):
    rep: Representation
    inclusion: Morphism


@lru_cache(maxsize=4096)
def radical(rep: Representation) -> RadicalResult:
    """The subrepresentation spanned at each vertex by incoming arrow images."""
    alg = rep.algebra
    field = alg.field
    bases: List[Matrix] = []
    for v in range(alg.vertex_count):
        incoming = [rep.arrow_maps[i] for i in alg.quiver.arrows_into(v)]
        if incoming:
            bases.append(image_basis(hstack(incoming)))
        else:
            bases.append(Matrix.zeros(field, rep.dims[v], 0))
    dims = [b.cols for b in bases]
    maps = []
    for i, a in enumerate(alg.quiver.arrows):
        pushed = rep.arrow_maps[i] @ bases[a.source]
        induced = solve(bases[a.target], pushed)
        assert induced is not None, "radical is arrow-stable by construction"
        maps.append(induced)
    rad = Representation(alg, dims, maps)
    return RadicalResult(rad, Morphism(rad, rep, bases))


class ProjectiveCoverResult(NamedTuple):
    rep: Representation
    projection: Morphism


def _generator_morphism(target: Representation, v: int, column: Matrix) -> Morphism:
    """The morphism P(v) -> target sending the trivial path at v to column."""
    alg = target.algebra
    proj = projective(alg, v)
    maps = []
    for w in range(alg.vertex_count):
        cols = [path_action(target, pth) @ column
                for pth in alg.paths_between(v, w)]
        if cols:
            maps.append(hstack(cols))
        else:
            maps.append(Matrix.zeros(alg.field, target.dims[w], 0))
    return Morphism(proj, target, maps)


@lru_cache(maxsize=4096)
def projective_cover(rep: Representation) -> ProjectiveCoverResult:
    """A projective cover built by lifting a canonical basis of the top.

    Generators are chosen greedily along the vertex order: at each vertex
    the standard basis vectors completing the radical are lifted.  The
    projection is surjective with kernel inside the radical of the cover.
    """
    alg = rep.algebra
    rad = radical(rep)
    parts = []
    part_morphisms = []
    for v in range(alg.vertex_count):
        _, lift = quotient_data(rep.dims[v], rad.inclusion.vertex_maps[v])
        for j in range(lift.cols):
            parts.append(projective(alg, v))
            part_morphisms.append(_generator_morphism(rep, v, lift.col(j)))
    ds = direct_sum(parts, algebra=alg)
    if parts:
        pi = part_morphisms[0] @ ds.projections[0]
        for k in range(1, len(parts)):
            pi = pi + (part_morphisms[k] @ ds.projections[k])
    else:
        pi = Morphism.zero(ds.rep, rep)
    for v in range(alg.vertex_count):
        assert rank(pi.vertex_maps[v]) == rep.dims[v], \
            "projective cover projection must be surjective"
    return ProjectiveCoverResult(ds.rep, pi)
