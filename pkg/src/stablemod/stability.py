"""Stability, projective-summand extraction, and the stable part.

A module is stable when it has no nonzero projective direct summand; over
the acyclic path algebras used here this is equivalent to having no nonzero
homomorphism to the regular module, which is the test implemented.

The stable part R(M) is produced constructively: surjections onto an
indecomposable projective P(v) are detected by the dimension comparison
dim Hom(M, P(v)) > dim Hom(M, rad P(v)) (rad P(v) is the unique maximal
submodule of P(v), so any hom landing outside it is onto), each such
surjection is split off, and the process repeats until nothing splits.
The resulting complement is independent of the probing order; that
canonicity is enforced by the verification harness, not assumed here.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import List, Optional, Sequence, Tuple

from .linalg import Matrix, solve
from .quiver import Algebra
from .projectives import injective, projective, radical, regular_module
from .rep import (
    Morphism,
    Representation,
    direct_sum,
    dualize,
    dualize_morphism,
    find_iso,
    hom_basis,
    hom_dim,
    kernel,
    solve_in_hom_space,
    zero_representation,
)


def is_stable(rep: Representation) -> bool:
    """No nonzero hom to the regular module; equivalently (over these
    hereditary algebras) no nonzero projective direct summand."""
    return hom_dim(rep, regular_module(rep.algebra)) == 0


@dataclass(frozen=True)
class SummandSplit:
    """Witnesses for one split rep = complement + P(vertex)."""

    vertex: int
    complement: Representation
    summand: Representation
    include_complement: Morphism
    include_summand: Morphism
    project_complement: Morphism
    project_summand: Morphism


def split_projective_summand(rep: Representation,
                             vertex_order: Optional[Sequence[int]] = None
                             ) -> Optional[SummandSplit]:
    """Split off one indecomposable projective summand, or None if stable.

    Probes vertices in vertex_order (default: topological order).  At the
    first vertex v with dim Hom(M, P(v)) > dim Hom(M, rad P(v)) there is a
    basis hom that misses rad P(v); it is automatically surjective and
    splits because P(v) is projective.
    """
    alg = rep.algebra
    if vertex_order is None:
        vertex_order = alg.topo_order
    for v in vertex_order:
        proj = projective(alg, v)
        rad = radical(proj).rep
        hb = hom_basis(rep, proj)
        if hb.dim <= hom_dim(rep, rad):
            continue
        onto = next((f for f in hb.basis if f.is_surjective()), None)
        assert onto is not None, \
            "hom-dimension gap guarantees a surjective basis element"
        sections = hom_basis(proj, rep)
        coeffs = solve_in_hom_space([onto @ s for s in sections.basis],
                                     Morphism.identity(proj))
        assert coeffs is not None, "a surjection onto a projective splits"
        section = sections.element(coeffs)
        idem = section @ onto  # idempotent with image the split-off summand
        ker = kernel(onto)
        project_maps = []
        for w in range(alg.vertex_count):
            residual = (Morphism.identity(rep) - idem).vertex_maps[w]
            x = solve(ker.inclusion.vertex_maps[w], residual)
            assert x is not None
            project_maps.append(x)
        project_complement = Morphism(rep, ker.rep, project_maps)
        return SummandSplit(
            vertex=v,
            complement=ker.rep,
            summand=proj,
            include_complement=ker.inclusion,
            include_summand=section,
            project_complement=project_complement,
            project_summand=onto,
        )
    return None


@dataclass(frozen=True)
class StablePartDecomposition:
    """An internal decomposition module = stable_part + projective_part.

    include_stable is the canonical inclusion of the stable part (the
    counit component of the coreflection onto stable modules).
    """

    module: Representation
    stable_part: Representation
    projective_part: Representation
    include_stable: Morphism
    include_projective: Morphism
    project_stable: Morphism
    project_projective: Morphism
    extracted_vertices: Tuple[int, ...]

    def verify(self) -> None:
        """Exact split identities; raises AssertionError on violation."""
        id_r = Morphism.identity(self.stable_part)
        id_p = Morphism.identity(self.projective_part)
        id_m = Morphism.identity(self.module)
        assert self.project_stable @ self.include_stable == id_r
        assert self.project_projective @ self.include_projective == id_p
        assert (self.project_stable @ self.include_projective).is_zero()
        assert (self.project_projective @ self.include_stable).is_zero()
        total = (self.include_stable @ self.project_stable
                 + self.include_projective @ self.project_projective)
        assert total == id_m


@lru_cache(maxsize=4096)
def _stable_part_cached(rep: Representation,
                        vertex_order: Optional[Tuple[int, ...]]
                        ) -> StablePartDecomposition:
    alg = rep.algebra
    include_acc = Morphism.identity(rep)
    project_acc = Morphism.identity(rep)
    current = rep
    extracted = []   # (vertex, include P(v) -> rep, project rep -> P(v))
    while True:
        split = split_projective_summand(current, vertex_order)
        if split is None:
            break
        extracted.append((split.vertex,
                          include_acc @ split.include_summand,
                          split.project_summand @ project_acc))
        include_acc = include_acc @ split.include_complement
        project_acc = split.project_complement @ project_acc
        current = split.complement
    parts = [projective(alg, v) for v, _, _ in extracted]
    ds = direct_sum(parts, algebra=alg)
    if extracted:
        include_projective = extracted[0][1] @ ds.projections[0]
        project_projective = ds.injections[0] @ extracted[0][2]
        for k in range(1, len(extracted)):
            include_projective = include_projective + extracted[k][1] @ ds.projections[k]
            project_projective = project_projective + ds.injections[k] @ extracted[k][2]
    else:
        include_projective = Morphism.zero(ds.rep, rep)
        project_projective = Morphism.zero(rep, ds.rep)
    dec = StablePartDecomposition(
        module=rep,
        stable_part=current,
        projective_part=ds.rep,
        include_stable=include_acc,
        include_projective=include_projective,
        project_stable=project_acc,
        project_projective=project_projective,
        extracted_vertices=tuple(v for v, _, _ in extracted),
    )
    dec.verify()
    return dec


def stable_part(rep: Representation,
                vertex_order: Optional[Sequence[int]] = None
                ) -> StablePartDecomposition:
    """The maximal-projective-summand split M = R(M) + P with witnesses.

    The subspaces of R(M) inside M do not depend on vertex_order (checked
    by the harness as the canonical smallest-complement property).
    """
    order = None if vertex_order is None else tuple(vertex_order)
    return _stable_part_cached(rep, order)


@dataclass(frozen=True)
class UniversalProjectiveArrow:
    """A surjection onto a projective through which every hom to a
    projective factors (the reflection of the module into projectives)."""

    module: Representation
    projective_target: Representation
    arrow: Morphism


def universal_to_projectives(rep: Representation) -> UniversalProjectiveArrow:
    dec = stable_part(rep)
    return UniversalProjectiveArrow(rep, dec.projective_part,
                                    dec.project_projective)


# ----------------------------------------------------------------- duality


def is_costable(rep: Representation) -> bool:
    """No nonzero injective direct summand, tested on the dual."""
    return is_stable(dualize(rep))


@dataclass(frozen=True)
class CostableReflection:
    """module = costable_part + injective_part, with the reflection unit."""

    module: Representation
    costable_part: Representation
    injective_part: Representation
    unit: Morphism                # module ->> costable_part
    section: Morphism             # costable_part -> module, unit . section = id
    include_injective: Morphism   # injective_part -> module (the unit's kernel)
    project_injective: Morphism


def costable_reflection(rep: Representation) -> CostableReflection:
    """Split off the maximal injective summand; the unit is the projection
    onto the costable complement."""
    dec = stable_part(dualize(rep))
    return CostableReflection(
        module=rep,
        costable_part=dualize(dec.stable_part),
        injective_part=dualize(dec.projective_part),
        unit=dualize_morphism(dec.include_stable),
        section=dualize_morphism(dec.project_stable),
        include_injective=dualize_morphism(dec.project_projective),
        project_injective=dualize_morphism(dec.include_projective),
    )


@dataclass(frozen=True)
class HellerWitness:
    """An isomorphism stable_part + pad -> module + copad restricting to the
    canonical inclusion of the stable part: project . iso . embed equals it
    exactly, with pad and copad projective."""

    module: Representation
    pad: Representation
    copad: Representation
    iso: Morphism
    embed: Morphism    # stable part -> domain of iso
    project: Morphism  # codomain of iso ->> module

    def verify(self) -> None:
        assert self.iso.is_invertible()
        dec = stable_part(self.module)
        assert self.project @ self.iso @ self.embed == dec.include_stable


def heller_witness(rep: Representation) -> HellerWitness:
    """The decomposition isomorphism R(M) + P -> M + 0 as an explicit witness."""
    alg = rep.algebra
    dec = stable_part(rep)
    dom = direct_sum([dec.stable_part, dec.projective_part])
    copad = zero_representation(alg)
    cod = direct_sum([rep, copad])
    iso = cod.injections[0] @ (dec.include_stable @ dom.projections[0]
                               + dec.include_projective @ dom.projections[1])
    witness = HellerWitness(
        module=rep,
        pad=dec.projective_part,
        copad=copad,
        iso=iso,
        embed=dom.injections[0],
        project=cod.projections[0],
    )
    witness.verify()
    return witness


# ------------------------------------------------------- per-algebra report


@dataclass(frozen=True)
class AlgebraConditionReport:
    """Per-algebra evaluation of three ring conditions and their implications:

    injectives_stable   -- every indecomposable injective is stable;
    no_projective_injective -- no indecomposable projective is isomorphic
                               to an indecomposable injective;
    projectives_costable -- every indecomposable projective is costable.

    no_projective_injective implies each of the other two in general; over
    the hereditary algebras built here all three agree.
    """

    algebra: Algebra
    injective_stable_by_vertex: Tuple[bool, ...]
    projective_costable_by_vertex: Tuple[bool, ...]
    projective_injective_pairs: Tuple[Tuple[int, int], ...]
    uncertified_pairs: Tuple[Tuple[int, int], ...]

    @property
    def injectives_stable(self) -> bool:
        return all(self.injective_stable_by_vertex)

    @property
    def no_projective_injective(self) -> bool:
        return not self.projective_injective_pairs

    @property
    def projectives_costable(self) -> bool:
        return all(self.projective_costable_by_vertex)

    @property
    def implications_ok(self) -> bool:
        if self.no_projective_injective:
            return self.injectives_stable and self.projectives_costable
        return True

    def to_dict(self) -> dict:
        return {
            "injectives_stable": self.injectives_stable,
            "injective_stable_by_vertex": list(self.injective_stable_by_vertex),
            "no_projective_injective": self.no_projective_injective,
            "projective_injective_pairs": [list(p) for p in self.projective_injective_pairs],
            "projectives_costable": self.projectives_costable,
            "projective_costable_by_vertex": list(self.projective_costable_by_vertex),
            "implications_ok": self.implications_ok,
        }


def condition_report(algebra: Algebra) -> AlgebraConditionReport:
    """Evaluate the three decidable ring conditions from the finite lists
    of indecomposable projectives and injectives."""
    n = algebra.vertex_count
    inj_stable = tuple(is_stable(injective(algebra, v)) for v in range(n))
    proj_costable = tuple(is_costable(projective(algebra, v)) for v in range(n))
    pairs = []
    uncertified = []
    for v in range(n):
        for w in range(n):
            res = find_iso(projective(algebra, v), injective(algebra, w))
            if res.found:
                pairs.append((v, w))
            elif not res.certified:
                uncertified.append((v, w))
    return AlgebraConditionReport(
        algebra=algebra,
        injective_stable_by_vertex=inj_stable,
        projective_costable_by_vertex=proj_costable,
        projective_injective_pairs=tuple(pairs),
        uncertified_pairs=tuple(uncertified),
    )
