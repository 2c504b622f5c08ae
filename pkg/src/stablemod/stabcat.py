"""The stable category: hom-sets modulo maps factoring through projectives.

Morphisms f, g are identified when f - g factors through a projective
module.  The subspace of such maps from M to N is computed as the image of
Hom(M, P_N) -> Hom(M, N) given by postcomposition with a projective cover
P_N ->> N: a map through any projective lifts along the cover because the
cover is onto and the intermediate object is projective.

Stable kernels restrict to the stable part of the source; stable cokernels
quotient the target by the image of the stable part of the source (a total
construction), with an independent pushout construction available under its
preconditions for cross-validation.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple, Optional, Sequence, Tuple

import numpy as np

from .errors import (
    EndpointMismatchError,
    InternalInconsistencyError,
    PreconditionError,
)
from .linalg import Matrix, hstack, image_basis, nullspace_basis, solve
from .quiver import Algebra
from .projectives import projective, projective_cover
from .rep import (
    HomBasis,
    Morphism,
    Representation,
    _check_same_algebra,
    cokernel,
    find_iso,
    flatten_morphism,
    hom_basis,
    hom_dim,
    kernel,
    pushout,
    random_hom,
    solve_in_hom_space,
    unflatten_morphism,
)
from .stability import is_stable, stable_part, universal_to_projectives


@dataclass(frozen=True)
class PHomSpace:
    """The subspace of Hom(source, target) of maps factoring through a
    projective, with stored lifts through the chosen cover as witnesses."""

    source: Representation
    target: Representation
    basis: Tuple[Morphism, ...]
    witnesses: Tuple[Morphism, ...]
    cover_rep: Representation
    cover_projection: Morphism
    matrix: Matrix  # flattened basis columns, echelonized

    @property
    def dim(self) -> int:
        return len(self.basis)

    def contains(self, f: Morphism) -> bool:
        if f.source != self.source or f.target != self.target:
            raise EndpointMismatchError("membership test got foreign endpoints")
        return solve(self.matrix, flatten_morphism(f)) is not None


@lru_cache(maxsize=16384)
def phom_basis(m: Representation, n: Representation) -> PHomSpace:
    """Maps m -> n factoring through a projective, as the image of
    postcomposition with the projective cover of n."""
    _check_same_algebra(m, n)
    cover = projective_cover(n)
    lifts = hom_basis(m, cover.rep)
    composites = [cover.projection @ g for g in lifts.basis]
    total = flatten_morphism(Morphism.zero(m, n)).rows
    if composites:
        comp_matrix = hstack([flatten_morphism(c) for c in composites])
        span = image_basis(comp_matrix)
        basis = tuple(unflatten_morphism(m, n, span.col(j)) for j in range(span.cols))
        coords = solve(comp_matrix, span)
        assert coords is not None
        witnesses = tuple(
            lifts.element([coords.entry(i, j) for i in range(coords.rows)])
            for j in range(span.cols))
    else:
        span = Matrix.zeros(m.algebra.field, total, 0)
        basis = ()
        witnesses = ()
    return PHomSpace(m, n, basis, witnesses, cover.rep, cover.projection, span)


def stable_eq(f: Morphism, g: Morphism) -> bool:
    """True iff f - g factors through a projective."""
    if f.source != g.source or f.target != g.target:
        raise EndpointMismatchError("stable comparison needs equal endpoints")
    return phom_basis(f.source, f.target).contains(f - g)


def stable_hom_dim(m: Representation, n: Representation) -> int:
    """dim Hom(m, n) minus the dimension of the projectively-trivial subspace."""
    return hom_dim(m, n) - phom_basis(m, n).dim


def stable_is_zero(rep: Representation) -> bool:
    """True iff rep is a zero object of the stable category (i.e. projective).

    Computed along two independent routes that must agree: the identity
    factors through a projective, and the stable part vanishes.
    """
    by_identity = phom_basis(rep, rep).contains(Morphism.identity(rep))
    by_stable_part = stable_part(rep).stable_part.total_dim == 0
    if by_identity != by_stable_part:
        raise InternalInconsistencyError(
            "identity-factors and stable-part routes disagree on zero test")
    return by_identity


@dataclass(frozen=True, eq=False)
class StableMorphism:
    """A morphism of the stable category: a representative modulo maps
    factoring through projectives."""

    representative: Morphism
    phom: PHomSpace

    __hash__ = None

    @property
    def source(self) -> Representation:
        return self.representative.source

    @property
    def target(self) -> Representation:
        return self.representative.target

    def is_zero(self) -> bool:
        return self.phom.contains(self.representative)

    def __eq__(self, other) -> bool:
        if not isinstance(other, StableMorphism):
            return NotImplemented
        if self.source != other.source or self.target != other.target:
            return False
        return self.phom.contains(self.representative - other.representative)

    def __matmul__(self, other: "StableMorphism") -> "StableMorphism":
        return stable_morphism(self.representative @ other.representative)

    def __repr__(self) -> str:
        return f"StableMorphism({self.source.dims} -> {self.target.dims})"


def stable_morphism(f: Morphism) -> StableMorphism:
    return StableMorphism(f, phom_basis(f.source, f.target))


class StableIsoResult(NamedTuple):
    morphism: Optional[StableMorphism]
    certified: bool  # when morphism is None: True iff non-isomorphism is proven

    @property
    def found(self) -> bool:
        return self.morphism is not None


def stable_iso(m: Representation, n: Representation, seed: int = 0) -> StableIsoResult:
    """Search for a stable-category isomorphism m -> n.

    m and n are stably isomorphic iff their stable parts are isomorphic as
    modules (stable-equal maps with stable domain are equal, so a stable
    iso between stable modules lifts to a module iso); the found module iso
    is transported along the canonical inclusions and projections.
    """
    _check_same_algebra(m, n)
    dm = stable_part(m)
    dn = stable_part(n)
    res = find_iso(dm.stable_part, dn.stable_part, seed)
    if res.morphism is None:
        return StableIsoResult(None, res.certified)
    rep = dn.include_stable @ res.morphism @ dm.project_stable
    return StableIsoResult(stable_morphism(rep), True)


def stable_inverse(sm: StableMorphism) -> Optional[StableMorphism]:
    """A two-sided stable inverse of sm, or None if sm is not a stable iso.

    Solves for g with g . f stable-equal to the source identity and
    f . g stable-equal to the target identity, as one linear system with
    projectively-trivial padding on both sides.
    """
    f = sm.representative
    m, n = f.source, f.target
    field = m.algebra.field
    candidates = hom_basis(n, m)
    pm = phom_basis(m, m)
    pn = phom_basis(n, n)
    id_m = flatten_morphism(Morphism.identity(m))._a.ravel()
    id_n = flatten_morphism(Morphism.identity(n))._a.ravel()
    rows_top, rows_bot = len(id_m), len(id_n)
    width = candidates.dim + pm.dim + pn.dim
    system = np.zeros((rows_top + rows_bot, width), dtype=np.int64)
    for j, g in enumerate(candidates.basis):
        system[:rows_top, j] = flatten_morphism(g @ f)._a.ravel()
        system[rows_top:, j] = flatten_morphism(f @ g)._a.ravel()
    system[:rows_top, candidates.dim:candidates.dim + pm.dim] = pm.matrix._a
    system[rows_top:, candidates.dim + pm.dim:] = pn.matrix._a
    rhs = np.concatenate([id_m, id_n]).reshape(-1, 1)
    x = solve(Matrix._wrap(field, system), Matrix._wrap(field, rhs))
    if x is None:
        return None
    coeffs = [x.entry(i, 0) for i in range(candidates.dim)]
    return stable_morphism(candidates.element(coeffs))


# ----------------------------------------------------- kernels and cokernels


class StableKernelResult(NamedTuple):
    rep: Representation
    inclusion: StableMorphism


def stable_kernel(f: Morphism) -> StableKernelResult:
    """Restrict f to the stable part of its source, take the module kernel,
    and keep that kernel's stable part."""
    dec = stable_part(f.source)
    restricted = f @ dec.include_stable
    k0 = kernel(restricted)
    dk = stable_part(k0.rep)
    incl = dec.include_stable @ k0.inclusion @ dk.include_stable
    return StableKernelResult(dk.stable_part, stable_morphism(incl))


class StableCokernelResult(NamedTuple):
    rep: Representation
    projection: StableMorphism


def stable_cokernel(f: Morphism) -> StableCokernelResult:
    """Quotient the target by the image of the stable part of the source.

    Total (no preconditions); the canonical projection represents the
    cokernel of the class of f in the stable category.
    """
    dec = stable_part(f.source)
    c = cokernel(f @ dec.include_stable)
    return StableCokernelResult(c.rep, stable_morphism(c.projection))


def stable_cokernel_pushout(f: Morphism) -> StableCokernelResult:
    """Independent cokernel construction: push the universal arrow to
    projectives out along f.  Requires f injective with stable target."""
    if not f.is_injective():
        raise PreconditionError("pushout cokernel construction needs an injective map")
    if not is_stable(f.target):
        raise PreconditionError("pushout cokernel construction needs a stable target")
    ua = universal_to_projectives(f.source)
    po = pushout(f, ua.arrow)
    return StableCokernelResult(po.rep, stable_morphism(po.from_first))


# -------------------------------------------------------------- epi and mono


def epi_by_pushout_sections(f: Morphism) -> bool:
    """Epi criterion for a module epi f: for every hom g of the source into
    a projective, the pushout square of f along g admits a map s out of
    f's target with (pushout of g) . s = (pushout of f).

    The condition is not linear in g (the pushout varies with g), so a hom
    basis does not suffice; but every g factors through the universal arrow
    to projectives, and a section for the universal arrow transports to a
    section for any g.  One pushout test therefore decides all of them.
    """
    ua = universal_to_projectives(f.source)
    po = pushout(f, ua.arrow)
    sections = hom_basis(f.target, ua.projective_target)
    cols = [po.from_second @ s for s in sections.basis]
    return solve_in_hom_space(cols, po.from_first) is not None


def is_stable_epi(f: Morphism) -> bool:
    """True iff the class of f is an epimorphism of the stable category.

    Primary route: the stable cokernel object is a stable zero.  For module
    epis the pushout-section criterion is evaluated as well; disagreement
    would be a bug and raises.
    """
    primary = stable_is_zero(stable_cokernel(f).rep)
    if f.is_surjective():
        secondary = epi_by_pushout_sections(f)
        if secondary != primary:
            raise InternalInconsistencyError(
                "cokernel and pushout-section epi criteria disagree")
    return primary


def is_stable_mono(f: Morphism) -> bool:
    """True iff the stable kernel object is a stable zero."""
    return stable_is_zero(stable_kernel(f).rep)


# ------------------------------------------------------- mediator utilities


def coefficient_solutions(condition_cols: Sequence[Morphism],
                          modulo: Optional[Matrix] = None) -> Matrix:
    """Basis of {x : sum x_i condition_cols_i lies in span(modulo)}.

    condition_cols are morphisms sharing endpoints; the result columns are
    coefficient vectors (length len(condition_cols)).
    """
    if not condition_cols:
        raise ValueError("need at least the endpoints to pose the problem")
    field = condition_cols[0].source.algebra.field
    h = len(condition_cols)
    a = hstack([flatten_morphism(c) for c in condition_cols])
    if modulo is not None and modulo.cols:
        full = hstack([a, modulo])
    else:
        full = a
    null = nullspace_basis(full)
    return image_basis(null.submatrix(slice(0, h), slice(None)))


def stable_factor_through(sigma: Morphism, pi: Morphism) -> Optional[Morphism]:
    """phi with phi . pi stable-equal to sigma, where pi and sigma share a
    source; returns a representative or None."""
    if pi.source != sigma.source:
        raise EndpointMismatchError("factorization legs must share a source")
    through = hom_basis(pi.target, sigma.target)
    cols = [b @ pi for b in through.basis]
    ph = phom_basis(pi.source, sigma.target)
    coeffs = solve_in_hom_space(cols, sigma, modulo=ph.matrix)
    if coeffs is None:
        return None
    return through.element(coeffs)


def stable_factorization_unique(pi: Morphism, target: Representation) -> bool:
    """True iff homs out of pi's target into target are determined modulo
    projectives by their composite with pi (the homogeneous solutions are
    all projectively trivial)."""
    through = hom_basis(pi.target, target)
    if through.dim == 0:
        return True
    cols = [b @ pi for b in through.basis]
    ph_source = phom_basis(pi.source, target)
    homogeneous = coefficient_solutions(cols, ph_source.matrix)
    ph_target = phom_basis(pi.target, target)
    for j in range(homogeneous.cols):
        phi = through.element([homogeneous.entry(i, j)
                               for i in range(homogeneous.rows)])
        if not ph_target.contains(phi):
            return False
    return True


# --------------------------------------------- negative control for Q


@dataclass(frozen=True)
class QCokernelWitness:
    """A morphism whose module-level cokernel and stable cokernel are
    certifiably not stably isomorphic."""

    morphism: Morphism
    module_cokernel: Representation
    stable_cokernel_rep: Representation


def q_cokernel_preservation_witness(algebra: Algebra, seed: int = 0,
                                    samples: int = 20,
                                    max_dim: int = 3) -> Optional[QCokernelWitness]:
    """Search for a witness that passing to the stable category does not
    preserve cokernels.

    Deterministic phase: nonzero homs between indecomposable projectives
    (their stable class is zero, so their stable cokernel is a stable iso,
    while the module cokernel need not be projective).  Random phase:
    seeded morphisms between random representations.  Returns the first
    certified witness, or None (e.g. on semisimple algebras).
    """
    def examine(f: Morphism) -> Optional[QCokernelWitness]:
        c_mod = cokernel(f).rep
        c_st = stable_cokernel(f).rep
        res = stable_iso(c_mod, c_st, seed)
        if res.morphism is None and res.certified:
            return QCokernelWitness(f, c_mod, c_st)
        return None

    n = algebra.vertex_count
    for src_v in range(n):
        for tgt_v in range(n):
            for f in hom_basis(projective(algebra, src_v),
                               projective(algebra, tgt_v)).basis:
                if f.is_zero():
                    continue
                witness = examine(f)
                if witness is not None:
                    return witness
    rng = np.random.Generator(np.random.PCG64(seed))
    for _ in range(samples):
        dims_m = [int(rng.integers(0, max_dim + 1)) for _ in range(n)]
        dims_n = [int(rng.integers(0, max_dim + 1)) for _ in range(n)]
        p = algebra.field.p
        m = Representation(algebra, dims_m,
                           [Matrix(algebra.field, dims_m[a.target], dims_m[a.source],
                                   rng.integers(0, p, size=dims_m[a.target] * dims_m[a.source]))
                            for a in algebra.quiver.arrows])
        nrep = Representation(algebra, dims_n,
                              [Matrix(algebra.field, dims_n[a.target], dims_n[a.source],
                                      rng.integers(0, p, size=dims_n[a.target] * dims_n[a.source]))
                               for a in algebra.quiver.arrows])
        witness = examine(random_hom(m, nrep, rng))
        if witness is not None:
            return witness
    return None
