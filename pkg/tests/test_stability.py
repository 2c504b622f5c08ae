import numpy as np
import pytest

from stablemod.linalg import FieldSpec, Matrix, subspace_equal
from stablemod.quiver import Quiver, build_algebra, kronecker_quiver, linear_quiver
from stablemod.projectives import injective, projective, regular_module, simple
from stablemod.rep import (
    Morphism,
    Representation,
    direct_sum,
    find_iso,
    hom_basis,
    hom_dim,
    random_hom,
    zero_representation,
)
from stablemod.stability import (
    condition_report,
    costable_reflection,
    heller_witness,
    is_costable,
    is_stable,
    split_projective_summand,
    stable_part,
    universal_to_projectives,
)

F2 = FieldSpec(2)
F3 = FieldSpec(3)
A2 = build_algebra(linear_quiver(2), F2)
A3 = build_algebra(linear_quiver(3), F2)
KR = build_algebra(kronecker_quiver(), F2)

S0 = simple(A2, 0)
P0 = projective(A2, 0)
P1 = projective(A2, 1)


def random_rep(alg, rng, max_dim=3):
    dims = [int(rng.integers(0, max_dim + 1)) for _ in range(alg.vertex_count)]
    maps = [Matrix(alg.field, dims[a.target], dims[a.source],
                   rng.integers(0, alg.field.p, size=dims[a.target] * dims[a.source]))
            for a in alg.quiver.arrows]
    return Representation(alg, dims, maps)


# ---------------------------------------------------------------- is_stable


def test_simple_0_is_stable():
    assert is_stable(S0)


def test_projectives_are_not_stable():
    for alg in (A2, A3, KR):
        for v in range(alg.vertex_count):
            assert not is_stable(projective(alg, v))


def test_kronecker_regular_rep_is_stable():
    r0 = Representation(KR, (1, 1), [Matrix(F2, 1, 1, [1]), Matrix(F2, 1, 1, [0])])
    assert is_stable(r0)


def test_zero_is_stable():
    assert is_stable(zero_representation(A2))


# --------------------------------------------------------------- splitting


def test_split_projective_itself():
    split = split_projective_summand(P0)
    assert split is not None
    assert split.vertex == 0
    assert split.complement.total_dim == 0


def test_split_absent_on_stable():
    assert split_projective_summand(S0) is None


def test_split_s0_plus_p0():
    m = direct_sum([S0, P0]).rep
    split = split_projective_summand(m)
    assert split is not None
    assert split.vertex == 0
    assert split.complement.dims == (1, 0)
    # split identities
    assert split.project_summand @ split.include_summand == Morphism.identity(split.summand)
    assert split.project_complement @ split.include_complement == Morphism.identity(split.complement)
    assert (split.project_summand @ split.include_complement).is_zero()
    assert (split.project_complement @ split.include_summand).is_zero()


def test_split_matches_stability_randomized():
    rng = np.random.Generator(np.random.PCG64(3))
    for alg in (A2, A3, KR):
        for _ in range(20):
            m = random_rep(alg, rng)
            assert (split_projective_summand(m) is None) == is_stable(m)


# -------------------------------------------------------------- stable part


def test_stable_part_of_stable_module():
    dec = stable_part(S0)
    assert dec.stable_part == S0
    assert dec.projective_part.total_dim == 0
    assert dec.include_stable == Morphism.identity(S0)


def test_stable_part_of_projective():
    dec = stable_part(P0)
    assert dec.stable_part.total_dim == 0
    assert find_iso(dec.projective_part, P0).found


def test_stable_part_of_mixed_sum():
    m = direct_sum([S0, P0]).rep
    dec = stable_part(m)
    dec.verify()
    assert dec.stable_part.dims == (1, 0)
    assert is_stable(dec.stable_part)
    assert dec.extracted_vertices == (0,)
    # the stable subspace is the S0 coordinate at vertex 0
    assert dec.include_stable.vertex_maps[0].to_lists() == [[1], [0]]


def test_stable_part_order_independent_subspaces():
    rng = np.random.Generator(np.random.PCG64(9))
    for alg in (A2, A3, KR):
        for _ in range(10):
            m = random_rep(alg, rng)
            fwd = stable_part(m)
            rev = stable_part(m, vertex_order=tuple(reversed(alg.topo_order)))
            for v in range(alg.vertex_count):
                assert subspace_equal(fwd.include_stable.vertex_maps[v],
                                      rev.include_stable.vertex_maps[v])
            assert find_iso(fwd.projective_part, rev.projective_part).found \
                or fwd.projective_part.total_dim == rev.projective_part.total_dim == 0


def test_projective_part_is_sum_of_indecomposable_projectives():
    rng = np.random.Generator(np.random.PCG64(10))
    m = random_rep(A3, rng)
    dec = stable_part(m)
    rebuilt = direct_sum([projective(A3, v) for v in dec.extracted_vertices],
                         algebra=A3).rep
    assert dec.projective_part == rebuilt


# -------------------------------------------------- universal arrow


def test_universal_arrow_on_stable_module():
    ua = universal_to_projectives(S0)
    assert ua.projective_target.total_dim == 0
    assert ua.arrow.is_zero()


def test_universal_arrow_on_projective():
    ua = universal_to_projectives(P0)
    assert ua.arrow.is_invertible()


def test_universal_arrow_factors_all_homs_to_projectives():
    m = direct_sum([S0, P0]).rep
    ua = universal_to_projectives(m)
    for v in range(A2.vertex_count):
        target = projective(A2, v)
        betas = hom_basis(ua.projective_target, target)
        for alpha_prime in hom_basis(m, target).basis:
            candidates = [b @ ua.arrow for b in betas.basis]
            from stablemod.rep import solve_in_hom_space
            assert solve_in_hom_space(candidates, alpha_prime) is not None


# ---------------------------------------------------------------- costables


def test_injectives_are_not_costable():
    for alg in (A2, A3, KR):
        for v in range(alg.vertex_count):
            assert not is_costable(injective(alg, v))


def test_s1_over_a2_is_costable():
    assert is_costable(simple(A2, 1))


def test_zero_is_costable():
    assert is_costable(zero_representation(A2))


def test_costable_reflection_of_injective():
    refl = costable_reflection(injective(A2, 1))
    assert refl.costable_part.total_dim == 0


def test_costable_reflection_of_costable_is_identity():
    s1 = simple(A2, 1)
    refl = costable_reflection(s1)
    assert refl.costable_part == s1
    assert refl.unit.is_invertible()


def test_costable_reflection_of_mixed_sum():
    m = direct_sum([S0, simple(A2, 1)]).rep
    refl = costable_reflection(m)
    assert refl.costable_part.dims == (0, 1)
    assert is_costable(refl.costable_part)
    assert refl.unit.is_surjective()
    # the unit kills the S0 coordinate
    assert refl.unit.vertex_maps[0].is_zero()
    assert refl.unit @ refl.section == Morphism.identity(refl.costable_part)


def test_costable_reflection_structure_randomized():
    rng = np.random.Generator(np.random.PCG64(13))
    for alg in (A2, KR):
        for _ in range(10):
            m = random_rep(alg, rng)
            refl = costable_reflection(m)
            assert is_costable(refl.costable_part)
            assert refl.unit.is_surjective()
            assert refl.unit @ refl.section == Morphism.identity(refl.costable_part)
            assert (refl.unit @ refl.include_injective).is_zero()


# ----------------------------------------------------------- heller witness


def test_heller_witness_examples():
    for m in (S0, P0, direct_sum([S0, P0]).rep):
        w = heller_witness(m)
        w.verify()
        assert w.copad.total_dim == 0


def test_heller_witness_randomized():
    rng = np.random.Generator(np.random.PCG64(17))
    for alg in (A2, A3, KR):
        for _ in range(8):
            heller_witness(random_rep(alg, rng)).verify()


# ----------------------------------------------------------- algebra report


def test_condition_report_a2():
    report = condition_report(A2)
    assert not report.no_projective_injective
    assert report.projective_injective_pairs == ((0, 1),)
    assert not report.injectives_stable
    assert not report.projectives_costable
    assert report.implications_ok
    assert not report.uncertified_pairs


def test_condition_report_single_vertex():
    alg = build_algebra(Quiver(1, ()), F2)
    report = condition_report(alg)
    assert report.projective_injective_pairs == ((0, 0),)
    assert not report.injectives_stable


def test_condition_report_hereditary_equivalence():
    for alg in (A2, A3, KR, build_algebra(linear_quiver(3), F3)):
        report = condition_report(alg)
        assert (report.injectives_stable == report.no_projective_injective
                == report.projectives_costable)


# --------------------------------------------------- closure property samples


def test_epi_image_of_stable_is_stable_sampled():
    rng = np.random.Generator(np.random.PCG64(23))
    from stablemod.rep import image
    for _ in range(10):
        s = stable_part(random_rep(KR, rng)).stable_part
        n = random_rep(KR, rng)
        f = random_hom(s, n, rng)
        assert is_stable(image(f).rep)


def test_direct_sum_stability_iff_both():
    rng = np.random.Generator(np.random.PCG64(29))
    for _ in range(10):
        m = random_rep(A3, rng, 2)
        n = random_rep(A3, rng, 2)
        assert is_stable(direct_sum([m, n]).rep) == (is_stable(m) and is_stable(n))


def test_adjunction_dimension_shadow_sampled():
    rng = np.random.Generator(np.random.PCG64(31))
    for alg in (A2, KR):
        for _ in range(8):
            s = stable_part(random_rep(alg, rng)).stable_part
            c = costable_reflection(random_rep(alg, rng)).costable_part
            lhs = hom_dim(costable_reflection(s).costable_part, c)
            rhs = hom_dim(s, stable_part(c).stable_part)
            assert lhs == rhs
