import numpy as np
import pytest

from stablemod.errors import CyclicQuiverError
from stablemod.linalg import FieldSpec, Matrix, rank, subspace_contains
from stablemod.quiver import Arrow, Quiver, build_algebra, kronecker_quiver, linear_quiver, named_quiver
from stablemod.projectives import (
    injective,
    projective,
    projective_cover,
    radical,
    regular_module,
    simple,
)
from stablemod.rep import Representation, direct_sum, dualize, kernel

F2 = FieldSpec(2)
F3 = FieldSpec(3)


def A2(field=F2):
    return build_algebra(linear_quiver(2), field)


def A3(field=F2):
    return build_algebra(linear_quiver(3), field)


def KR(field=F2):
    return build_algebra(kronecker_quiver(), field)


# ------------------------------------------------------------------ algebra


def test_a2_paths():
    alg = A2()
    assert alg.dim == 3
    lengths = sorted(p.length for p in alg.paths)
    assert lengths == [0, 0, 1]


def test_single_vertex():
    alg = build_algebra(Quiver(1, ()), F2)
    assert alg.dim == 1


def test_loop_rejected():
    with pytest.raises(CyclicQuiverError):
        build_algebra(Quiver(1, (Arrow(0, 0, "a"),)), F2)


def test_two_cycle_rejected():
    with pytest.raises(CyclicQuiverError):
        build_algebra(Quiver(2, (Arrow(0, 1, "a"), Arrow(1, 0, "b"))), F2)


def test_duplicate_labels_rejected():
    with pytest.raises(ValueError):
        Quiver(2, (Arrow(0, 1, "a"), Arrow(0, 1, "a")))


def test_paths_sorted_by_length_then_labels():
    alg = A3()
    keys = [(p.length, tuple(alg.quiver.arrows[i].label for i in p.arrows))
            for p in alg.paths]
    assert keys == sorted(keys)


def test_named_quivers():
    assert named_quiver("A2").vertex_count == 2
    assert named_quiver("Kronecker").arrows[0].label == "a"
    with pytest.raises(ValueError):
        named_quiver("E8")


# -------------------------------------------------------------- projectives


def test_projective_a2():
    alg = A2()
    p0 = projective(alg, 0)
    assert p0.dims == (1, 1)
    assert p0.arrow_maps[0].to_lists() == [[1]]
    assert projective(alg, 1).dims == (0, 1)


def test_projective_kronecker():
    alg = KR()
    p0 = projective(alg, 0)
    assert p0.dims == (1, 2)
    assert p0.arrow_maps[0].to_lists() == [[1], [0]]
    assert p0.arrow_maps[1].to_lists() == [[0], [1]]


def test_projective_dims_count_paths():
    for alg in (A2(), A3(), KR(F3)):
        total = sum(projective(alg, v).total_dim for v in range(alg.vertex_count))
        assert total == alg.dim
        for v in range(alg.vertex_count):
            p = projective(alg, v)
            for w in range(alg.vertex_count):
                assert p.dims[w] == len(alg.paths_between(v, w))


# --------------------------------------------------------------- injectives


def test_injective_a2():
    alg = A2()
    assert injective(alg, 1) == projective(alg, 0)
    assert injective(alg, 0).dims == (1, 0)


def test_injective_single_vertex():
    alg = build_algebra(Quiver(1, ()), F2)
    assert injective(alg, 0) == projective(alg, 0) == simple(alg, 0)


def _dual_route_injective(alg, v):
    """dualize(projective over the opposite quiver), conjugated by the
    canonical path-reversal bijection of bases."""
    op = alg.opposite()
    dual = dualize(projective(op, v))
    perms = []
    for w in range(alg.vertex_count):
        op_paths = [p.arrows for p in op.paths_between(v, w)]
        my_paths = [p.arrows for p in alg.paths_between(w, v)]
        t = np.zeros((len(my_paths), len(op_paths)), dtype=np.int64)
        for old, arrows in enumerate(op_paths):
            t[my_paths.index(tuple(reversed(arrows))), old] = 1
        perms.append(Matrix._wrap(alg.field, t))
    maps = []
    for i, a in enumerate(alg.quiver.arrows):
        maps.append(perms[a.target] @ dual.arrow_maps[i] @ perms[a.source].transpose())
    return Representation(alg, dual.dims, maps)


def test_injective_is_dual_of_opposite_projective():
    square = Quiver(4, (Arrow(0, 1, "a"), Arrow(0, 2, "b"),
                        Arrow(1, 3, "c"), Arrow(2, 3, "d")))
    for alg in (A2(), A3(F3), KR(), build_algebra(square, F2)):
        for v in range(alg.vertex_count):
            assert _dual_route_injective(alg, v) == injective(alg, v)


def test_dualize_involution():
    alg = A3(F3)
    m = regular_module(alg)
    assert dualize(dualize(m)) == m


# ------------------------------------------------------------ regular module


def test_regular_dims():
    assert regular_module(A2()).dims == (1, 2)
    assert regular_module(build_algebra(Quiver(1, ()), F2)).dims == (1,)
    assert regular_module(KR()).dims == (1, 3)


# ----------------------------------------------------------------- radical


def test_radical_examples():
    alg = A2()
    assert radical(projective(alg, 0)).rep.dims == (0, 1)
    assert radical(simple(alg, 0)).rep.total_dim == 0
    assert radical(projective(alg, 1)).rep.total_dim == 0


def test_radical_is_arrow_span():
    alg = KR()
    r = radical(regular_module(alg))
    assert r.rep.dims == (0, 2)
    assert r.inclusion.is_injective()


# --------------------------------------------------------- projective cover


def test_cover_of_projective_is_identity():
    alg = A2()
    p0 = projective(alg, 0)
    cover = projective_cover(p0)
    assert cover.rep == p0
    assert all(m == Matrix.identity(F2, m.rows) for m in cover.projection.vertex_maps)


def test_cover_of_simple():
    alg = A2()
    cover = projective_cover(simple(alg, 0))
    assert cover.rep == projective(alg, 0)
    assert cover.projection.is_surjective()


def test_cover_of_zero():
    alg = A2()
    zero = Representation(alg, (0, 0), [Matrix.zeros(F2, 0, 0)])
    cover = projective_cover(zero)
    assert cover.rep.total_dim == 0
    assert cover.projection.is_zero()


def test_cover_kernel_superfluous_randomized():
    rng = np.random.Generator(np.random.PCG64(11))
    for alg in (A2(), A3(), KR(F3)):
        p = alg.field.p
        for _ in range(15):
            dims = [int(rng.integers(0, 4)) for _ in range(alg.vertex_count)]
            maps = [Matrix(alg.field, dims[a.target], dims[a.source],
                           rng.integers(0, p, size=dims[a.target] * dims[a.source]))
                    for a in alg.quiver.arrows]
            m = Representation(alg, dims, maps)
            cover = projective_cover(m)
            assert cover.projection.is_surjective()
            ker = kernel(cover.projection)
            rad = radical(cover.rep)
            for v in range(alg.vertex_count):
                assert subspace_contains(rad.inclusion.vertex_maps[v],
                                         ker.inclusion.vertex_maps[v])
