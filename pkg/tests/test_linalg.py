import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from stablemod.errors import NonPrimeModulusError
from stablemod.linalg import (
    FieldSpec,
    Matrix,
    Scalar,
    image_basis,
    nullspace_basis,
    quotient_data,
    rank,
    rref,
    solve,
    subspace_contains,
    subspace_equal,
)

F2 = FieldSpec(2)
F3 = FieldSpec(3)
F5 = FieldSpec(5)


def M(field, rows):
    return Matrix.from_rows(field, rows)


# ---------------------------------------------------------------- FieldSpec


def test_field_rejects_non_primes():
    for bad in (0, 1, 4, 6, 9, 2**31):
        with pytest.raises(NonPrimeModulusError):
            FieldSpec(bad)


def test_field_accepts_mersenne_31():
    FieldSpec(2**31 - 1)


def test_scalar_arithmetic():
    a = F5.scalar(3)
    b = F5.scalar(4)
    assert (a + b).value == 2
    assert (a - b).value == 4
    assert (a * b).value == 2
    assert (a / b).value == (3 * pow(4, 3, 5)) % 5
    assert (-a).value == 2
    assert a.inverse().value == 2
    with pytest.raises(ZeroDivisionError):
        F5.scalar(0).inverse()


def test_scalar_range_invariant():
    with pytest.raises(ValueError):
        Scalar(5, F5)
    with pytest.raises(ValueError):
        Scalar(-1, F5)


# ------------------------------------------------------------------- Matrix


def test_matrix_reduces_mod_p():
    m = Matrix(F3, 2, 2, [4, -1, 3, 7])
    assert m.entries == (1, 2, 0, 1)


def test_matrix_zero_sized_shapes():
    for r, c in [(0, 3), (3, 0), (0, 0)]:
        m = Matrix.zeros(F2, r, c)
        assert m.shape == (r, c)
        assert m.is_zero()


def test_matrix_immutable():
    m = Matrix.identity(F2, 2)
    with pytest.raises(AttributeError):
        m.field = F3


def test_matmul_no_overflow_at_max_modulus():
    p = 2**31 - 1
    f = FieldSpec(p)
    a = Matrix(f, 2, 3, [p - 1] * 6)
    b = Matrix(f, 3, 2, [p - 2] * 6)
    got = a @ b
    want = (np.full((2, 3), p - 1, dtype=object) @ np.full((3, 2), p - 2, dtype=object)) % p
    assert got.to_lists() == [[int(x) for x in row] for row in want]


# --------------------------------------------------------------------- rref


def test_rref_identity_f2():
    res = rref(Matrix.identity(F2, 2))
    assert res.matrix == Matrix.identity(F2, 2)
    assert res.pivots == (0, 1)
    assert res.rank == 2


def test_rref_empty():
    res = rref(Matrix.zeros(F2, 0, 3))
    assert res.matrix.shape == (0, 3)
    assert res.pivots == ()
    assert res.rank == 0


def test_rref_rank_one_f2():
    res = rref(M(F2, [[1, 1], [1, 1]]))
    assert res.matrix.to_lists() == [[1, 1], [0, 0]]
    assert res.pivots == (0,)
    assert res.rank == 1


# --------------------------------------------------------------- nullspace


def test_nullspace_identity():
    assert nullspace_basis(Matrix.identity(F3, 4)).shape == (4, 0)


def test_nullspace_zero_matrix_is_identity_basis():
    assert nullspace_basis(Matrix.zeros(F2, 2, 3)) == Matrix.identity(F2, 3)


def test_nullspace_line_f2():
    ns = nullspace_basis(M(F2, [[1, 1]]))
    assert ns.to_lists() == [[1], [1]]


# ------------------------------------------------------------------- solve


def test_solve_identity():
    b = Matrix.column(F5, [1, 2, 3])
    assert solve(Matrix.identity(F5, 3), b) == b


def test_solve_inconsistent():
    assert solve(M(F2, [[0]]), Matrix.column(F2, [1])) is None


def test_solve_canonical_free_vars_zero():
    x = solve(M(F2, [[1, 1], [0, 0]]), Matrix.column(F2, [1, 0]))
    assert x.to_lists() == [[1], [0]]


def test_solve_shape_mismatch_rejected():
    with pytest.raises(ValueError):
        solve(Matrix.identity(F2, 2), Matrix.column(F2, [1, 0, 1]))


# ------------------------------------------------------------- image_basis


def test_image_identity():
    assert image_basis(Matrix.identity(F3, 3)) == Matrix.identity(F3, 3)


def test_image_zero():
    assert image_basis(Matrix.zeros(F2, 3, 2)).shape == (3, 0)


def test_image_rank_one_f2():
    assert image_basis(M(F2, [[1, 1], [1, 1]])).to_lists() == [[1], [1]]


# ----------------------------------------------------------- quotient_data


def test_quotient_of_line_in_plane():
    proj, lift = quotient_data(2, Matrix.column(F2, [1, 0]))
    assert proj.to_lists() == [[0, 1]]
    assert lift.to_lists() == [[0], [1]]


def test_quotient_by_everything():
    proj, lift = quotient_data(3, Matrix.identity(F3, 3))
    assert proj.shape == (0, 3)
    assert lift.shape == (3, 0)


def test_quotient_by_nothing():
    proj, lift = quotient_data(3, Matrix.zeros(F3, 3, 0))
    assert proj == Matrix.identity(F3, 3)
    assert lift == Matrix.identity(F3, 3)


def test_quotient_rejects_dependent_columns():
    dep = M(F2, [[1, 1], [0, 0]])
    with pytest.raises(ValueError):
        quotient_data(2, dep)


# ---------------------------------------------------------- subspace_equal


def test_subspace_equal_cases():
    b = M(F2, [[1, 0], [0, 1]])
    assert subspace_equal(b, b)
    assert not subspace_equal(Matrix.column(F2, [1, 0]), Matrix.column(F2, [0, 1]))
    spanning = M(F2, [[1, 1], [1, 0]])
    assert subspace_equal(spanning, Matrix.identity(F2, 2))


def test_subspace_contains():
    plane = Matrix.identity(F2, 2)
    line = Matrix.column(F2, [1, 1])
    assert subspace_contains(plane, line)
    assert not subspace_contains(line, plane)


# -------------------------------------------------------------- properties

fields = st.sampled_from([FieldSpec(2), FieldSpec(3), FieldSpec(5), FieldSpec(97)])


@st.composite
def matrices(draw, max_dim=5):
    field = draw(fields)
    r = draw(st.integers(0, max_dim))
    c = draw(st.integers(0, max_dim))
    entries = draw(st.lists(st.integers(0, field.p - 1),
                            min_size=r * c, max_size=r * c))
    return Matrix(field, r, c, entries)


@given(matrices())
@settings(max_examples=150, deadline=None)
def test_rref_idempotent(a):
    r1 = rref(a).matrix
    assert rref(r1).matrix == r1


@given(matrices())
@settings(max_examples=150, deadline=None)
def test_rank_nullity_and_kernel(a):
    ns = nullspace_basis(a)
    assert rank(a) + ns.cols == a.cols
    assert (a @ ns).is_zero()


@given(matrices(), st.randoms(use_true_random=False))
@settings(max_examples=150, deadline=None)
def test_solve_exact_on_solvable_systems(a, rnd):
    x0 = Matrix(a.field, a.cols, 1,
                [rnd.randrange(a.field.p) for _ in range(a.cols)])
    b = a @ x0
    x = solve(a, b)
    assert x is not None
    assert a @ x == b


@given(matrices())
@settings(max_examples=150, deadline=None)
def test_quotient_contracts(a):
    sub = image_basis(a)
    proj, lift = quotient_data(a.rows, sub)
    assert (proj @ sub).is_zero()
    assert proj @ lift == Matrix.identity(a.field, proj.rows)
    assert proj.rows == a.rows - sub.cols


@given(matrices())
@settings(max_examples=100, deadline=None)
def test_image_basis_spans_columns(a):
    im = image_basis(a)
    assert im.cols == rank(a)
    assert subspace_equal(im, a) or (a.cols == 0 and im.cols == 0)


@given(fields, st.data())
@settings(max_examples=200, deadline=None)
def test_field_axioms(field, data):
    p = field.p
    x = field.scalar(data.draw(st.integers(0, p - 1)))
    y = field.scalar(data.draw(st.integers(0, p - 1)))
    z = field.scalar(data.draw(st.integers(0, p - 1)))
    assert (x + y) + z == x + (y + z)
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x + (-x) == field.scalar(0)
    if y.value != 0:
        assert y * y.inverse() == field.scalar(1)
