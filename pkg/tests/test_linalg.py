from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from entwine.fields import Field, QQ
from entwine.linalg import (Mat, TensorIndex, basis_vector, invert,
                            is_bijective, kernel_basis, solve_affine)

GF2 = Field(2)


def mat(field, rows):
    return Mat.from_rows(field, [[field.of(x) for x in row] for row in rows])


# -- solve_affine -------------------------------------------------------------

def test_solve_identity():
    a = Mat.identity(QQ, 2)
    sol = solve_affine(a, [Fraction(3), Fraction(5)])
    assert sol.consistent
    assert sol.particular == [Fraction(3), Fraction(5)]
    assert sol.kernel == []


def test_solve_zero_matrix():
    a = Mat.zeros(QQ, 1, 2)
    sol = solve_affine(a, [Fraction(0)])
    assert sol.consistent
    assert sol.particular == [Fraction(0), Fraction(0)]
    assert len(sol.kernel) == 2


def test_solve_gf2_against_enumeration():
    # oracle: enumerate all four vectors of GF(2)^2 for x0 + x1 = 1
    a = mat(GF2, [[1, 1]])
    solutions = {v for v in product(range(2), repeat=2) if (v[0] + v[1]) % 2 == 1}
    homogeneous = {v for v in product(range(2), repeat=2) if (v[0] + v[1]) % 2 == 0}
    sol = solve_affine(a, [1])
    assert sol.consistent
    assert tuple(sol.particular) in solutions
    assert len(sol.kernel) == 1
    spanned = {(0, 0), tuple(sol.kernel[0])}
    assert spanned == homogeneous


def test_solve_inconsistent():
    a = mat(QQ, [[1, 1], [1, 1]])
    sol = solve_affine(a, [QQ.one, QQ.zero])
    assert not sol.consistent
    assert sol.particular is None


def test_solve_dimension_mismatch():
    with pytest.raises(ValueError):
        solve_affine(Mat.identity(QQ, 2), [QQ.one])


# -- kernel_basis -------------------------------------------------------------

def test_kernel_identity_empty():
    assert kernel_basis(Mat.identity(QQ, 3)) == []


def test_kernel_zero_full():
    assert len(kernel_basis(Mat.zeros(QQ, 2, 2))) == 2


def test_kernel_rank_one():
    a = mat(QQ, [[1, 2], [2, 4]])
    ker = kernel_basis(a)
    assert len(ker) == 1
    v = ker[0]
    # proportional to (-2, 1), and in the kernel exactly
    assert v[0] * Fraction(1) == -2 * v[1] or v == [Fraction(-2), Fraction(1)]
    assert a.mul_vec(v) == [QQ.zero, QQ.zero]


# -- is_bijective -------------------------------------------------------------

def test_bijective_identity():
    ok, inv = is_bijective(Mat.identity(QQ, 4))
    assert ok and inv == Mat.identity(QQ, 4)


def test_bijective_non_square():
    ok, inv = is_bijective(Mat.zeros(QQ, 2, 3))
    assert not ok and inv is None


def test_bijective_unipotent():
    a = mat(QQ, [[1, 1], [0, 1]])
    ok, inv = is_bijective(a)
    assert ok
    assert inv == mat(QQ, [[1, -1], [0, 1]])
    assert a.mul(inv) == Mat.identity(QQ, 2)


def test_singular():
    assert invert(mat(QQ, [[1, 2], [2, 4]])) is None


# -- TensorIndex --------------------------------------------------------------

@given(st.lists(st.integers(min_value=1, max_value=5), min_size=1, max_size=4),
       st.integers(min_value=0, max_value=10 ** 6))
def test_tensor_index_roundtrip(dims, raw):
    ti = TensorIndex(tuple(dims))
    flat = raw % ti.size
    assert ti.flatten(ti.unflatten(flat)) == flat


def test_tensor_index_order():
    # leftmost factor slowest
    ti = TensorIndex((2, 3))
    assert ti.flatten((1, 2)) == 5
    assert ti.unflatten(3) == (1, 0)
    assert [ti.flatten(ix) for ix in ti] == list(range(6))


# -- field axioms -------------------------------------------------------------

rationals = st.fractions(min_value=-50, max_value=50, max_denominator=20)


@given(rationals, rationals, rationals)
def test_field_axioms_rationals(a, b, c):
    F = QQ
    a, b, c = F.of(a), F.of(b), F.of(c)
    assert F.add(F.add(a, b), c) == F.add(a, F.add(b, c))
    assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))
    assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
    assert F.add(a, F.neg(a)) == F.zero
    if a != 0:
        assert F.mul(a, F.inv(a)) == F.one


@given(st.integers(0, 6), st.integers(0, 6))
def test_field_gf7_inverses(a, b):
    F = Field(7)
    if a != 0:
        assert F.mul(a, F.inv(a)) == F.one
    assert F.sub(F.add(a, b), b) == a


def test_scalar_serialization():
    assert QQ.to_str(Fraction(-3, 4)) == "-3/4"
    assert QQ.parse("-3/4") == Fraction(-3, 4)
    assert GF2.to_str(5) == "1"
    assert GF2.parse("3") == 1
    F7 = Field(7)
    assert F7.parse("3/5") == F7.div(3, 5)


def test_field_char_must_be_prime():
    with pytest.raises(ValueError):
        Field(6)


# -- postcondition property over random systems --------------------------------

@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10 ** 9))
def test_solve_affine_postconditions(seed):
    import random
    rng = random.Random(seed)
    F = QQ if seed % 2 == 0 else Field(5)
    rows = rng.randint(1, 4)
    cols = rng.randint(1, 4)
    a = Mat.from_rows(F, [[F.random(rng) for _ in range(cols)] for _ in range(rows)])
    b = [F.random(rng) for _ in range(rows)]
    sol = solve_affine(a, b)
    if sol.consistent:
        assert a.mul_vec(sol.particular) == b
    assert len(sol.kernel) == cols - sol.rank
    for v in sol.kernel:
        assert a.mul_vec(v) == [F.zero] * rows
