import random
from fractions import Fraction

import pytest

from entwine.fields import Field, QQ
from entwine.linalg import basis_vector
from entwine import diagrams as dg
from entwine.structures import (DoiHopfDatum, Entwining, FiniteAlgebra,
                                FiniteBialgebra, FiniteCoalgebra,
                                ComoduleAlgebraCoaction, ModuleCoalgebraAction,
                                build_doi_hopf, build_flip, convolution_algebra,
                                dual_opposite_algebra, entwining_morphism_report,
                                left_hit, right_hit, validate_algebra,
                                validate_bialgebra, validate_coalgebra,
                                validate_entwining, zeros3)
from entwine.catalog import (algebra_k, coalgebra_k, group_algebra_z2,
                             grouplike_coalgebra, self_doi_hopf_datum,
                             sweedler_bialgebra, upper_triangular2, z2_bialgebra)


# -- algebra validation ---------------------------------------------------------

def test_base_field_algebra_valid():
    assert validate_algebra(algebra_k(QQ)).ok


def test_group_algebra_valid():
    assert validate_algebra(group_algebra_z2(QQ)).ok


def test_idempotent_monoid_table_is_valid():
    # replacing g*g = 1 by g*g = g (unit still (1, 0)) yields the monoid
    # algebra of the idempotent monoid {1, g}: a valid unital algebra
    mult = zeros3(QQ, 2, 2, 2)
    mult[0][0][0] = QQ.one
    mult[0][1][1] = QQ.one
    mult[1][0][1] = QQ.one
    mult[1][1][1] = QQ.one
    a = FiniteAlgebra(QQ, 2, mult, [QQ.one, QQ.zero])
    assert validate_algebra(a).ok
    assert dg.algebra_axioms_hold(a)


def test_broken_unit_named_failure():
    mult = zeros3(QQ, 2, 2, 2)
    mult[0][0][0] = QQ.one
    mult[0][1][0] = QQ.one  # 1*g = 1: left unit fails at g
    mult[1][0][1] = QQ.one
    mult[1][1][0] = QQ.one
    a = FiniteAlgebra(QQ, 2, mult, [QQ.one, QQ.zero])
    rep = validate_algebra(a)
    assert not rep.ok
    assert any(f.law == "left unit" and f.at == (1,) for f in rep.failures)


def test_broken_associativity_named_triple():
    # dim 3: e1*e1 = e2, e1*e2 = 0, e2*e1 = e1 breaks (e1 e1) e1 = e1 (e1 e1)
    mult = zeros3(QQ, 3, 3, 3)
    for j in range(3):
        mult[0][j][j] = QQ.one
        if j:
            mult[j][0][j] = QQ.one
    mult[0][0][0] = QQ.one
    mult[1][1][2] = QQ.one
    mult[2][1][1] = QQ.one
    a = FiniteAlgebra(QQ, 3, mult, [QQ.one, QQ.zero, QQ.zero])
    rep = validate_algebra(a)
    assert not rep.ok
    named = [f for f in rep.failures if f.law == "associativity"]
    assert named and all(len(f.at) == 3 for f in named)
    assert not dg.algebra_axioms_hold(a)


def test_shape_mismatch_raises():
    with pytest.raises(ValueError):
        FiniteAlgebra(QQ, 2, [[[QQ.one]]], [QQ.one, QQ.zero])


def test_ut2_valid():
    assert validate_algebra(upper_triangular2(QQ)).ok


# -- coalgebra validation --------------------------------------------------------

def test_trivial_coalgebra_valid():
    assert validate_coalgebra(coalgebra_k(QQ)).ok


def test_grouplike_coalgebra_valid():
    for n in (1, 2, 3):
        assert validate_coalgebra(grouplike_coalgebra(QQ, n)).ok


def test_broken_counit_detected():
    # Delta(e1) = e1 (x) e2 with counit (1, 0): (eps (x) C)Delta(e1) = e2 != e1
    comult = zeros3(QQ, 2, 2, 2)
    comult[0][0][1] = QQ.one
    comult[1][1][1] = QQ.one
    c = FiniteCoalgebra(QQ, 2, comult, [QQ.one, QQ.zero])
    rep = validate_coalgebra(c)
    assert any(f.law in ("left counit", "right counit") for f in rep.failures)


# -- bialgebras -----------------------------------------------------------------

def test_z2_bialgebra_valid():
    assert validate_bialgebra(z2_bialgebra(QQ)).ok


def test_sweedler_bialgebra_valid():
    assert validate_bialgebra(sweedler_bialgebra(QQ)).ok
    assert validate_bialgebra(sweedler_bialgebra(Field(3))).ok


# -- entwinings -------------------------------------------------------------------

def test_flip_entwines_various_dims():
    pairs = [(algebra_k(QQ), coalgebra_k(QQ)),
             (group_algebra_z2(QQ), grouplike_coalgebra(QQ, 2)),
             (upper_triangular2(QQ), grouplike_coalgebra(QQ, 2))]
    for a, c in pairs:
        assert validate_entwining(build_flip(a, c)).ok


def test_doi_hopf_z2_by_hand():
    datum = self_doi_hopf_datum(z2_bialgebra(QQ))
    e = build_doi_hopf(datum)
    assert validate_entwining(e).ok
    # psi(g (x) g) = g (x) g.g = g (x) 1: check the tensor entry directly
    out = e.apply_psi(basis_vector(QQ, 2, 1), basis_vector(QQ, 2, 1))
    expect = [[QQ.zero, QQ.zero], [QQ.one, QQ.zero]]
    assert out == expect


def test_doi_hopf_trivial_bialgebra_gives_flip():
    h = FiniteBialgebra(algebra_k(QQ), coalgebra_k(QQ))
    c = grouplike_coalgebra(QQ, 2)
    a = group_algebra_z2(QQ)
    action = [[[QQ.one if q == p else QQ.zero for q in range(2)]] for p in range(2)]
    coaction = [[[QQ.one if j == i else QQ.zero] for j in range(2)] for i in range(2)]
    datum = DoiHopfDatum(h, ModuleCoalgebraAction(h, c, action),
                         ComoduleAlgebraCoaction(h, a, coaction))
    e = build_doi_hopf(datum)
    assert e.psi == build_flip(a, c).psi


def test_doi_hopf_sweedler_valid():
    datum = self_doi_hopf_datum(sweedler_bialgebra(QQ))
    assert validate_entwining(build_doi_hopf(datum)).ok


def test_perturbed_flip_fails_with_location():
    e = build_flip(group_algebra_z2(QQ), grouplike_coalgebra(QQ, 2))
    psi = [[[[x for x in row] for row in plane] for plane in block] for block in e.psi]
    psi[0][1][0][1] = QQ.add(psi[0][1][0][1], QQ.one)
    bad = Entwining(e.algebra, e.coalgebra, psi)
    rep = validate_entwining(bad)
    assert not rep.ok
    assert all(f.at for f in rep.failures if f.law != "unit axiom") or rep.failures


def test_invalid_datum_rejected():
    datum = self_doi_hopf_datum(z2_bialgebra(QQ))
    datum.module_coalgebra.action[0][0][0] = QQ.zero  # break unitality
    with pytest.raises(ValueError):
        build_doi_hopf(datum)


# -- duals and hits ----------------------------------------------------------------

def test_dual_opposite_of_trivial():
    b = dual_opposite_algebra(coalgebra_k(QQ))
    assert b.dim == 1 and validate_algebra(b).ok


def test_dual_opposite_grouplike_idempotents():
    c = grouplike_coalgebra(QQ, 3)
    b = dual_opposite_algebra(c)
    assert validate_algebra(b).ok
    for i in range(3):
        for j in range(3):
            prod = b.multiply(basis_vector(QQ, 3, i), basis_vector(QQ, 3, j))
            expect = [QQ.zero] * 3
            if i == j:
                expect[i] = QQ.one
            assert prod == expect


def test_dual_opposite_vs_convolution_on_sweedler():
    c = sweedler_bialgebra(QQ).coalgebra
    b_op = dual_opposite_algebra(c)
    b = convolution_algebra(c)
    assert validate_algebra(b_op).ok and validate_algebra(b).ok
    # they are opposite algebras ...
    for i in range(4):
        for j in range(4):
            assert b_op.mult[i][j] == b.mult[j][i]
    # ... and genuinely different because the coalgebra is not cocommutative
    assert any(b_op.mult[i][j] != b.mult[i][j] for i in range(4) for j in range(4))


def test_dual_opposite_vs_convolution_cocommutative_agree():
    c = grouplike_coalgebra(QQ, 2)
    assert dual_opposite_algebra(c).mult == convolution_algebra(c).mult


def test_counit_acts_as_identity():
    for c in (coalgebra_k(QQ), grouplike_coalgebra(QQ, 3),
              sweedler_bialgebra(QQ).coalgebra):
        eps = list(c.counit)
        for p in range(c.dim):
            v = basis_vector(QQ, c.dim, p)
            assert left_hit(c, eps, v) == v
            assert right_hit(c, v, eps) == v


def test_grouplike_hits_are_diagonal():
    c = grouplike_coalgebra(QQ, 3)
    for u in range(3):
        xi = basis_vector(QQ, 3, u)
        for i in range(3):
            g = basis_vector(QQ, 3, i)
            expect = g if i == u else [QQ.zero] * 3
            assert left_hit(c, xi, g) == expect


def test_hit_module_law_on_sweedler():
    c = sweedler_bialgebra(QQ).coalgebra
    conv = convolution_algebra(c)
    rng = random.Random(11)
    for _ in range(12):
        xi = [QQ.random(rng) for _ in range(4)]
        xi2 = [QQ.random(rng) for _ in range(4)]
        v = [QQ.random(rng) for _ in range(4)]
        lhs = left_hit(c, conv.multiply(xi, xi2), v)
        rhs = left_hit(c, xi, left_hit(c, xi2, v))
        assert lhs == rhs
        # and the right hit is a right action
        lhs = right_hit(c, v, conv.multiply(xi, xi2))
        rhs = right_hit(c, right_hit(c, v, xi), xi2)
        assert lhs == rhs


# -- compositional oracle agrees with validators -------------------------------------

def test_diagram_oracle_agreement():
    a = group_algebra_z2(QQ)
    assert dg.algebra_axioms_hold(a) == validate_algebra(a).ok
    c = sweedler_bialgebra(QQ).coalgebra
    assert dg.coalgebra_axioms_hold(c) == validate_coalgebra(c).ok
    e = build_doi_hopf(self_doi_hopf_datum(sweedler_bialgebra(QQ)))
    assert dg.entwining_axioms_hold(e) == validate_entwining(e).ok


# -- entwining morphisms ---------------------------------------------------------

def test_identity_is_entwining_morphism():
    e = build_doi_hopf(self_doi_hopf_datum(z2_bialgebra(QQ)))
    n, m = e.algebra.dim, e.coalgebra.dim
    f = [[QQ.one if i == j else QQ.zero for j in range(n)] for i in range(n)]
    g = [[QQ.one if i == j else QQ.zero for j in range(m)] for i in range(m)]
    assert entwining_morphism_report(e, e, f, g).ok


def test_bad_entwining_morphism_detected():
    e = build_doi_hopf(self_doi_hopf_datum(z2_bialgebra(QQ)))
    flip = build_flip(e.algebra, e.coalgebra)
    f = [[QQ.one, QQ.zero], [QQ.zero, QQ.one]]
    g = [[QQ.one, QQ.zero], [QQ.zero, QQ.one]]
    rep = entwining_morphism_report(e, flip, f, g)
    assert not rep.ok
    assert any(f_.law == "psi intertwining" for f_ in rep.failures)
