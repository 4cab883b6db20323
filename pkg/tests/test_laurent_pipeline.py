import random
from fractions import Fraction

import pytest
import sympy as sp

from nilk import laurent_pipeline as lp
from nilk.matrices import Matrix
from nilk.rings import (MONOMIAL_T2, Q_TS, Q_TZ, ideal_member,
                        subring_member, truncate_t2)

from helpers import matrix_to_sympy


def st(ring, k):
    return ring.var("s", k) * ring.var("t", k)


def test_lift_A_properties():
    a = lp.lift_A()
    assert a.det() == Q_TS.one()
    red = a.map_entries(truncate_t2, truncate_t2(Q_TS.one()).ring)
    diag = Matrix.diag(red.ring, [truncate_t2(Q_TS.one() + st(Q_TS, 1)),
                                  truncate_t2(Q_TS.one() - st(Q_TS, 1))])
    assert red == diag
    assert a @ a.inverse() == Matrix.identity(Q_TS, 2)


def test_double_idempotent_B():
    pair = lp.double_idempotent_B()
    assert pair.first.is_idempotent()
    assert pair.second == Matrix.diag(Q_TS, [Q_TS.one(), Q_TS.zero()])
    assert pair.validate()


def test_clutch_projector_matches_conjugation_oracle():
    a = lp.lift_A()
    e2 = lp.clutch_projector(a, lp.projector_P())
    # independent route: carry out the conjugation in sympy
    A = matrix_to_sympy(a)
    P = sp.Matrix([[1, 0], [0, 0]])
    expected = sp.expand((A.T).inv() * P * (A.T))
    assert matrix_to_sympy(e2) == expected
    assert e2.is_idempotent()


def test_clutch_projector_fixed_point():
    p = lp.projector_P()
    assert lp.clutch_projector(Matrix.identity(Q_TS, 2), p) == p


def test_e2_entries():
    e2 = lp.clutch_projector(lp.lift_A(), lp.projector_P())
    one = Q_TS.one()
    expected = Matrix.from_rows(Q_TS, [
        [one - st(Q_TS, 4), st(Q_TS, 2) - st(Q_TS, 3)],
        [st(Q_TS, 2) * (one + st(Q_TS, 1) + st(Q_TS, 2) + st(Q_TS, 3)),
         st(Q_TS, 4)],
    ])
    assert e2 == expected
    # stated display differs in one exponent
    assert e2 != lp.e2_display()
    d = e2 - lp.projector_P()
    assert all(ideal_member(x, MONOMIAL_T2) for r in d.entries for x in r)
    assert all(subring_member(x) for r in e2.entries for x in r)


def test_excision_transport_stages():
    pair = lp.double_idempotent_B()
    e2 = lp.clutch_projector(lp.lift_A(), lp.projector_P())
    rec = lp.excision_transport(pair, e2)
    assert all(rec.checks().values())
    assert rec.ideal_part == e2 - lp.projector_P()
    assert rec.target_pair.first == lp.projector_P()
    assert rec.target_pair.second == e2


def test_excision_transport_trivial():
    from nilk.matrices import DoublePair
    p = lp.projector_P()
    rec = lp.excision_transport(DoublePair(p, p, MONOMIAL_T2), p)
    assert rec.ideal_part.is_zero()


def test_loop_z():
    p = lp.projector_P()
    lz = lp.loop_z(p)
    zr = lz.ring
    assert lz == Matrix.diag(zr, [zr.var("z"), zr.one()])
    assert lp.loop_z(Matrix.zeros(Q_TS, 2, 2)) == Matrix.identity(zr, 2)
    with pytest.raises(ValueError):
        lp.loop_z(Matrix.from_rows(Q_TS, [[1, 1], [0, 1]]))


def test_theorem31_entries():
    m = lp.theorem31_matrix().matrix
    ring = m.ring
    one = ring.one()
    z = ring.var("z")
    zi = z.invert()
    s4t4 = st(ring, 4)
    assert m[0, 0] == one - (one - zi) * s4t4
    assert m[0, 1] == (z - one) * (st(ring, 2) - st(ring, 3))
    assert m[1, 0] == (one - zi) * st(ring, 2) * \
        (one + st(ring, 1) + st(ring, 2) + st(ring, 3))
    assert m[1, 1] == one + (z - one) * s4t4
    # stated display disagrees only in the (1,1) entry
    disp = lp.theorem31_display()
    assert m[0, 0] != disp[0, 0]
    assert all(m[r, c] == disp[r, c] for r, c in [(0, 1), (1, 0), (1, 1)])
    assert m.det() == one
    assert m.substitute({"s": 0}) == Matrix.identity(ring.drop("s"), 2)
    assert all(subring_member(x) for r in m.entries for x in r)


def test_decompose_M_blocks():
    blocks = lp.decompose_M(lp.theorem31_matrix())
    assert len(blocks) == 5
    one = Q_TZ.one()
    z = Q_TZ.var("z")
    zi = z.invert()
    t = lambda k: Q_TZ.var("t", k)
    zero = Q_TZ.zero()
    assert blocks[0] == Matrix.zeros(Q_TZ, 2, 2)
    assert blocks[1] == Matrix.from_rows(Q_TZ, [
        [zero, (one - z) * t(2)], [(zi - one) * t(2), zero]])
    assert blocks[2] == Matrix.from_rows(Q_TZ, [
        [zero, (z - one) * t(3)], [(zi - one) * t(3), zero]])
    assert blocks[3] == Matrix.from_rows(Q_TZ, [
        [(one - zi) * t(4), zero], [(zi - one) * t(4), (one - z) * t(4)]])
    assert blocks[4] == Matrix.from_rows(Q_TZ, [
        [zero, zero], [(zi - one) * t(5), zero]])


def test_decompose_rejects_constant_term():
    with pytest.raises(ValueError):
        lp.decompose_M(lp.K1Rep(Matrix.diag(
            lp.theorem31_matrix().matrix.ring, [
                lp.theorem31_matrix().matrix.ring.const(2),
                lp.theorem31_matrix().matrix.ring.one()])))


def test_higman_companion_matches_display():
    n = lp.higman_companion(lp.decompose_M(lp.theorem31_matrix()))
    assert n == lp.n10_display()
    assert n.nilpotency_index(10) == 10
    assert all(subring_member(x) for r in n.entries for x in r)


def test_higman_single_zero_block():
    z = Matrix.zeros(Q_TZ, 1, 1)
    assert lp.higman_companion([z]) == z


def test_higman_det_linear():
    from nilk.rings import Q_TSZ
    n = lp.higman_companion(lp.decompose_M(lp.theorem31_matrix()))
    big = n.into(Q_TSZ).scale(Q_TSZ.var("s"))
    assert (Matrix.identity(Q_TSZ, 10) - big).det() == Q_TSZ.one()


def test_higman_reassembly():
    rep = lp.theorem31_matrix()
    blocks = lp.decompose_M(rep)
    m = Matrix.identity(rep.matrix.ring, 2)
    s = rep.matrix.ring.var("s")
    for i, blk in enumerate(blocks, 1):
        m = m - blk.into(rep.matrix.ring).scale(s ** i)
    assert m == rep.matrix


def test_generalized_units():
    rng = random.Random(77)
    for _ in range(50):
        a = Fraction(rng.randint(1, 9) * rng.choice([1, -1]), rng.randint(1, 5))
        b = Fraction(rng.randint(-9, 9), rng.randint(1, 5))
        rep = lp.generalized_unit_rep(a, b)  # verifies internally
        assert rep.matrix.det().try_invert() is not None


def test_generalized_reproduces_standard_case():
    rep = lp.generalized_unit_rep(Fraction(1), Fraction(1))
    assert rep.matrix == lp.theorem31_matrix().matrix


def test_generalized_rejects_zero():
    with pytest.raises(ValueError):
        lp.generalized_unit_rep(Fraction(0), Fraction(1))
