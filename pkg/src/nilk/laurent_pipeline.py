"""Construction of the explicit NK1(Q[t^2,t^3,z,z^-1]) representative.

The chain: lift the unit 1+st of Q[t,s]/(t^2) to an invertible A over
Q[t,s]; form the clutching idempotent pair B over the double ring; transport
by excision to the idempotent e2 over Q[t^2,t^3,s]; apply the loop map
Q |-> I + (z-1)Q; normalize away the diag(z,1) factor; finally convert the
result to a nilpotent block companion via Higman's trick.

Every stage re-verifies its defining identities; a failure raises
PipelineError (it would signal a bug, not bad input).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .matrices import DoublePair, Matrix, block_assemble
from .rings import (MONOMIAL_T2, Poly, Q_TS, Q_TSZ, Q_TZ, Ring, Var,
                    ideal_member, subring_member, truncate_t2)


class PipelineError(RuntimeError):
    """An internal verification of the construction failed."""


class NotNilpotentError(ValueError):
    """Companion matrix failed its nilpotency bound."""


def _require(cond: bool, what: str):
    if not cond:
        raise PipelineError(f"verification failed: {what}")


def _st(k: int) -> Poly:
    """(st)^k over Q[t,s]."""
    return Q_TS.var("t", k) * Q_TS.var("s", k) if k else Q_TS.one()


def projector_P(ring: Ring = Q_TS) -> Matrix:
    return Matrix.diag(ring, [ring.one(), ring.zero()])


def lift_A() -> Matrix:
    """The invertible lift of diag(1+st, 1-st) over Q[t,s]:
    [[1+st+s^2t^2+s^3t^3, -s^2t^2], [s^2t^2, 1-st]]."""
    a = Matrix.from_rows(Q_TS, [
        [Q_TS.one() + _st(1) + _st(2) + _st(3), -_st(2)],
        [_st(2), Q_TS.one() - _st(1)],
    ])
    tgt = Matrix.diag(truncate_t2(Q_TS.one()).ring,
                      [truncate_t2(Q_TS.one() + _st(1)),
                       truncate_t2(Q_TS.one() - _st(1))])
    _require(a.map_entries(truncate_t2, tgt.ring) == tgt,
             "A reduces to diag(1+st, 1-st) mod t^2")
    _require(a.det() == Q_TS.one(), "det(A) = 1")
    return a


def lift_A_stated_factors() -> list[Matrix]:
    """The four displayed elementary factors next to A.  Their product does
    not reproduce A in either order convention; recorded, not asserted."""
    u = Q_TS.one() + _st(1)
    return [
        Matrix.from_rows(Q_TS, [[1, u], [0, 1]]),
        Matrix.from_rows(Q_TS, [[1, 0], [-u, 1]]),
        Matrix.from_rows(Q_TS, [[1, u], [0, 1]]),
        Matrix.from_rows(Q_TS, [[0, -1], [1, 0]]),
    ]


def double_idempotent_B() -> DoublePair:
    """The idempotent pair (B1, P) over D(Q[t,s], t^2 Q[t,s]) representing
    the clutched module of the unit 1+st."""
    b1 = Matrix.from_rows(Q_TS, [
        [Q_TS.one() - _st(4), -_st(2) * (Q_TS.one() + _st(1) + _st(2) + _st(3))],
        [_st(3) - _st(2), _st(4)],
    ])
    pair = DoublePair(b1, projector_P(), MONOMIAL_T2)
    _require(b1.is_idempotent(), "B1 idempotent")
    _require(pair.second.is_idempotent(), "B2 idempotent")
    _require(pair.validate(), "B1 - B2 entrywise in (t^2)")
    return pair


def clutch_projector(a: Matrix, p: Matrix) -> Matrix:
    """e2 = (A^T)^{-1} P A^T (transposes: the clutching isomorphism acts on
    row vectors)."""
    at = a.transpose()
    e2 = at.inverse() @ p @ at
    _require(e2.is_idempotent(), "conjugated projector idempotent")
    return e2


@dataclass(frozen=True)
class TransportRecord:
    """Bookkeeping stages of the excision transport
    [B] - [P,P]  ->  [e2-P, P] - [0, P]  ->  [P, e2] - [P, P]."""

    relative_pair: DoublePair        # over Q[t,s]
    ideal_part: Matrix               # e2 - P, entries in (t^2)
    integer_part: Matrix             # P
    target_pair: DoublePair          # (P, e2), read over Q[t^2,t^3,s]

    def checks(self) -> dict[str, bool]:
        ideal_ok = all(ideal_member(x, MONOMIAL_T2)
                       for r in self.ideal_part.entries for x in r)
        sub_ok = all(subring_member(x)
                     for r in self.target_pair.second.entries for x in r)
        return {
            "stage1: pair lies in the double ring": self.relative_pair.validate(),
            "stage2: unitized ideal part in (t^2)": ideal_ok,
            "stage3: pair over the t^2,t^3 subring": self.target_pair.validate() and sub_ok,
        }


def excision_transport(b: DoublePair, e2: Matrix) -> TransportRecord:
    rec = TransportRecord(
        relative_pair=b,
        ideal_part=e2 - projector_P(),
        integer_part=projector_P(),
        target_pair=DoublePair(projector_P(), e2, MONOMIAL_T2),
    )
    for name, ok in rec.checks().items():
        _require(ok, name)
    return rec


def loop_z(q: Matrix) -> Matrix:
    """The loop map [Q] -> [I + (z-1)Q], adjoining z as a Laurent variable."""
    if not q.is_idempotent():
        raise ValueError("loop map requires an idempotent matrix")
    ring = q.ring.extend(Var("z", laurent=True))
    z = ring.var("z")
    qz = q.into(ring)
    out = Matrix.identity(ring, q.rows) + qz.scale(z - ring.one())
    inv = Matrix.identity(ring, q.rows) + qz.scale(z.invert() - ring.one())
    _require(out @ inv == Matrix.identity(ring, q.rows),
             "I + (z-1)Q invertible with inverse I + (z^-1 - 1)Q")
    return out


@dataclass(frozen=True)
class K1Rep:
    """Invertible matrix whose class dies under s -> 0."""

    matrix: Matrix

    def verify(self):
        m = self.matrix
        d = m.det()
        _require(d.try_invert() is not None, "determinant a recognized unit")
        _require(m.substitute({"s": 0}) == Matrix.identity(m.ring.drop("s"), m.rows),
                 "s -> 0 yields the identity")
        _require(all(subring_member(x) for r in m.entries for x in r),
                 "entries lie in Q[t^2,t^3,z,z^-1,s]")


def theorem31_matrix() -> K1Rep:
    """End-to-end run producing the 2x2 representative.

    The diag(z,1) factor is removed by scaling the first column by z^-1;
    that is the normalization consistent with the stated final display and
    with the companion blocks below (a row scaling would flip z and z^-1 in
    the off-diagonal entries).
    """
    a = lift_A()
    double_idempotent_B()
    e2 = clutch_projector(a, projector_P())
    excision_transport(double_idempotent_B(), e2)
    loops = loop_z(e2)
    t = loops.col_scale(1, loops.ring.var("z").invert())
    rep = K1Rep(t)
    rep.verify()
    _require(t.det() == t.ring.one(), "det = 1")
    return rep


def e2_display() -> Matrix:
    """The stated form of e2, which carries an s^2t^3 where the conjugation
    yields s^2t^2; kept verbatim for the discrepancy report."""
    s, t = Q_TS.var("s"), Q_TS.var("t")
    return Matrix.from_rows(Q_TS, [
        [Q_TS.one() - _st(4), _st(2) - _st(3)],
        [_st(2) * (Q_TS.one() + _st(1) + s ** 2 * t ** 3 + _st(3)), _st(4)],
    ])


def theorem31_display() -> Matrix:
    """The stated final 2x2 display, verbatim: its (1,1) entry reads
    1 - (1+z^-1)s^4t^4, while the construction yields 1 - (1-z^-1)s^4t^4."""
    ring = Q_TSZ
    one = ring.one()
    s, t, z = ring.var("s"), ring.var("t"), ring.var("z")
    zi = z.invert()
    st = lambda k: s ** k * t ** k
    return Matrix.from_rows(ring, [
        [one - (one + zi) * st(4), (z - one) * (st(2) - st(3))],
        [(one - zi) * st(2) * (one + st(1) + st(2) + st(3)),
         one + (z - one) * st(4)],
    ])


def decompose_M(rep: K1Rep) -> list[Matrix]:
    """Write I - rep as sum_i s^i M_i with the M_i free of s (over Q[t,z,z^-1])."""
    m = Matrix.identity(rep.matrix.ring, rep.matrix.rows) - rep.matrix
    ring = rep.matrix.ring
    s_idx = ring.index("s")
    keep = [k for k, v in enumerate(ring.vars) if k != s_idx]
    tgt = Ring(ring.base, tuple(ring.vars[k] for k in keep))
    degree = 0
    for row in m.entries:
        for p in row:
            for exps in p.terms:
                if exps[s_idx] == 0:
                    raise ValueError("nonzero s-constant term: not an s -> 0 trivial class")
                degree = max(degree, exps[s_idx])
    blocks = []
    for i in range(1, degree + 1):
        rows = []
        for row in m.entries:
            out_row = []
            for p in row:
                terms = {tuple(exps[k] for k in keep): c
                         for exps, c in p.terms.items() if exps[s_idx] == i}
                out_row.append(Poly(tgt, terms))
            rows.append(out_row)
        blocks.append(Matrix.from_rows(tgt, rows))
    return blocks


def higman_companion(blocks: list[Matrix]) -> Matrix:
    """Block companion [[M1 .. Md], [I sub-diagonal]]; verified nilpotent
    of index <= d*n (Cayley-Hamilton bound over a commutative ring)."""
    if not blocks:
        raise ValueError("no blocks")
    ring = blocks[0].ring
    n = blocks[0].rows
    d = len(blocks)
    if any(b.rows != n or b.cols != n or b.ring != ring for b in blocks):
        raise ValueError("blocks must be square, equal-sized, over one ring")
    placements = [(0, k * n, b) for k, b in enumerate(blocks)]
    eye = Matrix.identity(ring, n)
    placements += [(n * (k + 1), n * k, eye) for k in range(d - 1)]
    comp = block_assemble(ring, d * n, d * n, placements)
    if comp.nilpotency_index(d * n) is None:
        raise NotNilpotentError(f"companion is not nilpotent within {d * n} steps")
    return comp


def n10_display() -> Matrix:
    """The stated 10x10 nilpotent companion, verbatim."""
    ring = Q_TZ
    one = ring.one()
    z = ring.var("z")
    zi = z.invert()
    t = lambda k: ring.var("t", k)
    top = {
        (0, 3): (one - z) * t(2), (0, 5): (z - one) * t(3),
        (0, 6): (one - zi) * t(4),
        (1, 2): (zi - one) * t(2), (1, 4): (zi - one) * t(3),
        (1, 6): (zi - one) * t(4), (1, 7): (one - z) * t(4),
        (1, 8): (zi - one) * t(5),
    }
    rows = [[ring.zero()] * 10 for _ in range(10)]
    for (r, c), v in top.items():
        rows[r][c] = v
    for k in range(8):
        rows[k + 2][k] = one
    return Matrix.from_rows(ring, rows)


def generalized_unit_rep(a: Fraction, b: Fraction) -> K1Rep:
    """Run the whole construction starting from the unit a + b*st of
    Q[t,s]/(t^2), a != 0.

    The lift of diag(u, u^{-1}) used is the rank-correction form
    [[u(1+w), -w], [w, v]] with v = a^{-1} - a^{-2} b st and w = 1 - uv;
    for a = b = 1 this is exactly lift_A().  The verification gate, not the
    formula, is the contract: both defining properties are re-checked.
    """
    if a == 0:
        raise ValueError("constant coefficient must be a nonzero rational")
    one = Q_TS.one()
    u = Q_TS.const(a) + Q_TS.const(b) * _st(1)
    v = Q_TS.const(Fraction(1, 1) / a) - Q_TS.const(b / (a * a)) * _st(1)
    w = one - u * v
    lift = Matrix.from_rows(Q_TS, [[u * (one + w), -w], [w, v]])
    _require(lift.det() == one, "generalized lift has det 1")
    red = lift.map_entries(truncate_t2, truncate_t2(one).ring)
    _require(red == Matrix.diag(red.ring, [truncate_t2(u), truncate_t2(v)]),
             "generalized lift reduces to diag(u, u^-1) mod t^2")
    e2 = clutch_projector(lift, projector_P())
    loops = loop_z(e2)
    t = loops.col_scale(1, loops.ring.var("z").invert())
    rep = K1Rep(t)
    rep.verify()
    return rep
