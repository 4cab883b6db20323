"""Formal words in elementary/Steinberg generators x_ij(a), and their
evaluation to matrices.

Words are never rewritten with Steinberg relations; any claimed equality of
words is checked at the evaluation level only.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .matrices import Matrix, elementary
from .rings import (F2E_X, DualF2, NotAUnitError, Poly, Ring,
                    RingMismatchError, poly_terms_from_json,
                    poly_terms_to_json, ring_from_json, ring_to_json)


@dataclass(frozen=True)
class Letter:
    i: int
    j: int
    param: Poly
    inverted: bool = False

    def __post_init__(self):
        if self.i == self.j:
            raise ValueError("generator indices must differ")


@dataclass(frozen=True)
class StWord:
    ring: Ring
    letters: tuple[Letter, ...] = ()

    def __post_init__(self):
        for l in self.letters:
            if l.param.ring != self.ring:
                raise RingMismatchError("letter parameter in wrong ring")

    def __mul__(self, other: "StWord") -> "StWord":
        if self.ring != other.ring:
            raise RingMismatchError("concatenating words over different rings")
        return StWord(self.ring, self.letters + other.letters)

    def __len__(self):
        return len(self.letters)

    def inverse(self) -> "StWord":
        return StWord(self.ring, tuple(
            Letter(l.i, l.j, l.param, not l.inverted)
            for l in reversed(self.letters)))


def word(ring: Ring, letters: Iterable[tuple[int, int, object]]) -> StWord:
    out = []
    for i, j, a in letters:
        if not isinstance(a, Poly):
            a = ring.const(a)
        out.append(Letter(i, j, a))
    return StWord(ring, tuple(out))


def eval_word(w: StWord, n: int) -> Matrix:
    """Ordered product of elementary matrices in GL_n.

    An inverted letter contributes x_ij(-a); no unit condition needed.
    """
    out = Matrix.identity(w.ring, n)
    for l in w.letters:
        if max(l.i, l.j) > n:
            raise ValueError(f"letter index {max(l.i, l.j)} exceeds size {n}")
        a = -l.param if l.inverted else l.param
        out = out @ elementary(w.ring, n, l.i, l.j, a)
    return out


def expand_h(i: int, j: int, a: Poly) -> StWord:
    """h_ij(a) = x_ij(a) x_ji(-a^{-1}) x_ij(a) x_ij(-1) x_ji(1) x_ij(-1);
    evaluates to the diagonal matrix with a at i and a^{-1} at j."""
    ring = a.ring
    ainv = a.try_invert()
    if ainv is None:
        raise NotAUnitError(f"h_ij needs a unit, got {a}")
    one = ring.one()
    return word(ring, [
        (i, j, a), (j, i, -ainv), (i, j, a),
        (i, j, -one), (j, i, one), (i, j, -one),
    ])


def dennis_stein_word(i: int, j: int, a: Poly, b: Poly) -> StWord:
    """The symbol <a, b>, defined when 1 - ab is a unit:

        x_ji(-b(1-ab)^{-1}) x_ij(-a) x_ji(b) x_ij((1-ab)^{-1} a) h_ij(1-ab)^{-1}

    Its evaluation in GL is always the identity matrix.
    """
    ring = a.ring
    u = ring.one() - a * b
    uinv = u.try_invert()
    if uinv is None:
        raise NotAUnitError(f"1 - ab = {u} is not a recognized unit")
    head = word(ring, [
        (j, i, -(b * uinv)), (i, j, -a), (j, i, b), (i, j, uinv * a),
    ])
    return head * expand_h(i, j, u).inverse()


def _eps_x():
    eps = F2E_X.const(DualF2(0, 1))
    x = F2E_X.var("x")
    return eps, x


def dual_symbol_word() -> StWord:
    """<eps, x + eps> over F2[eps,x]/(eps^2), with (i, j) = (1, 2)."""
    eps, x = _eps_x()
    return dennis_stein_word(1, 2, eps, x + eps)


def reduced_X_word() -> StWord:
    """The relation-reduced form of <eps, x + eps>:

        x_21(-x-eps-eps x^2) x_12(-eps) x_21(x+eps) x_12(eps) h_12(1-eps x)^{-1}
    """
    eps, x = _eps_x()
    head = word(F2E_X, [
        (2, 1, -x - eps - eps * x * x), (1, 2, -eps),
        (2, 1, x + eps), (1, 2, eps),
    ])
    return head * expand_h(1, 2, F2E_X.one() - eps * x).inverse()


# ---------------------------------------------------------------------------
# serialization


def word_to_json(w: StWord) -> dict:
    return {
        "ring": ring_to_json(w.ring),
        "letters": [{"i": l.i, "j": l.j, "param": poly_terms_to_json(l.param),
                     "inverted": l.inverted} for l in w.letters],
    }


def word_from_json(j: dict) -> StWord:
    ring = ring_from_json(j["ring"])
    return StWord(ring, tuple(
        Letter(l["i"], l["j"], poly_terms_from_json(ring, l["param"]),
               l.get("inverted", False))
        for l in j["letters"]))
