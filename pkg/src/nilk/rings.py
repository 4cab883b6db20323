"""Exact arithmetic for the ring tower used by the NK1 constructions.

Every element is a multivariate (optionally Laurent) polynomial over one of
a handful of exact coefficient domains:

    Q    rationals
    Z    integers
    Zi   Gaussian integers  a + b*i
    Z4   group ring Z[Z/4]  c0 + c1*sigma + c2*sigma^2 + c3*sigma^3
    F2   field with two elements
    F2e  dual numbers over F2:  a + b*eps, eps^2 = 0

Quotients (eps^2 = 0, sigma^4 = 1, mod-2 coefficients, t-degree truncation)
are enforced by normalization after every operation.  Polynomials are kept
in canonical form: no zero coefficients, fixed variable order, so equality
is literal equality of term maps.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Mapping, Optional


class RingMismatchError(ValueError):
    """Operands belong to different rings."""


class NotAUnitError(ValueError):
    """An inverse was required but the element is not a recognized unit."""


# ---------------------------------------------------------------------------
# coefficient domains


@dataclass(frozen=True)
class GaussianInt:
    re: int = 0
    im: int = 0

    def _coerce(self, other):
        if isinstance(other, int):
            return GaussianInt(other, 0)
        if isinstance(other, GaussianInt):
            return other
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianInt(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussianInt(-self.re, -self.im)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianInt(self.re * o.re - self.im * o.im,
                           self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __str__(self):
        return f"({self.re}{self.im:+}i)"


@dataclass(frozen=True)
class GroupRingZ4:
    """Integer group ring of the cyclic group of order 4, generator sigma."""

    c0: int = 0
    c1: int = 0
    c2: int = 0
    c3: int = 0

    def _coerce(self, other):
        if isinstance(other, int):
            return GroupRingZ4(other, 0, 0, 0)
        if isinstance(other, GroupRingZ4):
            return other
        return None

    def coeffs(self):
        return (self.c0, self.c1, self.c2, self.c3)

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs(), o.coeffs()
        return GroupRingZ4(*(x + y for x, y in zip(a, b)))

    __radd__ = __add__

    def __neg__(self):
        return GroupRingZ4(*(-x for x in self.coeffs()))

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs(), o.coeffs()
        out = [0, 0, 0, 0]
        for i in range(4):
            if a[i]:
                for j in range(4):
                    out[(i + j) % 4] += a[i] * b[j]
        return GroupRingZ4(*out)

    __rmul__ = __mul__

    def __str__(self):
        parts = []
        for k, c in enumerate(self.coeffs()):
            if c:
                parts.append(f"{c:+}" + ("" if k == 0 else f"σ^{k}" if k > 1 else "σ"))
        return "(" + ("".join(parts) or "0") + ")"


@dataclass(frozen=True)
class DualF2:
    """a + b*eps over F2, with eps^2 = 0."""

    a: int = 0
    b: int = 0

    def __post_init__(self):
        object.__setattr__(self, "a", self.a % 2)
        object.__setattr__(self, "b", self.b % 2)

    def _coerce(self, other):
        if isinstance(other, int):
            return DualF2(other, 0)
        if isinstance(other, DualF2):
            return other
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return DualF2(self.a ^ o.a, self.b ^ o.b)

    __radd__ = __add__

    def __neg__(self):
        return self

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + o

    __rsub__ = __sub__

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return DualF2(self.a & o.a, (self.a & o.b) ^ (self.b & o.a))

    __rmul__ = __mul__

    def __str__(self):
        return {(0, 0): "0", (1, 0): "1", (0, 1): "ε", (1, 1): "(1+ε)"}[(self.a, self.b)]


def _invert_q(c):
    return Fraction(1, 1) / c if c else None


def _invert_z(c):
    return c if c in (1, -1) else None


def _invert_zi(c):
    if c.re * c.re + c.im * c.im == 1:
        return GaussianInt(c.re, -c.im)
    return None


def _invert_z4(c):
    # only the trivial units +/- sigma^k are recognized
    nz = [(k, v) for k, v in enumerate(c.coeffs()) if v]
    if len(nz) == 1 and nz[0][1] in (1, -1):
        k, v = nz[0]
        out = [0, 0, 0, 0]
        out[(4 - k) % 4] = v
        return GroupRingZ4(*out)
    return None


def _invert_f2(c):
    return 1 if c == 1 else None


def _invert_f2e(c):
    return c if c.a == 1 else None  # (1+b*eps)^2 = 1


@dataclass(frozen=True)
class BaseOps:
    tag: str
    zero: object
    one: object
    from_int: Callable
    invert: Callable
    to_json: Callable
    from_json: Callable


BASE: dict[str, BaseOps] = {
    "Q": BaseOps("Q", Fraction(0), Fraction(1), Fraction, _invert_q,
                 lambda c: f"{c.numerator}/{c.denominator}",
                 lambda j: Fraction(j)),
    "Z": BaseOps("Z", 0, 1, int, _invert_z,
                 lambda c: str(c), lambda j: int(j)),
    "Zi": BaseOps("Zi", GaussianInt(), GaussianInt(1), lambda n: GaussianInt(n, 0),
                  _invert_zi,
                  lambda c: [c.re, c.im], lambda j: GaussianInt(int(j[0]), int(j[1]))),
    "Z4": BaseOps("Z4", GroupRingZ4(), GroupRingZ4(1), lambda n: GroupRingZ4(n, 0, 0, 0),
                  _invert_z4,
                  lambda c: list(c.coeffs()),
                  lambda j: GroupRingZ4(*(int(x) for x in j))),
    "F2": BaseOps("F2", 0, 1, lambda n: n % 2, _invert_f2,
                  lambda c: c, lambda j: int(j) % 2),
    "F2e": BaseOps("F2e", DualF2(), DualF2(1), lambda n: DualF2(n, 0), _invert_f2e,
                   lambda c: [c.a, c.b], lambda j: DualF2(int(j[0]), int(j[1]))),
}


# ---------------------------------------------------------------------------
# rings and polynomials


@dataclass(frozen=True)
class Var:
    name: str
    laurent: bool = False
    trunc: Optional[int] = None  # exponents >= trunc are discarded


@dataclass(frozen=True)
class Ring:
    base: str
    vars: tuple[Var, ...] = ()

    def __post_init__(self):
        if self.base not in BASE:
            raise ValueError(f"unknown base ring {self.base!r}")

    @property
    def ops(self) -> BaseOps:
        return BASE[self.base]

    def index(self, name: str) -> int:
        for k, v in enumerate(self.vars):
            if v.name == name:
                return k
        raise KeyError(f"no variable {name!r} in {self}")

    def const(self, c) -> "Poly":
        if isinstance(c, int):
            c = self.ops.from_int(c)
        return Poly(self, {(0,) * len(self.vars): c})

    def zero(self) -> "Poly":
        return Poly(self, {})

    def one(self) -> "Poly":
        return self.const(self.ops.one)

    def var(self, name: str, power: int = 1) -> "Poly":
        k = self.index(name)
        exps = [0] * len(self.vars)
        exps[k] = power
        return Poly(self, {tuple(exps): self.ops.one})

    def extend(self, *new_vars: Var) -> "Ring":
        return Ring(self.base, self.vars + tuple(new_vars))

    def drop(self, name: str) -> "Ring":
        return Ring(self.base, tuple(v for v in self.vars if v.name != name))

    def __str__(self):
        vs = ",".join(v.name + ("±" if v.laurent else "") +
                      (f"<{v.trunc}" if v.trunc is not None else "")
                      for v in self.vars)
        return f"{self.base}[{vs}]"


class Poly:
    """Canonical-form polynomial; immutable; equality is term-map equality."""

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: Ring, terms: Mapping[tuple, object]):
        ops = ring.ops
        nvars = len(ring.vars)
        clean = {}
        for exps, c in terms.items():
            exps = tuple(exps)
            if len(exps) != nvars:
                raise ValueError("exponent vector has wrong length")
            keep = True
            for e, v in zip(exps, ring.vars):
                if e < 0 and not v.laurent:
                    raise ValueError(f"negative exponent for ordinary variable {v.name}")
                if v.trunc is not None and e >= v.trunc:
                    keep = False
                    break
            if not keep:
                continue
            if isinstance(c, int) and ring.base != "Z":
                c = ops.from_int(c)
            if c == ops.zero:
                continue
            clean[exps] = c
        self.ring = ring
        self.terms = clean
        self._hash = None

    # -- basics

    def is_zero(self) -> bool:
        return not self.terms

    def constant_term(self):
        return self.terms.get((0,) * len(self.ring.vars), self.ring.ops.zero)

    def _coerce(self, other):
        if isinstance(other, Poly):
            if other.ring != self.ring:
                raise RingMismatchError(f"{other.ring} vs {self.ring}")
            return other
        if isinstance(other, (int, Fraction, GaussianInt, GroupRingZ4, DualF2)):
            return self.ring.const(other)
        return None

    def __eq__(self, other):
        o = self._coerce(other) if not isinstance(other, Poly) else other
        if o is None or not isinstance(o, Poly):
            return NotImplemented
        return self.ring == o.ring and self.terms == o.terms

    def __hash__(self):
        if self._hash is None:
            items = frozenset(self.terms.items())
            self._hash = hash((self.ring, items))
        return self._hash

    # -- arithmetic

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out = dict(self.terms)
        for e, c in o.terms.items():
            out[e] = out.get(e, self.ring.ops.zero) + c
        return Poly(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.ring, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        ring = self.ring
        zero = ring.ops.zero
        out: dict[tuple, object] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in o.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, zero) + c1 * c2
        return Poly(ring, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            inv = self.try_invert()
            if inv is None:
                raise NotAUnitError(f"cannot raise non-unit {self} to power {n}")
            return inv ** (-n)
        out = self.ring.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # -- units

    def try_invert(self) -> Optional["Poly"]:
        """Inverse, or None.  Recognizes unit monomials (Laurent units) and
        constant-plus-nilpotent elements via truncated geometric series."""
        ring = self.ring
        ops = ring.ops
        if self.is_zero():
            return None
        if len(self.terms) == 1:
            (exps, c), = self.terms.items()
            cinv = ops.invert(c)
            if cinv is None:
                return None
            if any(e != 0 and not v.laurent for e, v in zip(exps, ring.vars)):
                return None
            return Poly(ring, {tuple(-e for e in exps): cinv})
        c = self.terms.get((0,) * len(ring.vars))
        if c is None:
            return None
        cinv = ops.invert(c)
        if cinv is None:
            return None
        cinv_p = ring.const(cinv)
        m = -(cinv_p * (self - ring.const(c)))
        acc = ring.one()
        power = ring.one()
        for _ in range(64):
            power = power * m
            if power.is_zero():
                break
            acc = acc + power
        else:
            return None
        q = cinv_p * acc
        return q if self * q == ring.one() else None

    def invert(self) -> "Poly":
        inv = self.try_invert()
        if inv is None:
            raise NotAUnitError(f"{self} is not a recognized unit of {self.ring}")
        return inv

    # -- structure maps

    def into(self, ring: Ring) -> "Poly":
        """Re-express in a ring containing (at least) the same variables."""
        if ring.base != self.ring.base:
            raise RingMismatchError(f"base {self.ring.base} vs {ring.base}")
        pos = [ring.index(v.name) for v in self.ring.vars]
        out = {}
        for exps, c in self.terms.items():
            e = [0] * len(ring.vars)
            for p, x in zip(pos, exps):
                e[p] = x
            out[tuple(e)] = c
        return Poly(ring, out)

    def substitute(self, assignments: Mapping[str, object],
                   target: Optional[Ring] = None) -> "Poly":
        """Homomorphic evaluation of some variables.

        Unassigned variables must exist in the target ring; a Laurent
        variable with a negative exponent needs a unit image.
        """
        ring = self.ring
        if target is None:
            target = ring
            for name in assignments:
                target = target.drop(name)
        images: list[Poly] = []
        for v in ring.vars:
            if v.name in assignments:
                val = assignments[v.name]
                if not isinstance(val, Poly):
                    val = target.const(val)
                elif val.ring != target:
                    raise RingMismatchError("substitution image in wrong ring")
                images.append(val)
            else:
                images.append(target.var(v.name))
        out = target.zero()
        for exps, c in self.terms.items():
            term = target.const(c)
            for img, e in zip(images, exps):
                if e:
                    term = term * img ** e
            out = out + term
        return out

    def derivative(self, name: str) -> "Poly":
        k = self.ring.index(name)
        if self.ring.vars[k].laurent:
            raise ValueError(f"formal derivative in Laurent variable {name} unsupported")
        out = {}
        for exps, c in self.terms.items():
            e = exps[k]
            if e == 0:
                continue
            ne = list(exps)
            ne[k] = e - 1
            out[tuple(ne)] = self.ring.ops.from_int(e) * c
        return Poly(self.ring, out)

    def coefficient_map(self, f: Callable, target: Ring) -> "Poly":
        """Apply f to every coefficient, reinterpreting in target (same vars)."""
        if [v.name for v in target.vars] != [v.name for v in self.ring.vars]:
            raise RingMismatchError("coefficient_map requires identical variables")
        return Poly(target, {e: f(c) for e, c in self.terms.items()})

    # -- display

    def sorted_terms(self):
        return sorted(self.terms.items())

    def __str__(self):
        if self.is_zero():
            return "0"
        names = [v.name for v in self.ring.vars]
        parts = []
        for exps, c in self.sorted_terms():
            factors = [f"{n}^{e}" if e != 1 else n
                       for n, e in zip(names, exps) if e]
            cs = str(c)
            if factors and cs in ("1", "1/1", "(1+0i)", "(+1)"):
                parts.append("*".join(factors))
            elif factors:
                parts.append(cs + "*" + "*".join(factors))
            else:
                parts.append(cs)
        return " + ".join(parts)

    __repr__ = __str__


# ---------------------------------------------------------------------------
# the named operations of the module surface


def add(a: Poly, b: Poly) -> Poly:
    return a + b


def sub(a: Poly, b: Poly) -> Poly:
    return a - b


def mul(a: Poly, b: Poly) -> Poly:
    return a * b


def neg(a: Poly) -> Poly:
    return -a


def try_invert(a: Poly) -> Optional[Poly]:
    return a.try_invert()


def substitute(p: Poly, assignments, target: Optional[Ring] = None) -> Poly:
    return p.substitute(assignments, target)


def formal_derivative(p: Poly, name: str) -> Poly:
    return p.derivative(name)


# ---------------------------------------------------------------------------
# homomorphisms


def truncate_t2(p: Poly) -> Poly:
    """Quotient map from Q[t,...] onto the t-degree < 2 normal form."""
    src = p.ring
    k = src.index("t")
    if src.vars[k].trunc is not None:
        return p
    tgt = Ring(src.base, tuple(
        Var(v.name, v.laurent, 2 if v.name == "t" else v.trunc) for v in src.vars))
    return Poly(tgt, dict(p.terms))


def gauss_from_group_ring(c: GroupRingZ4) -> GaussianInt:
    return GaussianInt(c.c0 - c.c2, c.c1 - c.c3)


def group_ring_from_gauss(c: GaussianInt) -> GroupRingZ4:
    """Canonical lift a + b*i -> a + b*sigma."""
    return GroupRingZ4(c.re, c.im, 0, 0)


def dual_from_gauss(c: GaussianInt) -> DualF2:
    # i -> 1 + eps, coefficients mod 2
    return DualF2(c.re + c.im, c.im)


def psi(p: Poly) -> Poly:
    """Z[Z/4][vars] -> Z[i][vars], sigma -> i."""
    if p.ring.base != "Z4":
        raise RingMismatchError("psi expects a Z[Z/4] coefficient ring")
    return p.coefficient_map(gauss_from_group_ring, Ring("Zi", p.ring.vars))


def rho(p: Poly) -> Poly:
    """Z[i][vars] -> F2[eps][vars]/(eps^2), i -> 1 + eps."""
    if p.ring.base != "Zi":
        raise RingMismatchError("rho expects a Z[i] coefficient ring")
    return p.coefficient_map(dual_from_gauss, Ring("F2e", p.ring.vars))


HOMS: dict[str, Callable[[Poly], Poly]] = {
    "pi_t2": truncate_t2,
    "psi": psi,
    "rho": rho,
}


def hom_apply(name: str, p: Poly) -> Poly:
    try:
        h = HOMS[name]
    except KeyError:
        raise KeyError(f"unknown homomorphism {name!r}") from None
    return h(p)


# ---------------------------------------------------------------------------
# ideals and the index-2 monomial subring


@dataclass(frozen=True)
class IdealSpec:
    kind: str  # "t2" | "two" | "one_minus_sigma_sq"


MONOMIAL_T2 = IdealSpec("t2")
PRINCIPAL_TWO = IdealSpec("two")
PRINCIPAL_ONE_MINUS_SIGMA_SQ = IdealSpec("one_minus_sigma_sq")


def ideal_member(p: Poly, ideal: IdealSpec) -> bool:
    if ideal.kind == "t2":
        if p.ring.base != "Q":
            raise RingMismatchError("the (t^2) ideal lives over Q[t,...]")
        k = p.ring.index("t")
        return all(exps[k] >= 2 for exps in p.terms)
    if ideal.kind == "two":
        if p.ring.base != "Zi":
            raise RingMismatchError("the ideal (2) lives over Z[i][...]")
        return all(c.re % 2 == 0 and c.im % 2 == 0 for c in p.terms.values())
    if ideal.kind == "one_minus_sigma_sq":
        if p.ring.base != "Z4":
            raise RingMismatchError("the ideal (1-sigma^2) lives over Z[Z/4][...]")
        return all(c.c2 == -c.c0 and c.c3 == -c.c1 for c in p.terms.values())
    raise ValueError(f"unknown ideal {ideal.kind!r}")


def subring_member(p: Poly, var: str = "t") -> bool:
    """True iff no stored monomial has the given exponent exactly 1
    (membership in Q[t^2,t^3,...] inside Q[t,...])."""
    k = p.ring.index(var)
    return all(exps[k] != 1 for exps in p.terms)


# ---------------------------------------------------------------------------
# serialization


def ring_to_json(ring: Ring) -> dict:
    vs = []
    for v in ring.vars:
        d = {"name": v.name, "laurent": v.laurent}
        if v.trunc is not None:
            d["trunc"] = v.trunc
        vs.append(d)
    return {"base": ring.base, "vars": vs}


def ring_from_json(j: dict) -> Ring:
    return Ring(j["base"], tuple(
        Var(v["name"], v.get("laurent", False), v.get("trunc")) for v in j["vars"]))


def poly_terms_to_json(p: Poly) -> list:
    enc = p.ring.ops.to_json
    return [[list(exps), enc(c)] for exps, c in p.sorted_terms()]


def poly_terms_from_json(ring: Ring, j: list) -> Poly:
    dec = ring.ops.from_json
    return Poly(ring, {tuple(exps): dec(c) for exps, c in j})


def poly_to_json(p: Poly) -> dict:
    return {"ring": ring_to_json(p.ring), "terms": poly_terms_to_json(p)}


def poly_from_json(j: dict) -> Poly:
    return poly_terms_from_json(ring_from_json(j["ring"]), j["terms"])


_COEFF_LATEX = {
    "Q": lambda c: (str(c.numerator) if c.denominator == 1
                    else rf"\tfrac{{{c.numerator}}}{{{c.denominator}}}"),
    "Z": str,
    "Zi": lambda c: f"({c.re}{c.im:+}i)",
    "Z4": lambda c: "(" + "+".join(
        f"{v}" + ("" if k == 0 else rf"\sigma^{{{k}}}" if k > 1 else r"\sigma")
        for k, v in enumerate(c.coeffs()) if v).replace("+-", "-") + ")",
    "F2": str,
    "F2e": lambda c: {(0, 0): "0", (1, 0): "1", (0, 1): r"\epsilon",
                      (1, 1): r"(1+\epsilon)"}[(c.a, c.b)],
}


def poly_latex(p: Poly) -> str:
    if p.is_zero():
        return "0"
    names = [v.name for v in p.ring.vars]
    coeff = _COEFF_LATEX[p.ring.base]
    parts = []
    for exps, c in p.sorted_terms():
        mono = "".join(f"{n}^{{{e}}}" if e != 1 else n
                       for n, e in zip(names, exps) if e)
        cs = coeff(c)
        if mono and cs == "1":
            parts.append(mono)
        elif mono and cs == "-1":
            parts.append("-" + mono)
        else:
            parts.append(cs + mono)
    out = parts[0]
    for q in parts[1:]:
        out += q if q.startswith("-") else "+" + q
    return out


# ---------------------------------------------------------------------------
# the rings the constructions live in (global variable order t, s, z, x)

Q_TS = Ring("Q", (Var("t"), Var("s")))
Q_TS_MOD_T2 = Ring("Q", (Var("t", trunc=2), Var("s")))
Q_TSZ = Ring("Q", (Var("t"), Var("s"), Var("z", laurent=True)))
Q_TZ = Ring("Q", (Var("t"), Var("z", laurent=True)))
ZI_X = Ring("Zi", (Var("x"),))
Z4_X = Ring("Z4", (Var("x"),))
F2E_X = Ring("F2e", (Var("x"),))
F2_X = Ring("F2", (Var("x"),))
