"""Comonoids, comodules, maps over comonoid maps, and corestriction.

A comodule is carried by one class with an optional left and an optional
right coaction; one-sided comodules just leave the other side empty.  All
law checks return a `Report` with the evaluated paths of each failed diagram.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import CheckFailed, InducedMapMismatch
from .monoidal import (Backend, Mor, Obj, braiding, compose, identity,
                       tensor_mor, tensor_obj, unit_obj)
from .reports import Report


@dataclass(frozen=True, eq=False)
class Comonoid:
    """A counital coassociative comonoid (C, delta, epsilon)."""

    carrier: Obj
    delta: Mor     # C -> C⊗C
    epsilon: Mor   # C -> 1

    def __post_init__(self):
        assert self.delta.dom.size == self.carrier.size
        assert self.delta.cod.size == self.carrier.size ** 2
        assert self.epsilon.dom.size == self.carrier.size
        assert self.epsilon.cod.size == 1

    @property
    def backend(self) -> Backend:
        return self.carrier.backend

    def __eq__(self, other):
        """Structural equality: same labels and the same structure payloads."""
        if not isinstance(other, Comonoid):
            return NotImplemented
        return (self.carrier == other.carrier
                and self.delta == other.delta
                and self.epsilon == other.epsilon)

    def __repr__(self):
        return f"Comonoid({list(self.carrier.labels)})"


def unit_comonoid(backend: Backend) -> Comonoid:
    one = unit_obj(backend)
    return Comonoid(one, Mor.identity(one), Mor.identity(one))


def grouplike_comonoid(carrier: Obj) -> Comonoid:
    """delta(x) = x⊗x and epsilon = 1 on every basis label.

    Over a finite set this is the unique (diagonal) comonoid structure.
    """
    n = carrier.size
    cc = tensor_obj(carrier, carrier)
    one = unit_obj(carrier.backend)
    if carrier.backend.kind == "finset":
        delta = Mor(carrier, cc, tuple(i * n + i for i in range(n)))
        eps = Mor(carrier, one, (0,) * n)
    else:
        fld = carrier.backend.field
        rows = [[fld.one if r == i * n + i else fld.zero for i in range(n)]
                for r in range(n * n)]
        delta = Mor.from_matrix(carrier, cc, rows)
        eps = Mor.from_matrix(carrier, one, [[fld.one] * n])
    return Comonoid(carrier, delta, eps)


def tensor_comonoid(c: Comonoid, d: Comonoid) -> Comonoid:
    """The comonoid on C⊗D with the braiding-reshuffled comultiplication."""
    mid = tensor_mor(tensor_mor(identity(c.carrier), braiding(c.carrier, d.carrier)),
                     identity(d.carrier))
    delta = compose(mid, tensor_mor(c.delta, d.delta))
    epsilon = tensor_mor(c.epsilon, d.epsilon)
    return Comonoid(tensor_obj(c.carrier, d.carrier), delta, epsilon)


def check_comonoid(c: Comonoid) -> Report:
    report = Report()
    i = identity(c.carrier)
    report.compare("comonoid/coassoc",
                   compose(tensor_mor(c.delta, i), c.delta),
                   compose(tensor_mor(i, c.delta), c.delta))
    report.compare("comonoid/counit-left", compose(tensor_mor(c.epsilon, i), c.delta), i)
    report.compare("comonoid/counit-right", compose(tensor_mor(i, c.epsilon), c.delta), i)
    return report


def is_cocommutative(c: Comonoid) -> bool:
    return compose(braiding(c.carrier, c.carrier), c.delta) == c.delta


def check_comonoid_map(q: Mor, src: Comonoid, dst: Comonoid) -> Report:
    report = Report()
    report.compare("comonoid-map/delta",
                   compose(dst.delta, q),
                   compose(tensor_mor(q, q), src.delta))
    report.compare("comonoid-map/epsilon", compose(dst.epsilon, q), src.epsilon)
    return report


def require(report: Report, what: str):
    if not report.ok:
        raise CheckFailed(f"{what}: {report.failure_names()}", report)


@dataclass(frozen=True, eq=False)
class Comodule:
    """A carrier with an optional left and an optional right coaction.

    `left` is (B, lam) with lam: M -> B⊗M, `right` is (D, rho) with
    rho: M -> M⊗D.  A bicomodule has both.
    """

    carrier: Obj
    left: tuple[Comonoid, Mor] | None = None
    right: tuple[Comonoid, Mor] | None = None

    def __post_init__(self):
        if self.left is not None:
            b, lam = self.left
            assert lam.dom.size == self.carrier.size
            assert lam.cod.size == b.carrier.size * self.carrier.size
        if self.right is not None:
            d, rho = self.right
            assert rho.dom.size == self.carrier.size
            assert rho.cod.size == self.carrier.size * d.carrier.size

    @property
    def backend(self) -> Backend:
        return self.carrier.backend

    @property
    def left_over(self) -> Comonoid:
        return self.left[0]

    @property
    def lam(self) -> Mor:
        return self.left[1]

    @property
    def right_over(self) -> Comonoid:
        return self.right[0]

    @property
    def rho(self) -> Mor:
        return self.right[1]

    def with_left(self, over: Comonoid, lam: Mor) -> "Comodule":
        return Comodule(self.carrier, (over, lam), self.right)

    def with_right(self, over: Comonoid, rho: Mor) -> "Comodule":
        return Comodule(self.carrier, self.left, (over, rho))


def right_comodule(carrier: Obj, over: Comonoid, rho: Mor) -> Comodule:
    return Comodule(carrier, right=(over, rho))


def left_comodule(carrier: Obj, over: Comonoid, lam: Mor) -> Comodule:
    return Comodule(carrier, left=(over, lam))


def bicomodule(carrier: Obj, left_over: Comonoid, lam: Mor,
               right_over: Comonoid, rho: Mor) -> Comodule:
    return Comodule(carrier, (left_over, lam), (right_over, rho))


def comonoid_as_bicomodule(c: Comonoid) -> Comodule:
    """C over itself on both sides, both coactions the comultiplication."""
    return bicomodule(c.carrier, c, c.delta, c, c.delta)


def check_comodule(m: Comodule) -> Report:
    report = Report()
    i = identity(m.carrier)
    if m.right is not None:
        d, rho = m.right
        report.compare("comodule/right-counit",
                       compose(tensor_mor(i, d.epsilon), rho), i)
        report.compare("comodule/right-coassoc",
                       compose(tensor_mor(rho, identity(d.carrier)), rho),
                       compose(tensor_mor(i, d.delta), rho))
    if m.left is not None:
        b, lam = m.left
        report.compare("comodule/left-counit",
                       compose(tensor_mor(b.epsilon, i), lam), i)
        report.compare("comodule/left-coassoc",
                       compose(tensor_mor(identity(b.carrier), lam), lam),
                       compose(tensor_mor(b.delta, i), lam))
    if m.left is not None and m.right is not None:
        report.compare("comodule/bicompat",
                       compose(tensor_mor(m.lam, identity(m.right_over.carrier)), m.rho),
                       compose(tensor_mor(identity(m.left_over.carrier), m.rho), m.lam))
    return report


def check_map_over(phi: Mor, f: Mor, m: Comodule, n: Comodule) -> Report:
    """Right comodule map square over a comonoid map f."""
    report = Report()
    report.compare("map-over/right",
                   compose(n.rho, phi),
                   compose(tensor_mor(phi, f), m.rho))
    return report


def check_map_over_left(phi: Mor, f: Mor, m: Comodule, n: Comodule) -> Report:
    """Mirror square for left comodules; reconstructed orientation."""
    report = Report()
    report.compare("map-over/left",
                   compose(n.lam, phi),
                   compose(tensor_mor(f, phi), m.lam))
    return report


def check_map_over_bi(phi: Mor, f: Mor, g: Mor, m: Comodule, n: Comodule) -> Report:
    """Bicomodule map over (f, g): the left square over f, the right over g."""
    report = Report()
    report.merge(check_map_over_left(phi, f, m, n))
    report.merge(check_map_over(phi, g, m, n))
    return report


def corestrict(f: Mor, m: Comodule, src: Comonoid, dst: Comonoid) -> Comodule:
    """Push the right coaction forward along a comonoid map f: src -> dst."""
    require(check_comonoid_map(f, src, dst), "corestrict: f is not a comonoid map")
    assert m.right is not None and m.right_over == src
    rho = compose(tensor_mor(identity(m.carrier), f), m.rho)
    return m.with_right(dst, rho)


def corestrict_left(f: Mor, m: Comodule, src: Comonoid, dst: Comonoid) -> Comodule:
    require(check_comonoid_map(f, src, dst), "corestrict_left: f is not a comonoid map")
    assert m.left is not None and m.left_over == src
    lam = compose(tensor_mor(f, identity(m.carrier)), m.lam)
    return m.with_left(dst, lam)


def coaction_from_comonoid_map(q: Mor, c: Comonoid, d: Comonoid) -> Comodule:
    """The right D-coaction (id⊗q).delta on the carrier of C."""
    require(check_comonoid_map(q, c, d), "coaction_from_comonoid_map: q is not a comonoid map")
    p = compose(tensor_mor(identity(c.carrier), q), c.delta)
    m = right_comodule(c.carrier, d, p)
    require(check_comodule(m), "induced coaction fails comodule laws")
    return m


def comonoid_map_from_coaction(c: Comonoid, d: Comonoid, p: Mor) -> Mor:
    """Extract q = (epsilon⊗id).p from a right coaction and verify the round trip."""
    q = compose(tensor_mor(c.epsilon, identity(d.carrier)), p)
    back = compose(tensor_mor(identity(c.carrier), q), c.delta)
    if back != p:
        raise InducedMapMismatch("coaction is not induced by any comonoid map")
    return q


def comonoid_map_from_left_coaction(c: Comonoid, d: Comonoid, lam: Mor) -> Mor:
    """Mirror extraction q = (id⊗epsilon).lam for a left coaction."""
    q = compose(tensor_mor(identity(d.carrier), c.epsilon), lam)
    back = compose(tensor_mor(q, identity(c.carrier)), c.delta)
    if back != lam:
        raise InducedMapMismatch("left coaction is not induced by any comonoid map")
    return q


def check_coaction_is_comonoid_map(p: Mor, c: Comonoid, d: Comonoid) -> Report:
    """Both equivalent readings of a coaction being a comonoid map.

    (i) p: C -> C⊗D preserves comultiplication and counit;
    (ii) delta is a comodule map over d, with the tensor coaction on C⊗C.
    The two verdicts must agree; disagreement is flagged as an internal error.
    """
    report = Report()
    cd = tensor_comonoid(c, d)
    rep_i = check_comonoid_map(p, c, cd)
    ic, idm = identity(c.carrier), identity(d.carrier)
    rho_cc = compose(tensor_mor(tensor_mor(ic, braiding(d.carrier, c.carrier)), idm),
                     tensor_mor(p, p))
    rep_ii = Report()
    rep_ii.compare("delta-over-d",
                   compose(rho_cc, c.delta),
                   compose(tensor_mor(c.delta, d.delta), p))
    report.merge(rep_i, "coaction-comonoid-map")
    report.merge(rep_ii, "coaction-comonoid-map")
    if rep_i.ok != rep_ii.ok:
        report.fail("coaction-comonoid-map/equivalence",
                    detail="the two equivalent conditions disagree; internal error")
    else:
        report.record("coaction-comonoid-map/equivalence")
    return report


def check_coaction_over_cocomm(m: Comodule) -> Report:
    """Over a cocommutative comonoid, a right coaction is a map over delta."""
    report = Report()
    d, rho = m.right
    if not report.require("coaction-over-cocomm/precondition", is_cocommutative(d),
                          "base comonoid is not cocommutative"):
        return report
    i = identity(m.carrier)
    ic = identity(d.carrier)
    rho_mc = compose(tensor_mor(tensor_mor(i, braiding(d.carrier, d.carrier)), ic),
                     tensor_mor(rho, d.delta))
    report.compare("coaction-over-cocomm/square",
                   compose(rho_mc, rho),
                   compose(tensor_mor(rho, d.delta), rho))
    return report


def tensor_comodules(m1: Comodule, m2: Comodule) -> Comodule:
    """Tensor of comodules, with the braiding-reshuffled tensor coactions."""
    from .monoidal import tensor_obj
    carrier = tensor_obj(m1.carrier, m2.carrier)
    left = None
    right = None
    if m1.left is not None and m2.left is not None:
        b1, l1 = m1.left
        b2, l2 = m2.left
        mid = tensor_mor(tensor_mor(identity(b1.carrier), braiding(m1.carrier, b2.carrier)),
                         identity(m2.carrier))
        lam = compose(mid, tensor_mor(l1, l2))
        left = (tensor_comonoid(b1, b2), lam)
    if m1.right is not None and m2.right is not None:
        d1, r1 = m1.right
        d2, r2 = m2.right
        mid = tensor_mor(tensor_mor(identity(m1.carrier), braiding(d1.carrier, m2.carrier)),
                         identity(d2.carrier))
        rho = compose(mid, tensor_mor(r1, r2))
        right = (tensor_comonoid(d1, d2), rho)
    out = Comodule(carrier, left, right)
    return out
