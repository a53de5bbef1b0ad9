"""Internal categories, internal functors, and comonoidal internal categories.

An internal category is a comonoid of objects together with a bicomodule of
arrows, a unit and a composition defined on the cotensor square of the
arrows.  Constructors verify their outputs eagerly; downstream constructions
silently assume these laws, so failures are raised at the door.
"""

from __future__ import annotations

from dataclasses import dataclass

from .coalgebra import (Comodule, Comonoid, bicomodule, check_comodule,
                        check_comonoid, check_comonoid_map,
                        check_coaction_is_comonoid_map, check_map_over_bi,
                        comonoid_as_bicomodule, comonoid_map_from_coaction,
                        comonoid_map_from_left_coaction, is_cocommutative,
                        left_comodule, require, right_comodule,
                        tensor_comodules, tensor_comonoid, unit_comonoid)
from .cotensor import (Cotensor, cotensor, cotensor_of_maps, interchange_iso,
                       cotensor_associator, unitor_left, unitor_right)
from .errors import CheckFailed
from .monoidal import (Backend, Mor, Obj, braiding, compose, identity,
                       tensor_mor, unit_obj)
from .reports import Report


@dataclass(eq=False)
class Monoid:
    """A monoid (A, mult: A⊗A -> A, unit: 1 -> A) in the ambient category."""

    carrier: Obj
    mult: Mor
    unit: Mor


def check_monoid(a: Monoid) -> Report:
    report = Report()
    i = identity(a.carrier)
    report.compare("monoid/assoc",
                   compose(a.mult, tensor_mor(a.mult, i)),
                   compose(a.mult, tensor_mor(i, a.mult)))
    report.compare("monoid/unit-left", compose(a.mult, tensor_mor(a.unit, i)), i)
    report.compare("monoid/unit-right", compose(a.mult, tensor_mor(i, a.unit)), i)
    return report


@dataclass(eq=False)
class Bimonoid:
    """Compatible monoid and comonoid structures on one carrier."""

    monoid: Monoid
    comonoid: Comonoid

    @property
    def carrier(self) -> Obj:
        return self.monoid.carrier


def check_bimonoid(b: Bimonoid) -> Report:
    report = Report()
    report.merge(check_monoid(b.monoid), "bimonoid")
    report.merge(check_comonoid(b.comonoid), "bimonoid")
    a = b.carrier
    mult, unit = b.monoid.mult, b.monoid.unit
    delta, eps = b.comonoid.delta, b.comonoid.epsilon
    i = identity(a)
    mid = tensor_mor(tensor_mor(i, braiding(a, a)), i)
    report.compare("bimonoid/delta-mult",
                   compose(delta, mult),
                   compose(tensor_mor(mult, mult), compose(mid, tensor_mor(delta, delta))))
    report.compare("bimonoid/epsilon-mult", compose(eps, mult), tensor_mor(eps, eps))
    report.compare("bimonoid/delta-unit", compose(delta, unit), tensor_mor(unit, unit))
    report.compare("bimonoid/epsilon-unit", compose(eps, unit),
                   identity(unit_obj(a.backend)))
    return report


@dataclass(eq=False)
class InternalCategory:
    """(C, A, sigma, tau, u, m) with the cotensor square of A cached.

    The arrows comodule stores sigma as its left coaction A -> C⊗A and tau
    as its right coaction A -> A⊗C; flipped orientations are derived on
    demand and never stored.
    """

    objects: Comonoid
    arrows: Comodule
    unit: Mor
    comp: Mor
    aa: Cotensor

    @classmethod
    def build(cls, objects: Comonoid, arrows: Comodule, unit: Mor, comp: Mor,
              verify: bool = False) -> "InternalCategory":
        assert arrows.left is not None and arrows.right is not None
        assert arrows.left_over == objects and arrows.right_over == objects
        aa = cotensor(arrows, arrows)
        cat = cls(objects, arrows, unit, comp, aa)
        if verify:
            require(check_internal_category(cat), "internal category axioms")
        return cat

    @property
    def backend(self) -> Backend:
        return self.objects.backend

    @property
    def sigma(self) -> Mor:
        return self.arrows.lam

    @property
    def tau(self) -> Mor:
        return self.arrows.rho

    def __repr__(self):
        return (f"InternalCategory(|C|={self.objects.carrier.size}, "
                f"|A|={self.arrows.carrier.size})")


def check_internal_category(cat: InternalCategory) -> Report:
    report = Report()
    report.merge(check_comonoid(cat.objects), "objects")
    report.merge(check_comodule(cat.arrows), "arrows")
    c = cat.objects
    a = cat.arrows
    ic = identity(c.carrier)
    ia = identity(a.carrier)
    report.compare("identity/source",
                   compose(a.lam, cat.unit), compose(tensor_mor(ic, cat.unit), c.delta))
    report.compare("identity/target",
                   compose(a.rho, cat.unit), compose(tensor_mor(cat.unit, ic), c.delta))
    report.compare("composition/source",
                   compose(a.lam, cat.comp),
                   compose(tensor_mor(ic, cat.comp), cat.aa.left_coaction))
    report.compare("composition/target",
                   compose(a.rho, cat.comp),
                   compose(tensor_mor(cat.comp, ic), cat.aa.right_coaction))
    try:
        ca, lu = unitor_left(c, a)
        u_box_a = cotensor_of_maps(ca, cat.aa, cat.unit, ic, ia)
        report.compare("unitality/left", compose(cat.comp, u_box_a), lu.fwd)
    except Exception as exc:  # noqa: BLE001 - reported, not raised
        report.absorb("unitality/left", exc)
    try:
        ac, ru = unitor_right(a, c)
        a_box_u = cotensor_of_maps(ac, cat.aa, ia, ic, cat.unit)
        report.compare("unitality/right", compose(cat.comp, a_box_u), ru.fwd)
    except Exception as exc:  # noqa: BLE001
        report.absorb("unitality/right", exc)
    try:
        aa_m = cat.aa.as_comodule()
        aaa_l = cotensor(aa_m, a)
        aaa_r = cotensor(a, aa_m)
        alpha = cotensor_associator(aaa_l, cat.aa, aaa_r, cat.aa)
        m_box_a = cotensor_of_maps(aaa_l, cat.aa, cat.comp, ic, ia)
        a_box_m = cotensor_of_maps(aaa_r, cat.aa, ia, ic, cat.comp)
        report.compare("associativity",
                       compose(cat.comp, m_box_a),
                       compose(cat.comp, compose(a_box_m, alpha.fwd)))
    except Exception as exc:  # noqa: BLE001
        report.absorb("associativity", exc)
    return report


@dataclass(eq=False)
class InternalFunctor:
    """A comonoid map on objects with a compatible map on arrows."""

    f: Mor
    phi: Mor


def check_internal_functor(fun: InternalFunctor, src: InternalCategory,
                           tgt: InternalCategory) -> Report:
    report = Report()
    report.merge(check_comonoid_map(fun.f, src.objects, tgt.objects), "functor")
    report.compare("functor/source",
                   compose(tgt.arrows.lam, fun.phi),
                   compose(tensor_mor(fun.f, fun.phi), src.arrows.lam))
    report.compare("functor/target",
                   compose(tgt.arrows.rho, fun.phi),
                   compose(tensor_mor(fun.phi, fun.f), src.arrows.rho))
    report.compare("functor/unit", compose(fun.phi, src.unit), compose(tgt.unit, fun.f))
    try:
        phi_box_phi = cotensor_of_maps(src.aa, tgt.aa, fun.phi, fun.f, fun.phi,
                                       check=False)
        report.compare("functor/composition",
                       compose(tgt.comp, phi_box_phi),
                       compose(fun.phi, src.comp))
    except Exception as exc:  # noqa: BLE001
        report.absorb("functor/composition", exc)
    return report


def one_object(monoid: Monoid) -> InternalCategory:
    """The internal category on the unit comonoid defined by a monoid."""
    require(check_monoid(monoid), "one_object: monoid axioms")
    backend = monoid.carrier.backend
    one = unit_comonoid(backend)
    a = monoid.carrier
    lam = Mor(a, tensor_obj_left_unit(a), identity(a).payload)
    rho = Mor(a, tensor_obj_right_unit(a), identity(a).payload)
    arrows = bicomodule(a, one, lam, one, rho)
    aa = cotensor(arrows, arrows)
    comp = compose(monoid.mult, aa.mono)
    cat = InternalCategory(one, arrows, monoid.unit, comp, aa)
    require(check_internal_category(cat), "one_object: category axioms")
    return cat


def tensor_obj_left_unit(a: Obj) -> Obj:
    from .monoidal import tensor_obj
    return tensor_obj(unit_obj(a.backend), a)


def tensor_obj_right_unit(a: Obj) -> Obj:
    from .monoidal import tensor_obj
    return tensor_obj(a, unit_obj(a.backend))


def discrete(c: Comonoid) -> InternalCategory:
    """The discrete internal category (C, C) on a comonoid."""
    require(check_comonoid(c), "discrete: comonoid axioms")
    arrows = comonoid_as_bicomodule(c)
    aa = cotensor(arrows, arrows)
    comp = compose(tensor_mor(c.epsilon, identity(c.carrier)), aa.mono)
    cat = InternalCategory(c, arrows, identity(c.carrier), comp, aa)
    require(check_internal_category(cat), "discrete: category axioms")
    return cat


def identity_internal(backend: Backend) -> InternalCategory:
    """The unit internal category (1, 1)."""
    return discrete(unit_comonoid(backend))


def tensor_internal(a: InternalCategory, b: InternalCategory) -> InternalCategory:
    """The monoidal product (C⊗D, A⊗B) of internal categories."""
    if a.backend != b.backend:
        raise ValueError("backend mismatch")
    objects = tensor_comonoid(a.objects, b.objects)
    arrows = tensor_comodules(a.arrows, b.arrows)
    unit = tensor_mor(a.unit, b.unit)
    aa = cotensor(arrows, arrows)
    _, iso = interchange_iso(a.aa, b.aa, tgt=aa)
    comp = compose(tensor_mor(a.comp, b.comp), iso.inv)
    return InternalCategory(objects, arrows, unit, comp, aa)


@dataclass(eq=False)
class ComonoidalInternalCategory:
    """An internal category with a comonoid structure on its arrows.

    Stores the arrow comonoid (B, delta, epsilon) and the comonoid maps
    s, t: B -> D that the source and target coactions are induced by.
    """

    cat: InternalCategory
    comonoid: Comonoid      # on the arrows carrier
    s: Mor
    t: Mor

    @property
    def objects(self) -> Comonoid:
        return self.cat.objects

    @property
    def arrows(self) -> Comodule:
        return self.cat.arrows

    @property
    def backend(self) -> Backend:
        return self.cat.backend


def promote_comonoidal(cat: InternalCategory, delta_b: Mor,
                       epsilon_b: Mor) -> ComonoidalInternalCategory:
    """Verify that (delta_b, epsilon_b) makes an internal category comonoidal.

    Checks, in order: cocommutativity of the object comonoid, the comonoid
    axioms on the arrows, that comultiplication and counit are internal
    functors to the square and to the unit category, that source and target
    are comonoid maps (extracting the inducing maps s and t), that the arrow
    comultiplication is a bicomodule map over the object one, and the shared
    source law for the two comultiplicands.  Any failure raises with the
    offending diagram named.
    """
    d = cat.objects
    if not is_cocommutative(d):
        raise CheckFailed("promote_comonoidal: objects comonoid is not cocommutative")
    b = Comonoid(cat.arrows.carrier, delta_b, epsilon_b)
    require(check_comonoid(b), "promote_comonoidal: arrow comonoid axioms")

    square = tensor_internal(cat, cat)
    require(check_internal_functor(InternalFunctor(d.delta, delta_b), cat, square),
            "promote_comonoidal: comultiplication functor")
    unit_cat = identity_internal(cat.backend)
    require(check_internal_functor(InternalFunctor(d.epsilon, epsilon_b), cat, unit_cat),
            "promote_comonoidal: counit functor")

    sigma, tau = cat.sigma, cat.tau
    flipped_sigma = compose(braiding(d.carrier, b.carrier), sigma)
    require(check_coaction_is_comonoid_map(flipped_sigma, b, d),
            "promote_comonoidal: source coaction comonoid map")
    require(check_coaction_is_comonoid_map(tau, b, d),
            "promote_comonoidal: target coaction comonoid map")
    s = comonoid_map_from_left_coaction(b, d, sigma)
    t = comonoid_map_from_coaction(b, d, tau)

    bb = tensor_comodules(cat.arrows, cat.arrows)
    require(check_map_over_bi(delta_b, d.delta, d.delta, cat.arrows, bb),
            "promote_comonoidal: comultiplication over objects comultiplication")

    ib = identity(b.carrier)
    lhs = compose(tensor_mor(sigma, ib), delta_b)
    rhs = compose(tensor_mor(braiding(b.carrier, d.carrier), ib),
                  compose(tensor_mor(ib, sigma), delta_b))
    shared = Report()
    shared.compare("shared-source", lhs, rhs)
    require(shared, "promote_comonoidal: shared source law")

    return ComonoidalInternalCategory(cat, b, s, t)
