"""The smash product of a prestack, its coinvariants, and the recovery iso.

The smash category has the same objects as the prestack and morphism object
A □_C (B □_D C).  Its composition is built in five stages: the cotensor of
the four coaction maps over p, two certified reshuffle isomorphisms
(restrictions of an explicit middle permutation and of counit collapses),
the action maps applied on both tensor legs, and the compositions of the two
ingredient categories.  The pipeline output is then shown to land inside the
morphism subobject by an explicit factorization, and all category and
comodule-category axioms of the result are re-checked rather than assumed.
"""

from __future__ import annotations

from dataclasses import dataclass

from .coalgebra import (Comodule, bicomodule, comonoid_as_bicomodule,
                        require, tensor_comodules)
from .cotensor import (Cotensor, cotensor, cotensor_of_maps, subobject_iso,
                       subobject_iso_through, unitor_right)
from .internal import (ComonoidalInternalCategory, InternalCategory,
                       InternalFunctor, check_internal_category,
                       check_internal_functor, discrete, promote_comonoidal)
from .monoidal import (Mor, braiding, compose, factor_through_mono, identity,
                       restricted_slot_map, tensor_mor, tensor_mors)
from .prestack import (ComoduleCategory, Prestack, check_comodule_category,
                       check_prestack)
from .reports import Report


@dataclass(eq=False)
class SmashResult:
    prestack: Prestack
    cat: InternalCategory
    comodcat: ComoduleCategory
    carrier: Cotensor            # the morphism object A □_C (B □_D C)
    report: Report


@dataclass(eq=False)
class CoinvariantResult:
    cat: InternalCategory
    comodcat: ComoduleCategory   # over the discrete base
    carrier: Cotensor            # the morphism object A □_B D
    mono: Mor                    # its embedding into A⊗D
    report: Report


@dataclass(eq=False)
class RecoveryIso:
    fwd: InternalFunctor
    inv: InternalFunctor
    coinv: CoinvariantResult
    report: Report


def smash(ps: Prestack) -> SmashResult:
    """Build the smash product category of a prestack and its base.

    Raises `CheckFailed` if the prestack axioms fail, `NoFactorization` if
    the composition pipeline does not land in the morphism subobject (the
    verification deliberately left open by the construction), and re-checks
    every axiom of the result.
    """
    require(ps.validation, "smash: prestack axioms")

    c, d, b = ps.c, ps.d, ps.b
    arrows = ps.cat.arrows
    bdc = ps.bdc
    f_delta, t_delta, q_delta = ps.bdc_coactions

    s = cotensor(arrows, ps.bdc_cc)
    s_comod = s.as_comodule()
    ss = cotensor(s_comod, s_comod)

    # stage 1: the four coaction maps, cotensored over p
    ad = tensor_comodules(arrows, comonoid_as_bicomodule(d))
    eb = tensor_comodules(ps.bdc_cc, ps.base.arrows)
    e_dd = Comodule(bdc.ob, left=(d, bdc.left_coaction))
    ce = tensor_comodules(comonoid_as_bicomodule(c), e_dd)
    y1 = cotensor(ad, eb)
    y2 = cotensor(ad, ce)
    f_a = cotensor_of_maps(s, y1, ps.pi, ps.p, q_delta)
    f_b = cotensor_of_maps(s, y2, ps.pi, ps.p, f_delta)
    t1 = cotensor(y1.as_comodule(), y2.as_comodule())
    stage1 = cotensor_of_maps(ss, t1, f_a, ps.p, f_b)

    # stage 2: pull the coaction outputs apart into category and base legs
    ac = cotensor(arrows, comonoid_as_bicomodule(c))
    db = cotensor(comonoid_as_bicomodule(d), ps.base.arrows)
    de = cotensor(comonoid_as_bicomodule(d), e_dd)
    g1 = cotensor(s_comod, ac.as_comodule())
    g2 = cotensor(db.as_comodule(), de.as_comodule())
    ia = identity(arrows.carrier)
    ib = identity(b.carrier)
    ic = identity(c.carrier)
    idm = identity(d.carrier)
    ie = identity(bdc.ob)
    flat_t1 = compose(tensor_mor(y1.mono, y2.mono), t1.mono)
    flat_g1 = compose(tensor_mor(s.mono, ac.mono), g1.mono)
    flat_g2 = compose(tensor_mor(db.mono, de.mono), g2.mono)
    flat_t2 = tensor_mor(flat_g1, flat_g2)
    through2 = restricted_slot_map(flat_t1, [ia, idm, ie, ib, ia, idm, ic, ie],
                                   [0, 2, 4, 6, 1, 3, 5, 7])
    stage2 = subobject_iso_through(through2, flat_t2)

    # stage 3: collapse the redundant markers onto the two action carriers
    h1 = cotensor(arrows, Comodule(ps.ba.ob, left=(c, ps.ba_left_c)))
    bb = ps.base.cat.aa
    h2 = cotensor(bb.as_comodule(), bdc.n)
    flat_h1 = compose(tensor_mor(identity(arrows.carrier), ps.ba.mono), h1.mono)
    flat_h2 = compose(tensor_mor(bb.mono, identity(c.carrier)), h2.mono)
    flat_t3 = tensor_mor(flat_h1, flat_h2)
    keep_b = compose(tensor_mor(ib, c.epsilon), bdc.mono)
    through3 = restricted_slot_map(
        flat_t2, [ia, keep_b, ia, c.epsilon, d.epsilon, ib, d.epsilon, bdc.mono])
    stage3 = subobject_iso_through(through3, flat_t3)

    # stages 4 and 5: act with phi, compose in the base, compose the arrows
    act_leg = cotensor_of_maps(h1, ps.cat.aa, ia, ic, ps.phi)
    base_leg = cotensor_of_maps(h2, bdc, ps.base.cat.comp, idm, ic)
    stage45 = compose(tensor_mor(ps.cat.comp, identity(bdc.ob)),
                      tensor_mor(act_leg, base_leg))

    total = compose(stage45, compose(stage3.fwd, compose(stage2.fwd, stage1)))
    comp = factor_through_mono(s.mono, total)

    # the unit: both identities over the diagonal, in ambient coordinates
    d2 = compose(tensor_mor(c.delta, ic), c.delta)
    u_amb = compose(tensor_mors(ps.cat.unit, compose(ps.base.cat.unit, ps.q), ic), d2)
    flat_s = compose(tensor_mor(ia, bdc.mono), s.mono)
    unit = factor_through_mono(flat_s, u_amb)

    smash_cat = InternalCategory(c, s_comod, unit, comp, ss)

    # the base coaction: split off the B marker and collapse its partner
    through_b = restricted_slot_map(y1.mono, [ia, idm, ie, ib], [0, 2, 1, 3])
    iso_b = subobject_iso_through(through_b, tensor_mor(s.mono, db.mono))
    db_collapse = compose(tensor_mor(d.epsilon, ib), db.mono)
    pi_smash = compose(tensor_mor(identity(s.ob), db_collapse),
                       compose(iso_b.fwd, f_a))

    comodcat = ComoduleCategory(smash_cat, ps.base, ps.p, pi_smash)
    report = Report()
    report.merge(check_internal_category(smash_cat), "smash/category")
    report.merge(check_comodule_category(comodcat), "smash/comodule-category")
    require(report, "smash: result axioms")
    return SmashResult(ps, smash_cat, comodcat, s, report)


def coinvariants(x: ComoduleCategory) -> CoinvariantResult:
    """The coinduction of a comodule category along the discrete inclusion.

    Objects are unchanged; the morphism object is the equalizer A □_B D of
    the coaction against the unit-corestricted comultiplication, with unit,
    composition, and the discrete coaction inherited by verified
    factorizations through the equalizer mono.
    """
    c = x.cat.objects
    d = x.base.objects
    b = x.base.comonoid
    arrows = x.cat.arrows
    ia = identity(arrows.carrier)
    idm = identity(d.carrier)
    ic = identity(c.carrier)

    m_side = bicomodule(arrows.carrier, c, arrows.lam, b, x.pi)
    lam_d = compose(tensor_mor(x.base.cat.unit, idm), d.delta)
    n_side = Comodule(d.carrier, left=(b, lam_d), right=(d, d.delta))
    mco = cotensor(m_side, n_side)

    tau_path = compose(tensor_mor(ia, braiding(c.carrier, d.carrier)),
                       compose(tensor_mor(arrows.rho, idm), mco.mono))
    tau = factor_through_mono(tensor_mor(mco.mono, ic), tau_path)
    coinv_arrows = Comodule(mco.ob, left=(c, mco.left_coaction), right=(c, tau))

    unit = factor_through_mono(mco.mono, compose(tensor_mor(x.cat.unit, idm), x.p))

    mm = cotensor(coinv_arrows, coinv_arrows)
    flat_mm = compose(tensor_mor(mco.mono, mco.mono), mm.mono)
    dropped = restricted_slot_map(flat_mm, [ia, d.epsilon, ia, idm])
    paired = factor_through_mono(tensor_mor(x.cat.aa.mono, idm), dropped)
    comp = factor_through_mono(mco.mono,
                               compose(tensor_mor(x.cat.comp, idm), paired))

    coinv_cat = InternalCategory(c, coinv_arrows, unit, comp, mm)
    dd_base = promote_comonoidal(discrete(d), d.delta, d.epsilon)
    comodcat = ComoduleCategory(coinv_cat, dd_base, x.p, mco.right_coaction)
    report = Report()
    report.merge(check_internal_category(coinv_cat), "coinv/category")
    report.merge(check_comodule_category(comodcat), "coinv/comodule-category")
    require(report, "coinvariants: result axioms")
    return CoinvariantResult(coinv_cat, comodcat, mco, mco.mono, report)


def recovery_iso(sr: SmashResult) -> RecoveryIso:
    """The isomorphism from the coinvariants of a smash back to the prestack.

    The first leg restricts the counit collapse of the base markers from the
    coinvariant carrier onto A □_C C; the second is the right unitor.  Both
    directions are certified, packaged as internal functors over the
    identity on objects, and checked in both directions.
    """
    ps = sr.prestack
    cr = coinvariants(sr.comodcat)
    mco = cr.carrier
    arrows = ps.cat.arrows
    ia = identity(arrows.carrier)

    flat_s = compose(tensor_mor(ia, ps.bdc.mono), sr.carrier.mono)
    flat_mco = compose(tensor_mor(flat_s, identity(ps.d.carrier)), mco.mono)
    ac, ur = unitor_right(arrows, ps.c)
    amb = tensor_mors(ia, ps.b.epsilon, identity(ps.c.carrier), ps.d.epsilon)
    iso1 = subobject_iso(flat_mco, ac.mono, amb)

    h = compose(ur.fwd, iso1.fwd)
    h_inv = compose(iso1.inv, ur.inv)
    fwd = InternalFunctor(identity(ps.c.carrier), h)
    inv = InternalFunctor(identity(ps.c.carrier), h_inv)

    report = Report()
    report.require("recovery/carrier-dimension",
                   mco.ob.size == arrows.carrier.size,
                   f"{mco.ob.size} != {arrows.carrier.size}")
    report.compare("recovery/round-trip-coinv", compose(h_inv, h), identity(mco.ob))
    report.compare("recovery/round-trip-arrows", compose(h, h_inv), ia)
    report.merge(check_internal_functor(fwd, cr.cat, ps.cat), "recovery/fwd")
    report.merge(check_internal_functor(inv, ps.cat, cr.cat), "recovery/inv")
    require(report, "recovery_iso")
    return RecoveryIso(fwd, inv, cr, report)
