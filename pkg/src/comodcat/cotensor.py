"""Cotensor products of comodules as canonical equalizer subobjects.

The cotensor M □_C N is the equalizer of rho_M⊗N and M⊗lam_N.  When the
outer coactions are present, the induced coactions on the subobject are
computed eagerly by factoring through the tensored equalizer and their
comodule laws are verified on the spot.

Structural isomorphisms between such subobjects (interchange, unitors,
associativity comparisons) are all produced the same way: restrict an
explicit ambient map to the subobjects and certify a two-sided inverse.
"""

from __future__ import annotations

from dataclasses import dataclass

from .coalgebra import (Comodule, Comonoid, check_comodule, check_map_over,
                        check_map_over_left, left_comodule, require,
                        right_comodule, tensor_comodules, unit_comonoid)
from .errors import CheckFailed, NotInvertible
from .monoidal import (Backend, Equalizer, Mor, Obj, braiding, compose,
                       equalizer, factor_through, factor_through_mono,
                       identity, tensor_mor, unit_obj)
from .reports import Report


@dataclass(frozen=True)
class Iso:
    """An isomorphism with its certified two-sided inverse."""

    fwd: Mor
    inv: Mor

    def reversed(self) -> "Iso":
        return Iso(self.inv, self.fwd)


@dataclass(eq=False)
class Cotensor:
    """The cotensor of a right and a left comodule over a shared comonoid."""

    ob: Obj
    mono: Mor              # E -> M⊗N
    m: Comodule
    n: Comodule
    over: Comonoid
    eq: Equalizer
    left_coaction: Mor | None = None    # E -> B⊗E, induced from m.left
    right_coaction: Mor | None = None   # E -> E⊗D, induced from n.right

    @property
    def backend(self) -> Backend:
        return self.ob.backend

    def as_comodule(self) -> Comodule:
        left = (self.m.left_over, self.left_coaction) if self.left_coaction is not None else None
        right = (self.n.right_over, self.right_coaction) if self.right_coaction is not None else None
        return Comodule(self.ob, left, right)

    def __repr__(self):
        return f"Cotensor(dim {self.ob.size} < {self.m.carrier.size}*{self.n.carrier.size})"


def cotensor(m: Comodule, n: Comodule) -> Cotensor:
    """Compute M □_C N with whatever induced coactions the inputs support."""
    if m.right is None or n.left is None:
        raise ValueError("cotensor needs a right coaction on the left factor "
                         "and a left coaction on the right factor")
    if m.right_over != n.left_over:
        raise ValueError("cotensor over mismatched comonoids")
    f = tensor_mor(m.rho, identity(n.carrier))
    g = tensor_mor(identity(m.carrier), n.lam)
    eq = equalizer(f, g)
    mono = Mor(eq.ob, tensor_obj_of(m, n), eq.mono.payload)
    assert compose(f, mono) == compose(g, mono)
    ct = Cotensor(eq.ob, mono, m, n, m.right_over, eq)
    if m.left is not None:
        ct.left_coaction = induced_left_coaction(ct)
    if n.right is not None:
        ct.right_coaction = induced_right_coaction(ct)
    if ct.left_coaction is not None or ct.right_coaction is not None:
        require(check_comodule(ct.as_comodule()), "induced coactions on a cotensor")
    return ct


def tensor_obj_of(m: Comodule, n: Comodule) -> Obj:
    from .monoidal import tensor_obj
    return tensor_obj(m.carrier, n.carrier)


def induced_right_coaction(ct: Cotensor) -> Mor:
    """Factor (M⊗rho_N).mono through mono⊗D, landing in E⊗D."""
    d, rho_n = ct.n.right
    tgt = compose(tensor_mor(identity(ct.m.carrier), rho_n), ct.mono)
    return factor_through_mono(tensor_mor(ct.mono, identity(d.carrier)), tgt)


def induced_left_coaction(ct: Cotensor) -> Mor:
    """Mirror factorization for the left coaction inherited from M."""
    b, lam_m = ct.m.left
    tgt = compose(tensor_mor(lam_m, identity(ct.n.carrier)), ct.mono)
    return factor_through_mono(tensor_mor(identity(b.carrier), ct.mono), tgt)


def subobject_iso_through(through: Mor, dst_mono: Mor) -> Iso:
    """Certify that an already-restricted map cuts out the same subobject.

    `through` is an ambient map precomposed with the source mono; fwd is
    its factorization through the target mono, inv the factorization of the
    target mono back through it, and both round trips are checked.
    """
    fwd = factor_through_mono(dst_mono, through)
    inv = factor_through_mono(through, dst_mono)
    if compose(fwd, inv) != identity(dst_mono.dom) or compose(inv, fwd) != identity(through.dom):
        raise NotInvertible("restricted ambient map is not invertible on the subobjects")
    return Iso(fwd, inv)


def subobject_iso(src_mono: Mor, dst_mono: Mor, ambient: Mor) -> Iso:
    """Restrict an ambient map to an iso between two subobjects.

    fwd satisfies dst_mono . fwd = ambient . src_mono; the inverse is the
    factorization the other way around, and both round trips are checked.
    """
    return subobject_iso_through(compose(ambient, src_mono), dst_mono)


def cotensor_of_maps(src: Cotensor, dst: Cotensor, phi: Mor, g: Mor, psi: Mor,
                     *, f: Mor | None = None, h: Mor | None = None,
                     check: bool = True) -> Mor:
    """The map src -> dst induced by phi □_g psi on the ambient tensor.

    phi must be a right comodule map over g between the left factors and psi
    a left comodule map over g between the right factors; the result is the
    factorization of (phi⊗psi).mono through dst's mono.  When f (resp. h) is
    supplied and the induced left (resp. right) coactions exist on both
    sides, the result is verified to be a comodule map over it.
    """
    if check:
        require(check_map_over(phi, g, src.m, dst.m), "cotensor_of_maps: left factor map")
        require(check_map_over_left(psi, g, src.n, dst.n), "cotensor_of_maps: right factor map")
    out = factor_through_mono(dst.mono, compose(tensor_mor(phi, psi), src.mono))
    if f is not None and src.left_coaction is not None and dst.left_coaction is not None:
        require(check_map_over_left(out, f, src.as_comodule(), dst.as_comodule()),
                "cotensor_of_maps: result over f")
    if h is not None and src.right_coaction is not None and dst.right_coaction is not None:
        require(check_map_over(out, h, src.as_comodule(), dst.as_comodule()),
                "cotensor_of_maps: result over h")
    return out


def interchange_cotensor(ct1: Cotensor, ct2: Cotensor) -> Cotensor:
    """The codomain (M⊗M') □ (N⊗N') of the interchange isomorphism."""
    return cotensor(tensor_comodules(ct1.m, ct2.m), tensor_comodules(ct1.n, ct2.n))


def interchange_iso(ct1: Cotensor, ct2: Cotensor,
                    tgt: Cotensor | None = None) -> tuple[Cotensor, Iso]:
    """(M□N)⊗(M'□N') ≅ (M⊗M')□(N⊗N') as the restricted middle interchange.

    The ambient map swaps the two middle tensor factors; the restriction is
    certified invertible and returned with its inverse.
    """
    if tgt is None:
        tgt = interchange_cotensor(ct1, ct2)
    m1, n1 = ct1.m.carrier, ct1.n.carrier
    m2, n2 = ct2.m.carrier, ct2.n.carrier
    ambient = tensor_mor(tensor_mor(identity(m1), braiding(n1, m2)), identity(n2))
    iso = subobject_iso(tensor_mor(ct1.mono, ct2.mono), tgt.mono, ambient)
    return tgt, iso


def unit_cotensor(backend: Backend) -> Cotensor:
    """1 □_1 1, whose mono realizes the collapse onto the unit object."""
    one = unit_comonoid(backend)
    i = identity(one.carrier)
    return cotensor(right_comodule(one.carrier, one, i),
                    left_comodule(one.carrier, one, i))


def unitor_left(c: Comonoid, n: Comodule) -> tuple[Cotensor, Iso]:
    """C □_C N ≅ N via (epsilon⊗N).mono, inverse induced by the coaction."""
    ct = cotensor(right_comodule(c.carrier, c, c.delta), n)
    fwd = compose(tensor_mor(c.epsilon, identity(n.carrier)), ct.mono)
    inv = factor_through(ct.eq, n.lam)
    if compose(fwd, inv) != identity(n.carrier) or compose(inv, fwd) != identity(ct.ob):
        raise NotInvertible("left unitor failed to invert")
    return ct, Iso(fwd, inv)


def unitor_right(m: Comodule, c: Comonoid) -> tuple[Cotensor, Iso]:
    """M □_C C ≅ M, mirror of the left unitor."""
    ct = cotensor(m, left_comodule(c.carrier, c, c.delta))
    fwd = compose(tensor_mor(identity(m.carrier), c.epsilon), ct.mono)
    inv = factor_through(ct.eq, m.rho)
    if compose(fwd, inv) != identity(m.carrier) or compose(inv, fwd) != identity(ct.ob):
        raise NotInvertible("right unitor failed to invert")
    return ct, Iso(fwd, inv)


def cotensor_associator(outer_left: Cotensor, inner_left: Cotensor,
                        outer_right: Cotensor, inner_right: Cotensor) -> Iso:
    """The comparison (M□N)□P ≅ M□(N□P) of canonically embedded subobjects.

    Both sides embed into M⊗N⊗P; the comparison is the restricted identity,
    reconciled through the canonical monos and certified invertible.
    """
    p = outer_left.n.carrier
    m = outer_right.m.carrier
    flat_left = compose(tensor_mor(inner_left.mono, identity(p)), outer_left.mono)
    flat_right = compose(tensor_mor(identity(m), inner_right.mono), outer_right.mono)
    ambient = identity(flat_left.cod)
    return subobject_iso(flat_left, flat_right, ambient)


def cotensor_comonoid(ct: Cotensor, c1: Comonoid, c2: Comonoid,
                      base: Comonoid) -> Comonoid:
    """The comonoid on M1 □_D M2 induced by comonoid structures on the factors.

    Comultiplication is delta1 □ delta2 followed by the interchange
    isomorphism; the counit is epsilon1 □ epsilon2 followed by the collapse
    of 1 □_1 1.  The result is checked before being returned.
    """
    mm = tensor_comodules(ct.m, ct.m)
    nn = tensor_comodules(ct.n, ct.n)
    tgt = cotensor(mm, nn)
    dd = cotensor_of_maps(ct, tgt, c1.delta, base.delta, c2.delta)
    _, iso = interchange_iso(ct, ct, tgt=tgt)
    delta = compose(iso.inv, dd)

    uu = unit_cotensor(ct.backend)
    ee = cotensor_of_maps(ct, uu, c1.epsilon, base.epsilon, c2.epsilon)
    unit_collapse = Mor(uu.ob, unit_obj(ct.backend), uu.mono.payload)
    epsilon = compose(unit_collapse, ee)

    out = Comonoid(ct.ob, delta, epsilon)
    from .coalgebra import check_comonoid
    require(check_comonoid(out), "cotensor comonoid axioms")
    return out
