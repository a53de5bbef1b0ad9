"""Finite categories, split prestacks of them, and the classical construction.

Composition tables are stored in application order: `composition[f, g]` is
"f then g", defined exactly when the target of f is the source of g.  The
same order is used by the internal composition maps, so the two sides can be
compared table against table.

`direct_grothendieck` is the independent oracle: it builds the total
category of a split prestack by the classical pairing formula, without any
cotensor machinery.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .coalgebra import Comonoid, grouplike_comonoid, require
from .errors import InputError
from .internal import (ComonoidalInternalCategory, InternalCategory,
                       check_internal_category, promote_comonoidal)
from .monoidal import (FinSet, Mor, Obj, compose, finvect, obj, tensor_mor,
                       tensor_obj, identity)
from .prestack import Prestack, ba_carrier, bdc_carrier
from .reports import Report

def _check_label(label: str, what: str, reserved: tuple[str, ...] = ("⊗",)):
    if any(sep in label for sep in reserved):
        raise InputError(f"{what} label {label!r} contains a reserved separator")


@dataclass
class FiniteCategorySpec:
    """A finite category presented by explicit tables."""

    objects: list[str]
    morphisms: dict[str, tuple[str, str]]       # name -> (source, target)
    composition: dict[tuple[str, str], str]     # (f, g) -> "f then g"
    identities: dict[str, str]                  # object -> identity morphism

    def source(self, m: str) -> str:
        return self.morphisms[m][0]

    def target(self, m: str) -> str:
        return self.morphisms[m][1]

    def composable_pairs(self) -> list[tuple[str, str]]:
        return [(f, g) for f in self.morphisms for g in self.morphisms
                if self.target(f) == self.source(g)]

    def validate(self):
        for x in self.objects:
            _check_label(x, "object")
        if len(set(self.objects)) != len(self.objects):
            raise InputError("duplicate object labels")
        for m, (s, t) in self.morphisms.items():
            _check_label(m, "morphism")
            if s not in self.objects or t not in self.objects:
                raise InputError(f"morphism {m} has unknown endpoint {s} or {t}")
        for x in self.objects:
            i = self.identities.get(x)
            if i is None or i not in self.morphisms:
                raise InputError(f"object {x} has no identity morphism")
            if self.morphisms[i] != (x, x):
                raise InputError(f"identity of {x} is not an endomorphism of {x}")
        pairs = set(self.composable_pairs())
        for pair in self.composition:
            if pair not in pairs:
                raise InputError(f"composition defined on non-composable pair {pair}")
        for f, g in pairs:
            h = self.composition.get((f, g))
            if h is None:
                raise InputError(f"composition missing for composable pair ({f}, {g})")
            if h not in self.morphisms:
                raise InputError(f"composite {h} is not a morphism")
            if self.morphisms[h] != (self.source(f), self.target(g)):
                raise InputError(f"composite of ({f}, {g}) has wrong endpoints")
        for m, (s, t) in self.morphisms.items():
            if self.composition[self.identities[s], m] != m:
                raise InputError(f"left identity law fails at {m}")
            if self.composition[m, self.identities[t]] != m:
                raise InputError(f"right identity law fails at {m}")
        for f in self.morphisms:
            for g in self.morphisms:
                if self.target(f) != self.source(g):
                    continue
                for h in self.morphisms:
                    if self.target(g) != self.source(h):
                        continue
                    if (self.composition[self.composition[f, g], h]
                            != self.composition[f, self.composition[g, h]]):
                        raise InputError(f"associativity fails at ({f}, {g}, {h})")


def category_internal(spec: FiniteCategorySpec, backend=FinSet) -> InternalCategory:
    """The internal category of a finite category, in either backend.

    Over a finite set backend this is the category itself; over a field it
    is the linearization with the group-like comonoid on objects.
    """
    spec.validate()
    c_obj = obj(backend, spec.objects)
    a_obj = obj(backend, list(spec.morphisms))
    comonoid = grouplike_comonoid(c_obj)
    sigma = _table_mor(a_obj, tensor_obj(c_obj, a_obj),
                       {m: f"{spec.source(m)}⊗{m}" for m in spec.morphisms})
    tau = _table_mor(a_obj, tensor_obj(a_obj, c_obj),
                     {m: f"{m}⊗{spec.target(m)}" for m in spec.morphisms})
    from .coalgebra import bicomodule
    arrows = bicomodule(a_obj, comonoid, sigma, comonoid, tau)
    unit = _table_mor(c_obj, a_obj, dict(spec.identities))
    from .cotensor import cotensor
    aa = cotensor(arrows, arrows)
    composites = []
    for k in range(aa.ob.size):
        f, g = composable_pair_label(aa, k).split("⊗")
        composites.append(spec.composition[f, g])
    if backend.kind == "finset":
        comp = Mor(aa.ob, a_obj, tuple(a_obj.index(h) for h in composites))
    else:
        fld = backend.field
        rows = [[fld.zero] * aa.ob.size for _ in range(a_obj.size)]
        for k, h in enumerate(composites):
            rows[a_obj.index(h)][k] = fld.one
        comp = Mor.from_matrix(aa.ob, a_obj, rows)
    cat = InternalCategory(comonoid, arrows, unit, comp, aa)
    require(check_internal_category(cat), "category_internal axioms")
    return cat


def composable_pair_label(aa, k: int) -> str:
    """The ambient pair label "f⊗g" of the k-th composable-pair basis element.

    Over finite sets this is the subset label itself; over a field the
    kernel basis of a table category is a set of standard basis vectors, so
    each column has a single unit entry in the ambient pair coordinates.
    """
    if aa.backend.kind == "finset":
        return aa.ob.labels[k]
    pm = aa.mono.payload
    fld = pm.field
    hits = [i for i in range(pm.rows) if not fld.is_zero(pm.entry(i, k))]
    assert len(hits) == 1 and pm.entry(hits[0], k) == fld.one, \
        "tabled category has a non-basis composable pair"
    return aa.mono.cod.labels[hits[0]]


def _table_mor(dom: Obj, cod: Obj, table: dict[str, str]) -> Mor:
    if dom.backend.kind == "finset":
        return Mor.from_table(dom, cod, table)
    fld = dom.backend.field
    rows = [[fld.zero] * dom.size for _ in range(cod.size)]
    for l, v in table.items():
        rows[cod.index(v)][dom.index(l)] = fld.one
    return Mor.from_matrix(dom, cod, rows)


@dataclass
class SplitPrestackSpec:
    """A contravariant, strictly functorial assignment of fibers to a base.

    `transitions[beta]` maps the fiber over the target of beta into the
    fiber over its source, as explicit object and morphism tables.
    """

    base: FiniteCategorySpec
    fibers: dict[str, FiniteCategorySpec]
    transitions: dict[str, dict[str, dict[str, str]]]

    def transition_obj(self, beta: str, x: str) -> str:
        return self.transitions[beta]["objects"][x]

    def transition_mor(self, beta: str, xi: str) -> str:
        return self.transitions[beta]["morphisms"][xi]

    def validate(self):
        self.base.validate()
        # labels are spliced into prefixed pair labels, so the pieces must
        # stay free of both separators
        for x in list(self.base.objects) + list(self.base.morphisms):
            _check_label(x, "base", ("⊗", "::"))
        for b in self.base.objects:
            if b not in self.fibers:
                raise InputError(f"no fiber over base object {b}")
            self.fibers[b].validate()
            for x in list(self.fibers[b].objects) + list(self.fibers[b].morphisms):
                _check_label(x, "fiber", ("⊗", "::"))
        for beta, (b, b2) in self.base.morphisms.items():
            tr = self.transitions.get(beta)
            if tr is None:
                raise InputError(f"no transition functor for base morphism {beta}")
            src_fiber, dst_fiber = self.fibers[b2], self.fibers[b]
            for x in src_fiber.objects:
                if tr["objects"].get(x) not in dst_fiber.objects:
                    raise InputError(f"transition {beta} not total on objects at {x}")
            for xi, (x, y) in src_fiber.morphisms.items():
                im = tr["morphisms"].get(xi)
                if im not in dst_fiber.morphisms:
                    raise InputError(f"transition {beta} not total on morphisms at {xi}")
                expected = (tr["objects"][x], tr["objects"][y])
                if dst_fiber.morphisms[im] != expected:
                    raise InputError(f"transition {beta} breaks endpoints at {xi}")
            for x in src_fiber.objects:
                if tr["morphisms"][src_fiber.identities[x]] != dst_fiber.identities[tr["objects"][x]]:
                    raise InputError(f"transition {beta} does not preserve the identity of {x}")
            for f, g in src_fiber.composable_pairs():
                if (tr["morphisms"][src_fiber.composition[f, g]]
                        != dst_fiber.composition[tr["morphisms"][f], tr["morphisms"][g]]):
                    raise InputError(f"transition {beta} is not functorial at ({f}, {g})")
        for b in self.base.objects:
            tr = self.transitions[self.base.identities[b]]
            fib = self.fibers[b]
            if (tr["objects"] != {x: x for x in fib.objects}
                    or tr["morphisms"] != {m: m for m in fib.morphisms}):
                raise InputError(f"transition of the identity of {b} is not the identity")
        for beta, beta2 in self.base.composable_pairs():
            gamma = self.base.composition[beta, beta2]
            for x in self.fibers[self.base.target(beta2)].objects:
                if (self.transition_obj(gamma, x)
                        != self.transition_obj(beta, self.transition_obj(beta2, x))):
                    raise InputError(f"transitions do not compose strictly at ({beta}, {beta2})")
            for xi in self.fibers[self.base.target(beta2)].morphisms:
                if (self.transition_mor(gamma, xi)
                        != self.transition_mor(beta, self.transition_mor(beta2, xi))):
                    raise InputError(f"transitions do not compose strictly at ({beta}, {beta2})")


def direct_grothendieck(spec: SplitPrestackSpec) -> FiniteCategorySpec:
    """The classical total category of a split prestack.

    Objects are pairs b::x; a morphism beta::xi::x' from (b, x) to (b', x')
    pairs a base morphism beta: b -> b' with a fiber morphism
    xi: x -> F(beta)(x') over b.  Composition pushes the second fiber leg
    through the first transition.
    """
    spec.validate()
    objects = [f"{b}::{x}" for b in spec.base.objects for x in spec.fibers[b].objects]
    morphisms = {}
    for beta, (b, b2) in spec.base.morphisms.items():
        fib = spec.fibers[b]
        for x2 in spec.fibers[b2].objects:
            fx2 = spec.transition_obj(beta, x2)
            for xi, (x, y) in fib.morphisms.items():
                if y == fx2:
                    morphisms[f"{beta}::{xi}::{x2}"] = (f"{b}::{x}", f"{b2}::{x2}")
    identities = {}
    for b in spec.base.objects:
        fib = spec.fibers[b]
        for x in fib.objects:
            identities[f"{b}::{x}"] = f"{spec.base.identities[b]}::{fib.identities[x]}::{x}"
    composition = {}
    for m1, (src1, mid) in morphisms.items():
        beta, xi, x2 = m1.split("::")
        b = spec.base.source(beta)
        for m2, (src2, tgt2) in morphisms.items():
            if src2 != mid:
                continue
            beta2, xi2, x3 = m2.split("::")
            gamma = spec.base.composition[beta, beta2]
            pushed = spec.transition_mor(beta, xi2)
            composition[m1, m2] = (f"{gamma}::{spec.fibers[b].composition[xi, pushed]}::{x3}")
    out = FiniteCategorySpec(objects, morphisms, composition, identities)
    out.validate()
    return out


def set_prestack(spec: SplitPrestackSpec) -> Prestack:
    """Encode a split prestack as an internal prestack over finite sets.

    The total objects and arrows are fiberwise disjoint unions with labels
    prefixed by the base object; the coactions project onto the base, and
    the action maps apply the transition functors.
    """
    spec.validate()
    base_cat = category_internal(spec.base, FinSet)
    delta_b = grouplike_comonoid(base_cat.arrows.carrier)
    base = promote_comonoidal(base_cat, delta_b.delta, delta_b.epsilon)

    c_labels = [f"{b}::{x}" for b in spec.base.objects for x in spec.fibers[b].objects]
    a_labels = [f"{b}::{m}" for b in spec.base.objects for m in spec.fibers[b].morphisms]
    c_obj = obj(FinSet, c_labels)
    a_obj = obj(FinSet, a_labels)
    comonoid = grouplike_comonoid(c_obj)

    def fiber_of(label: str) -> tuple[str, str]:
        b, name = label.split("::", 1)
        return b, name

    sigma_t, tau_t, unit_t = {}, {}, {}
    for l in a_labels:
        b, m = fiber_of(l)
        fib = spec.fibers[b]
        sigma_t[l] = f"{b}::{fib.source(m)}⊗{l}"
        tau_t[l] = f"{l}⊗{b}::{fib.target(m)}"
    for cl in c_labels:
        b, x = fiber_of(cl)
        unit_t[cl] = f"{b}::{spec.fibers[b].identities[x]}"
    from .coalgebra import bicomodule
    sigma = Mor.from_table(a_obj, tensor_obj(c_obj, a_obj), sigma_t)
    tau = Mor.from_table(a_obj, tensor_obj(a_obj, c_obj), tau_t)
    arrows = bicomodule(a_obj, comonoid, sigma, comonoid, tau)
    unit = Mor.from_table(c_obj, a_obj, unit_t)
    from .cotensor import cotensor
    aa = cotensor(arrows, arrows)
    comp_t = {}
    for label in aa.ob.labels:
        l1, l2 = label.split("⊗")
        b, m1 = fiber_of(l1)
        _, m2 = fiber_of(l2)
        comp_t[label] = f"{b}::{spec.fibers[b].composition[m1, m2]}"
    comp = Mor.from_table(aa.ob, a_obj, comp_t)
    cat = InternalCategory(comonoid, arrows, unit, comp, aa)

    d_obj = base_cat.objects.carrier
    p = Mor.from_table(c_obj, tensor_obj(c_obj, d_obj),
                       {cl: f"{cl}⊗{fiber_of(cl)[0]}" for cl in c_labels})
    pi = Mor.from_table(a_obj, tensor_obj(a_obj, d_obj),
                        {al: f"{al}⊗{fiber_of(al)[0]}" for al in a_labels})

    bdc = bdc_carrier(base, comonoid, p)
    f_t = {}
    for label in bdc.ob.labels:
        beta, cl = label.split("⊗")
        _, x = fiber_of(cl)
        f_t[label] = f"{spec.base.source(beta)}::{spec.transition_obj(beta, x)}"
    f = Mor.from_table(bdc.ob, c_obj, f_t)

    q = Mor.from_table(c_obj, d_obj, {cl: fiber_of(cl)[0] for cl in c_labels})
    ba = ba_carrier(base, cat, q)
    phi_t = {}
    for label in ba.ob.labels:
        beta, al = label.split("⊗")
        _, xi = fiber_of(al)
        phi_t[label] = f"{spec.base.source(beta)}::{spec.transition_mor(beta, xi)}"
    phi = Mor.from_table(ba.ob, a_obj, phi_t)

    ps = Prestack(cat, base, p, pi, f, phi)
    require(ps.validation, "set_prestack axioms")
    return ps


def smash_to_classical(label: str) -> str:
    """Rename a smash morphism basis label into the classical pair form.

    "b::xi ⊗ beta ⊗ b'::x" becomes "beta::xi::x", the naming used by
    `direct_grothendieck`.
    """
    a_part, beta, c_part = label.split("⊗")
    _, xi = a_part.split("::", 1)
    _, x2 = c_part.split("::", 1)
    return f"{beta}::{xi}::{x2}"


def grothendieck_compare(spec: SplitPrestackSpec) -> Report:
    """Check that the smash of the encoded prestack matches the classical one.

    Builds the bijections explicitly and compares sources, targets,
    identities, and the full composition tables.
    """
    from .smash import smash
    report = Report()
    gr = direct_grothendieck(spec)
    ps = set_prestack(spec)
    sr = smash(ps)
    s = sr.carrier

    c_labels = list(sr.cat.objects.carrier.labels)
    report.require("oracle/objects-bijection", sorted(c_labels) == sorted(gr.objects),
                   "object sets differ")

    s_labels = list(s.ob.labels)
    mapped = [smash_to_classical(l) for l in s_labels]
    report.require("oracle/morphisms-bijection",
                   sorted(mapped) == sorted(gr.morphisms) and len(set(mapped)) == len(mapped),
                   f"{len(mapped)} smash morphisms vs {len(gr.morphisms)} classical")
    if not report.ok:
        return report

    arrows = sr.cat.arrows
    src_of = {l: c_labels[arrows.lam.payload[i] // len(s_labels)]
              for i, l in enumerate(s_labels)}
    tgt_of = {l: c_labels[arrows.rho.payload[i] % len(c_labels)]
              for i, l in enumerate(s_labels)}
    ok_ends = all(gr.morphisms[smash_to_classical(l)] == (src_of[l], tgt_of[l])
                  for l in s_labels)
    report.require("oracle/endpoints", ok_ends, "source or target mismatch")

    ident_ok = all(smash_to_classical(s_labels[sr.cat.unit.payload[i]]) == gr.identities[cl]
                   for i, cl in enumerate(c_labels))
    report.require("oracle/identities", ident_ok, "identity assignment mismatch")

    ss = sr.cat.aa
    comp_pairs = {}
    n = len(s_labels)
    for k, flat in enumerate(ss.mono.payload):
        i, j = divmod(flat, n)
        comp_pairs[smash_to_classical(s_labels[i]), smash_to_classical(s_labels[j])] = \
            smash_to_classical(s_labels[sr.cat.comp.payload[k]])
    report.require("oracle/composable-pairs",
                   set(comp_pairs) == set(gr.composition),
                   "composable pair sets differ")
    report.require("oracle/composition-table",
                   all(gr.composition[pair] == v for pair, v in comp_pairs.items()),
                   "composition tables differ")
    return report
