"""Canonical example builders: group algebras, module algebras, prestacks.

These construct the bundled structures from multiplication and action
tables, verifying every axiom on the way in, and provide the classical
smash product multiplication table used as an independent oracle.
"""

from __future__ import annotations

from fractions import Fraction

from .coalgebra import (Comonoid, grouplike_comonoid, require, unit_comonoid)
from .errors import InputError
from .exact import Field, QQ
from .internal import (Bimonoid, Monoid, check_bimonoid, check_monoid,
                       one_object, promote_comonoidal)
from .monoidal import (Backend, Mor, Obj, braiding, compose, finvect,
                       identity, obj, tensor_mor, tensor_mors, tensor_obj,
                       unit_obj)
from .prestack import Prestack, ba_carrier, bdc_carrier, check_prestack
from .reports import Report


def _basis_mor(dom: Obj, cod: Obj, columns: dict[int, dict[int, object]],
               field: Field) -> Mor:
    """A matrix from a sparse column description {col: {row: value}}."""
    rows = [[field.zero] * dom.size for _ in range(cod.size)]
    for col, entries in columns.items():
        for row, value in entries.items():
            rows[row][col] = field.coerce(value)
    return Mor.from_matrix(dom, cod, rows)


def validate_group_table(elements: list[str], table: dict[tuple[str, str], str]) -> str:
    """Check a multiplication table is a group; return the identity element."""
    elems = set(elements)
    if len(elems) != len(elements):
        raise InputError("group elements must be distinct")
    for g in elements:
        for h in elements:
            if (g, h) not in table:
                raise InputError(f"group table missing product {g}*{h}")
            if table[g, h] not in elems:
                raise InputError(f"group table value {table[g, h]} is not an element")
    for g in elements:
        for h in elements:
            for k in elements:
                if table[table[g, h], k] != table[g, table[h, k]]:
                    raise InputError(f"group table not associative at ({g},{h},{k})")
    ident = next((e for e in elements
                  if all(table[e, g] == g and table[g, e] == g for g in elements)), None)
    if ident is None:
        raise InputError("group table has no identity")
    for g in elements:
        if not any(table[g, h] == ident for h in elements):
            raise InputError(f"group table element {g} has no inverse")
    return ident


def group_algebra(elements: list[str], table: dict[tuple[str, str], str],
                  field: Field) -> Bimonoid:
    """The group bimonoid on a field: basis the elements, group-like coalgebra."""
    ident = validate_group_table(elements, table)
    backend = finvect(field)
    a = obj(backend, elements)
    idx = {e: i for i, e in enumerate(elements)}
    mult_cols = {i * a.size + j: {idx[table[g, h]]: 1}
                 for i, g in enumerate(elements) for j, h in enumerate(elements)}
    mult = _basis_mor(tensor_obj(a, a), a, mult_cols, field)
    unit = _basis_mor(unit_obj(backend), a, {0: {idx[ident]: 1}}, field)
    monoid = Monoid(a, mult, unit)
    comonoid = grouplike_comonoid(a)
    bim = Bimonoid(monoid, comonoid)
    require(check_bimonoid(bim), "group_algebra axioms")
    return bim


def cyclic_group_table(n: int, prefix: str = "g") -> tuple[list[str], dict]:
    names = ["1"] + [f"{prefix}{'' if n == 2 else i}" for i in range(1, n)]
    table = {(names[i], names[j]): names[(i + j) % n]
             for i in range(n) for j in range(n)}
    return names, table


def truncated_polynomial_monoid(field: Field) -> Monoid:
    """k[x]/(x^2) as a monoid on basis {1, x}."""
    backend = finvect(field)
    a = obj(backend, ["1", "x"])
    mult = _basis_mor(tensor_obj(a, a), a,
                      {0: {0: 1}, 1: {1: 1}, 2: {1: 1}, 3: {}}, field)
    unit = _basis_mor(unit_obj(backend), a, {0: {0: 1}}, field)
    monoid = Monoid(a, mult, unit)
    require(check_monoid(monoid), "truncated polynomial monoid axioms")
    return monoid


def sweedler_h4(field: Field = QQ) -> Bimonoid:
    """The four-dimensional bimonoid on {1, g, x, gx} with g²=1, x²=0, xg=-gx.

    Its comultiplication sends x to x⊗1 + g⊗x, so it is not cocommutative.
    """
    backend = finvect(field)
    h = obj(backend, ["1", "g", "x", "gx"])
    # multiplication table, columns indexed by basis pairs (left major)
    prod = {
        (0, 0): {0: 1}, (0, 1): {1: 1}, (0, 2): {2: 1}, (0, 3): {3: 1},
        (1, 0): {1: 1}, (1, 1): {0: 1}, (1, 2): {3: 1}, (1, 3): {2: 1},
        (2, 0): {2: 1}, (2, 1): {3: -1}, (2, 2): {}, (2, 3): {},
        (3, 0): {3: 1}, (3, 1): {2: -1}, (3, 2): {}, (3, 3): {},
    }
    mult = _basis_mor(tensor_obj(h, h), h,
                      {i * 4 + j: v for (i, j), v in prod.items()}, field)
    unit = _basis_mor(unit_obj(backend), h, {0: {0: 1}}, field)
    # delta(1)=1⊗1, delta(g)=g⊗g, delta(x)=x⊗1+g⊗x, delta(gx)=gx⊗g+1⊗gx
    delta = _basis_mor(h, tensor_obj(h, h), {
        0: {0: 1},
        1: {5: 1},
        2: {8: 1, 6: 1},
        3: {13: 1, 3: 1},
    }, field)
    epsilon = _basis_mor(h, unit_obj(backend), {0: {0: 1}, 1: {0: 1}}, field)
    bim = Bimonoid(Monoid(h, mult, unit), Comonoid(h, delta, epsilon))
    require(check_bimonoid(bim), "Sweedler bimonoid axioms")
    return bim


def check_module_algebra(h: Bimonoid, a: Monoid, action: Mor) -> Report:
    """The measuring and action axioms for a bimonoid acting on a monoid."""
    report = Report()
    hc, ac = h.carrier, a.carrier
    ih, ia = identity(hc), identity(ac)
    delta, eps = h.comonoid.delta, h.comonoid.epsilon
    shuffle = tensor_mors(ih, braiding(hc, ac), ia)
    report.compare("module-algebra/measuring",
                   compose(action, tensor_mor(ih, a.mult)),
                   compose(a.mult, compose(tensor_mor(action, action),
                                           compose(shuffle, tensor_mors(delta, ia, ia)))))
    report.compare("module-algebra/unit-preservation",
                   compose(action, tensor_mor(ih, a.unit)),
                   compose(a.unit, eps))
    report.compare("module-algebra/action-unit",
                   compose(action, tensor_mor(h.monoid.unit, ia)), ia)
    report.compare("module-algebra/action-assoc",
                   compose(action, tensor_mor(h.monoid.mult, ia)),
                   compose(action, tensor_mor(ih, action)))
    return report


def module_algebra_prestack(h: Bimonoid, a: Monoid, action: Mor) -> Prestack:
    """The one-object prestack of a bimonoid acting on a monoid.

    Both object comonoids are trivial, the base carrier B □_D C collapses to
    the bimonoid, f is the counit collapse, and phi is the action read off
    the carrier.
    """
    require(check_module_algebra(h, a, action), "module algebra axioms")
    backend = a.carrier.backend
    one = unit_comonoid(backend)
    cat = one_object(a)
    base = promote_comonoidal(one_object(h.monoid), h.comonoid.delta,
                              h.comonoid.epsilon)
    iu = identity(one.carrier)
    p = Mor(one.carrier, tensor_obj(one.carrier, one.carrier), iu.payload)
    pi = Mor(a.carrier, tensor_obj(a.carrier, one.carrier),
             identity(a.carrier).payload)
    bdc = bdc_carrier(base, one, p)
    f = compose(tensor_mor(h.comonoid.epsilon, iu), bdc.mono)
    ba = ba_carrier(base, cat, iu)
    phi = compose(action, Mor(ba.ob, tensor_obj(h.carrier, a.carrier),
                              ba.mono.payload))
    ps = Prestack(cat, base, p, pi, f, phi)
    require(ps.validation, "module_algebra_prestack axioms")
    return ps


def trivial_action(h: Bimonoid, a: Monoid) -> Mor:
    """h . x = epsilon(h) x."""
    return tensor_mor(h.comonoid.epsilon, identity(a.carrier))


def sign_action_z2_on_dual_numbers(field: Field = QQ) -> tuple[Bimonoid, Monoid, Mor]:
    """The group of order two acting on k[x]/(x^2) by x -> -x."""
    names, table = cyclic_group_table(2)
    h = group_algebra(names, table, field)
    a = truncated_polynomial_monoid(field)
    dom = tensor_obj(h.carrier, a.carrier)
    action = _basis_mor(dom, a.carrier,
                        {0: {0: 1}, 1: {1: 1}, 2: {0: 1}, 3: {1: -1}}, field)
    return h, a, action


def sweedler_derivation_action(field: Field = QQ) -> tuple[Bimonoid, Monoid, Mor]:
    """Sweedler's bimonoid acting on k[y]/(y^2): g flips the sign, x differentiates."""
    h = sweedler_h4(field)
    a = truncated_polynomial_monoid(field)
    dom = tensor_obj(h.carrier, a.carrier)
    # columns: (1,1),(1,y),(g,1),(g,y),(x,1),(x,y),(gx,1),(gx,y)
    action = _basis_mor(dom, a.carrier,
                        {0: {0: 1}, 1: {1: 1}, 2: {0: 1}, 3: {1: -1},
                         4: {}, 5: {0: 1}, 6: {}, 7: {0: 1}}, field)
    return h, a, action


def classical_smash_oracle(h: Bimonoid, a: Monoid, action: Mor) -> Mor:
    """The textbook smash multiplication on A⊗H, as a single exact matrix.

    (a⊗h)(a'⊗h') = a (h₁ . a') ⊗ h₂ h', assembled directly from the
    structure maps without any cotensor machinery.
    """
    require(check_module_algebra(h, a, action), "classical smash oracle preconditions")
    hc, ac = h.carrier, a.carrier
    ih, ia = identity(hc), identity(ac)
    split = tensor_mors(ia, h.comonoid.delta, ia, ih)
    shuffle = tensor_mors(ia, ih, braiding(hc, ac), ih)
    act_mult = tensor_mors(ia, action, h.monoid.mult)
    finish = tensor_mor(a.mult, ih)
    return compose(finish, compose(act_mult, compose(shuffle, split)))
