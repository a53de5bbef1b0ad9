"""JSON structure files: loading, validation, and canonical serialization.

Three top level kinds are supported, selected by the "kind" field:

* "structures": a backend and field selector, named objects with basis
  labels, named morphisms (exact rational matrices as strings, or function
  tables), and tagged structure sections referencing them.
* "finite-category": object and morphism tables with an explicit
  composition list and identity assignment.
* "split-prestack": a base finite category, one fiber per base object, and
  contravariant transition tables.
* "generator": a seed and count for the bundled random split prestack
  generator.

Scalar entries must be exact: integers or "p/q" strings; floats are
rejected.  Serialization is canonical (sorted keys, stable section order),
so parse -> serialize -> parse is the identity.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .builders import (check_module_algebra, group_algebra,
                       module_algebra_prestack)
from .coalgebra import Comonoid, check_comonoid, grouplike_comonoid
from .errors import CheckFailed, InputError
from .exact import GF, QQ, Field
from .fincat import (FiniteCategorySpec, SplitPrestackSpec, category_internal,
                     set_prestack)
from .internal import (Bimonoid, ComonoidalInternalCategory, InternalCategory,
                       Monoid, check_monoid, check_bimonoid, discrete,
                       one_object, promote_comonoidal)
from .monoidal import FinSet, Mor, Obj, finvect, obj, tensor_objs
from .prestack import Prestack
from .reports import Report

KINDS = ("structures", "finite-category", "split-prestack", "generator")


@dataclass
class LoadedStructures:
    """A parsed "structures" file with everything constructed and named."""

    backend: object
    field: Field | None
    objects: dict[str, Obj]
    morphisms: dict[str, Mor]
    sections: list[dict]
    built: dict[str, object] = field(default_factory=dict)
    raw: dict = field(default_factory=dict)


@dataclass
class FailedBuild:
    """A section whose eager construction checks rejected it."""

    error: Exception


def parse_field(name: str) -> Field:
    if name == "Q":
        return QQ
    if name.startswith("F") and name[1:].isdigit():
        return GF(int(name[1:]))
    raise InputError(f"unknown field {name!r}; use \"Q\" or \"F<prime>\"")


def _reject_floats(value, path: str):
    if isinstance(value, float):
        raise InputError(f"floating point literal at {path}; use exact \"p/q\" strings")
    if isinstance(value, dict):
        for k, v in value.items():
            _reject_floats(v, f"{path}.{k}")
    elif isinstance(value, list):
        for i, v in enumerate(value):
            _reject_floats(v, f"{path}[{i}]")


def load_file(path: str) -> dict:
    with open(path, encoding="utf-8") as handle:
        try:
            data = json.load(handle)
        except json.JSONDecodeError as exc:
            raise InputError(f"{path}:{exc.lineno}:{exc.colno}: {exc.msg}") from None
    if not isinstance(data, dict) or data.get("kind") not in KINDS:
        raise InputError(f"{path}: top level must set \"kind\" to one of {KINDS}")
    _reject_floats(data, path)
    return data


def _resolve_obj(spec: LoadedStructures, ref) -> Obj:
    """An object reference: a name, or a list of names meaning their tensor."""
    names = ref if isinstance(ref, list) else [ref]
    factors = []
    for name in names:
        if name == "1":
            from .monoidal import unit_obj
            factors.append(unit_obj(spec.backend))
            continue
        if name not in spec.objects:
            raise InputError(f"unknown object {name!r}")
        factors.append(spec.objects[name])
    return tensor_objs(factors)


def parse_structures(data: dict) -> LoadedStructures:
    backend_name = data.get("backend")
    if backend_name == "finvect":
        fld = parse_field(data.get("field", "Q"))
        backend = finvect(fld)
    elif backend_name == "finset":
        fld = None
        backend = FinSet
    else:
        raise InputError("backend must be \"finvect\" or \"finset\"")
    objects = {}
    for name, labels in data.get("objects", {}).items():
        if not isinstance(labels, list) or not all(isinstance(l, str) for l in labels):
            raise InputError(f"object {name!r} must list its labels")
        for l in labels:
            if "⊗" in l:
                raise InputError(f"object {name!r} label {l!r} contains the tensor separator")
        objects[name] = obj(backend, labels)
    spec = LoadedStructures(backend, fld, objects, {}, list(data.get("structures", [])),
                            raw=data)
    for name, body in data.get("morphisms", {}).items():
        spec.morphisms[name] = _parse_morphism(spec, name, body)
    for section in spec.sections:
        _build_section(spec, section)
    return spec


def _parse_morphism(spec: LoadedStructures, name: str, body: dict) -> Mor:
    if "dom" not in body or "cod" not in body:
        raise InputError(f"morphism {name!r} needs dom and cod")
    dom = _resolve_obj(spec, body["dom"])
    cod = _resolve_obj(spec, body["cod"])
    if spec.backend.kind == "finset":
        table = body.get("table")
        if not isinstance(table, dict):
            raise InputError(f"morphism {name!r} needs a function table")
        try:
            return Mor.from_table(dom, cod, table)
        except ValueError as exc:
            raise InputError(f"morphism {name!r}: {exc}") from None
    matrix = body.get("matrix")
    if not isinstance(matrix, list):
        raise InputError(f"morphism {name!r} needs a matrix")
    if len(matrix) != cod.size or any(len(row) != dom.size for row in matrix):
        raise InputError(f"morphism {name!r}: matrix must be {cod.size}x{dom.size}")
    fld = spec.field
    rows = []
    for row in matrix:
        out = []
        for v in row:
            if isinstance(v, str):
                out.append(fld.parse(v))
            elif isinstance(v, int):
                out.append(fld.coerce(v))
            else:
                raise InputError(f"morphism {name!r}: entries must be ints or strings")
        rows.append(out)
    return Mor.from_matrix(dom, cod, rows)


def _mor_ref(spec: LoadedStructures, section: dict, key: str) -> Mor:
    name = section.get(key)
    if name not in spec.morphisms:
        raise InputError(f"section {section.get('name', section['kind'])!r}: "
                         f"unknown morphism reference {name!r} for {key!r}")
    return spec.morphisms[name]


def _build_section(spec: LoadedStructures, section: dict):
    kind = section.get("kind")
    name = section.get("name", kind)
    try:
        if kind == "comonoid":
            carrier = _resolve_obj(spec, section["carrier"])
            if section.get("grouplike"):
                built = grouplike_comonoid(carrier)
            else:
                built = Comonoid(carrier, _mor_ref(spec, section, "delta"),
                                 _mor_ref(spec, section, "epsilon"))
        elif kind == "monoid":
            built = Monoid(_resolve_obj(spec, section["carrier"]),
                           _mor_ref(spec, section, "mult"),
                           _mor_ref(spec, section, "unit"))
        elif kind == "bimonoid":
            carrier = _resolve_obj(spec, section["carrier"])
            monoid = Monoid(carrier, _mor_ref(spec, section, "mult"),
                            _mor_ref(spec, section, "unit"))
            if section.get("grouplike"):
                comonoid = grouplike_comonoid(carrier)
            else:
                comonoid = Comonoid(carrier, _mor_ref(spec, section, "delta"),
                                    _mor_ref(spec, section, "epsilon"))
            built = Bimonoid(monoid, comonoid)
        elif kind == "internal-category":
            built = _build_internal_category(spec, section)
        elif kind == "comonoidal":
            base = spec.built.get(section.get("of"))
            if not isinstance(base, InternalCategory):
                raise InputError(f"section {name!r}: \"of\" must reference an internal category")

            built = promote_comonoidal(base, _mor_ref(spec, section, "delta"),
                                       _mor_ref(spec, section, "epsilon"))
        elif kind == "prestack":
            built = _build_prestack(spec, section)
        else:
            raise InputError(f"unknown structure section kind {kind!r}")
    except InputError:
        raise
    except (CheckFailed, AssertionError) as exc:
        built = FailedBuild(exc)
    spec.built[name] = built


def _build_internal_category(spec: LoadedStructures, section: dict) -> InternalCategory:
    style = section.get("style")
    if style == "one-object":
        monoid = spec.built.get(section.get("monoid"))
        if isinstance(monoid, Bimonoid):
            monoid = monoid.monoid
        if not isinstance(monoid, Monoid):
            raise InputError("one-object style needs a monoid or bimonoid reference")
        return one_object(monoid)
    if style == "discrete":
        comonoid = spec.built.get(section.get("comonoid"))
        if not isinstance(comonoid, Comonoid):
            raise InputError("discrete style needs a comonoid reference")
        return discrete(comonoid)
    if style == "category":
        fc = parse_finite_category(section.get("category", {}))
        return category_internal(fc, spec.backend)
    raise InputError(f"unknown internal-category style {style!r}")


def _build_prestack(spec: LoadedStructures, section: dict) -> Prestack:
    style = section.get("style")
    if style == "module-algebra":
        bim = spec.built.get(section.get("bimonoid"))
        mon = spec.built.get(section.get("monoid"))
        if isinstance(mon, Bimonoid):
            mon = mon.monoid
        if not isinstance(bim, Bimonoid) or not isinstance(mon, Monoid):
            raise InputError("module-algebra style needs bimonoid and monoid references")
        return module_algebra_prestack(bim, mon, _mor_ref(spec, section, "action"))
    if style == "explicit":
        cat = spec.built.get(section.get("cat"))
        base = spec.built.get(section.get("base"))
        if not isinstance(cat, InternalCategory) or not isinstance(base, ComonoidalInternalCategory):
            raise InputError("explicit style needs internal-category and comonoidal references")
        ps = Prestack(cat, base,
                      _mor_ref(spec, section, "p"), _mor_ref(spec, section, "pi"),
                      _mor_ref(spec, section, "f"), _mor_ref(spec, section, "phi"))
        if ps.f.dom.size != ps.bdc.ob.size or ps.phi.dom.size != ps.ba.ob.size:
            raise InputError("explicit prestack: f or phi has the wrong carrier dimension")
        return ps
    raise InputError(f"unknown prestack style {style!r}")


def parse_finite_category(body: dict) -> FiniteCategorySpec:
    for key in ("objects", "morphisms", "composition", "identities"):
        if key not in body:
            raise InputError(f"finite category needs {key!r}")
    morphisms = {}
    for m, ends in body["morphisms"].items():
        if not (isinstance(ends, list) and len(ends) == 2):
            raise InputError(f"morphism {m!r} needs [source, target]")
        morphisms[m] = (ends[0], ends[1])
    composition = {}
    for triple in body["composition"]:
        if not (isinstance(triple, list) and len(triple) == 3):
            raise InputError("composition entries are [first, second, composite] triples")
        composition[triple[0], triple[1]] = triple[2]
    out = FiniteCategorySpec(list(body["objects"]), morphisms, composition,
                             dict(body["identities"]))
    out.validate()
    return out


def parse_split_prestack(data: dict) -> SplitPrestackSpec:
    base = parse_finite_category(data.get("base", {}))
    fibers = {b: parse_finite_category(body)
              for b, body in data.get("fibers", {}).items()}
    transitions = {}
    for beta, tr in data.get("transitions", {}).items():
        if not isinstance(tr, dict) or "objects" not in tr or "morphisms" not in tr:
            raise InputError(f"transition {beta!r} needs object and morphism tables")
        transitions[beta] = {"objects": dict(tr["objects"]),
                             "morphisms": dict(tr["morphisms"])}
    spec = SplitPrestackSpec(base, fibers, transitions)
    spec.validate()
    return spec


def serialize_finite_category(fc: FiniteCategorySpec) -> dict:
    return {
        "objects": list(fc.objects),
        "morphisms": {m: [s, t] for m, (s, t) in sorted(fc.morphisms.items())},
        "composition": [[f, g, h] for (f, g), h in sorted(fc.composition.items())],
        "identities": dict(sorted(fc.identities.items())),
    }


def serialize_split_prestack(spec: SplitPrestackSpec) -> dict:
    return {
        "kind": "split-prestack",
        "base": serialize_finite_category(spec.base),
        "fibers": {b: serialize_finite_category(f) for b, f in sorted(spec.fibers.items())},
        "transitions": {beta: {"objects": dict(sorted(tr["objects"].items())),
                               "morphisms": dict(sorted(tr["morphisms"].items()))}
                        for beta, tr in sorted(spec.transitions.items())},
    }


def serialize_structures(spec: LoadedStructures) -> dict:
    data = {"kind": "structures",
            "backend": spec.backend.kind}
    if spec.field is not None:
        data["field"] = spec.field.name
    data["objects"] = {name: list(o.labels) for name, o in sorted(spec.objects.items())}
    morphisms = {}
    for name, mor in sorted(spec.morphisms.items()):
        body = dict(spec.raw["morphisms"][name])
        if spec.backend.kind == "finset":
            body["table"] = mor.table
        else:
            body["matrix"] = [[spec.field.to_str(mor.payload.entry(i, j))
                               for j in range(mor.payload.cols)]
                              for i in range(mor.payload.rows)]
        morphisms[name] = body
    data["morphisms"] = morphisms
    data["structures"] = spec.sections
    return data


def serialize(data_kind: str, payload) -> str:
    if data_kind == "structures":
        body = serialize_structures(payload)
    elif data_kind == "split-prestack":
        body = serialize_split_prestack(payload)
    elif data_kind == "finite-category":
        body = {"kind": "finite-category", **serialize_finite_category(payload)}
    else:
        raise InputError(f"cannot serialize kind {data_kind!r}")
    return json.dumps(body, ensure_ascii=False, indent=2, sort_keys=True) + "\n"


def _check_one_section(spec: LoadedStructures, section: dict) -> tuple[str, Report]:
    from .prestack import lemma_BD_comod_suite, lemma_maps_over_p_suite
    from .internal import check_internal_category
    kind = section["kind"]
    name = section.get("name", kind)
    report = Report()
    built = spec.built.get(name)
    if isinstance(built, FailedBuild):
        inner = getattr(built.error, "report", None)
        if inner is not None:
            report.merge(inner)
        else:
            report.absorb(f"{kind}/build", built.error)
        return name, report
    try:
        if kind == "comonoid":
            report.merge(check_comonoid(built))
        elif kind == "monoid":
            report.merge(check_monoid(built))
        elif kind == "bimonoid":
            report.merge(check_bimonoid(built))
        elif kind == "internal-category":
            report.merge(check_internal_category(built))
        elif kind == "comonoidal":
            report.record("comonoidal/promotion")
        elif kind == "prestack":
            report.merge(built.validation)
            report.merge(lemma_BD_comod_suite(built), "lemma-bd-comod")
            report.merge(lemma_maps_over_p_suite(built), "lemma-maps-over-p")
    except Exception as exc:  # noqa: BLE001 - reported with the section
        report.absorb(f"{kind}/build", exc)
    return name, report


def check_sections(spec: LoadedStructures, parallel: bool = False) -> dict[str, Report]:
    """Run the full check suite of every structure section, keyed by name.

    Sections are independent and pure, so they may be evaluated
    concurrently; the result dictionary is identical either way.
    """
    if parallel:
        from concurrent.futures import ThreadPoolExecutor
        with ThreadPoolExecutor() as pool:
            results = list(pool.map(lambda s: _check_one_section(spec, s), spec.sections))
    else:
        results = [_check_one_section(spec, s) for s in spec.sections]
    return dict(results)
