"""Command line interface.

Commands: check, smash, coinv, oracle-compare, describe.  Exit codes:
0 when everything passes, 1 when a structural check fails, 2 on malformed
input.  Output is deterministic; `--parallel` evaluates independent section
reports concurrently and aggregates them in name order.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ThreadPoolExecutor

from .errors import CheckFailed, InputError, NoFactorization, NotInvertible
from .fincat import (SplitPrestackSpec, direct_grothendieck,
                     grothendieck_compare, set_prestack)
from .generators import iter_random_split_prestacks
from .monoidal import payload_str
from .prestack import Prestack
from .reports import Report
from . import specfile

EXIT_PASS = 0
EXIT_CHECK_FAILED = 1
EXIT_INPUT_ERROR = 2


def _report_payload(report: Report) -> dict:
    failures = []
    for f in report.failures:
        entry = {"diagram": f.diagram}
        if f.detail:
            entry["detail"] = f.detail
        if f.left is not None:
            entry["left"] = payload_str(f.left) if hasattr(f.left, "payload") else str(f.left)
        if f.right is not None:
            entry["right"] = payload_str(f.right) if hasattr(f.right, "payload") else str(f.right)
        failures.append(entry)
    return {"pass": report.ok, "checked": len(report.checked), "failures": failures}


class Output:
    def __init__(self, fmt: str):
        self.fmt = fmt
        self.doc = {}

    def section(self, name: str, report: Report):
        self.doc[name] = _report_payload(report)
        if self.fmt == "text":
            status = "pass" if report.ok else "FAIL"
            print(f"[{status}] {name}: {len(report.checked)} diagrams")
            for f in report.failures:
                print(f"    FAIL {f.diagram}" + (f"  ({f.detail})" if f.detail else ""))

    def info(self, key: str, value):
        self.doc[key] = value
        if self.fmt == "text":
            print(f"{key}: {value}")

    def finish(self):
        if self.fmt == "json":
            print(json.dumps(self.doc, ensure_ascii=False, indent=2, sort_keys=True))


def _load(path: str):
    data = specfile.load_file(path)
    kind = data["kind"]
    if kind == "structures":
        return kind, specfile.parse_structures(data)
    if kind == "split-prestack":
        return kind, specfile.parse_split_prestack(data)
    if kind == "finite-category":
        return kind, specfile.parse_finite_category(data)
    return kind, data


def _generator_batch(data: dict, seed_override: int | None):
    seed = seed_override if seed_override is not None else data.get("seed", 0)
    count = data.get("count", 60)
    return iter_random_split_prestacks(seed=seed, count=count)


def cmd_check(args, out: Output) -> int:
    kind, loaded = _load(args.file)
    if kind == "structures":
        reports = specfile.check_sections(loaded, parallel=args.parallel)
        all_ok = True
        for name in sorted(reports):
            out.section(name, reports[name])
            all_ok = all_ok and reports[name].ok
        return EXIT_PASS if all_ok else EXIT_CHECK_FAILED
    if kind == "finite-category":
        out.info("finite-category", "valid")
        return EXIT_PASS
    if kind == "split-prestack":
        ps = set_prestack(loaded)
        out.section("prestack", ps.validation)
        return EXIT_PASS if ps.validation.ok else EXIT_CHECK_FAILED
    if kind == "generator":
        specs = _generator_batch(loaded, args.seed)
        failures = 0
        def one(item):
            i, spec = item
            ps = set_prestack(spec)
            return i, ps.validation
        items = list(enumerate(specs))
        results = map(one, items)
        if args.parallel:
            with ThreadPoolExecutor() as pool:
                results = pool.map(one, items)
        for i, rep in sorted(results, key=lambda r: r[0]):
            if not rep.ok:
                out.section(f"instance-{i}", rep)
                failures += 1
        out.info("instances", len(items))
        out.info("failures", failures)
        return EXIT_PASS if failures == 0 else EXIT_CHECK_FAILED
    raise InputError(f"cannot check files of kind {kind!r}")


def _prestack_from(kind: str, loaded) -> Prestack:
    if kind == "split-prestack":
        return set_prestack(loaded)
    if kind == "structures":
        for name, built in loaded.built.items():
            if isinstance(built, Prestack):
                return built
            if isinstance(built, specfile.FailedBuild):
                raise CheckFailed(f"section {name!r} failed to build: {built.error}",
                                  getattr(built.error, "report", None))
        raise InputError("file contains no prestack section")
    raise InputError(f"cannot take a prestack from kind {kind!r}")


def cmd_smash(args, out: Output) -> int:
    from .smash import smash
    kind, loaded = _load(args.file)
    ps = _prestack_from(kind, loaded)
    sr = smash(ps)
    out.info("objects-dimension", ps.c.carrier.size)
    out.info("morphisms-dimension", sr.carrier.ob.size)
    out.section("smash", sr.report)
    if args.output:
        _write_smash(args.output, kind, loaded, sr)
        out.info("written", args.output)
    return EXIT_PASS if sr.report.ok else EXIT_CHECK_FAILED


def _write_smash(path: str, kind: str, loaded, sr):
    if sr.cat.backend.kind == "finset":
        from .fincat import FiniteCategorySpec, smash_to_classical
        labels = [smash_to_classical(l) for l in sr.carrier.ob.labels]
        morphisms = {}
        n = len(labels)
        c_labels = sr.cat.objects.carrier.labels
        src = sr.cat.arrows.lam.payload
        tgt = sr.cat.arrows.rho.payload
        for i, l in enumerate(labels):
            morphisms[l] = (c_labels[src[i] // n], c_labels[tgt[i] % len(c_labels)])
        identities = {c_labels[i]: labels[sr.cat.unit.payload[i]]
                      for i in range(len(c_labels))}
        composition = {}
        for k, flat in enumerate(sr.cat.aa.mono.payload):
            composition[labels[flat // n], labels[flat % n]] = \
                labels[sr.cat.comp.payload[k]]
        fc = FiniteCategorySpec(list(c_labels), morphisms, composition, identities)
        fc.validate()
        body = specfile.serialize("finite-category", fc)
    else:
        doc = {
            "kind": "smash-result",
            "backend": sr.cat.backend.kind,
            "field": sr.cat.backend.field.name,
            "objects": list(sr.cat.objects.carrier.labels),
            "morphism-basis": list(sr.carrier.ob.labels),
            "composition-matrix": _matrix_strings(sr.cat.comp),
            "unit-matrix": _matrix_strings(sr.cat.unit),
            "source-coaction": _matrix_strings(sr.cat.arrows.lam),
            "target-coaction": _matrix_strings(sr.cat.arrows.rho),
            "base-coaction": _matrix_strings(sr.comodcat.pi),
        }
        body = json.dumps(doc, ensure_ascii=False, indent=2, sort_keys=True) + "\n"
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(body)


def _matrix_strings(mor) -> list[list[str]]:
    pm = mor.payload
    fld = pm.field
    return [[fld.to_str(pm.entry(i, j)) for j in range(pm.cols)] for i in range(pm.rows)]


def cmd_coinv(args, out: Output) -> int:
    from .smash import coinvariants, recovery_iso, smash
    kind, loaded = _load(args.file)
    ps = _prestack_from(kind, loaded)
    sr = smash(ps)
    out.info("smash-morphisms-dimension", sr.carrier.ob.size)
    ri = recovery_iso(sr)
    out.info("coinvariant-morphisms-dimension", ri.coinv.carrier.ob.size)
    out.section("coinvariants", ri.coinv.report)
    out.section("recovery", ri.report)
    ok = ri.coinv.report.ok and ri.report.ok
    if args.output:
        with open(args.output, "w", encoding="utf-8") as handle:
            json.dump({"kind": "coinvariants-result",
                       "smash-dimension": sr.carrier.ob.size,
                       "coinvariant-dimension": ri.coinv.carrier.ob.size,
                       "recovered-dimension": ps.cat.arrows.carrier.size},
                      handle, indent=2, sort_keys=True)
            handle.write("\n")
        out.info("written", args.output)
    return EXIT_PASS if ok else EXIT_CHECK_FAILED


def cmd_oracle_compare(args, out: Output) -> int:
    kind, loaded = _load(args.file)
    if kind == "split-prestack":
        rep = grothendieck_compare(loaded)
        out.section("oracle-compare", rep)
        if rep.ok:
            gr = direct_grothendieck(loaded)
            out.info("certificate",
                     {"objects": len(gr.objects), "morphisms": len(gr.morphisms),
                      "bijection": "label-preserving up to slot order"})
        return EXIT_PASS if rep.ok else EXIT_CHECK_FAILED
    if kind == "generator":
        specs = _generator_batch(loaded, args.seed)
        def one(item):
            i, spec = item
            return i, grothendieck_compare(spec)
        items = list(enumerate(specs))
        results = map(one, items)
        if args.parallel:
            with ThreadPoolExecutor() as pool:
                results = pool.map(one, items)
        failures = 0
        for i, rep in sorted(results, key=lambda r: r[0]):
            if not rep.ok:
                out.section(f"instance-{i}", rep)
                failures += 1
        out.info("instances", len(items))
        out.info("failures", failures)
        return EXIT_PASS if failures == 0 else EXIT_CHECK_FAILED
    if kind == "structures":
        from .builders import classical_smash_oracle
        from .internal import Bimonoid, Monoid
        from .smash import smash
        ps = _prestack_from(kind, loaded)
        section = next(s for s in loaded.sections if s["kind"] == "prestack")
        if section.get("style") != "module-algebra":
            raise InputError("oracle-compare on structures needs a module-algebra prestack")
        bim = loaded.built[section["bimonoid"]]
        mon = loaded.built[section["monoid"]]
        if isinstance(mon, Bimonoid):
            mon = mon.monoid
        action = loaded.morphisms[section["action"]]
        oracle = classical_smash_oracle(bim, mon, action)
        sr = smash(ps)
        rep = Report()
        rep.compare("oracle/multiplication-table", sr.cat.comp, oracle)
        out.section("oracle-compare", rep)
        out.info("basis-pairs", oracle.dom.size)
        return EXIT_PASS if rep.ok else EXIT_CHECK_FAILED
    raise InputError(f"cannot oracle-compare files of kind {kind!r}")


def cmd_describe(args, out: Output) -> int:
    kind, loaded = _load(args.file)
    out.info("kind", kind)
    if kind == "structures":
        out.info("backend", loaded.backend.kind
                 + (f"({loaded.field.name})" if loaded.field else ""))
        out.info("objects", {n: o.size for n, o in sorted(loaded.objects.items())})
        out.info("morphisms", sorted(loaded.morphisms))
        out.info("sections", [{"kind": s["kind"], "name": s.get("name", s["kind"])}
                              for s in loaded.sections])
    elif kind == "finite-category":
        out.info("objects", len(loaded.objects))
        out.info("morphisms", len(loaded.morphisms))
    elif kind == "split-prestack":
        out.info("base-objects", len(loaded.base.objects))
        out.info("fibers", {b: len(f.objects) for b, f in sorted(loaded.fibers.items())})
    elif kind == "generator":
        out.info("seed", loaded.get("seed", 0))
        out.info("count", loaded.get("count", 60))
    return EXIT_PASS


def _add_global_flags(parser: argparse.ArgumentParser, suppress: bool):
    default = argparse.SUPPRESS if suppress else None
    parser.add_argument("--seed", type=int,
                        default=default,
                        help="seed for generator-backed batches (default: from file)")
    parser.add_argument("--parallel", action="store_true",
                        default=argparse.SUPPRESS if suppress else False,
                        help="evaluate independent reports concurrently")
    parser.add_argument("--format", choices=("text", "json"),
                        default=argparse.SUPPRESS if suppress else "text")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="comodcat",
        description="Exact checks, smash products and coinvariants for "
                    "internal categories over vector spaces and finite sets.")
    _add_global_flags(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True)
    specs = {
        "check": ("run every structure check in a file", False),
        "smash": ("build the smash product of a prestack", True),
        "coinv": ("smash, take coinvariants, verify recovery", True),
        "oracle-compare": ("compare against the classical oracles", False),
        "describe": ("summarize a structure file", False),
    }
    for name, (help_text, takes_output) in specs.items():
        p = sub.add_parser(name, help=help_text)
        p.add_argument("file")
        if takes_output:
            p.add_argument("-o", "--output", default=None)
        _add_global_flags(p, suppress=True)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    out = Output(args.format)
    handler = {
        "check": cmd_check,
        "smash": cmd_smash,
        "coinv": cmd_coinv,
        "oracle-compare": cmd_oracle_compare,
        "describe": cmd_describe,
    }[args.command]
    try:
        code = handler(args, out)
    except InputError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    except FileNotFoundError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    except (CheckFailed, NoFactorization, NotInvertible) as exc:
        print(f"check failed: {exc}", file=sys.stderr)
        return EXIT_CHECK_FAILED
    out.finish()
    return code


if __name__ == "__main__":
    sys.exit(main())
