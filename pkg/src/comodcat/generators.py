"""Seeded random generators for property suites and counterexample search.

Split prestacks are sampled over three bundled base categories (the
terminal category, the walking arrow, and the group of order two as a one
object groupoid) with small discrete or chaotic fibers, so that arbitrary
object maps extend to strict transition functors; over the groupoid the
sampled maps are forced to be involutions.  Graded comodules are sampled
over group-like comonoids, where every degree assignment is a valid
coaction.
"""

from __future__ import annotations

import random

from .coalgebra import Comodule, Comonoid, bicomodule, grouplike_comonoid
from .exact import Field
from .fincat import FiniteCategorySpec, SplitPrestackSpec
from .monoidal import Backend, Mor, Obj, finvect, obj, tensor_obj


def terminal_category() -> FiniteCategorySpec:
    return FiniteCategorySpec(["*"], {"id*": ("*", "*")},
                              {("id*", "id*"): "id*"}, {"*": "id*"})


def walking_arrow() -> FiniteCategorySpec:
    morphisms = {"id0": ("0", "0"), "id1": ("1", "1"), "a": ("0", "1")}
    composition = {("id0", "id0"): "id0", ("id1", "id1"): "id1",
                   ("id0", "a"): "a", ("a", "id1"): "a"}
    return FiniteCategorySpec(["0", "1"], morphisms, composition,
                              {"0": "id0", "1": "id1"})


def cyclic_groupoid(n: int) -> FiniteCategorySpec:
    """The group of order n as a one object groupoid."""
    names = [f"r{i}" for i in range(n)]
    names[0] = "e"
    morphisms = {g: ("*", "*") for g in names}
    composition = {(names[i], names[j]): names[(i + j) % n]
                   for i in range(n) for j in range(n)}
    return FiniteCategorySpec(["*"], morphisms, composition, {"*": "e"})


def discrete_fiber(tag: str, n: int) -> FiniteCategorySpec:
    objects = [f"{tag}{i}" for i in range(n)]
    morphisms = {f"i{x}": (x, x) for x in objects}
    composition = {(f"i{x}", f"i{x}"): f"i{x}" for x in objects}
    return FiniteCategorySpec(objects, morphisms, composition,
                              {x: f"i{x}" for x in objects})


def chaotic_fiber(tag: str, n: int) -> FiniteCategorySpec:
    """Exactly one morphism between any ordered pair of objects."""
    objects = [f"{tag}{i}" for i in range(n)]
    morphisms = {f"h{x}.{y}": (x, y) for x in objects for y in objects}
    composition = {(f"h{x}.{y}", f"h{y}.{z}"): f"h{x}.{z}"
                   for x in objects for y in objects for z in objects}
    return FiniteCategorySpec(objects, morphisms, composition,
                              {x: f"h{x}.{x}" for x in objects})


def _functor_from_object_map(src: FiniteCategorySpec, dst: FiniteCategorySpec,
                             omap: dict[str, str]) -> dict[str, dict[str, str]]:
    """Extend an object map to a functor; valid for discrete/chaotic fibers.

    Both fiber shapes have at most one morphism between any ordered pair,
    so the morphism map is forced by the object map.
    """
    mmap = {}
    for m, (x, y) in src.morphisms.items():
        candidates = [m2 for m2, ends in dst.morphisms.items()
                      if ends == (omap[x], omap[y])]
        assert len(candidates) == 1, "object map does not extend to a functor"
        mmap[m] = candidates[0]
    return {"objects": dict(omap), "morphisms": mmap}


def _identity_transition(fib: FiniteCategorySpec) -> dict[str, dict[str, str]]:
    return {"objects": {x: x for x in fib.objects},
            "morphisms": {m: m for m in fib.morphisms}}


def _random_fiber(rng: random.Random, tag: str) -> FiniteCategorySpec:
    n = rng.randint(1, 3)
    if rng.random() < 0.5:
        return discrete_fiber(tag, n)
    return chaotic_fiber(tag, n)


def _random_involution(rng: random.Random, items: list[str]) -> dict[str, str]:
    out = {}
    pool = list(items)
    rng.shuffle(pool)
    while pool:
        x = pool.pop()
        if pool and rng.random() < 0.5:
            y = pool.pop()
            out[x], out[y] = y, x
        else:
            out[x] = x
    return out


def random_split_prestack(rng: random.Random, base_name: str) -> SplitPrestackSpec:
    """One random strict split prestack over a named bundled base."""
    if base_name == "terminal":
        base = terminal_category()
        fib = _random_fiber(rng, "x")
        return SplitPrestackSpec(base, {"*": fib},
                                 {"id*": _identity_transition(fib)})
    if base_name == "walking-arrow":
        base = walking_arrow()
        fib0 = _random_fiber(rng, "x")
        fib1 = _random_fiber(rng, "y")
        omap = {y: rng.choice(fib0.objects) for y in fib1.objects}
        if not _maps_allowed(fib1, fib0, omap):
            omap = {y: fib0.objects[0] for y in fib1.objects}
        return SplitPrestackSpec(
            base, {"0": fib0, "1": fib1},
            {"id0": _identity_transition(fib0),
             "id1": _identity_transition(fib1),
             "a": _functor_from_object_map(fib1, fib0, omap)})
    if base_name == "z2-groupoid":
        base = cyclic_groupoid(2)
        fib = _random_fiber(rng, "x")
        omap = _random_involution(rng, fib.objects)
        return SplitPrestackSpec(
            base, {"*": fib},
            {"e": _identity_transition(fib),
             "r1": _functor_from_object_map(fib, fib, omap)})
    raise ValueError(f"unknown base {base_name}")


def _maps_allowed(src: FiniteCategorySpec, dst: FiniteCategorySpec,
                  omap: dict[str, str]) -> bool:
    # chaotic targets absorb anything; discrete targets need constant maps
    # on chaotic sources with more than one object
    kinds = (next(iter(src.morphisms), "i")[0], next(iter(dst.morphisms), "i")[0])
    if kinds == ("h", "i"):
        return len(set(omap.values())) <= 1
    return True


BUNDLED_BASES = ("terminal", "walking-arrow", "z2-groupoid")


def iter_random_split_prestacks(seed: int = 0, count: int = 60) -> list[SplitPrestackSpec]:
    """A deterministic batch of random split prestacks over the bundled bases."""
    rng = random.Random(seed)
    out = []
    for i in range(count):
        base_name = BUNDLED_BASES[i % len(BUNDLED_BASES)]
        out.append(random_split_prestack(rng, base_name))
    for spec in out:
        spec.validate()
    return out


def random_graded_bicomodule(rng: random.Random, comonoid: Comonoid,
                             dim: int, tag: str = "m") -> Comodule:
    """A bicomodule over a group-like comonoid from a random degree table."""
    carrier = obj(comonoid.backend, tuple(f"{tag}{i}" for i in range(dim)))
    n = comonoid.carrier.size
    left_deg = [rng.randrange(n) for _ in range(dim)]
    right_deg = [rng.randrange(n) for _ in range(dim)]
    if carrier.backend.kind == "finset":
        lam = Mor(carrier, tensor_obj(comonoid.carrier, carrier),
                  tuple(left_deg[i] * dim + i for i in range(dim)))
        rho = Mor(carrier, tensor_obj(carrier, comonoid.carrier),
                  tuple(i * n + right_deg[i] for i in range(dim)))
    else:
        fld = carrier.backend.field
        lrows = [[fld.zero] * dim for _ in range(n * dim)]
        rrows = [[fld.zero] * dim for _ in range(dim * n)]
        for i in range(dim):
            lrows[left_deg[i] * dim + i][i] = fld.one
            rrows[i * n + right_deg[i]][i] = fld.one
        lam = Mor.from_matrix(carrier, tensor_obj(comonoid.carrier, carrier), lrows)
        rho = Mor.from_matrix(carrier, tensor_obj(carrier, comonoid.carrier), rrows)
    return bicomodule(carrier, comonoid, lam, comonoid, rho)


def random_grouplike_comonoid(rng: random.Random, backend: Backend,
                              max_size: int = 3, tag: str = "c") -> Comonoid:
    size = rng.randint(1, max_size)
    return grouplike_comonoid(obj(backend, tuple(f"{tag}{i}" for i in range(size))))
