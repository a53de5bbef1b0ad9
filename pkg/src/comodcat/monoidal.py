"""Regular symmetric monoidal backends: exact vector spaces and finite sets.

Objects carry ordered basis labels; tensor objects flatten label pairs as
"l⊗r" in left factor major order, which makes the tensor literally associative
on labels and on payloads.  Morphisms are compared and composed by dimensions
and payload only: labels are bookkeeping, so the strict identifications
1⊗X = X = X⊗1 hold at the payload level and no unitor or associator data is
ever needed.

Payloads are `DenseMap` matrices for the vector space backend and total
function tables (stored positionally, exposed as label dictionaries) for the
finite set backend.  Equalizers are computed as canonical subobjects: reduced
column echelon kernels, or subsets in ambient label order.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import reduce
from typing import Iterable, Sequence

from . import exact
from .errors import EqualizingConditionFails, NoFactorization, NotInvertible
from .exact import DenseMap, Field
from .reports import Report

TENSOR_SEP = "⊗"
UNIT_LABEL = "•"

FINVECT = "finvect"
FINSET = "finset"


@dataclass(frozen=True)
class Backend:
    kind: str
    field: Field | None = None

    def __post_init__(self):
        assert self.kind in (FINVECT, FINSET)
        assert (self.field is None) == (self.kind == FINSET)

    def __repr__(self):
        return self.kind if self.field is None else f"{self.kind}({self.field.name})"


FinSet = Backend(FINSET)


def finvect(fld: Field) -> Backend:
    return Backend(FINVECT, fld)


class Obj:
    """An object: a based space (basis labels) or a finite set (elements).

    Tensor objects stay lazy: their flattened "l⊗r" label lists are only
    materialized on demand, since sizes and payload index arithmetic carry
    all structural content.
    """

    __slots__ = ("backend", "size", "_labels", "_factors")

    def __init__(self, backend: Backend, labels: Iterable[str]):
        labels = tuple(labels)
        assert len(set(labels)) == len(labels), "labels must be distinct"
        self.backend = backend
        self.size = len(labels)
        self._labels = labels
        self._factors = None

    @classmethod
    def _tensor(cls, x: "Obj", y: "Obj") -> "Obj":
        out = cls.__new__(cls)
        out.backend = x.backend
        out.size = x.size * y.size
        out._labels = None
        out._factors = (x, y)
        return out

    @property
    def labels(self) -> tuple[str, ...]:
        if self._labels is None:
            x, y = self._factors
            self._labels = tuple(f"{lx}{TENSOR_SEP}{ly}"
                                 for lx in x.labels for ly in y.labels)
        return self._labels

    def index(self, label: str) -> int:
        return self.labels.index(label)

    def __eq__(self, other):
        if not isinstance(other, Obj):
            return NotImplemented
        return (self.backend == other.backend and self.size == other.size
                and self.labels == other.labels)

    def __ne__(self, other):
        eq = self.__eq__(other)
        return NotImplemented if eq is NotImplemented else not eq

    def __repr__(self):
        if self._labels is None:
            return f"Obj(<tensor of {self.size}>)"
        return f"Obj({list(self._labels)})"


def unit_obj(backend: Backend) -> Obj:
    return Obj(backend, (UNIT_LABEL,))


def obj(backend: Backend, labels: Iterable[str]) -> Obj:
    return Obj(backend, tuple(labels))


def tensor_obj(x: Obj, y: Obj) -> Obj:
    _check_backend(x.backend, y.backend)
    return Obj._tensor(x, y)


def tensor_objs(factors: Sequence[Obj]) -> Obj:
    return reduce(tensor_obj, factors)


def _check_backend(a: Backend, b: Backend):
    if a != b:
        raise ValueError(f"backend mismatch: {a!r} vs {b!r}")


class Mor:
    """A morphism between objects of one backend.

    Composability and equality look at sizes and payload only; domain and
    codomain labels are carried along for reporting and file output.
    """

    __slots__ = ("dom", "cod", "payload")

    def __init__(self, dom: Obj, cod: Obj, payload):
        _check_backend(dom.backend, cod.backend)
        if dom.backend.kind == FINVECT:
            assert isinstance(payload, DenseMap)
            assert payload.field is dom.backend.field
            assert (payload.rows, payload.cols) == (cod.size, dom.size)
        else:
            payload = tuple(payload)
            assert len(payload) == dom.size
            assert all(0 <= v < cod.size for v in payload)
        self.dom = dom
        self.cod = cod
        self.payload = payload

    @property
    def backend(self) -> Backend:
        return self.dom.backend

    @classmethod
    def from_matrix(cls, dom: Obj, cod: Obj, rows) -> "Mor":
        return cls(dom, cod, DenseMap.from_rows(rows, dom.backend.field))

    @classmethod
    def from_table(cls, dom: Obj, cod: Obj, table: dict[str, str]) -> "Mor":
        missing = [l for l in dom.labels if l not in table]
        if missing:
            raise ValueError(f"function table not total, missing {missing}")
        return cls(dom, cod, tuple(cod.index(table[l]) for l in dom.labels))

    @classmethod
    def identity(cls, x: Obj) -> "Mor":
        if x.backend.kind == FINVECT:
            return cls(x, x, DenseMap.identity(x.size, x.backend.field))
        return cls(x, x, tuple(range(x.size)))

    @property
    def table(self) -> dict[str, str]:
        assert self.backend.kind == FINSET
        return {l: self.cod.labels[v] for l, v in zip(self.dom.labels, self.payload)}

    def __eq__(self, other):
        if not isinstance(other, Mor):
            return NotImplemented
        return (self.backend == other.backend
                and self.dom.size == other.dom.size
                and self.cod.size == other.cod.size
                and self.payload == other.payload)

    def __ne__(self, other):
        eq = self.__eq__(other)
        return NotImplemented if eq is NotImplemented else not eq

    def __matmul__(self, other: "Mor") -> "Mor":
        return compose(self, other)

    def __repr__(self):
        return f"Mor({self.dom.size}->{self.cod.size}, {payload_str(self)})"


def payload_str(m: Mor) -> str:
    if m.backend.kind == FINVECT:
        return str(m.payload)
    return str(m.table)


def identity(x: Obj) -> Mor:
    return Mor.identity(x)


def compose(g: Mor, f: Mor) -> Mor:
    """Apply f first, then g."""
    _check_backend(f.backend, g.backend)
    if f.cod.size != g.dom.size:
        raise ValueError(f"cannot compose: {f.cod.size} vs {g.dom.size}")
    if f.backend.kind == FINVECT:
        return Mor(f.dom, g.cod, exact.compose(g.payload, f.payload))
    return Mor(f.dom, g.cod, tuple(g.payload[v] for v in f.payload))


def compose_all(*mors: Mor) -> Mor:
    """Compose left to right in application order: compose_all(f, g) = g.f."""
    out = mors[0]
    for m in mors[1:]:
        out = compose(m, out)
    return out


def tensor_mor(f: Mor, g: Mor) -> Mor:
    _check_backend(f.backend, g.backend)
    dom = tensor_obj(f.dom, g.dom)
    cod = tensor_obj(f.cod, g.cod)
    if f.backend.kind == FINVECT:
        return Mor(dom, cod, exact.kronecker(f.payload, g.payload))
    gn = g.cod.size
    payload = tuple(f.payload[i] * gn + g.payload[j]
                    for i in range(f.dom.size) for j in range(g.dom.size))
    return Mor(dom, cod, payload)


def tensor_mors(*mors: Mor) -> Mor:
    return reduce(tensor_mor, mors)


def braiding(x: Obj, y: Obj) -> Mor:
    """The symmetry x⊗y -> y⊗x, a permutation of basis labels."""
    return permute_factors([x, y], [1, 0])


def permute_factors(factors: Sequence[Obj], perm: Sequence[int]) -> Mor:
    """The structural map ⊗factors -> ⊗[factors[p] for p in perm].

    Slot k of the target reads slot perm[k] of the source.
    """
    assert sorted(perm) == list(range(len(factors)))
    sizes = [f.size for f in factors]
    dom = tensor_objs(factors)
    cod = tensor_objs([factors[p] for p in perm])
    tgt_sizes = [sizes[p] for p in perm]
    images = []
    for s in range(dom.size):
        digits = []
        rem = s
        for sz in reversed(sizes):
            digits.append(rem % sz)
            rem //= sz
        digits.reverse()
        t = 0
        for k, p in enumerate(perm):
            t = t * tgt_sizes[k] + digits[p]
        images.append(t)
    if dom.backend.kind == FINSET:
        return Mor(dom, cod, tuple(images))
    fld = dom.backend.field
    n = dom.size
    entries = [fld.zero] * (n * n)
    for s, t in enumerate(images):
        entries[t * n + s] = fld.one
    return Mor(dom, cod, DenseMap(n, n, tuple(entries), fld))


def restricted_slot_map(src_mono: Mor, maps: Sequence[Mor],
                        perm: Sequence[int] | None = None) -> Mor:
    """Apply maps slotwise after a mono into their tensored domain.

    Computes (permute . (maps[0]⊗...⊗maps[n-1])) . src_mono without ever
    materializing the ambient tensor map; slot k of the permuted output
    reads slot perm[k].  Over finite sets this is pointwise index
    arithmetic on the subobject only.
    """
    sizes = [m.dom.size for m in maps]
    total = 1
    for sz in sizes:
        total *= sz
    assert src_mono.cod.size == total, "slot domains do not match the ambient"
    if perm is None:
        perm = list(range(len(maps)))
    cod = tensor_objs([maps[p].cod for p in perm])
    if src_mono.backend.kind == FINSET:
        tgt_sizes = [maps[p].cod.size for p in perm]
        out = []
        for flat in src_mono.payload:
            digits = []
            rem = flat
            for sz in reversed(sizes):
                digits.append(rem % sz)
                rem //= sz
            digits.reverse()
            images = [m.payload[dig] for m, dig in zip(maps, digits)]
            t = 0
            for k, p in enumerate(perm):
                t = t * tgt_sizes[k] + images[p]
            out.append(t)
        return Mor(src_mono.dom, cod, tuple(out))
    ambient = tensor_mors(*maps)
    permuted = permute_factors([m.cod for m in maps], list(perm))
    return compose(permuted, compose(ambient, src_mono))


@dataclass
class Equalizer:
    """A canonical equalizer subobject E >--mono--> dom(f) of f, g."""

    ob: Obj
    mono: Mor
    f: Mor
    g: Mor


def equalizer(f: Mor, g: Mor) -> Equalizer:
    _check_backend(f.backend, g.backend)
    if f.dom.size != g.dom.size or f.cod.size != g.cod.size:
        raise ValueError("equalizer needs parallel maps")
    if f.backend.kind == FINVECT:
        kb = exact.kernel_basis(f.payload - g.payload)
        e = Obj(f.backend, tuple(f"e{i}" for i in range(kb.cols)))
        return Equalizer(e, Mor(e, f.dom, kb), f, g)
    idxs = tuple(i for i in range(f.dom.size) if f.payload[i] == g.payload[i])
    e = Obj(f.backend, tuple(f.dom.labels[i] for i in idxs))
    return Equalizer(e, Mor(e, f.dom, idxs), f, g)


def factor_through_mono(mono: Mor, g: Mor) -> Mor:
    """The unique h with mono.h = g, given that g lands in the image of mono."""
    _check_backend(mono.backend, g.backend)
    if mono.cod.size != g.cod.size:
        raise ValueError("target mismatch when factoring through a mono")
    if mono.backend.kind == FINVECT:
        return Mor(g.dom, mono.dom, exact.solve_factor(mono.payload, g.payload))
    back = {}
    for i, v in enumerate(mono.payload):
        assert v not in back, "not a mono"
        back[v] = i
    try:
        payload = tuple(back[v] for v in g.payload)
    except KeyError:
        raise NoFactorization("an element lands outside the subset") from None
    return Mor(g.dom, mono.dom, payload)


def factor_through(eq: Equalizer, h: Mor) -> Mor:
    """Universal property: the unique k with eq.mono . k = h."""
    if compose(eq.f, h) != compose(eq.g, h):
        raise EqualizingConditionFails("map does not equalize the pair")
    return factor_through_mono(eq.mono, h)


def two_sided_inverse_mor(f: Mor) -> Mor:
    """The inverse of an invertible morphism, certified on both sides."""
    if f.dom.size != f.cod.size:
        raise NotInvertible(f"not square: {f.dom.size} vs {f.cod.size}")
    if f.backend.kind == FINVECT:
        return Mor(f.cod, f.dom, exact.two_sided_inverse(f.payload))
    if len(set(f.payload)) != f.dom.size:
        raise NotInvertible("not a bijection")
    back = [0] * f.dom.size
    for i, v in enumerate(f.payload):
        back[v] = i
    return Mor(f.cod, f.dom, tuple(back))


def subobject_canonical(mono: Mor):
    """A canonical key identifying the subobject cut out by a mono."""
    if mono.backend.kind == FINVECT:
        return exact.column_space_canonical(mono.payload)
    return tuple(sorted(mono.payload))


def regularity_witness(eq: Equalizer, a: Obj, b: Obj) -> Report:
    """Check that a ⊗ eq.mono ⊗ b is again the equalizer of a⊗f⊗b and a⊗g⊗b.

    The tensored equalizer is recomputed from scratch; the report compares
    canonical subobject forms instead of raising.
    """
    report = Report()
    ia, ib = identity(a), identity(b)
    tf = tensor_mors(ia, eq.f, ib)
    tg = tensor_mors(ia, eq.g, ib)
    eq2 = equalizer(tf, tg)
    tm = tensor_mors(ia, eq.mono, ib)
    lhs = subobject_canonical(tm)
    rhs = subobject_canonical(eq2.mono)
    name = "regularity/tensored-equalizer"
    if lhs == rhs:
        report.record(name)
    else:
        report.fail(name, tm, eq2.mono)
    return report
