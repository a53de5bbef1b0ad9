"""Cotensor products: dimensions, induced coactions, structural isos."""

import random

import pytest

from comodcat.coalgebra import (Comodule, check_comodule, comonoid_as_bicomodule,
                                grouplike_comonoid, is_cocommutative,
                                left_comodule, right_comodule, tensor_comodules)
from comodcat.cotensor import (cotensor, cotensor_associator, cotensor_comonoid,
                               cotensor_of_maps, interchange_cotensor,
                               interchange_iso, unitor_left, unitor_right)
from comodcat.exact import GF, QQ
from comodcat.monoidal import (FinSet, Mor, compose, finvect, identity, obj,
                               tensor_mor, tensor_obj, unit_obj)
from comodcat.reports import Report
from conftest import graded_bicomodule

VQ = finvect(QQ)
KZ2 = grouplike_comonoid(obj(VQ, ["1", "g"]))


class TestCotensor:
    def test_unitor_shape(self):
        n = graded_bicomodule(KZ2, ["n0", "n1", "n2"], [0, 1, 1])
        ct, iso = unitor_left(KZ2, n)
        assert ct.ob.size == n.carrier.size
        assert compose(iso.fwd, iso.inv) == identity(n.carrier)

    def test_graded_dimension_count(self):
        # dim(M box N) = m1*n1 + mg*ng for group graded comodules
        m = graded_bicomodule(KZ2, ["m0", "m1", "m2"], [0, 1, 1])
        n = graded_bicomodule(KZ2, ["n0", "n1"], [0, 1])
        ct = cotensor(m, n)
        assert ct.ob.size == 1 * 1 + 2 * 1

    def test_finset_pullback(self):
        c = grouplike_comonoid(obj(FinSet, "uv"))
        x = obj(FinSet, "ab")
        rho = Mor.from_table(x, tensor_obj(x, c.carrier), {"a": "a⊗u", "b": "b⊗v"})
        lam = Mor.from_table(x, tensor_obj(c.carrier, x), {"a": "u⊗a", "b": "v⊗b"})
        m = Comodule(x, (c, lam), (c, rho))
        ct = cotensor(m, m)
        assert ct.ob.labels == ("a⊗a", "b⊗b")

    def test_mono_equalizes(self):
        m = graded_bicomodule(KZ2, ["m0", "m1"], [0, 1])
        ct = cotensor(m, m)
        assert compose(ct.eq.f, ct.mono) == compose(ct.eq.g, ct.mono)

    def test_comonoid_mismatch_rejected(self):
        m = graded_bicomodule(KZ2, ["m0"], [0])
        other = grouplike_comonoid(obj(VQ, ["1", "h"]))
        n = graded_bicomodule(other, ["n0"], [0])
        with pytest.raises(ValueError):
            cotensor(m, n)


class TestInducedCoactions:
    def test_trivial_base_gives_trivial_coaction(self):
        one = grouplike_comonoid(obj(VQ, ["e"]))
        m = graded_bicomodule(one, ["m0", "m1"], [0, 0])
        ct = cotensor(m, m)
        assert ct.right_coaction == identity(ct.ob)

    def test_unit_law_via_comonoid_side(self):
        n = graded_bicomodule(KZ2, ["n0", "n1"], [0, 1])
        ct = cotensor(comonoid_as_bicomodule(KZ2), n)
        assert ct.left_coaction is not None and ct.right_coaction is not None
        assert check_comodule(ct.as_comodule()).ok

    def test_graded_blockwise(self):
        # on matched degree pairs the induced coaction reads the right factor
        m = graded_bicomodule(KZ2, ["m0", "m1"], [0, 1])
        n = graded_bicomodule(KZ2, ["n0", "n1"], [0, 1])
        ct = cotensor(m, n)
        # basis of E: m0⊗n0 (degree 0) and m1⊗n1 (degree g)
        expected = graded_bicomodule(KZ2, ["e0", "e1"], [0, 1])
        assert ct.right_coaction == expected.rho
        assert ct.left_coaction == expected.lam

    def test_compatibility_square(self):
        m = graded_bicomodule(KZ2, ["m0", "m1"], [0, 1])
        n = graded_bicomodule(KZ2, ["n0", "n1", "n2"], [1, 0, 1])
        ct = cotensor(m, n)
        lhs = compose(tensor_mor(ct.mono, identity(KZ2.carrier)), ct.right_coaction)
        rhs = compose(tensor_mor(identity(m.carrier), n.rho), ct.mono)
        assert lhs == rhs


class TestCotensorOfMaps:
    def test_identity(self):
        m = graded_bicomodule(KZ2, ["m0", "m1"], [0, 1])
        ct = cotensor(m, m)
        i = cotensor_of_maps(ct, ct, identity(m.carrier), identity(KZ2.carrier),
                             identity(m.carrier))
        assert i == identity(ct.ob)

    def test_graded_blockwise(self):
        m = graded_bicomodule(KZ2, ["m0", "m1"], [0, 1])
        n = graded_bicomodule(KZ2, ["n0", "n1"], [0, 1])
        src = cotensor(m, n)
        # a degree preserving map acts blockwise on the matched pairs
        phi = Mor.from_matrix(m.carrier, m.carrier, [[3, 0], [0, 5]])
        out = cotensor_of_maps(src, src, phi, identity(KZ2.carrier),
                               identity(n.carrier))
        assert out == Mor.from_matrix(src.ob, src.ob, [[3, 0], [0, 5]])


class TestInterchange:
    def test_unit_factors_identity(self):
        one = grouplike_comonoid(obj(VQ, ["e"]))
        u = comonoid_as_bicomodule(one)
        ct = cotensor(u, u)
        tgt, iso = interchange_iso(ct, ct)
        assert iso.fwd == identity(tgt.ob)

    def test_round_trip_graded(self):
        m = graded_bicomodule(KZ2, ["m0", "m1"], [0, 1])
        n = graded_bicomodule(KZ2, ["n0", "n1"], [1, 1])
        m2 = graded_bicomodule(KZ2, ["a0", "a1"], [0, 0])
        n2 = graded_bicomodule(KZ2, ["b0", "b1"], [0, 1])
        ct1, ct2 = cotensor(m, n), cotensor(m2, n2)
        tgt, iso = interchange_iso(ct1, ct2)
        assert tgt.ob.size == ct1.ob.size * ct2.ob.size
        assert compose(iso.inv, iso.fwd) == identity(tensor_obj(ct1.ob, ct2.ob))

    def test_naturality(self, rng):
        for _ in range(10):
            degs = lambda k: [rng.randrange(2) for _ in range(k)]
            m, n = graded_bicomodule(KZ2, ["m0", "m1"], degs(2)), \
                graded_bicomodule(KZ2, ["n0", "n1"], degs(2))
            m2, n2 = graded_bicomodule(KZ2, ["a0"], degs(1)), \
                graded_bicomodule(KZ2, ["b0", "b1"], degs(2))
            ct1, ct2 = cotensor(m, n), cotensor(m2, n2)
            tgt, iso = interchange_iso(ct1, ct2)
            # degree preserving endomorphisms commute with the interchange
            def scale(mod, c):
                mat = [[0] * mod.carrier.size for _ in range(mod.carrier.size)]
                for i in range(mod.carrier.size):
                    mat[i][i] = c
                return Mor.from_matrix(mod.carrier, mod.carrier, mat)
            ic = identity(KZ2.carrier)
            phi = cotensor_of_maps(ct1, ct1, scale(m, 2), ic, identity(n.carrier))
            psi = cotensor_of_maps(ct2, ct2, scale(m2, 3), ic, identity(n2.carrier))
            big = cotensor_of_maps(tgt, tgt, tensor_mor(scale(m, 2), scale(m2, 3)),
                                   tensor_mor(ic, ic),
                                   tensor_mor(identity(n.carrier), identity(n2.carrier)))
            assert compose(big, iso.fwd) == compose(iso.fwd, tensor_mor(phi, psi))


class TestCotensorComonoid:
    def test_self_cotensor_recovers_base(self):
        ct = cotensor(comonoid_as_bicomodule(KZ2), comonoid_as_bicomodule(KZ2))
        dm = cotensor_comonoid(ct, KZ2, KZ2, KZ2)
        assert dm.carrier.size == KZ2.carrier.size
        assert is_cocommutative(dm)

    def test_trivial_base_gives_tensor_comonoid(self):
        one = grouplike_comonoid(obj(VQ, ["e"]))
        from comodcat.coalgebra import tensor_comonoid
        b = grouplike_comonoid(obj(VQ, ["1", "g"]))
        c = grouplike_comonoid(obj(VQ, ["u"]))
        mb = Comodule(b.carrier, (one, _trivial_left(b.carrier)),
                      (one, _trivial_right(b.carrier)))
        mc = Comodule(c.carrier, (one, _trivial_left(c.carrier)),
                      (one, _trivial_right(c.carrier)))
        ct = cotensor(mb, mc)
        dm = cotensor_comonoid(ct, b, c, one)
        expected = tensor_comonoid(b, c)
        assert dm.delta == expected.delta and dm.epsilon == expected.epsilon

    def test_finset_pullback_comonoid(self):
        c = grouplike_comonoid(obj(FinSet, "uv"))
        x = grouplike_comonoid(obj(FinSet, "ab"))
        y = grouplike_comonoid(obj(FinSet, "cd"))
        deg_x = Mor.from_table(x.carrier, tensor_obj(x.carrier, c.carrier),
                               {"a": "a⊗u", "b": "b⊗v"})
        lam_x = Mor.from_table(x.carrier, tensor_obj(c.carrier, x.carrier),
                               {"a": "u⊗a", "b": "v⊗b"})
        deg_y = Mor.from_table(y.carrier, tensor_obj(y.carrier, c.carrier),
                               {"c": "c⊗u", "d": "d⊗v"})
        lam_y = Mor.from_table(y.carrier, tensor_obj(c.carrier, y.carrier),
                               {"c": "u⊗c", "d": "v⊗d"})
        mx = Comodule(x.carrier, (c, lam_x), (c, deg_x))
        my = Comodule(y.carrier, (c, lam_y), (c, deg_y))
        ct = cotensor(mx, my)
        dm = cotensor_comonoid(ct, x, y, c)
        assert dm.carrier.labels == ("a⊗c", "b⊗d")


def _trivial_left(carrier):
    return Mor(carrier, tensor_obj(unit_obj(carrier.backend), carrier),
               identity(carrier).payload)


def _trivial_right(carrier):
    return Mor(carrier, tensor_obj(carrier, unit_obj(carrier.backend)),
               identity(carrier).payload)


class TestUnitors:
    def test_left_unitor_on_comonoid_itself(self):
        ct, iso = unitor_left(KZ2, comonoid_as_bicomodule(KZ2))
        assert compose(iso.fwd, iso.inv) == identity(KZ2.carrier)
        assert compose(iso.inv, iso.fwd) == identity(ct.ob)

    def test_right_unitor_graded(self):
        m = graded_bicomodule(KZ2, ["m0", "m1", "m2"], [0, 1, 0])
        ct, iso = unitor_right(m, KZ2)
        assert ct.ob.size == 3
        assert compose(iso.fwd, iso.inv) == identity(m.carrier)

    def test_finset_bijection(self):
        c = grouplike_comonoid(obj(FinSet, "uv"))
        y = obj(FinSet, "ab")
        lam = Mor.from_table(y, tensor_obj(c.carrier, y), {"a": "u⊗a", "b": "v⊗b"})
        ct, iso = unitor_left(c, left_comodule(y, c, lam))
        assert ct.ob.labels == ("u⊗a", "v⊗b")
        assert iso.fwd.payload == (0, 1)
        assert iso.inv.payload == (0, 1)


class TestAssociativity:
    @pytest.mark.parametrize("field", [QQ, GF(5)])
    def test_triple_comparison(self, field, rng):
        backend = finvect(field)
        kz2 = grouplike_comonoid(obj(backend, ["1", "g"]))
        for _ in range(8):
            def rand(tag, k):
                return graded_bicomodule(kz2, [f"{tag}{i}" for i in range(k)],
                                         [rng.randrange(2) for _ in range(k)])
            m, n, p = rand("m", 2), rand("n", 2), rand("p", 2)
            mn = cotensor(m, n)
            np_ = cotensor(n, p)
            left = cotensor(mn.as_comodule(), p)
            right = cotensor(m, np_.as_comodule())
            assert left.ob.size == right.ob.size
            alpha = cotensor_associator(left, mn, right, np_)
            assert compose(alpha.inv, alpha.fwd) == identity(left.ob)
