"""Comonoid and comodule laws, corestriction, and the coaction lemmas."""

import pytest

from comodcat.builders import sweedler_h4
from comodcat.coalgebra import (Comonoid, check_comodule, check_comonoid,
                                check_comonoid_map, check_map_over,
                                check_coaction_is_comonoid_map,
                                check_coaction_over_cocomm,
                                coaction_from_comonoid_map,
                                comonoid_map_from_coaction, corestrict,
                                grouplike_comonoid, is_cocommutative,
                                right_comodule, tensor_comonoid,
                                unit_comonoid)
from comodcat.errors import CheckFailed, InducedMapMismatch
from comodcat.exact import QQ
from comodcat.monoidal import (FinSet, Mor, compose, finvect, identity, obj,
                               tensor_mor, tensor_obj, unit_obj)
from conftest import graded_bicomodule

VQ = finvect(QQ)
KZ2 = grouplike_comonoid(obj(VQ, ["1", "g"]))


def sign_comodule():
    return graded_bicomodule(KZ2, ["m0", "m1"], [0, 1])


class TestComonoid:
    def test_grouplike_passes(self):
        assert check_comonoid(KZ2).ok

    def test_zero_delta_fails_counit(self):
        c = KZ2.carrier
        zero = Mor.from_matrix(c, tensor_obj(c, c), [[0, 0]] * 4)
        rep = check_comonoid(Comonoid(c, zero, KZ2.epsilon))
        assert not rep.ok
        assert "comonoid/counit-left" in rep.failure_names()

    def test_finset_diagonal(self):
        assert check_comonoid(grouplike_comonoid(obj(FinSet, "abc"))).ok

    def test_cocommutative(self):
        assert is_cocommutative(KZ2)
        assert is_cocommutative(grouplike_comonoid(obj(FinSet, "ab")))

    def test_sweedler_not_cocommutative(self):
        h4 = sweedler_h4(QQ)
        assert check_comonoid(h4.comonoid).ok
        assert not is_cocommutative(h4.comonoid)


class TestComonoidMap:
    def test_identity(self):
        assert check_comonoid_map(identity(KZ2.carrier), KZ2, KZ2).ok

    def test_counit_is_comonoid_map(self):
        assert check_comonoid_map(KZ2.epsilon, KZ2, unit_comonoid(VQ)).ok

    def test_group_collapse(self):
        one = grouplike_comonoid(obj(VQ, ["e"]))
        collapse = Mor.from_matrix(KZ2.carrier, one.carrier, [[1, 1]])
        assert check_comonoid_map(collapse, KZ2, one).ok


class TestMapsOver:
    def test_identity_over_identity(self):
        m = sign_comodule()
        assert check_map_over(identity(m.carrier), identity(KZ2.carrier), m, m).ok

    def test_corestriction_triangle(self):
        m = sign_comodule()
        cor = corestrict(KZ2.epsilon, m, KZ2, unit_comonoid(VQ))
        assert check_map_over(identity(m.carrier), KZ2.epsilon, m, cor).ok

    def test_non_equivariant_fails_with_witness(self):
        m = sign_comodule()
        bad = Mor.from_matrix(m.carrier, m.carrier, [[0, 1], [1, 0]])
        rep = check_map_over(bad, identity(KZ2.carrier), m, m)
        assert not rep.ok
        assert rep.failures[0].left is not None


class TestCorestriction:
    def test_identity(self):
        m = sign_comodule()
        assert corestrict(identity(KZ2.carrier), m, KZ2, KZ2).rho == m.rho

    def test_collapse_to_unit_is_trivial(self):
        m = sign_comodule()
        cor = corestrict(KZ2.epsilon, m, KZ2, unit_comonoid(VQ))
        assert check_comodule(cor).ok
        assert cor.rho == identity(m.carrier)

    def test_functoriality(self):
        m = sign_comodule()
        one = unit_comonoid(VQ)
        via_two = corestrict(identity(one.carrier),
                             corestrict(KZ2.epsilon, m, KZ2, one), one, one)
        direct = corestrict(compose(identity(one.carrier), KZ2.epsilon), m, KZ2, one)
        assert via_two.rho == direct.rho

    def test_rejects_non_comonoid_map(self):
        m = sign_comodule()
        bad = Mor.from_matrix(KZ2.carrier, KZ2.carrier, [[1, 0], [1, 0]])
        with pytest.raises(CheckFailed):
            corestrict(bad, m, KZ2, KZ2)


class TestInducedCoactions:
    def test_identity_gives_delta(self):
        p = coaction_from_comonoid_map(identity(KZ2.carrier), KZ2, KZ2)
        assert p.rho == KZ2.delta

    def test_counit_gives_trivial(self):
        p = coaction_from_comonoid_map(KZ2.epsilon, KZ2, unit_comonoid(VQ))
        assert p.rho == identity(KZ2.carrier)

    def test_roundtrip_recovers_map(self):
        one = grouplike_comonoid(obj(VQ, ["e"]))
        collapse = Mor.from_matrix(KZ2.carrier, one.carrier, [[1, 1]])
        p = coaction_from_comonoid_map(collapse, KZ2, one)
        assert comonoid_map_from_coaction(KZ2, one, p.rho) == collapse

    def test_delta_recovers_identity(self):
        assert comonoid_map_from_coaction(KZ2, KZ2, KZ2.delta) == identity(KZ2.carrier)

    def test_mismatch_raises(self):
        h4 = sweedler_h4(QQ).comonoid
        # delta on a non-cocommutative comonoid is not induced over itself
        # after twisting by the braiding
        from comodcat.monoidal import braiding
        twisted = compose(braiding(h4.carrier, h4.carrier), h4.delta)
        with pytest.raises(InducedMapMismatch):
            comonoid_map_from_coaction(h4, h4, twisted)


class TestCoactionComonoidMapLemma:
    def test_delta_on_cocommutative(self):
        rep = check_coaction_is_comonoid_map(KZ2.delta, KZ2, KZ2)
        assert rep.ok

    def test_finset_diagonal(self):
        c = grouplike_comonoid(obj(FinSet, "ab"))
        assert check_coaction_is_comonoid_map(c.delta, c, c).ok

    def test_sweedler_fails_both_consistently(self):
        h4 = sweedler_h4(QQ).comonoid
        rep = check_coaction_is_comonoid_map(h4.delta, h4, h4)
        names = rep.failure_names()
        assert not rep.ok
        # both equivalent conditions fail, and the meta check does not
        assert any("comonoid-map" in n for n in names)
        assert "coaction-comonoid-map/equivalence" not in names

    def test_counit_always_preserved(self):
        cd = tensor_comonoid(KZ2, KZ2)
        rep = check_comonoid_map(KZ2.delta, KZ2, cd)
        assert "comonoid-map/epsilon" not in rep.failure_names()


class TestCoactionOverCocomm:
    def test_comodule_over_kz2(self):
        m = sign_comodule()
        assert check_coaction_over_cocomm(m).ok

    def test_finset_comodule(self):
        c = grouplike_comonoid(obj(FinSet, "ab"))
        m = right_comodule(obj(FinSet, "xy"), c,
                           Mor.from_table(obj(FinSet, "xy"),
                                          tensor_obj(obj(FinSet, "xy"), c.carrier),
                                          {"x": "x⊗a", "y": "y⊗b"}))
        assert check_coaction_over_cocomm(m).ok

    def test_corrupted_coaction_fails(self):
        m = sign_comodule()
        bad = Mor.from_matrix(m.carrier, tensor_obj(m.carrier, KZ2.carrier),
                              [[1, 0], [0, 1], [0, 1], [0, 0]])
        rep = check_coaction_over_cocomm(m.with_right(KZ2, bad))
        assert not rep.ok

    def test_random_graded_comodules(self, rng):
        for _ in range(25):
            degs = [rng.randrange(2) for _ in range(3)]
            m = graded_bicomodule(KZ2, ["a", "b", "c"], degs)
            assert check_comodule(m).ok
            assert check_coaction_over_cocomm(m).ok
