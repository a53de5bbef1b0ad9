"""Backends: tensor, braiding, equalizers and their universal property."""

import random

import pytest

from comodcat.errors import EqualizingConditionFails
from comodcat.exact import GF, QQ, DenseMap
from comodcat.monoidal import (FinSet, Mor, braiding, compose, equalizer,
                               factor_through, factor_through_mono, finvect,
                               identity, obj, permute_factors,
                               regularity_witness, restricted_slot_map,
                               tensor_mor, tensor_obj, tensor_objs, unit_obj)

VQ = finvect(QQ)


class TestTensorObj:
    def test_unit_case(self):
        y = obj(FinSet, ["a", "b"])
        t = tensor_obj(unit_obj(FinSet), y)
        assert t.labels == ("•⊗a", "•⊗b")
        assert t.size == y.size

    def test_forced_by_convention(self):
        assert tensor_obj(obj(FinSet, "ab"), obj(FinSet, "c")).labels == ("a⊗c", "b⊗c")

    def test_left_factor_major(self):
        t = tensor_obj(obj(FinSet, "ab"), obj(FinSet, "cd"))
        assert t.labels == ("a⊗c", "a⊗d", "b⊗c", "b⊗d")

    def test_literal_associativity(self):
        x, y, z = obj(FinSet, "ab"), obj(FinSet, "cd"), obj(FinSet, "e")
        assert tensor_obj(tensor_obj(x, y), z).labels == tensor_obj(x, tensor_obj(y, z)).labels


class TestTensorMor:
    def test_identity_tensor(self):
        x, y = obj(VQ, "ab"), obj(VQ, "cde")
        assert tensor_mor(identity(x), identity(y)) == identity(tensor_obj(x, y))

    def test_finset_pairwise(self):
        x = obj(FinSet, "ab")
        swap = Mor.from_table(x, x, {"a": "b", "b": "a"})
        t = tensor_mor(swap, identity(x))
        assert t.table == {"a⊗a": "b⊗a", "a⊗b": "b⊗b", "b⊗a": "a⊗a", "b⊗b": "a⊗b"}

    def test_unit_strictness_on_payloads(self):
        x = obj(VQ, "ab")
        f = Mor.from_matrix(x, x, [[1, 2], [0, 1]])
        one = identity(unit_obj(VQ))
        assert tensor_mor(one, f) == f
        assert tensor_mor(f, one) == f


class TestBraiding:
    def test_unit_is_identity_up_to_relabel(self):
        y = obj(VQ, "abc")
        b = braiding(unit_obj(VQ), y)
        assert b == identity(y)

    def test_symmetry(self):
        x, y = obj(FinSet, "ab"), obj(FinSet, "cd")
        assert compose(braiding(y, x), braiding(x, y)) == identity(tensor_obj(x, y))

    def test_enumerated(self):
        b = braiding(obj(FinSet, "ab"), obj(FinSet, "c"))
        assert b.table == {"a⊗c": "c⊗a", "b⊗c": "c⊗b"}

    def test_naturality(self):
        x, y = obj(VQ, "ab"), obj(VQ, "c")
        f = Mor.from_matrix(x, x, [[1, 2], [3, 4]])
        g = Mor.from_matrix(y, y, [[5]])
        lhs = compose(braiding(x, y), tensor_mor(f, g))
        rhs = compose(tensor_mor(g, f), braiding(x, y))
        assert lhs == rhs

    def test_hexagon_degenerate(self):
        x, y, z = obj(VQ, "ab"), obj(VQ, "cd"), obj(VQ, "e")
        lhs = braiding(tensor_obj(x, y), z)
        rhs = compose(tensor_mor(braiding(x, z), identity(y)),
                      tensor_mor(identity(x), braiding(y, z)))
        assert lhs == rhs


class TestEqualizer:
    def test_equal_maps(self):
        x = obj(VQ, "ab")
        f = Mor.from_matrix(x, x, [[1, 2], [3, 4]])
        eq = equalizer(f, f)
        assert eq.ob.size == 2
        assert eq.mono == identity(x)

    def test_identity_vs_zero(self):
        x = obj(VQ, "ab")
        zero = Mor.from_matrix(x, x, [[0, 0], [0, 0]])
        assert equalizer(identity(x), zero).ob.size == 0

    def test_finset_pointwise(self):
        x, y = obj(FinSet, ["1", "2", "3"]), obj(FinSet, ["1", "2"])
        f = Mor.from_table(x, y, {"1": "1", "2": "2", "3": "1"})
        g = Mor.from_table(x, y, {"1": "2", "2": "2", "3": "2"})
        eq = equalizer(f, g)
        assert eq.ob.labels == ("2",)

    def test_factor_through_identity_inclusion(self):
        x = obj(VQ, "ab")
        f = Mor.from_matrix(x, x, [[1, 2], [3, 4]])
        eq = equalizer(f, f)
        h = Mor.from_matrix(obj(VQ, "c"), x, [[1], [1]])
        assert factor_through(eq, h) == h

    def test_factor_mono_itself(self):
        x = obj(VQ, "ab")
        f = Mor.from_matrix(x, obj(VQ, "c"), [[1, 0]])
        g = Mor.from_matrix(x, obj(VQ, "c"), [[0, 1]])
        eq = equalizer(f, g)
        assert factor_through(eq, eq.mono) == identity(eq.ob)

    def test_factor_derived(self):
        x = obj(VQ, "ab")
        f = Mor.from_matrix(x, obj(VQ, "c"), [[1, 0]])
        g = Mor.from_matrix(x, obj(VQ, "c"), [[0, 1]])
        eq = equalizer(f, g)
        h = Mor.from_matrix(obj(VQ, "w"), x, [[2], [2]])
        k = factor_through(eq, h)
        assert k.payload == DenseMap.from_rows([[2]], QQ)
        assert compose(eq.mono, k) == h

    def test_equalizing_condition_enforced(self):
        x = obj(VQ, "ab")
        f = Mor.from_matrix(x, obj(VQ, "c"), [[1, 0]])
        g = Mor.from_matrix(x, obj(VQ, "c"), [[0, 1]])
        eq = equalizer(f, g)
        bad = Mor.from_matrix(obj(VQ, "w"), x, [[1], [0]])
        with pytest.raises(EqualizingConditionFails):
            factor_through(eq, bad)


class TestRegularity:
    def test_unit_factors(self):
        x = obj(VQ, "ab")
        f = Mor.from_matrix(x, x, [[1, 1], [0, 0]])
        g = Mor.from_matrix(x, x, [[1, 0], [0, 1]])
        eq = equalizer(f, g)
        one = unit_obj(VQ)
        assert regularity_witness(eq, one, one).ok

    @pytest.mark.parametrize("field", [QQ, GF(5)])
    def test_finvect_random(self, field):
        rnd = random.Random(7)
        backend = finvect(field)
        x = obj(backend, "ab")
        for _ in range(10):
            f = Mor.from_matrix(x, x, [[rnd.randint(-2, 2) for _ in range(2)]
                                       for _ in range(2)])
            g = Mor.from_matrix(x, x, [[rnd.randint(-2, 2) for _ in range(2)]
                                       for _ in range(2)])
            eq = equalizer(f, g)
            assert regularity_witness(eq, obj(backend, "uv"), obj(backend, "w")).ok

    def test_finset_random(self):
        rnd = random.Random(11)
        x, y = obj(FinSet, "abc"), obj(FinSet, "de")
        for _ in range(10):
            f = Mor(x, y, tuple(rnd.randrange(2) for _ in range(3)))
            g = Mor(x, y, tuple(rnd.randrange(2) for _ in range(3)))
            eq = equalizer(f, g)
            assert regularity_witness(eq, obj(FinSet, "uv"), obj(FinSet, "w")).ok


class TestSlotMaps:
    def test_permutation_consistency(self):
        xs = [obj(FinSet, "ab"), obj(FinSet, "cde"), obj(FinSet, "f")]
        perm = [2, 0, 1]
        full = permute_factors(xs, perm)
        mono = identity(tensor_objs(xs))
        assert restricted_slot_map(mono, [identity(x) for x in xs], perm) == full

    def test_finvect_agrees_with_tensor(self):
        xs = [obj(VQ, "ab"), obj(VQ, "cd")]
        f = Mor.from_matrix(xs[0], xs[0], [[1, 2], [3, 4]])
        g = Mor.from_matrix(xs[1], obj(VQ, "e"), [[1, 1]])
        mono = identity(tensor_objs(xs))
        assert restricted_slot_map(mono, [f, g]) == tensor_mor(f, g)

    def test_restriction(self):
        x = obj(FinSet, "ab")
        sub = obj(FinSet, ["a⊗a", "b⊗b"])
        mono = Mor(sub, tensor_obj(x, x), (0, 3))
        swap = restricted_slot_map(mono, [identity(x), identity(x)], [1, 0])
        assert swap.payload == (0, 3)
