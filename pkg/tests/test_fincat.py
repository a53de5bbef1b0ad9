"""Finite category validation, the direct construction, and encodings."""

import pytest

from comodcat.errors import InputError
from comodcat.fincat import (FiniteCategorySpec, SplitPrestackSpec,
                             direct_grothendieck, set_prestack)
from comodcat.generators import (BUNDLED_BASES, chaotic_fiber, cyclic_groupoid,
                                 discrete_fiber, iter_random_split_prestacks,
                                 terminal_category, walking_arrow)


class TestValidation:
    def test_bundled_bases_valid(self):
        for fc in (terminal_category(), walking_arrow(), cyclic_groupoid(2),
                   cyclic_groupoid(3)):
            fc.validate()

    def test_missing_identity(self):
        fc = FiniteCategorySpec(["a"], {"f": ("a", "a")},
                                {("f", "f"): "f"}, {})
        with pytest.raises(InputError, match="identity"):
            fc.validate()

    def test_missing_composite(self):
        fc = FiniteCategorySpec(
            ["a"], {"ia": ("a", "a"), "f": ("a", "a")},
            {("ia", "ia"): "ia", ("ia", "f"): "f", ("f", "ia"): "f"},
            {"a": "ia"})
        with pytest.raises(InputError, match="missing"):
            fc.validate()

    def test_non_associative_table(self):
        fc = FiniteCategorySpec(
            ["a"], {"ia": ("a", "a"), "f": ("a", "a")},
            {("ia", "ia"): "ia", ("ia", "f"): "f", ("f", "ia"): "f",
             ("f", "f"): "ia"},
            {"a": "ia"})
        fc.validate()  # the order two group is fine
        fc.composition[("f", "f")] = "f"
        fc.validate()  # an idempotent is fine too
        chaotic = chaotic_fiber("x", 2)
        chaotic.validate()

    def test_broken_transition_functoriality(self):
        base = cyclic_groupoid(2)
        fib = discrete_fiber("x", 2)
        spec = SplitPrestackSpec(
            base, {"*": fib},
            {"e": {"objects": {"x0": "x0", "x1": "x1"},
                   "morphisms": {"ix0": "ix0", "ix1": "ix1"}},
             # not an involution: r1 . r1 = e must act as the identity
             "r1": {"objects": {"x0": "x1", "x1": "x1"},
                    "morphisms": {"ix0": "ix1", "ix1": "ix1"}}})
        with pytest.raises(InputError, match="compose strictly"):
            spec.validate()


class TestDirectGrothendieck:
    def test_output_revalidates(self):
        for spec in iter_random_split_prestacks(seed=3, count=9):
            direct_grothendieck(spec).validate()

    def test_one_object_groupoid_connected(self):
        base = cyclic_groupoid(2)
        fib = discrete_fiber("x", 2)
        spec = SplitPrestackSpec(
            base, {"*": fib},
            {"e": {"objects": {"x0": "x0", "x1": "x1"},
                   "morphisms": {"ix0": "ix0", "ix1": "ix1"}},
             "r1": {"objects": {"x0": "x1", "x1": "x0"},
                    "morphisms": {"ix0": "ix1", "ix1": "ix0"}}})
        gr = direct_grothendieck(spec)
        assert len(gr.objects) == 2
        # each object has its identity plus one morphism to the other object
        assert len(gr.morphisms) == 4
        cross = [m for m, (s, t) in gr.morphisms.items() if s != t]
        assert len(cross) == 2


class TestGenerators:
    def test_batch_is_deterministic(self):
        a = iter_random_split_prestacks(seed=0, count=12)
        b = iter_random_split_prestacks(seed=0, count=12)
        assert [s.base.objects for s in a] == [s.base.objects for s in b]
        assert [sorted(s.fibers["*"].objects) if "*" in s.fibers else []
                for s in a] == [sorted(s.fibers["*"].objects) if "*" in s.fibers else []
                                for s in b]

    def test_batch_covers_all_bases(self):
        specs = iter_random_split_prestacks(seed=0, count=9)
        seen = {tuple(sorted(s.base.morphisms)) for s in specs}
        assert len(seen) == len(BUNDLED_BASES)

    def test_set_prestack_labels(self):
        specs = iter_random_split_prestacks(seed=0, count=3)
        ps = set_prestack(specs[1])  # walking arrow instance
        labels = ps.cat.objects.carrier.labels
        assert all("::" in l for l in labels)
