import pytest

from jsbaf import arguments as ar
from jsbaf import framework as fw
from jsbaf.errors import InstanceError, ResourceLimitError
from jsbaf.formulas import parse_formula as f
from jsbaf.framework import Jsbaf, Labeling
from jsbaf.system import DefeasibleRule, make_system
from jsbaf.textio import parse_framework_text

from conftest import labeling_of


class TestValidate:
    def test_example_framework_valid(self, j1):
        assert fw.validate_jsbaf(j1).ok

    def test_attacked_strict_argument(self, j1):
        bad = Jsbaf(
            args=j1.args,
            attacks=j1.attacks | {("c", "a")},
            supports=dict(j1.supports),
            rank=dict(j1.rank),
        )
        report = fw.validate_jsbaf(bad)
        assert any("strict argument a is attacked" in msg for msg in report.failures)

    def test_added_empty_support_keeps_validity(self, j1):
        supports = dict(j1.supports)
        supports["c"] = frozenset()
        rank = dict(j1.rank)
        rank["c"] = 1  # c joins the strict class, so it moves to the top rank
        extended = Jsbaf(args=j1.args, attacks=j1.attacks, supports=supports, rank=rank)
        assert fw.validate_jsbaf(extended).ok

    def test_second_supporting_set_rejected(self):
        text = "arg a\narg b\nsup b <- a\nsup b <- \n"
        with pytest.raises(Exception) as excinfo:
            parse_framework_text(text)
        assert "second supporting set" in str(excinfo.value)

    def test_support_cycle_witness(self):
        framework = Jsbaf(
            args=("x", "y"),
            attacks=frozenset(),
            supports={"x": frozenset({"y"}), "y": frozenset({"x"})},
        )
        report = fw.validate_jsbaf(framework)
        assert any("cyclic support chain" in msg for msg in report.failures)

    def test_rank_restrictions(self, j1):
        skewed = Jsbaf(
            args=j1.args,
            attacks=j1.attacks,
            supports=dict(j1.supports),
            rank={**j1.rank, "c": 5},
        )
        report = fw.validate_jsbaf(skewed)
        assert any("not strictly below" in msg for msg in report.failures)


class TestStrictArgs:
    def test_example(self, j1):
        assert fw.strict_args(j1) == {"a", "b", "d"}

    def test_no_supports(self):
        framework = Jsbaf(args=("x", "y"), attacks=frozenset())
        assert fw.strict_args(framework) == frozenset()

    def test_chain(self):
        framework = Jsbaf(
            args=("x", "y"),
            attacks=frozenset(),
            supports={"x": frozenset(), "y": frozenset({"x"})},
        )
        assert fw.strict_args(framework) == {"x", "y"}


class TestLegality:
    def test_legally_in(self, j1, l1, l2):
        assert fw.legally_in(j1, l1, "d")
        assert not fw.legally_in(j1, l1, "c")
        assert fw.legally_in(j1, l2, "c")

    def test_legally_out(self, j1, l1, l2):
        assert fw.legally_out(j1, l2, "e")
        assert not fw.legally_out(j1, l1, "e")
        assert fw.legally_out(j1, l2, "bbar")

    def test_legally_undec(self, j1, l1, l2):
        assert fw.legally_undec(j1, l1, "c")
        assert not fw.legally_undec(j1, l2, "a")
        assert not fw.legally_undec(j1, l2, "e")

    def test_unknown_argument(self, j1, l1):
        with pytest.raises(InstanceError):
            fw.legally_in(j1, l1, "zz")

    def test_singleton_support_with_undec_head_blocks_in(self):
        # a supports b alone; while b stays UNDEC, a cannot be legally IN
        framework = Jsbaf(
            args=("x", "y"),
            attacks=frozenset(),
            supports={"y": frozenset({"x"})},
        )
        lab = labeling_of(framework)
        assert not fw.legally_in(framework, lab, "x")
        lab = labeling_of(framework, in_set={"y"})
        assert fw.legally_in(framework, lab, "x")


class TestAdmissibility:
    def test_example_labelings(self, j1, l1, l2, l3):
        for lab in (l1, l2, l3):
            assert fw.is_admissible(j1, lab)

    def test_all_in_is_not_admissible(self, j1):
        assert not fw.is_admissible(j1, labeling_of(j1, in_set=set(j1.args)))

    def test_all_undec_misses_strict_arguments(self, j1):
        assert not fw.is_admissible(j1, labeling_of(j1))


class TestSim:
    def test_example(self, j1, l1):
        assert fw.sim_labeling(j1) == l1

    def test_empty_framework(self):
        framework = Jsbaf(args=(), attacks=frozenset())
        assert fw.sim_labeling(framework).labels == ()

    def test_single_unattacked_nonstrict(self):
        framework = Jsbaf(args=("x",), attacks=frozenset())
        sim = fw.sim_labeling(framework)
        assert sim.undec_set == {"x"}


class TestEnumeration:
    def test_example_admissible(self, j1, l1, l2, l3):
        assert fw.enumerate_admissible(j1) == sorted([l1, l2, l3], key=Labeling.vector)

    def test_empty_framework(self):
        framework = Jsbaf(args=(), attacks=frozenset())
        assert fw.enumerate_admissible(framework) == [Labeling(())]
        assert fw.enumerate_preferred(framework) == [Labeling(())]

    def test_self_attacker(self):
        framework = Jsbaf(args=("x",), attacks=frozenset({("x", "x")}))
        admissible = fw.enumerate_admissible(framework)
        assert admissible == [labeling_of(framework)]

    def test_example_preferred(self, j1, l2, l3):
        assert fw.enumerate_preferred(j1) == sorted([l2, l3], key=Labeling.vector)

    def test_single_free_argument_preferred(self):
        framework = Jsbaf(args=("x",), attacks=frozenset())
        assert fw.enumerate_preferred(framework) == [labeling_of(framework, in_set={"x"})]

    def test_resource_bound(self):
        framework = Jsbaf(args=tuple(f"x{i}" for i in range(14)), attacks=frozenset())
        with pytest.raises(ResourceLimitError):
            fw.enumerate_admissible(framework)

    def test_enumeration_contains_sim(self, j1):
        assert fw.sim_labeling(j1) in fw.enumerate_admissible(j1)


class TestTranslation:
    def test_example_translation_is_isomorphic(self, as1, j1):
        translation = ar.framework_from_system(as1)
        by_conclusion = {
            str(arg.conclusion): aid for aid, arg in translation.argument_of.items()
        }
        to_j1 = {
            by_conclusion["alpha"]: "a",
            by_conclusion["!(gamma & delta & epsilon)"]: "b",
            by_conclusion["gamma & delta & epsilon"]: "bbar",
            by_conclusion["gamma"]: "c",
            by_conclusion["delta"]: "d",
            by_conclusion["epsilon"]: "e",
        }
        assert len(to_j1) == 6
        assert {(to_j1[a], to_j1[b]) for a, b in translation.framework.attacks} == j1.attacks
        assert {
            to_j1[head]: frozenset(to_j1[t] for t in tail)
            for head, tail in translation.framework.supports.items()
        } == j1.supports
        for x in translation.framework.args:
            for y in translation.framework.args:
                ours = translation.framework.rank[x] <= translation.framework.rank[y]
                theirs = j1.rank[to_j1[x]] <= j1.rank[to_j1[y]]
                assert ours == theirs
        assert fw.validate_jsbaf(translation.framework).ok

    def test_single_axiom_translation(self):
        system = make_system(atoms=["p"], axioms=[f("p")])
        translation = ar.framework_from_system(system)
        assert len(translation.framework.args) == 1
        (aid,) = translation.framework.args
        assert translation.framework.supports[aid] == frozenset()
        assert not translation.framework.attacks

    def test_undercut_translation(self, as_u):
        translation = ar.framework_from_system(as_u)
        by_conclusion = {str(a.conclusion): i for i, a in translation.argument_of.items()}
        u, x = by_conclusion["!nu"], by_conclusion["q"]
        assert translation.framework.attacks == {(u, x)}
        assert x not in translation.framework.supports


class TestExtensions:
    def test_example_extensions(self, as1):
        extensions = ar.preferred_extensions(as1)
        families = {frozenset(str(a.conclusion) for a in ext) for ext in extensions}
        assert families == {
            frozenset({"alpha", "!(gamma & delta & epsilon)", "gamma", "delta"}),
            frozenset({"alpha", "!(gamma & delta & epsilon)", "delta", "epsilon"}),
        }

    def test_example_conclusions(self, as1):
        conclusions = ar.preferred_conclusions(as1)
        assert {frozenset(map(str, fam)) for fam in conclusions} == {
            frozenset({"alpha", "!(gamma & delta & epsilon)", "gamma", "delta"}),
            frozenset({"alpha", "!(gamma & delta & epsilon)", "delta", "epsilon"}),
        }

    def test_empty_system(self):
        system = make_system(atoms=["p"])
        assert ar.preferred_extensions(system) == [frozenset()]
        assert ar.preferred_conclusions(system) == [frozenset()]

    def test_truncated_system_is_rejected(self):
        system = make_system(
            atoms=["p"],
            defeasible=[DefeasibleRule("d0", (), f("p")), DefeasibleRule("d1", (f("p"),), f("p"))],
        )
        with pytest.raises(InstanceError):
            ar.preferred_extensions(system, max_depth=4)
