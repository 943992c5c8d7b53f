import pytest

import jsbaf.grounded as gr
from jsbaf.errors import InstanceError
from jsbaf.framework import IN, OUT, UNDEC, Jsbaf, Labeling

from conftest import labeling_of


@pytest.fixture(scope="module")
def g1(j1):
    return gr.from_jsbaf(j1)


@pytest.fixture(scope="module")
def g2(j2):
    return gr.from_jsbaf(j2)


@pytest.fixture(scope="module")
def g3(j3):
    return gr.from_jsbaf(j3)


def glabeling(g, in_set=(), out_set=()):
    return Labeling.from_sets(g.args, in_set, out_set)


class TestFromJsbaf:
    def test_graph_is_preserved(self, j1, g1):
        assert g1.args == j1.args
        assert g1.attacks == j1.attacks
        assert g1.supports == j1.supports

    def test_rank_free_instance_round_trips(self, j2, g2):
        assert g2.args == j2.args

    def test_empty(self):
        g = gr.from_jsbaf(Jsbaf(args=(), attacks=frozenset()))
        assert g.args == ()

    def test_validation(self, g2, g3):
        assert gr.validate_ground(g2).ok
        assert gr.validate_ground(g3).ok


class TestMultisetOrdering:
    def test_empty_multiset(self):
        assert gr.multiset_leq([], IN)
        assert not gr.multiset_leq([], UNDEC)
        assert not gr.multiset_leq([], OUT)

    def test_two_undecs_reach_out(self):
        assert gr.multiset_leq([UNDEC, UNDEC], OUT)
        assert not gr.multiset_leq([UNDEC], OUT)

    def test_in_members_do_not_help(self):
        assert not gr.multiset_leq([IN], OUT)
        assert gr.multiset_leq([IN, OUT], OUT)


class TestLegality:
    def test_not_legally_in_with_single_undec_cosupporter(self, g3):
        sim = gr.sim_labeling(g3)
        assert not gr.legally_in(g3, sim, "A2")

    def test_no_legally_out_without_accepted_attackers(self, g2):
        all_undec = glabeling(g2)
        assert not any(gr.legally_out(g2, all_undec, a) for a in g2.args)

    def test_legally_out_via_chain(self, g3):
        lab = glabeling(g3, in_set={"Bbar", "A2"}, out_set={"A1", "B"})
        assert gr.legally_out(g3, lab, "A1")


class TestSimAndAdmissibility:
    def test_sim_j3(self, g3):
        sim = gr.sim_labeling(g3)
        assert sim == glabeling(g3, in_set={"Bbar"}, out_set={"B"})

    def test_sim_j2_all_undec(self, g2):
        assert gr.sim_labeling(g2) == glabeling(g2)

    def test_grounded_labeling_is_admissible(self, g3):
        assert gr.is_admissible(g3, gr.grounded_labeling(g3))


class TestSupportPaths:
    def test_ancestors(self, g1):
        assert gr.support_ancestors(g1, "bbar") == {"c", "d", "e"}

    def test_children(self, g1):
        assert gr.support_children(g1, "a") == {"b"}

    def test_leaf_has_no_children(self, g1):
        assert gr.support_children(g1, "e") == {"bbar"}
        assert gr.support_children(g1, "b") == frozenset()


class TestSafeSupports:
    def test_attacked_head_is_unsafe(self, g3):
        assert gr.safe_supports(g3, gr.sim_labeling(g3), "A2") == []

    def test_unattacked_chain_is_safe(self):
        g = gr.GroundJsbaf(
            args=("x", "y", "z"),
            attacks=frozenset(),
            supports={"y": frozenset({"x"}), "z": frozenset({"y"})},
        )
        lab = glabeling(g)
        assert gr.safe_supports(g, lab, "x") == [(frozenset({"x"}), "y")]

    def test_argument_in_no_supporting_set(self, g3):
        assert gr.safe_supports(g3, gr.sim_labeling(g3), "Bbar") == []


class TestMoreInformative:
    def test_refined_labels(self):
        assert gr.more_informative(IN, UNDEC)
        assert gr.more_informative(OUT, OUT)
        assert not gr.more_informative(UNDEC, OUT)


class TestForcedIn:
    def test_forced_despite_out_head(self, g3):
        assert gr.forced_in(g3, gr.sim_labeling(g3), "A2")

    def test_not_forced_when_a_rejecting_labeling_exists(self, g2):
        assert not gr.forced_in(g2, gr.sim_labeling(g2), "A2")

    def test_self_attacker_is_never_forced(self, g3):
        assert not gr.forced_in(g3, gr.sim_labeling(g3), "A1")


class TestGroundComplete:
    def test_grounded_labeling_is_ground_complete(self, g3):
        assert gr.is_ground_complete(g3, gr.grounded_labeling(g3))

    def test_sim_j3_not_ground_complete(self, g3):
        assert not gr.is_ground_complete(g3, gr.sim_labeling(g3))

    def test_all_undec_ground_complete_on_j2(self, g2):
        assert gr.is_ground_complete(g2, glabeling(g2))


class TestGroundedConstruction:
    def test_j2(self, g2):
        assert gr.grounded_construction(g2) == glabeling(g2)

    def test_j3(self, g3):
        assert gr.grounded_construction(g3) == glabeling(
            g3, in_set={"Bbar", "A2"}, out_set={"A1", "B"}
        )

    def test_empty(self):
        g = gr.GroundJsbaf(args=(), attacks=frozenset())
        assert gr.grounded_construction(g).labels == ()

    def test_unattacked_support_chain_is_accepted(self):
        g = gr.GroundJsbaf(
            args=("x", "y", "z"),
            attacks=frozenset(),
            supports={"y": frozenset({"x"}), "z": frozenset({"y"})},
        )
        assert gr.grounded_labeling(g, oracle=True) == glabeling(g, in_set={"x", "y", "z"})

    def test_bad_pick_function_rejected(self, g3):
        with pytest.raises(InstanceError):
            gr.grounded_construction(g3, pick=lambda cands: "nope")


class TestGroundedOracle:
    def test_uniqueness_oracle_passes(self, g2, g3):
        gr.grounded_labeling(g2, oracle=True)
        gr.grounded_labeling(g3, oracle=True)

    def test_trace_intermediates_are_admissible(self, g3):
        trace = []
        gr.grounded_construction(g3, trace=trace)
        assert len(trace) >= 2
        for lab in trace:
            assert gr.is_admissible(g3, lab)
