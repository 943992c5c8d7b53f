"""Rationality-postulate checkers.

Each check returns a report rather than raising: the verdict is PASS,
FAIL with an independently re-checkable witness, or INCONCLUSIVE when a
resource budget ran out before an answer was reached.  Closure is
checked against the instantiated strict-rule set of the system at hand;
non-interference compares the restricted preferred conclusions of two
syntactically disjoint systems against those of their union, built with
whatever consequence-rule closure the caller supplies.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from . import formulas as fm
from .arguments import preferred_conclusions
from .errors import InstanceError, JsbafError, ResourceLimitError
from .formulas import Formula, Not, Var
from .system import (
    ArgumentationSystem,
    DefeasibleRule,
    StrictRule,
    atoms_of_system,
    make_system,
    systems_syn_disjoint,
    union_systems,
)

PASS = "pass"
FAIL = "fail"
INCONCLUSIVE = "inconclusive"


@dataclass
class PostulateReport:
    postulate: str
    instance_digest: str
    verdict: str
    witness: dict | None = None
    rule_universe: dict = field(default_factory=dict)
    budget: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.verdict == PASS

    def to_json(self) -> str:
        payload = {
            "postulate": self.postulate,
            "instance_digest": self.instance_digest,
            "verdict": self.verdict,
            "rule_universe": self.rule_universe,
            "budget": self.budget,
        }
        if self.witness is not None:
            payload["witness"] = self.witness
        return json.dumps(payload, sort_keys=True)


def _universe_of(system: ArgumentationSystem) -> dict:
    return {
        "axiomatic": sum(1 for r in system.strict_rules if r.axiomatic),
        "consequence": sum(1 for r in system.strict_rules if not r.axiomatic),
        "defeasible": len(system.defeasible_rules),
    }


def system_digest(system: ArgumentationSystem) -> str:
    from .textio import format_system, instance_digest

    return instance_digest(format_system(system))


def cl_closure(strict_rules, formulas) -> frozenset[Formula]:
    """Smallest superset closed under the strict rules; rules without
    antecedents always fire."""
    out = set(formulas)
    changed = True
    while changed:
        changed = False
        for rule in strict_rules:
            if rule.consequent not in out and all(a in out for a in rule.antecedents):
                out.add(rule.consequent)
                changed = True
    return frozenset(out)


def check_closure(system: ArgumentationSystem, extension_conclusions) -> PostulateReport:
    conclusions = frozenset(extension_conclusions)
    closed = cl_closure(system.strict_rules, conclusions)
    report = PostulateReport(
        postulate="closure",
        instance_digest=system_digest(system),
        verdict=PASS if closed == conclusions else FAIL,
        rule_universe=_universe_of(system),
    )
    if not report.passed:
        missing = sorted(closed - conclusions, key=fm.formula_key)
        report.witness = {"missing": [str(f) for f in missing]}
    return report


def check_direct_consistency(conclusions, instance_digest: str = "") -> PostulateReport:
    ordered = sorted(set(conclusions), key=fm.formula_key)
    witness = None
    for i, phi in enumerate(ordered):
        for psi in ordered[i + 1 :]:
            if fm.is_neg_complement(phi, psi):
                witness = {"pair": [str(phi), str(psi)]}
                break
        if witness:
            break
    return PostulateReport(
        postulate="direct_consistency",
        instance_digest=instance_digest,
        verdict=FAIL if witness else PASS,
        witness=witness,
    )


def check_indirect_consistency(system: ArgumentationSystem, extension_conclusions) -> PostulateReport:
    closed = cl_closure(system.strict_rules, frozenset(extension_conclusions))
    inner = check_direct_consistency(closed, instance_digest=system_digest(system))
    return PostulateReport(
        postulate="indirect_consistency",
        instance_digest=inner.instance_digest,
        verdict=inner.verdict,
        witness=inner.witness,
        rule_universe=_universe_of(system),
    )


def restrict_conclusions(conclusion_families, atom_names) -> frozenset[frozenset[Formula]]:
    """Restrict each conclusion set to the formulas over the given atoms;
    families that collapse to the same restriction are merged."""
    atom_names = frozenset(atom_names)
    return frozenset(
        frozenset(f for f in family if f.atom_set <= atom_names)
        for family in conclusion_families
    )


def _family_key(families) -> list[list[str]]:
    return sorted(sorted(str(f) for f in fam) for fam in families)


@dataclass
class NonInterferenceBudget:
    max_args: int = 300
    max_depth: int = 8
    max_enum_args: int = 40
    max_nonstrict: int = 21

    def as_dict(self) -> dict:
        return {
            "max_args": self.max_args,
            "max_depth": self.max_depth,
            "max_enum_args": self.max_enum_args,
            "max_nonstrict": self.max_nonstrict,
        }


def _preferred_restricted(system, atom_names, budget, rebut_mode="gen"):
    """Restricted preferred conclusion sets, or a reason string on budget exhaustion."""
    families, reason = _preferred_all(system, budget, rebut_mode=rebut_mode)
    if reason is not None:
        return None, reason
    return restrict_conclusions(families, atom_names), None


def check_non_interference(
    s1: ArgumentationSystem,
    s2: ArgumentationSystem,
    merge: str = "raw",
    cross_rules: tuple[StrictRule, ...] = (),
    budget: NonInterferenceBudget | None = None,
    rebut_mode: str = "gen",
) -> PostulateReport:
    """Compare each side's restricted preferred conclusions with the union's."""
    budget = budget or NonInterferenceBudget()
    if not systems_syn_disjoint(s1, s2):
        raise InstanceError("systems are not syntactically disjoint")
    union = union_systems(s1, s2, merge=merge, cross_rules=cross_rules)
    digest = system_digest(union)
    report = PostulateReport(
        postulate="non_interference",
        instance_digest=digest,
        verdict=PASS,
        rule_universe={"union": _universe_of(union), "merge_policy": merge},
        budget=budget.as_dict(),
    )

    union_raw, reason = _preferred_all(union, budget, rebut_mode=rebut_mode)
    if reason is not None:
        report.verdict = INCONCLUSIVE
        report.witness = {"reason": f"union: {reason}"}
        return report

    for label, side in (("side1", s1), ("side2", s2)):
        side_atoms = atoms_of_system(side)
        side_families, reason = _preferred_restricted(side, side_atoms, budget, rebut_mode=rebut_mode)
        if reason is not None:
            report.verdict = INCONCLUSIVE
            report.witness = {"reason": f"{label}: {reason}"}
            return report
        union_restricted = restrict_conclusions(union_raw, side_atoms)
        if side_families != union_restricted:
            report.verdict = FAIL
            report.witness = {
                "side": label,
                "atoms": sorted(side_atoms),
                "side_conclusions": _family_key(side_families),
                "union_conclusions": _family_key(union_restricted),
            }
            return report
    return report


def _preferred_all(system, budget, rebut_mode="gen"):
    from .arguments import build_arguments, framework_from_system, is_strict
    from .framework import enumerate_preferred

    build = build_arguments(system, max_args=budget.max_args, max_depth=budget.max_depth)
    if build.truncated:
        return None, "argument construction truncated"
    nonstrict = sum(1 for a in build.arguments if not is_strict(a))
    if nonstrict > budget.max_nonstrict:
        return None, f"{nonstrict} non-strict arguments exceed the labeling budget"
    translation = framework_from_system(system, build=build, rebut_mode=rebut_mode)
    try:
        labelings = enumerate_preferred(translation.framework, max_args=budget.max_enum_args)
    except ResourceLimitError as exc:
        return None, str(exc)
    return {
        frozenset(translation.argument_of[aid].conclusion for aid in lab.in_set)
        for lab in labelings
    }, None


def shrink_failing_system(system: ArgumentationSystem, still_fails) -> ArgumentationSystem:
    """Greedily drop defeasible rules and axioms while ``still_fails``
    keeps returning True; used to minimise fuzz reproductions."""
    current = system
    progress = True
    while progress:
        progress = False
        for rule in current.defeasible_rules:
            candidate = ArgumentationSystem(
                atoms=current.atoms,
                strict_rules=current.strict_rules,
                defeasible_rules=tuple(r for r in current.defeasible_rules if r.id != rule.id),
                rank={k: v for k, v in current.rank.items() if k != rule.id},
                assume_consequences=current.assume_consequences,
            )
            try:
                if still_fails(candidate):
                    current = candidate
                    progress = True
                    break
            except JsbafError:
                continue
        else:
            for rule in current.strict_rules:
                candidate = ArgumentationSystem(
                    atoms=current.atoms,
                    strict_rules=tuple(r for r in current.strict_rules if r.id != rule.id),
                    defeasible_rules=current.defeasible_rules,
                    rank=dict(current.rank),
                    assume_consequences=current.assume_consequences,
                )
                try:
                    if still_fails(candidate):
                        current = candidate
                        progress = True
                        break
                except JsbafError:
                    continue
    return current


def non_triviality_witness(atom_names) -> tuple[ArgumentationSystem, ArgumentationSystem]:
    """The pair of systems over the same atoms whose restricted preferred
    conclusions differ: one asserts every atom defeasibly, the other only
    repeats each atom from itself and so derives nothing."""
    atom_names = sorted(set(atom_names))
    if not atom_names:
        raise InstanceError("the witness needs a non-empty atom set")
    asserting = make_system(
        atoms=atom_names,
        defeasible=[
            DefeasibleRule(f"d{i}", (), Var(name)) for i, name in enumerate(atom_names)
        ],
    )
    circular = make_system(
        atoms=atom_names,
        defeasible=[
            DefeasibleRule(f"d{i}", (Var(name),), Var(name)) for i, name in enumerate(atom_names)
        ],
    )
    return asserting, circular
