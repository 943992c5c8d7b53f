"""Argumentation systems: strict and defeasible inference rules.

A system holds axiomatic strict rules (no antecedents, jointly
satisfiable consequents), consequence-based strict rules (antecedents
truth-table-entail the consequent), defeasible rules with an optional
naming formula, and a total preorder over the defeasible rules given as
integer ranks.  Consequence rules are normally validated against the
entailment relation; a system may be marked ``assume_consequences`` for
hand-written instances that fix a deliberately non-semantic strict rule
set, in which case validation records the waiver instead of checking.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import formulas as fm
from .errors import InstanceError
from .formulas import Formula

DEFAULT_MAX_ARGS = 5000
DEFAULT_MAX_DEPTH = 6

AXIOM_ID_PREFIX = "ax_"


def axiom_rule_id(formula: Formula) -> str:
    """Content-derived id: stable, and collision-free across the
    syntactically disjoint systems that unions combine."""
    import hashlib

    return AXIOM_ID_PREFIX + hashlib.sha1(formula.key.encode()).hexdigest()[:8]


@dataclass(frozen=True)
class StrictRule:
    id: str
    antecedents: tuple[Formula, ...]
    consequent: Formula
    axiomatic: bool = False

    def __post_init__(self):
        if self.axiomatic and self.antecedents:
            raise InstanceError(f"axiomatic rule {self.id} must not have antecedents")

    def formulas(self) -> tuple[Formula, ...]:
        return self.antecedents + (self.consequent,)


@dataclass(frozen=True)
class DefeasibleRule:
    id: str
    antecedents: tuple[Formula, ...]
    consequent: Formula
    name: Formula | None = None

    def formulas(self) -> tuple[Formula, ...]:
        return self.antecedents + (self.consequent,)


@dataclass
class ArgumentationSystem:
    """Rules plus the defeasible-rule preference preorder.

    ``rank`` maps every defeasible rule id to a non-negative integer;
    rule r is at most as preferred as r' iff rank(r) <= rank(r').
    """

    atoms: frozenset[str]
    strict_rules: tuple[StrictRule, ...]
    defeasible_rules: tuple[DefeasibleRule, ...]
    rank: dict[str, int] = field(default_factory=dict)
    assume_consequences: bool = False

    def __post_init__(self):
        self.atoms = frozenset(self.atoms)
        self.strict_rules = tuple(sorted(self.strict_rules, key=lambda r: r.id))
        self.defeasible_rules = tuple(sorted(self.defeasible_rules, key=lambda r: r.id))
        for rule in self.defeasible_rules:
            self.rank.setdefault(rule.id, 0)
        self.rule_by_id = {r.id: r for r in self.strict_rules}
        self.rule_by_id.update({r.id: r for r in self.defeasible_rules})

    @property
    def axioms(self) -> tuple[Formula, ...]:
        return tuple(r.consequent for r in self.strict_rules if r.axiomatic)

    def name_of(self, rule_id: str) -> Formula | None:
        rule = self.rule_by_id.get(rule_id)
        return rule.name if isinstance(rule, DefeasibleRule) else None


def make_system(
    atoms,
    axioms=(),
    strict=(),
    defeasible=(),
    rank=None,
    assume_consequences=False,
) -> ArgumentationSystem:
    """Convenience constructor; generates axiom rule ids in canonical order."""
    axiom_rules = tuple(
        StrictRule(axiom_rule_id(f), (), f, axiomatic=True)
        for f in sorted(set(axioms), key=fm.formula_key)
    )
    return ArgumentationSystem(
        atoms=frozenset(atoms),
        strict_rules=axiom_rules + tuple(strict),
        defeasible_rules=tuple(defeasible),
        rank=dict(rank or {}),
        assume_consequences=assume_consequences,
    )


@dataclass
class ValidationReport:
    failures: list[str] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def __str__(self):
        lines = ["valid" if self.ok else "invalid"]
        lines += [f"failure: {f}" for f in self.failures]
        lines += [f"note: {n}" for n in self.notes]
        return "\n".join(lines)


def validate_system(
    system: ArgumentationSystem,
    max_args: int = DEFAULT_MAX_ARGS,
    max_depth: int = DEFAULT_MAX_DEPTH,
    atom_bound: int = fm.DEFAULT_ATOM_BOUND,
) -> ValidationReport:
    """Check the system-level invariants and report every violation.

    Consistency (no pair of strict arguments with complementary
    conclusions) is only checked over the bounded argument set; the
    report notes when that set was truncated.
    """
    report = ValidationReport()
    seen: set[str] = set()
    for rule in system.strict_rules + system.defeasible_rules:
        if rule.id in seen:
            report.failures.append(f"duplicate rule id {rule.id}")
        seen.add(rule.id)
        loose = fm.atoms_of(rule.formulas()) - system.atoms
        if loose:
            report.failures.append(f"rule {rule.id} uses undeclared atoms {sorted(loose)}")

    for rule in system.defeasible_rules:
        if rule.name is not None and rule.name.atom_set - system.atoms:
            report.failures.append(f"name of rule {rule.id} uses undeclared atoms")
        if system.rank.get(rule.id, 0) < 0:
            report.failures.append(f"rule {rule.id} has a negative rank")

    axioms = system.axioms
    if axioms and not fm.satisfiable(axioms, atom_bound=atom_bound):
        report.failures.append("axioms are jointly unsatisfiable")

    unchecked = 0
    for rule in system.strict_rules:
        if rule.axiomatic:
            continue
        if system.assume_consequences:
            unchecked += 1
            continue
        if not fm.entails(rule.antecedents, rule.consequent, atom_bound=atom_bound):
            report.failures.append(
                f"consequence rule {rule.id} is not entailment-valid"
            )
    if unchecked:
        report.notes.append(f"{unchecked} consequence rules taken as given (assume_consequences)")

    # bounded consistency: no two strict arguments with complementary conclusions
    from .arguments import build_arguments, is_strict  # local import, avoids a cycle

    if report.ok:
        build = build_arguments(system, max_args=max_args, max_depth=max_depth)
        if build.truncated:
            report.notes.append("argument construction truncated; consistency checked on the partial set")
        strict_conclusions = sorted(
            {a.conclusion for a in build.arguments if is_strict(a)}, key=fm.formula_key
        )
        for i, phi in enumerate(strict_conclusions):
            for psi in strict_conclusions[i + 1 :]:
                if fm.is_neg_complement(phi, psi):
                    report.failures.append(
                        f"inconsistent: strict arguments conclude both {phi} and {psi}"
                    )
    return report


def atoms_of_system(system: ArgumentationSystem) -> frozenset[str]:
    """Atoms of the defeasible rules, the axiomatic rules and the naming
    function.  Consequence rules do not contribute."""
    out: set[str] = set()
    for rule in system.defeasible_rules:
        out |= fm.atoms_of(rule.formulas())
        if rule.name is not None:
            out |= rule.name.atom_set
    for rule in system.strict_rules:
        if rule.axiomatic:
            out |= rule.consequent.atom_set
    return frozenset(out)


def systems_syn_disjoint(s1: ArgumentationSystem, s2: ArgumentationSystem) -> bool:
    return not (atoms_of_system(s1) & atoms_of_system(s2))


MERGE_POLICIES = ("raw", "interleave")


def union_systems(
    s1: ArgumentationSystem,
    s2: ArgumentationSystem,
    merge: str = "raw",
    cross_rules: tuple[StrictRule, ...] = (),
) -> ArgumentationSystem:
    """Union of two syntactically disjoint systems.

    Defeasible rules, names and axioms are combined as-is; ``cross_rules``
    carries whatever slice of the full consequence-rule space the caller
    wants the union to have (see :func:`jsbaf.generate.cross_closure_rules`).
    Rank merging: ``raw`` keeps integer ranks, letting equal ranks tie
    across systems; ``interleave`` maps ranks r to 2r and 2r+1 so that no
    two rules from different systems are ever equally preferred.  Both
    yield total preorders extending the originals.
    """
    if not systems_syn_disjoint(s1, s2):
        raise InstanceError("systems are not syntactically disjoint")
    if merge not in MERGE_POLICIES:
        raise InstanceError(f"unknown merge policy {merge!r}")
    ids1 = {r.id for r in s1.strict_rules + s1.defeasible_rules}
    ids2 = {r.id for r in s2.strict_rules + s2.defeasible_rules}
    clash = ids1 & ids2 | {r.id for r in cross_rules} & (ids1 | ids2)
    if clash:
        raise InstanceError(f"rule id collision in union: {sorted(clash)}")

    if merge == "raw":
        rank = dict(s1.rank) | dict(s2.rank)
    else:
        rank = {rid: 2 * r for rid, r in s1.rank.items()}
        rank |= {rid: 2 * r + 1 for rid, r in s2.rank.items()}

    return ArgumentationSystem(
        atoms=s1.atoms | s2.atoms,
        strict_rules=s1.strict_rules + s2.strict_rules + tuple(cross_rules),
        defeasible_rules=s1.defeasible_rules + s2.defeasible_rules,
        rank=rank,
        assume_consequences=s1.assume_consequences or s2.assume_consequences,
    )
