"""Argument construction and the attack relations between arguments.

An argument is a finite derivation tree: a top rule applied to
sub-arguments whose conclusions match the rule's antecedents position by
position.  Identity is structural, so two arguments are the same exactly
when they apply the same rule to the same sub-arguments.

Attacks come in two forms.  An undercut targets the application of a
named defeasible rule through the structural complement of its name.  A
gen-rebut targets a defeasible argument b with a conclusion of the shape
``!conj(Gamma)`` for some non-empty set Gamma of conclusions of
sub-arguments of b, where the conjunction is taken in canonical formula
order.  Preferences are lifted from defeasible rules to arguments by the
elitist weakest link: an argument is at most as strong as another when
its weakest defeasible rule is at most as highly ranked as every
defeasible rule of the other, which for integer ranks reduces to
comparing minimum ranks (strict arguments count as maximal).
"""

from __future__ import annotations

from dataclasses import dataclass

from . import formulas as fm
from .errors import InstanceError
from .formulas import Formula, Not
from .system import ArgumentationSystem, DefeasibleRule, StrictRule

TOP_AXIOM = "axiom"
TOP_CONSEQUENCE = "consequence"
TOP_DEFEASIBLE = "defeasible"


class Argument:
    """Immutable derivation tree with precomputed derived data."""

    __slots__ = (
        "rule_id",
        "subs",
        "conclusion",
        "top_kind",
        "key",
        "depth",
        "defeasible_rules",
        "_sub_set",
        "_hash",
    )

    def __init__(self, rule_id: str, subs: tuple["Argument", ...], conclusion: Formula, top_kind: str):
        self.rule_id = rule_id
        self.subs = subs
        self.conclusion = conclusion
        self.top_kind = top_kind
        self.key = rule_id + "(" + ",".join(s.key for s in subs) + ")"
        self.depth = 1 + max((s.depth for s in subs), default=0)
        dr = frozenset((rule_id,)) if top_kind == TOP_DEFEASIBLE else frozenset()
        for s in subs:
            dr |= s.defeasible_rules
        self.defeasible_rules = dr
        self._sub_set = None
        self._hash = hash(self.key)

    def __eq__(self, other):
        return isinstance(other, Argument) and self.key == other.key

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Argument({self.key} : {self.conclusion})"


def sub_args(argument: Argument) -> frozenset[Argument]:
    """All sub-arguments, the argument itself included."""
    if argument._sub_set is None:
        out = {argument}
        for s in argument.subs:
            out |= sub_args(s)
        argument._sub_set = frozenset(out)
    return argument._sub_set


def def_rules(argument: Argument) -> frozenset[str]:
    return argument.defeasible_rules


def top_rule(argument: Argument) -> str:
    return argument.rule_id


def conclusion(argument: Argument) -> Formula:
    return argument.conclusion


def is_strict(argument: Argument) -> bool:
    return not argument.defeasible_rules


def ad_sub(argument: Argument) -> frozenset[Argument]:
    """Sub-arguments whose top rule is axiomatic or defeasible."""
    return frozenset(a for a in sub_args(argument) if a.top_kind != TOP_CONSEQUENCE)


def c_sub(argument: Argument) -> frozenset[Argument]:
    """Crucial sub-arguments: the frontier of axiomatic/defeasible
    sub-arguments reached by walking consequence-rule applications
    backwards as far as possible."""
    if argument.top_kind != TOP_CONSEQUENCE:
        return frozenset((argument,))
    out: set[Argument] = set()
    stack = list(argument.subs)
    while stack:
        a = stack.pop()
        if a.top_kind != TOP_CONSEQUENCE:
            out.add(a)
        else:
            stack.extend(a.subs)
    return frozenset(out)


@dataclass
class BuildResult:
    arguments: tuple[Argument, ...]
    truncated: bool

    def by_conclusion(self) -> dict[Formula, list[Argument]]:
        table: dict[Formula, list[Argument]] = {}
        for a in self.arguments:
            table.setdefault(a.conclusion, []).append(a)
        return table


def build_arguments(system: ArgumentationSystem, max_args: int = 5000, max_depth: int = 6) -> BuildResult:
    """Close the rule set bottom-up, deduplicating structurally.

    Stops at the least fixpoint or when ``max_args`` / ``max_depth`` is
    exhausted, in which case the result is flagged truncated.  The output
    order is canonical: by depth, then by serialised form.
    """
    if max_args <= 0 or max_depth <= 0:
        raise ValueError("construction limits must be positive")
    rules: list[tuple[str, StrictRule | DefeasibleRule]] = []
    for rule in system.strict_rules:
        rules.append((TOP_AXIOM if rule.axiomatic else TOP_CONSEQUENCE, rule))
    for rule in system.defeasible_rules:
        rules.append((TOP_DEFEASIBLE, rule))
    rules.sort(key=lambda kr: kr[1].id)

    known: dict[str, Argument] = {}
    by_conclusion: dict[Formula, list[Argument]] = {}
    truncated = False

    def add(argument: Argument) -> bool:
        nonlocal truncated
        if argument.key in known:
            return False
        if argument.depth > max_depth:
            truncated = True
            return False
        if len(known) >= max_args:
            truncated = True
            return False
        known[argument.key] = argument
        by_conclusion.setdefault(argument.conclusion, []).append(argument)
        return True

    changed = True
    while changed and not truncated:
        changed = False
        for kind, rule in rules:
            pools = [by_conclusion.get(f, ()) for f in rule.antecedents]
            if any(not pool for pool in pools):
                continue
            # snapshot the pools: additions take effect next round, which
            # keeps the iteration order independent of dict internals
            pools = [list(pool) for pool in pools]
            for combo in _product(pools):
                if add(Argument(rule.id, combo, rule.consequent, kind)):
                    changed = True
                if truncated:
                    break
            if truncated:
                break

    ordered = tuple(sorted(known.values(), key=lambda a: (a.depth, a.key)))
    return BuildResult(arguments=ordered, truncated=truncated)


def _product(pools):
    if not pools:
        yield ()
        return
    for head in pools[0]:
        for rest in _product(pools[1:]):
            yield (head,) + rest


# --- attacks and preference lifting --------------------------------------


def undercuts(a: Argument, b: Argument, system: ArgumentationSystem) -> bool:
    """a concludes the complement of the name of a defeasible rule applied in b."""
    for bp in sub_args(b):
        if bp.top_kind != TOP_DEFEASIBLE:
            continue
        name = system.name_of(bp.rule_id)
        if name is not None and fm.is_neg_complement(a.conclusion, name):
            return True
    return False


def _sub_conclusions(b: Argument) -> frozenset[Formula]:
    return frozenset(x.conclusion for x in sub_args(b))


def gen_rebuts(a: Argument, b: Argument) -> bool:
    """a's conclusion is ``!conj(Gamma)`` for a non-empty Gamma of
    sub-argument conclusions of the defeasible argument b."""
    if not b.defeasible_rules:
        return False
    if not isinstance(a.conclusion, Not):
        return False
    body = a.conclusion.sub
    targets = _sub_conclusions(b)
    for candidate in fm.conjunction_peels(body):
        if all(f in targets for f in candidate):
            return True
    return False


def min_rank(a: Argument, system: ArgumentationSystem) -> int | None:
    """Rank of the weakest defeasible rule used; None means strict (maximal)."""
    if not a.defeasible_rules:
        return None
    return min(system.rank[r] for r in a.defeasible_rules)


def ewl_leq(a: Argument, b: Argument, system: ArgumentationSystem) -> bool:
    """Elitist weakest link: a is at most as preferred as b."""
    ra, rb = min_rank(a, system), min_rank(b, system)
    if ra is None:
        return rb is None
    return rb is None or ra <= rb


def restricted_rebuts(a: Argument, b: Argument) -> bool:
    """Classic sub-argument rebut: a concludes the complement of some
    defeasible-topped sub-argument's conclusion.  Misses everything the
    gen-rebut reaches through conjunctions or strict-rule conclusions;
    kept only as a deliberately weaker engine variant for harness
    self-tests."""
    if not b.defeasible_rules:
        return False
    return any(
        bp.top_kind == TOP_DEFEASIBLE and fm.is_neg_complement(a.conclusion, bp.conclusion)
        for bp in sub_args(b)
    )


def defeats(a: Argument, b: Argument, system: ArgumentationSystem, rebut_mode: str = "gen") -> bool:
    """Undercut, or rebut not coming from a strictly weaker argument."""
    if undercuts(a, b, system):
        return True
    rebutted = gen_rebuts(a, b) if rebut_mode == "gen" else restricted_rebuts(a, b)
    if not rebutted:
        return False
    strictly_weaker = ewl_leq(a, b, system) and not ewl_leq(b, a, system)
    return not strictly_weaker


# --- translation into a framework ----------------------------------------


@dataclass
class Translation:
    framework: "Jsbaf"
    argument_of: dict[str, Argument]
    id_of: dict[Argument, str]
    truncated: bool


def framework_from_system(
    system: ArgumentationSystem,
    build: BuildResult | None = None,
    max_args: int = 5000,
    max_depth: int = 6,
    rebut_mode: str = "gen",
) -> Translation:
    """Translate: attacks are defeats, every strict-rule application
    becomes a joint support, and preference ranks are the elitist
    weakest-link classes with the strict class on top."""
    from .framework import Jsbaf  # deferred to keep module load order simple

    if build is None:
        build = build_arguments(system, max_args=max_args, max_depth=max_depth)
    args = build.arguments
    width = max(3, len(str(max(len(args), 1))))
    id_of = {a: f"a{str(i).zfill(width)}" for i, a in enumerate(args)}
    argument_of = {aid: a for a, aid in id_of.items()}

    attacks = set()
    for a in args:
        for b in args:
            if defeats(a, b, system, rebut_mode=rebut_mode):
                attacks.add((id_of[a], id_of[b]))

    supports: dict[str, frozenset[str]] = {}
    for a in args:
        if a.top_kind != TOP_DEFEASIBLE:
            supports[id_of[a]] = frozenset(id_of[s] for s in a.subs)

    finite = sorted({r for r in (min_rank(a, system) for a in args) if r is not None})
    rank_index = {r: i for i, r in enumerate(finite)}
    strict_rank = len(finite)
    rank = {}
    for a in args:
        r = min_rank(a, system)
        rank[id_of[a]] = strict_rank if r is None else rank_index[r]

    framework = Jsbaf(
        args=tuple(sorted(id_of.values())),
        attacks=frozenset(attacks),
        supports=supports,
        rank=rank,
    )
    return Translation(framework=framework, argument_of=argument_of, id_of=id_of, truncated=build.truncated)


def preferred_extensions(
    system: ArgumentationSystem,
    max_args: int = 5000,
    max_depth: int = 6,
    max_enum_args: int = 13,
) -> list[frozenset[Argument]]:
    """In-sets of the preferred labelings of the translated framework,
    mapped back to arguments and canonically ordered."""
    from .framework import enumerate_preferred

    translation = framework_from_system(system, max_args=max_args, max_depth=max_depth)
    if translation.truncated:
        raise InstanceError("argument construction truncated; extensions would be unreliable")
    labelings = enumerate_preferred(translation.framework, max_args=max_enum_args)
    extensions = [
        frozenset(translation.argument_of[aid] for aid in lab.in_set) for lab in labelings
    ]
    return sorted(extensions, key=lambda ext: sorted(a.key for a in ext))


def preferred_conclusions(
    system: ArgumentationSystem,
    max_args: int = 5000,
    max_depth: int = 6,
    max_enum_args: int = 13,
) -> list[frozenset[Formula]]:
    conclusion_sets = {
        frozenset(a.conclusion for a in ext)
        for ext in preferred_extensions(
            system, max_args=max_args, max_depth=max_depth, max_enum_args=max_enum_args
        )
    }
    return sorted(conclusion_sets, key=lambda fs: sorted(f.key for f in fs))
