"""Preference-free grounded semantics for joint-support frameworks.

This semantics ignores preference ranks entirely.  Legality is the same
as in :mod:`jsbaf.framework` with every rank condition dropped; the
legally-IN support clauses collapse into a single ordering between the
multiset of co-supporter labels and the supported argument's label.

The grounded labeling accepts exactly the arguments one is *forced* to
accept.  An argument is forced IN w.r.t. a labeling when all its
attackers are OUT and every support it belongs to whose head is not IN
is harmless, either because the support is *safe* (no argument reachable
from it along support chains is attacked by a non-OUT argument) or
because every admissible labeling that keeps at least as much
information about the head can be extended, without relabelling anything
already IN or OUT and without touching the head, into an admissible
labeling in which the argument is legally IN.

A ground-complete labeling is an admissible labeling containing all the
arguments forced IN w.r.t. itself; the grounded labeling is the unique
ground-complete labeling with a minimal IN-set.  It is computed by the
grounded construction: start from the strict-including-minimal labeling
and repeatedly accept one forced-IN argument together with everything
downstream of its safe supports, recomputing the rejected set after each
step.  The result does not depend on the order in which forced-IN
arguments are picked.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import InstanceError, ResourceLimitError
from .framework import IN, OUT, UNDEC, Jsbaf, Labeling, _Engine

DEFAULT_MAX_CATALOGUE_ARGS = 12


@dataclass
class GroundJsbaf:
    """A framework without preference ranks."""

    args: tuple[str, ...]
    attacks: frozenset[tuple[str, str]]
    supports: dict[str, frozenset[str]] = field(default_factory=dict)

    def __post_init__(self):
        self.args = tuple(sorted(set(self.args)))
        known = set(self.args)
        self.attacks = frozenset(self.attacks)
        for a, b in self.attacks:
            if a not in known or b not in known:
                raise InstanceError(f"attack ({a}, {b}) mentions an unknown argument")
        self.supports = {h: frozenset(t) for h, t in self.supports.items()}
        for head, tail in self.supports.items():
            if head not in known or tail - known:
                raise InstanceError(f"support for {head} mentions an unknown argument")


def from_jsbaf(framework: Jsbaf) -> GroundJsbaf:
    """Drop the ranks; the graph is unchanged."""
    return GroundJsbaf(
        args=framework.args,
        attacks=framework.attacks,
        supports=dict(framework.supports),
    )


def validate_ground(g: GroundJsbaf):
    from .framework import validate_structure

    return validate_structure(Jsbaf(args=g.args, attacks=g.attacks, supports=dict(g.supports)))


def _engine(g: GroundJsbaf) -> _Engine:
    cached = getattr(g, "_engine_cache", None)
    if cached is None:
        cached = _Engine(g.args, g.attacks, g.supports, rank=None)
        g._engine_cache = cached
    return cached


def multiset_leq(labels, label: str) -> bool:
    """Ordering between a multiset of labels and a single label.

    The empty multiset is below IN only; UNDEC needs an UNDEC or OUT
    member; OUT needs an OUT member or at least two UNDEC members.
    """
    labels = list(labels)
    if label == IN:
        return True
    if label == UNDEC:
        return OUT in labels or UNDEC in labels
    if label == OUT:
        return OUT in labels or labels.count(UNDEC) >= 2
    raise InstanceError(f"not a label: {label!r}")


def _locate(g: GroundJsbaf, labeling: Labeling, arg: str):
    eng = _engine(g)
    if arg not in eng.index:
        raise InstanceError(f"unknown argument {arg!r}")
    in_mask, out_mask = eng.masks_of(labeling)
    return eng, eng.index[arg], in_mask, out_mask


def legally_in(g: GroundJsbaf, labeling: Labeling, arg: str) -> bool:
    eng, i, in_mask, out_mask = _locate(g, labeling, arg)
    return eng.legally_in(i, in_mask, out_mask)


def legally_out(g: GroundJsbaf, labeling: Labeling, arg: str) -> bool:
    eng, i, in_mask, out_mask = _locate(g, labeling, arg)
    return eng.legally_out(i, in_mask, out_mask)


def is_admissible(g: GroundJsbaf, labeling: Labeling) -> bool:
    eng = _engine(g)
    return eng.is_admissible(*eng.masks_of(labeling))


def sim_labeling(g: GroundJsbaf) -> Labeling:
    eng = _engine(g)
    return eng.labeling(*eng.sim_masks())


def support_ancestors(g: GroundJsbaf, arg: str) -> frozenset[str]:
    """Arguments from which a support path reaches ``arg``."""
    back: dict[str, frozenset[str]] = {h: t for h, t in g.supports.items()}
    out: set[str] = set()
    frontier = set(back.get(arg, ()))
    while frontier:
        out |= frontier
        frontier = {x for f in frontier for x in back.get(f, ())} - out
    return frozenset(out)


def support_children(g: GroundJsbaf, arg: str) -> frozenset[str]:
    """Arguments reachable from ``arg`` along support paths."""
    forward: dict[str, set[str]] = {}
    for head, tail in g.supports.items():
        for t in tail:
            forward.setdefault(t, set()).add(head)
    out: set[str] = set()
    frontier = set(forward.get(arg, ()))
    while frontier:
        out |= frontier
        frontier = {x for f in frontier for x in forward.get(f, ())} - out
    return frozenset(out)


def safe_supports(g: GroundJsbaf, labeling: Labeling, arg: str) -> list[tuple[frozenset[str], str]]:
    """Supports (S, b) with ``arg`` in S such that every argument on every
    chain starting at (S, b) has all its attackers OUT."""
    out_set = labeling.out_set
    result = []
    for head in sorted(g.supports):
        tail = g.supports[head]
        if arg not in tail:
            continue
        reach = {head} | support_children(g, head)
        if all(attacker in out_set for h in reach for attacker, tgt in g.attacks if tgt == h):
            result.append((tail, head))
    return result


def more_informative(label: str, than: str) -> bool:
    """IN/OUT refine UNDEC; every label refines itself."""
    return than == UNDEC or label == than


def admissible_catalogue(g: GroundJsbaf, max_args: int = DEFAULT_MAX_CATALOGUE_ARGS) -> list[Labeling]:
    """All admissible labelings, cached on the framework."""
    cached = getattr(g, "_catalogue_cache", None)
    if cached is not None:
        return cached
    if len(g.args) > max_args:
        raise ResourceLimitError(
            f"{len(g.args)} arguments exceed the catalogue bound of {max_args}",
            bound_name="max_catalogue_args",
            bound_value=max_args,
        )
    eng = _engine(g)
    catalogue = sorted(
        (eng.labeling(im, om) for im, om in eng.enumerate_admissible_masks()),
        key=Labeling.vector,
    )
    g._catalogue_cache = catalogue
    return catalogue


def _extends(base: Labeling, candidate: Labeling) -> bool:
    return base.in_set <= candidate.in_set and base.out_set <= candidate.out_set


def forced_in(
    g: GroundJsbaf,
    labeling: Labeling,
    arg: str,
    max_args: int = DEFAULT_MAX_CATALOGUE_ARGS,
) -> bool:
    eng, i, in_mask, out_mask = _locate(g, labeling, arg)
    if eng.attackers[i] & ~out_mask:
        return False
    safe = {head for _, head in safe_supports(g, labeling, arg)}
    catalogue = None
    for head in sorted(g.supports):
        tail = g.supports[head]
        if arg not in tail or labeling.label(head) == IN or head in safe:
            continue
        if catalogue is None:
            catalogue = admissible_catalogue(g, max_args=max_args)
        here = labeling.label(head)
        for base in catalogue:
            if not more_informative(base.label(head), here):
                continue
            target = base.label(head)
            if not any(
                _extends(base, cand) and cand.label(head) == target and legally_in(g, cand, arg)
                for cand in catalogue
            ):
                return False
    return True


def fi_set(g: GroundJsbaf, labeling: Labeling, max_args: int = DEFAULT_MAX_CATALOGUE_ARGS) -> frozenset[str]:
    return frozenset(a for a in g.args if forced_in(g, labeling, a, max_args=max_args))


def is_ground_complete(
    g: GroundJsbaf, labeling: Labeling, max_args: int = DEFAULT_MAX_CATALOGUE_ARGS
) -> bool:
    if not is_admissible(g, labeling):
        return False
    return fi_set(g, labeling, max_args=max_args) <= labeling.in_set


def enumerate_ground_complete(
    g: GroundJsbaf, max_args: int = DEFAULT_MAX_CATALOGUE_ARGS
) -> list[Labeling]:
    return [
        lab
        for lab in admissible_catalogue(g, max_args=max_args)
        if fi_set(g, lab, max_args=max_args) <= lab.in_set
    ]


def grounded_construction(
    g: GroundJsbaf,
    pick=None,
    max_args: int = DEFAULT_MAX_CATALOGUE_ARGS,
    trace: list | None = None,
) -> Labeling:
    """Iterate from the strict-including-minimal labeling, accepting one
    forced-IN argument per step (plus the heads and support children of
    its safe supports) and recomputing the rejected set, until no
    argument outside the IN-set is forced IN.

    ``pick`` chooses among the forced-IN candidates; the default takes
    the canonically smallest.  The final labeling is the same for every
    choice function.
    """
    eng = _engine(g)
    labeling = sim_labeling(g)
    if trace is not None:
        trace.append(labeling)
    while True:
        candidates = sorted(fi_set(g, labeling, max_args=max_args) - labeling.in_set)
        if not candidates:
            return labeling
        chosen = candidates[0] if pick is None else pick(candidates)
        if chosen not in candidates:
            raise InstanceError("pick function returned a non-candidate")
        new_in = set(labeling.in_set) | {chosen}
        for _, head in safe_supports(g, labeling, chosen):
            new_in.add(head)
            new_in |= support_children(g, head)
        in_mask = eng.mask(new_in)
        out_mask = eng.lfp_out(in_mask)
        labeling = eng.labeling(in_mask, out_mask)
        if trace is not None:
            trace.append(labeling)


def grounded_labeling(
    g: GroundJsbaf,
    oracle: bool = False,
    max_args: int = DEFAULT_MAX_CATALOGUE_ARGS,
) -> Labeling:
    """The unique grounded labeling.

    With ``oracle`` set, additionally enumerates every ground-complete
    labeling and asserts that the construction's result is the unique
    minimal one by IN-set inclusion.
    """
    result = grounded_construction(g, max_args=max_args)
    if oracle:
        complete = enumerate_ground_complete(g, max_args=max_args)
        minimal = [
            lab
            for lab in complete
            if not any(other.in_set < lab.in_set for other in complete)
        ]
        if len(minimal) != 1 or minimal[0] != result:
            raise InstanceError(
                "grounded construction does not match the unique minimal "
                f"ground-complete labeling ({len(minimal)} minimal candidates)"
            )
    return result
