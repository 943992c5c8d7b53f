"""Direct, slow transcriptions of the semantics definitions.

These deliberately share no machinery with the engine in
:mod:`jsbaf.framework`: legality walks the support relation as written
in the definitions, chains are enumerated exhaustively, and admissible
labelings are found by scanning all 3**n assignments.  They exist as an
independent cross-check path (the ``--oracle`` solver mode and the
equivalence tests drive them), so keep them straightforward rather than
fast.
"""

from __future__ import annotations

from itertools import product

from .errors import ResourceLimitError
from .framework import IN, OUT, UNDEC, Jsbaf, Labeling

NAIVE_MAX_ARGS = 12


def _supports_list(supports) -> list[tuple[frozenset[str], str]]:
    return [(tail, head) for head, tail in sorted(supports.items())]


def _chains_from(supports, first):
    """Every support chain that starts with the given support: sequences
    (S0, b0), ..., (Sn, bn) where each head feeds the next tail."""
    stack = [[first]]
    while stack:
        chain = stack.pop()
        yield chain
        _, head = chain[-1]
        for tail, nxt in _supports_list(supports):
            if head in tail and (tail, nxt) not in chain:
                stack.append(chain + [(tail, nxt)])


def naive_legally_in(framework: Jsbaf, labeling: Labeling, arg: str, use_ranks: bool = True) -> bool:
    lab = labeling.as_dict()
    for attacker in framework.attackers_of(arg):
        if lab[attacker] != OUT:
            return False
    for tail, head in _supports_list(framework.supports):
        if arg not in tail:
            continue
        others = tail - {arg}
        if use_ranks and any(framework.rank[arg] > framework.rank[b] for b in others):
            continue
        if lab[head] == IN:
            continue
        if lab[head] == UNDEC:
            if any(lab[b] in (OUT, UNDEC) for b in others):
                continue
            return False
        if any(lab[b] == OUT for b in others):
            continue
        if sum(1 for b in others if lab[b] == UNDEC) >= 2:
            continue
        return False
    return True


def naive_legally_out(framework: Jsbaf, labeling: Labeling, arg: str, use_ranks: bool = True) -> bool:
    lab = labeling.as_dict()
    for attacker in framework.attackers_of(arg):
        if lab[attacker] == IN:
            return True
    for tail, head in _supports_list(framework.supports):
        if arg not in tail:
            continue
        others = tail - {arg}
        if use_ranks and any(framework.rank[arg] > framework.rank[b] for b in others):
            continue
        if any(lab[b] != IN for b in others):
            continue
        for chain in _chains_from(framework.supports, (tail, head)):
            if any(lab[h] != OUT for _, h in chain):
                continue
            ok = True
            for i in range(1, len(chain)):
                prev_head = chain[i - 1][1]
                if any(lab[b] != IN for b in chain[i][0] - {prev_head}):
                    ok = False
                    break
            if not ok:
                continue
            last_head = chain[-1][1]
            if any(lab[c] == IN for c in framework.attackers_of(last_head)):
                return True
    return False


def naive_strict_args(framework: Jsbaf) -> frozenset[str]:
    strict: set[str] = set()
    while True:
        new = {
            head
            for head, tail in framework.supports.items()
            if head not in strict and all(t in strict for t in tail)
        }
        if not new:
            return frozenset(strict)
        strict |= new


def naive_is_admissible(framework: Jsbaf, labeling: Labeling, use_ranks: bool = True) -> bool:
    lab = labeling.as_dict()
    for arg in framework.args:
        if lab[arg] == IN and not naive_legally_in(framework, labeling, arg, use_ranks):
            return False
        if (lab[arg] == OUT) != naive_legally_out(framework, labeling, arg, use_ranks):
            return False
    return all(lab[a] == IN for a in naive_strict_args(framework))


def naive_enumerate_admissible(
    framework: Jsbaf, use_ranks: bool = True, max_args: int = NAIVE_MAX_ARGS
) -> list[Labeling]:
    """Scan all 3**n labelings; only for cross-checking small instances."""
    if len(framework.args) > max_args:
        raise ResourceLimitError(
            f"{len(framework.args)} arguments exceed the naive bound of {max_args}",
            bound_name="naive_max_args",
            bound_value=max_args,
        )
    found = []
    for assignment in product((IN, OUT, UNDEC), repeat=len(framework.args)):
        labeling = Labeling(tuple(zip(framework.args, assignment)))
        if naive_is_admissible(framework, labeling, use_ranks):
            found.append(labeling)
    return sorted(found, key=Labeling.vector)


def naive_enumerate_preferred(
    framework: Jsbaf, use_ranks: bool = True, max_args: int = NAIVE_MAX_ARGS
) -> list[Labeling]:
    admissible = naive_enumerate_admissible(framework, use_ranks, max_args)
    return [
        lab
        for lab in admissible
        if not any(lab.in_set < other.in_set for other in admissible)
    ]
