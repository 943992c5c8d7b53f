"""Joint-support bipolar argumentation frameworks and their labeling semantics.

A framework holds arguments, binary attacks, joint supports (a finite
set of arguments supporting a single argument, at most one supporting
set per argument) and a total preference preorder given as integer
ranks.  An argument is *strict* when it is supported by the empty set or
by strict arguments only.  Well-formed frameworks keep strict arguments
unattacked and in a single topmost preference class, and have no cyclic
support chains.

Semantics are labeling-based.  A labeling maps every argument to IN,
OUT or UNDEC.  Whether a label is *legal* for an argument depends on its
attackers and on every support whose supporting set contains it:

* legally IN: all attackers are OUT, and for every support (S, c) with
  the argument a in S and a at most as preferred as each member of
  S - {a}, either c is IN, or c is UNDEC and some member of S - {a} is
  not IN, or c is OUT and S - {a} contains an OUT member or two distinct
  UNDEC members.
* legally OUT: some attacker is IN, or there is a support chain
  (S0, b0), ..., (Sn, bn) with a in S0, S0 - {a} all IN and no member of
  it less preferred than a, every bi OUT, every Si - {b(i-1)} all IN,
  and bn attacked by an IN argument.
* legally UNDEC: neither of the above.

An admissible labeling labels strict arguments IN, labels only legally
IN arguments IN, and labels an argument OUT exactly when it is legally
OUT.  Preferred labelings are the admissible ones with subset-maximal
IN-sets.

Enumeration works per candidate IN-set: for a fixed IN-set the OUT-set
of an admissible labeling is forced (legal OUT-ness propagates only
forward along the acyclic support graph, so the legally-OUT operator has
a unique fixpoint), which reduces the search from 3**n labelings to
2**k IN-sets over the non-strict arguments.  Every candidate is then
verified against the legality predicates above.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import InstanceError, ResourceLimitError

IN = "IN"
OUT = "OUT"
UNDEC = "UNDEC"
LABELS = (IN, OUT, UNDEC)

DEFAULT_MAX_ENUM_ARGS = 13


@dataclass(frozen=True)
class Labeling:
    """Total assignment of IN/OUT/UNDEC to the arguments of one framework."""

    labels: tuple[tuple[str, str], ...]

    @staticmethod
    def from_mapping(mapping) -> "Labeling":
        items = tuple(sorted(mapping.items()))
        for _, label in items:
            if label not in LABELS:
                raise InstanceError(f"not a label: {label!r}")
        return Labeling(items)

    @staticmethod
    def from_sets(args, in_set=(), out_set=()) -> "Labeling":
        in_set, out_set = set(in_set), set(out_set)
        if in_set & out_set or not (in_set | out_set) <= set(args):
            raise InstanceError("label sets must be disjoint subsets of the arguments")
        return Labeling.from_mapping(
            {a: IN if a in in_set else OUT if a in out_set else UNDEC for a in args}
        )

    def as_dict(self) -> dict[str, str]:
        return dict(self.labels)

    def label(self, arg: str) -> str:
        value = self.as_dict().get(arg)
        if value is None:
            raise InstanceError(f"unknown argument {arg!r}")
        return value

    @property
    def in_set(self) -> frozenset[str]:
        return frozenset(a for a, l in self.labels if l == IN)

    @property
    def out_set(self) -> frozenset[str]:
        return frozenset(a for a, l in self.labels if l == OUT)

    @property
    def undec_set(self) -> frozenset[str]:
        return frozenset(a for a, l in self.labels if l == UNDEC)

    def vector(self) -> str:
        """Serialised label vector in argument-id order; the canonical sort key."""
        return "".join(l[0] for _, l in self.labels)

    def __repr__(self):
        return "Labeling(" + ", ".join(f"{a}={l}" for a, l in self.labels) + ")"


@dataclass
class Jsbaf:
    """Arguments, attacks, joint supports and preference ranks.

    ``supports`` maps a supported argument to its unique supporting set;
    absence means unsupported, an empty set means supported by nothing
    (a tautology-like argument).  ``rank`` encodes the total preorder:
    a is at most as preferred as b iff rank[a] <= rank[b].
    """

    args: tuple[str, ...]
    attacks: frozenset[tuple[str, str]]
    supports: dict[str, frozenset[str]] = field(default_factory=dict)
    rank: dict[str, int] = field(default_factory=dict)

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
        for a in self.args:
            self.rank.setdefault(a, 0)

    def attackers_of(self, arg: str) -> frozenset[str]:
        return frozenset(a for a, b in self.attacks if b == arg)


def strict_args(framework: Jsbaf) -> frozenset[str]:
    """Least fixpoint: supported by the empty set, or by strict arguments only."""
    strict: set[str] = set()
    changed = True
    while changed:
        changed = False
        for head, tail in framework.supports.items():
            if head not in strict and tail <= strict:
                strict.add(head)
                changed = True
    return frozenset(strict)


# --- the label-legality engine -------------------------------------------


class _Engine:
    """Bitmask view of one framework; shared by the preference-aware and
    the preference-free (grounded) semantics via ``use_ranks``."""

    def __init__(self, args, attacks, supports, rank=None):
        self.ids = tuple(sorted(args))
        self.index = {a: i for i, a in enumerate(self.ids)}
        self.n = len(self.ids)
        self.attackers = [0] * self.n
        for a, b in attacks:
            self.attackers[self.index[b]] |= 1 << self.index[a]
        self.supports = []  # (head index, tail mask)
        for head in sorted(supports):
            tail = supports[head]
            self.supports.append((self.index[head], sum(1 << self.index[t] for t in tail)))
        self.containing = [[] for _ in range(self.n)]
        self.tail_of_head = {}
        for s, (head, tmask) in enumerate(self.supports):
            self.tail_of_head[head] = tmask
            m = tmask
            while m:
                low = m & -m
                self.containing[low.bit_length() - 1].append(s)
                m ^= low
        self.use_ranks = rank is not None
        self.rank = [rank[a] for a in self.ids] if rank else [0] * self.n
        # strict arguments: least fixpoint over the supports
        strict = 0
        changed = True
        while changed:
            changed = False
            for head, tmask in self.supports:
                if not strict >> head & 1 and tmask & ~strict == 0:
                    strict |= 1 << head
                    changed = True
        self.strict_mask = strict
        self.full_mask = (1 << self.n) - 1

    def mask(self, ids) -> int:
        return sum(1 << self.index[a] for a in ids)

    def unmask(self, m: int) -> frozenset[str]:
        return frozenset(self.ids[i] for i in range(self.n) if m >> i & 1)

    def masks_of(self, labeling: Labeling) -> tuple[int, int]:
        if tuple(a for a, _ in labeling.labels) != self.ids:
            raise InstanceError("labeling does not cover exactly the framework's arguments")
        return self.mask(labeling.in_set), self.mask(labeling.out_set)

    def labeling(self, in_mask: int, out_mask: int) -> Labeling:
        return Labeling(
            tuple(
                (a, IN if in_mask >> i & 1 else OUT if out_mask >> i & 1 else UNDEC)
                for i, a in enumerate(self.ids)
            )
        )

    def rank_ok(self, i: int, tmask: int) -> bool:
        """i is at most as preferred as every other member of the tail."""
        if not self.use_ranks:
            return True
        ri = self.rank[i]
        m = tmask & ~(1 << i)
        while m:
            low = m & -m
            if self.rank[low.bit_length() - 1] < ri:
                return False
            m ^= low
        return True

    def legally_in(self, i: int, in_mask: int, out_mask: int) -> bool:
        if self.attackers[i] & ~out_mask:
            return False
        bit = 1 << i
        for s in self.containing[i]:
            head, tmask = self.supports[s]
            if not self.rank_ok(i, tmask):
                continue
            others = tmask & ~bit
            if in_mask >> head & 1:
                continue
            if out_mask >> head & 1:
                # OUT head: an OUT co-supporter, or two distinct UNDEC ones
                if others & out_mask:
                    continue
                if (others & ~in_mask & ~out_mask).bit_count() >= 2:
                    continue
                return False
            # UNDEC head: some co-supporter not IN
            if others & ~in_mask:
                continue
            return False
        return True

    def legally_out(self, i: int, in_mask: int, out_mask: int, memo=None) -> bool:
        if self.attackers[i] & in_mask:
            return True
        bit = 1 << i
        if memo is None:
            memo = {}
        for s in self.containing[i]:
            head, tmask = self.supports[s]
            if not self.rank_ok(i, tmask):
                continue
            if (tmask & ~bit) & ~in_mask:
                continue
            if self._chain(head, in_mask, out_mask, memo):
                return True
        return False

    def _chain(self, head: int, in_mask: int, out_mask: int, memo: dict) -> bool:
        """Can a qualifying support chain continue through ``head``?  The
        head must be OUT; the chain succeeds once some head is attacked
        by an IN argument."""
        cached = memo.get(head)
        if cached is not None:
            return cached
        if not out_mask >> head & 1:
            memo[head] = False
            return False
        memo[head] = False  # cycle guard; support graphs are acyclic when valid
        result = False
        if self.attackers[head] & in_mask:
            result = True
        else:
            hbit = 1 << head
            for s in self.containing[head]:
                nxt, tmask = self.supports[s]
                if (tmask & ~hbit) & ~in_mask:
                    continue
                if self._chain(nxt, in_mask, out_mask, memo):
                    result = True
                    break
        memo[head] = result
        return result

    def lfp_out(self, in_mask: int) -> int:
        """Least fixpoint of the legally-OUT operator for a fixed IN-set.
        For admissible labelings this is the only possible OUT-set."""
        out = 0
        changed = True
        while changed:
            changed = False
            memo: dict = {}
            for i in range(self.n):
                if not out >> i & 1 and self.legally_out(i, in_mask, out, memo):
                    out |= 1 << i
                    changed = True
        return out

    def admissible_out_for(self, in_mask: int) -> int | None:
        """OUT mask completing ``in_mask`` to an admissible labeling, or None."""
        if self.strict_mask & ~in_mask:
            return None
        m = in_mask
        while m:
            low = m & -m
            if self.attackers[low.bit_length() - 1] & in_mask:
                return None  # an IN argument can never have an IN attacker
            m ^= low
        for head, tmask in self.supports:
            # closure: a fully IN supporting set forces its head IN
            if tmask & ~in_mask == 0 and not in_mask >> head & 1:
                return None
        out = self.lfp_out(in_mask)
        if out & in_mask:
            return None
        m = in_mask
        while m:
            low = m & -m
            if not self.legally_in(low.bit_length() - 1, in_mask, out):
                return None
            m ^= low
        return out

    def is_admissible(self, in_mask: int, out_mask: int) -> bool:
        if self.strict_mask & ~in_mask:
            return False
        memo: dict = {}
        for i in range(self.n):
            bit_in = in_mask >> i & 1
            bit_out = out_mask >> i & 1
            if bit_in and not self.legally_in(i, in_mask, out_mask):
                return False
            if bit_out != self.legally_out(i, in_mask, out_mask, memo):
                return False
        return True

    def sim_masks(self) -> tuple[int, int]:
        in_mask = self.strict_mask
        out = 0
        for i in range(self.n):
            if self.attackers[i] & in_mask:
                out |= 1 << i
        changed = True
        while changed:
            changed = False
            for head, tmask in self.supports:
                if not out >> head & 1:
                    continue
                m = tmask
                while m:
                    low = m & -m
                    i = low.bit_length() - 1
                    if not out >> i & 1 and (tmask & ~low) & ~in_mask == 0:
                        out |= low
                        changed = True
                    m ^= low
        return in_mask, out

    def enumerate_admissible_masks(self):
        free = [i for i in range(self.n) if not self.strict_mask >> i & 1]
        for choice in range(1 << len(free)):
            in_mask = self.strict_mask
            c = choice
            while c:
                low = c & -c
                in_mask |= 1 << free[low.bit_length() - 1]
                c ^= low
            out = self.admissible_out_for(in_mask)
            if out is not None:
                yield in_mask, out


def _engine(framework: Jsbaf) -> _Engine:
    cached = getattr(framework, "_engine_cache", None)
    if cached is None:
        cached = _Engine(framework.args, framework.attacks, framework.supports, framework.rank)
        framework._engine_cache = cached
    return cached


# --- public operations ----------------------------------------------------


def validate_structure(framework: Jsbaf):
    """The rank-free structural restrictions: acyclic supports, strict
    arguments unattacked (uniqueness and finiteness of supporting sets
    hold by representation)."""
    from .system import ValidationReport

    report = ValidationReport()
    cycle = _support_cycle(framework)
    if cycle:
        report.failures.append("cyclic support chain through " + " -> ".join(cycle))
    strict = strict_args(framework)
    for a, b in sorted(framework.attacks):
        if b in strict:
            report.failures.append(f"strict argument {b} is attacked (by {a})")
    report.notes.append("supporting sets are finite and unique by construction")
    return report


def validate_jsbaf(framework: Jsbaf):
    """Check all structural restrictions, ranks included; returns a report."""
    report = validate_structure(framework)
    strict = strict_args(framework)
    if strict:
        ranks = {framework.rank[a] for a in strict}
        if len(ranks) > 1:
            report.failures.append("strict arguments are not all equally preferred")
        else:
            top = ranks.pop()
            for a in sorted(set(framework.args) - strict):
                if framework.rank[a] >= top:
                    report.failures.append(
                        f"non-strict argument {a} is not strictly below the strict class"
                    )
    return report


def _support_cycle(framework: Jsbaf):
    """A cycle in the tail-to-head support graph, as a witness path, or None."""
    edges: dict[str, list[str]] = {a: [] for a in framework.args}
    for head in sorted(framework.supports):
        for t in sorted(framework.supports[head]):
            edges[t].append(head)
    state: dict[str, int] = {}
    stack_path: list[str] = []

    def visit(v: str):
        state[v] = 1
        stack_path.append(v)
        for w in edges[v]:
            if state.get(w) == 1:
                return stack_path[stack_path.index(w) :] + [w]
            if state.get(w) is None:
                found = visit(w)
                if found:
                    return found
        stack_path.pop()
        state[v] = 2
        return None

    for v in framework.args:
        if state.get(v) is None:
            found = visit(v)
            if found:
                return found
    return None


def _locate(framework: Jsbaf, labeling: Labeling, arg: str):
    eng = _engine(framework)
    if arg not in eng.index:
        raise InstanceError(f"unknown argument {arg!r}")
    in_mask, out_mask = eng.masks_of(labeling)
    return eng, eng.index[arg], in_mask, out_mask


def legally_in(framework: Jsbaf, labeling: Labeling, arg: str) -> bool:
    eng, i, in_mask, out_mask = _locate(framework, labeling, arg)
    return eng.legally_in(i, in_mask, out_mask)


def legally_out(framework: Jsbaf, labeling: Labeling, arg: str) -> bool:
    eng, i, in_mask, out_mask = _locate(framework, labeling, arg)
    return eng.legally_out(i, in_mask, out_mask)


def legally_undec(framework: Jsbaf, labeling: Labeling, arg: str) -> bool:
    eng, i, in_mask, out_mask = _locate(framework, labeling, arg)
    return not eng.legally_in(i, in_mask, out_mask) and not eng.legally_out(i, in_mask, out_mask)


def is_admissible(framework: Jsbaf, labeling: Labeling) -> bool:
    eng = _engine(framework)
    in_mask, out_mask = eng.masks_of(labeling)
    return eng.is_admissible(in_mask, out_mask)


def sim_labeling(framework: Jsbaf) -> Labeling:
    """Strict-including-minimal labeling: strict arguments IN, rejections
    propagated from them OUT, everything else UNDEC."""
    eng = _engine(framework)
    return eng.labeling(*eng.sim_masks())


def _check_enum_bound(framework: Jsbaf, max_args: int):
    if len(framework.args) > max_args:
        raise ResourceLimitError(
            f"{len(framework.args)} arguments exceed the enumeration bound of {max_args}",
            bound_name="max_enum_args",
            bound_value=max_args,
        )


def enumerate_admissible(framework: Jsbaf, max_args: int = DEFAULT_MAX_ENUM_ARGS) -> list[Labeling]:
    _check_enum_bound(framework, max_args)
    eng = _engine(framework)
    found = [eng.labeling(im, om) for im, om in eng.enumerate_admissible_masks()]
    return sorted(found, key=Labeling.vector)


def enumerate_preferred(framework: Jsbaf, max_args: int = DEFAULT_MAX_ENUM_ARGS) -> list[Labeling]:
    admissible = enumerate_admissible(framework, max_args=max_args)
    in_sets = [lab.in_set for lab in admissible]
    preferred = [
        lab
        for lab, s in zip(admissible, in_sets)
        if not any(s < other for other in in_sets)
    ]
    return sorted(preferred, key=Labeling.vector)
