"""Propositional base logic for the argumentation layers.

Formulas are built from named atoms and are closed under negation and
conjunction only.  Equality is structural everywhere: ``p & q`` and
``q & p`` are different formulas, and no semantic normalisation is ever
applied.  The consequence relation is classical truth-table entailment
over the atoms occurring in the formulas involved, which keeps it
decidable at the cost of a configurable bound on the number of distinct
atoms (the table has 2**k rows).

Every formula carries a *key*: its serialisation in prefix notation.
Lexicographic order on keys is the canonical total order used wherever a
set of formulas has to be turned into a sequence deterministically (for
instance when a conjunction over a set is formed).
"""

from __future__ import annotations

import re
from typing import Iterable, Mapping

from .errors import EvaluationError, ParseError, ResourceLimitError

DEFAULT_ATOM_BOUND = 16

_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")


class Formula:
    """Immutable formula tree node.  Use :class:`Var`, :class:`Not`, :class:`And`."""

    __slots__ = ("key", "atom_set", "_hash")

    key: str
    atom_set: frozenset[str]

    def __eq__(self, other):
        return isinstance(other, Formula) and self.key == other.key

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Formula({format_formula(self)!r})"

    def __str__(self):
        return format_formula(self)


class Var(Formula):
    __slots__ = ("name",)

    def __init__(self, name: str):
        if not _IDENT.fullmatch(name):
            raise ValueError(f"invalid atom name: {name!r}")
        self.name = name
        self.key = name
        self.atom_set = frozenset((name,))
        self._hash = hash(self.key)


class Not(Formula):
    __slots__ = ("sub",)

    def __init__(self, sub: Formula):
        self.sub = sub
        self.key = "(! " + sub.key + ")"
        self.atom_set = sub.atom_set
        self._hash = hash(self.key)


class And(Formula):
    __slots__ = ("left", "right")

    def __init__(self, left: Formula, right: Formula):
        self.left = left
        self.right = right
        self.key = "(& " + left.key + " " + right.key + ")"
        self.atom_set = left.atom_set | right.atom_set
        self._hash = hash(self.key)


def atoms(formula: Formula) -> frozenset[str]:
    """The atom names occurring in ``formula`` (never empty)."""
    return formula.atom_set


def atoms_of(formulas: Iterable[Formula]) -> frozenset[str]:
    out: set[str] = set()
    for f in formulas:
        out |= f.atom_set
    return frozenset(out)


def formula_key(formula: Formula) -> str:
    return formula.key


def satisfies(interpretation: Mapping[str, bool], formula: Formula) -> bool:
    """Standard recursive evaluation under a total assignment."""
    if isinstance(formula, Var):
        try:
            return interpretation[formula.name]
        except KeyError:
            raise EvaluationError(f"atom {formula.name!r} outside the interpretation universe") from None
    if isinstance(formula, Not):
        return not satisfies(interpretation, formula.sub)
    if isinstance(formula, And):
        return satisfies(interpretation, formula.left) and satisfies(interpretation, formula.right)
    raise TypeError(f"not a formula: {formula!r}")


def _interpretations(names: tuple[str, ...]):
    k = len(names)
    for bits in range(1 << k):
        yield {names[i]: bool(bits >> i & 1) for i in range(k)}


def _check_atom_bound(names, atom_bound):
    if len(names) > atom_bound:
        raise ResourceLimitError(
            f"{len(names)} atoms exceed the truth-table bound of {atom_bound}",
            bound_name="atom_bound",
            bound_value=atom_bound,
        )


def entails(gamma: Iterable[Formula], psi: Formula, atom_bound: int = DEFAULT_ATOM_BOUND) -> bool:
    """Truth-table entailment: every model of ``gamma`` satisfies ``psi``."""
    gamma = tuple(gamma)
    names = tuple(sorted(atoms_of(gamma) | psi.atom_set))
    _check_atom_bound(names, atom_bound)
    for interp in _interpretations(names):
        if all(satisfies(interp, g) for g in gamma) and not satisfies(interp, psi):
            return False
    return True


def satisfiable(gamma: Iterable[Formula], atom_bound: int = DEFAULT_ATOM_BOUND) -> bool:
    gamma = tuple(gamma)
    names = tuple(sorted(atoms_of(gamma)))
    _check_atom_bound(names, atom_bound)
    return any(all(satisfies(interp, g) for g in gamma) for interp in _interpretations(names))


def is_neg_complement(phi: Formula, psi: Formula) -> bool:
    """Structural complement test: ``phi`` is ``!psi`` or ``psi`` is ``!phi``."""
    if isinstance(phi, Not) and phi.sub == psi:
        return True
    return isinstance(psi, Not) and psi.sub == phi


def big_conj(formulas: list[Formula] | tuple[Formula, ...]) -> Formula:
    """Fold an ordered, non-empty list into ``f0 & (f1 & (...))``.

    The list order is taken as given; no sorting and no deduplication
    happen here.  Use :func:`conj_of_set` to conjoin a set canonically.
    """
    if not formulas:
        raise ValueError("big_conj of an empty list is undefined")
    out = formulas[-1]
    for f in reversed(formulas[:-1]):
        out = And(f, out)
    return out


def conj_of_set(formulas: Iterable[Formula]) -> Formula:
    """Conjunction over a set, elements in canonical (key) order."""
    ordered = sorted(set(formulas), key=formula_key)
    return big_conj(ordered)


def conjunction_peels(formula: Formula):
    """Candidate element sequences whose canonical conjunction is ``formula``.

    A set Gamma satisfies ``conj_of_set(Gamma) == formula`` exactly when its
    key-sorted sequence is one of the sequences yielded here (the whole
    formula, then successively peeled prefixes of the right spine) and that
    sequence is strictly increasing with pairwise distinct elements.  The
    strictness filter is applied here; membership checks are the caller's.
    """
    yield (formula,)
    prefix: list[Formula] = []
    cur = formula
    while isinstance(cur, And):
        prefix.append(cur.left)
        cur = cur.right
        candidate = tuple(prefix) + (cur,)
        keys = [f.key for f in candidate]
        if all(keys[i] < keys[i + 1] for i in range(len(keys) - 1)):
            yield candidate


def syn_disjoint(gamma: Iterable[Formula], delta: Iterable[Formula]) -> bool:
    """No shared atoms between the two formula sets."""
    return not (atoms_of(gamma) & atoms_of(delta))


# --- text syntax ---------------------------------------------------------
#
# atoms       identifiers [A-Za-z_][A-Za-z0-9_]*
# negation    !phi
# conjunction phi & psi        (left-associative)
# parentheses allowed


class _Tokens:
    def __init__(self, text: str, line: int | None = None):
        self.text = text
        self.pos = 0
        self.line = line

    def error(self, message: str) -> ParseError:
        return ParseError(message, line=self.line, column=self.pos + 1)

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos] in " \t":
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""


def _parse_unary(t: _Tokens) -> Formula:
    c = t.peek()
    if c == "!":
        t.pos += 1
        return Not(_parse_unary(t))
    if c == "(":
        t.pos += 1
        f = _parse_conj(t)
        if t.peek() != ")":
            raise t.error("expected ')'")
        t.pos += 1
        return f
    m = _IDENT.match(t.text, t.pos)
    if not m:
        raise t.error("expected a formula")
    t.pos = m.end()
    return Var(m.group())


def _parse_conj(t: _Tokens) -> Formula:
    f = _parse_unary(t)
    while t.peek() == "&":
        t.pos += 1
        f = And(f, _parse_unary(t))
    return f


def parse_formula(text: str, line: int | None = None) -> Formula:
    t = _Tokens(text, line=line)
    f = _parse_conj(t)
    if t.peek():
        raise t.error(f"unexpected {t.peek()!r}")
    return f


def format_formula(formula: Formula) -> str:
    """Minimal-parenthesis rendering; ``parse_formula`` round-trips it."""
    if isinstance(formula, Var):
        return formula.name
    if isinstance(formula, Not):
        inner = format_formula(formula.sub)
        if isinstance(formula.sub, And):
            inner = "(" + inner + ")"
        return "!" + inner
    if isinstance(formula, And):
        left = format_formula(formula.left)
        right = format_formula(formula.right)
        if isinstance(formula.right, And):
            # the parser is left-associative, so a right-nested chain
            # needs explicit grouping
            right = "(" + right + ")"
        return left + " & " + right
    raise TypeError(f"not a formula: {formula!r}")
