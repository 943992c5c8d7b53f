"""Instance file formats and canonical printers.

System files are line-oriented::

    # comment
    option assume-consequences
    atom p
    axiom <formula>
    strict <id>: <f1>, <f2> -> <f>
    defeasible <id>[<rank>]: <f1>, ... => <f>
    name <id> = <formula>

Axiom lines synthesise rule ids ``ax0, ax1, ...`` in canonical formula
order, so the prefix ``ax`` is reserved.  Framework files::

    arg <id> [rank=<int>]
    att <attacker> <target>
    sup <id> <- <id>,...,<id>     # empty right side = supported by {}

Both printers emit a canonical form (sorted lines); parse(print(x)) is
the identity on the parsed representation.
"""

from __future__ import annotations

import hashlib
import json

from . import formulas as fm
from .errors import ParseError
from .formulas import parse_formula
from .framework import Jsbaf, Labeling
from .system import (
    AXIOM_ID_PREFIX,
    ArgumentationSystem,
    DefeasibleRule,
    StrictRule,
)

SCHEMA_VERSION = 1


def instance_digest(text: str) -> str:
    return hashlib.sha256(text.encode()).hexdigest()[:12]


def _lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line


def _split_rule(body: str, arrow: str, lineno: int):
    if arrow not in body:
        raise ParseError(f"expected {arrow!r}", line=lineno)
    left, right = body.split(arrow, 1)
    antecedents = tuple(
        parse_formula(part.strip(), line=lineno)
        for part in left.split(",")
        if part.strip()
    )
    return antecedents, parse_formula(right.strip(), line=lineno)


def parse_system_text(text: str) -> ArgumentationSystem:
    atoms: set[str] = set()
    axioms: list = []
    strict: list[StrictRule] = []
    defeasible: list[DefeasibleRule] = []
    names: dict[str, str] = {}
    rank: dict[str, int] = {}
    assume = False

    for lineno, line in _lines(text):
        keyword, _, rest = line.partition(" ")
        rest = rest.strip()
        if keyword == "option":
            if rest != "assume-consequences":
                raise ParseError(f"unknown option {rest!r}", line=lineno)
            assume = True
        elif keyword == "atom":
            atoms.add(rest)
        elif keyword == "axiom":
            axioms.append(parse_formula(rest, line=lineno))
        elif keyword in ("strict", "defeasible"):
            head, _, body = rest.partition(":")
            if not body:
                raise ParseError("expected ':' after the rule id", line=lineno)
            rule_id = head.strip()
            rule_rank = 0
            if "[" in rule_id:
                rule_id, _, bracket = rule_id.partition("[")
                rule_id = rule_id.strip()
                if not bracket.endswith("]"):
                    raise ParseError("expected ']' after the rank", line=lineno)
                try:
                    rule_rank = int(bracket[:-1])
                except ValueError:
                    raise ParseError("rank must be an integer", line=lineno) from None
            if keyword == "strict":
                antecedents, consequent = _split_rule(body, "->", lineno)
                strict.append(StrictRule(rule_id, antecedents, consequent))
            else:
                antecedents, consequent = _split_rule(body, "=>", lineno)
                defeasible.append(DefeasibleRule(rule_id, antecedents, consequent))
                rank[rule_id] = rule_rank
        elif keyword == "name":
            rule_id, _, formula = rest.partition("=")
            if not formula.strip():
                raise ParseError("expected '=' and a formula", line=lineno)
            names[rule_id.strip()] = formula.strip()
        else:
            raise ParseError(f"unknown directive {keyword!r}", line=lineno)

    named = []
    defeasible_ids = {r.id for r in defeasible}
    for rule in defeasible:
        if rule.id in names:
            named.append(
                DefeasibleRule(rule.id, rule.antecedents, rule.consequent, parse_formula(names[rule.id]))
            )
        else:
            named.append(rule)
    unknown = set(names) - defeasible_ids
    if unknown:
        raise ParseError(f"name given for unknown defeasible rules {sorted(unknown)}")
    for rule in strict:
        if rule.id.startswith(AXIOM_ID_PREFIX):
            raise ParseError(f"rule id {rule.id!r} is reserved for axiom lines")

    from .system import make_system

    system = make_system(
        atoms=atoms,
        axioms=axioms,
        strict=strict,
        defeasible=named,
        rank=rank,
        assume_consequences=assume,
    )
    return system


def format_system(system: ArgumentationSystem) -> str:
    lines = []
    if system.assume_consequences:
        lines.append("option assume-consequences")
    lines += [f"atom {a}" for a in sorted(system.atoms)]
    lines += [
        f"axiom {fm.format_formula(r.consequent)}"
        for r in system.strict_rules
        if r.axiomatic
    ]
    for rule in system.strict_rules:
        if rule.axiomatic:
            continue
        ants = ", ".join(fm.format_formula(f) for f in rule.antecedents)
        lines.append(f"strict {rule.id}: {ants} -> {fm.format_formula(rule.consequent)}")
    for rule in system.defeasible_rules:
        ants = ", ".join(fm.format_formula(f) for f in rule.antecedents)
        lines.append(
            f"defeasible {rule.id}[{system.rank[rule.id]}]: {ants} => {fm.format_formula(rule.consequent)}"
        )
    for rule in system.defeasible_rules:
        if rule.name is not None:
            lines.append(f"name {rule.id} = {fm.format_formula(rule.name)}")
    return "\n".join(lines) + "\n"


def system_to_dict(system: ArgumentationSystem) -> dict:
    return {
        "atoms": sorted(system.atoms),
        "options": ["assume-consequences"] if system.assume_consequences else [],
        "axioms": [
            fm.format_formula(r.consequent) for r in system.strict_rules if r.axiomatic
        ],
        "strict": [
            {
                "id": r.id,
                "antecedents": [fm.format_formula(f) for f in r.antecedents],
                "consequent": fm.format_formula(r.consequent),
            }
            for r in system.strict_rules
            if not r.axiomatic
        ],
        "defeasible": [
            {
                "id": r.id,
                "rank": system.rank[r.id],
                "antecedents": [fm.format_formula(f) for f in r.antecedents],
                "consequent": fm.format_formula(r.consequent),
                **({"name": fm.format_formula(r.name)} if r.name is not None else {}),
            }
            for r in system.defeasible_rules
        ],
    }


def system_from_dict(data: dict) -> ArgumentationSystem:
    from .system import make_system

    return make_system(
        atoms=data.get("atoms", ()),
        axioms=[parse_formula(f) for f in data.get("axioms", ())],
        strict=[
            StrictRule(
                r["id"],
                tuple(parse_formula(f) for f in r.get("antecedents", ())),
                parse_formula(r["consequent"]),
            )
            for r in data.get("strict", ())
        ],
        defeasible=[
            DefeasibleRule(
                r["id"],
                tuple(parse_formula(f) for f in r.get("antecedents", ())),
                parse_formula(r["consequent"]),
                parse_formula(r["name"]) if "name" in r else None,
            )
            for r in data.get("defeasible", ())
        ],
        rank={r["id"]: r.get("rank", 0) for r in data.get("defeasible", ())},
        assume_consequences="assume-consequences" in data.get("options", ()),
    )


def parse_framework_text(text: str) -> Jsbaf:
    args: dict[str, int] = {}
    attacks: set[tuple[str, str]] = set()
    supports: dict[str, frozenset[str]] = {}

    for lineno, line in _lines(text):
        keyword, _, rest = line.partition(" ")
        rest = rest.strip()
        if keyword == "arg":
            name, _, rankpart = rest.partition(" ")
            rank = 0
            if rankpart:
                if not rankpart.startswith("rank="):
                    raise ParseError("expected rank=<int>", line=lineno)
                try:
                    rank = int(rankpart[len("rank=") :])
                except ValueError:
                    raise ParseError("rank must be an integer", line=lineno) from None
            if name in args:
                raise ParseError(f"duplicate argument {name!r}", line=lineno)
            args[name] = rank
        elif keyword == "att":
            parts = rest.split()
            if len(parts) != 2:
                raise ParseError("expected two argument ids", line=lineno)
            attacks.add((parts[0], parts[1]))
        elif keyword == "sup":
            head, sep, tail = rest.partition("<-")
            if not sep:
                raise ParseError("expected '<-'", line=lineno)
            head = head.strip()
            if head in supports:
                raise ParseError(f"second supporting set for {head!r}", line=lineno)
            supports[head] = frozenset(
                part.strip() for part in tail.split(",") if part.strip()
            )
        else:
            raise ParseError(f"unknown directive {keyword!r}", line=lineno)

    return Jsbaf(
        args=tuple(args),
        attacks=frozenset(attacks),
        supports=supports,
        rank=dict(args),
    )


def format_framework(framework: Jsbaf) -> str:
    lines = [f"arg {a} rank={framework.rank[a]}" for a in framework.args]
    lines += [f"att {a} {b}" for a, b in sorted(framework.attacks)]
    lines += [
        f"sup {head} <- " + ",".join(sorted(framework.supports[head]))
        for head in sorted(framework.supports)
    ]
    return "\n".join(lines) + "\n"


def framework_to_dict(framework: Jsbaf) -> dict:
    return {
        "args": [{"id": a, "rank": framework.rank[a]} for a in framework.args],
        "attacks": sorted([a, b] for a, b in framework.attacks),
        "supports": [
            {"arg": head, "by": sorted(framework.supports[head])}
            for head in sorted(framework.supports)
        ],
    }


def framework_from_dict(data: dict) -> Jsbaf:
    return Jsbaf(
        args=tuple(a["id"] for a in data.get("args", ())),
        attacks=frozenset((a, b) for a, b in data.get("attacks", ())),
        supports={s["arg"]: frozenset(s["by"]) for s in data.get("supports", ())},
        rank={a["id"]: a.get("rank", 0) for a in data.get("args", ())},
    )


def parse_instance(path: str, kind: str | None = None):
    """Load a system or framework file; the kind is inferred from the
    extension (.as / .jsbaf) or from the directives when not given."""
    with open(path, encoding="utf-8") as handle:
        text = handle.read()
    if kind is None:
        if path.endswith(".as"):
            kind = "as"
        elif path.endswith(".jsbaf"):
            kind = "jsbaf"
        else:
            first = next(_lines(text), (0, ""))[1]
            kind = "jsbaf" if first.split(" ", 1)[0] in ("arg", "att", "sup") else "as"
    if kind == "as":
        return parse_system_text(text)
    if kind == "jsbaf":
        return parse_framework_text(text)
    raise ParseError(f"unknown instance kind {kind!r}")


def format_labeling(labeling: Labeling) -> str:
    return "\n".join(f"{a} {label}" for a, label in labeling.labels) + "\n"


def format_labelings(labelings) -> str:
    blocks = [format_labeling(lab) for lab in labelings]
    return f"{len(labelings)}\n" + "\n".join(blocks)


def wrap_json(digest: str, payload) -> str:
    return json.dumps(
        {"schema_version": SCHEMA_VERSION, "instance_digest": digest, "payload": payload},
        sort_keys=True,
        indent=2,
    ) + "\n"


def labeling_to_dict(labeling: Labeling) -> dict:
    return {a: label for a, label in labeling.labels}
