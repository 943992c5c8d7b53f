"""Command-line frontend.

Subcommands: ``validate``, ``solve``, ``translate``, ``postulates`` and
``fuzz``.  Exit codes: 0 success / all checks passed, 1 a postulate
check failed, 2 a resource bound was hit or a check was inconclusive,
3 usage, parse or validation errors.
"""

from __future__ import annotations

import argparse
import random
import sys

from . import arguments as ar
from . import framework as fw
from . import generate as gen
from . import grounded as gr
from . import naive, postulates, textio
from .errors import JsbafError, ParseError, ResourceLimitError
from .system import ArgumentationSystem, validate_system

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_INCONCLUSIVE = 2
EXIT_USAGE = 3


def _add_common(parser):
    parser.add_argument("--format", choices=("text", "json"), default="text")
    parser.add_argument("--max-args", type=int, default=5000, help="argument construction bound")
    parser.add_argument("--max-depth", type=int, default=6, help="argument nesting bound")
    parser.add_argument("--atom-bound", type=int, default=16, help="truth-table atom bound")
    parser.add_argument("--max-enum-args", type=int, default=fw.DEFAULT_MAX_ENUM_ARGS,
                        help="labeling enumeration bound")
    parser.add_argument("--seed", type=int, default=0)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="jsbaf")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check an instance file")
    p.add_argument("path")
    p.add_argument("--kind", choices=("as", "jsbaf"))
    _add_common(p)

    p = sub.add_parser("solve", help="compute labelings / extensions")
    p.add_argument("path")
    p.add_argument("--kind", choices=("as", "jsbaf"))
    p.add_argument("--semantics", choices=("admissible", "preferred", "grounded"), default="preferred")
    p.add_argument("--emit-jsbaf", action="store_true", help="also print the translated framework")
    p.add_argument("--oracle", action="store_true", help="cross-check against the naive implementations")
    _add_common(p)

    p = sub.add_parser("translate", help="translate a rule system into a framework")
    p.add_argument("path")
    _add_common(p)

    p = sub.add_parser("postulates", help="postulate checks on one instance or a disjoint pair")
    p.add_argument("path")
    p.add_argument("--against", help="second system for non-interference")
    p.add_argument("--merge-policy", choices=("raw", "interleave"), default="raw")
    _add_common(p)

    p = sub.add_parser("fuzz", help="randomised postulate checking")
    p.add_argument("--trials", type=int, default=20)
    p.add_argument("--merge-policy", choices=("raw", "interleave"), default="raw")
    p.add_argument("--checks", default="closure,consistency",
                   help="comma list of closure,consistency,non-interference")
    p.add_argument("--repro-dir", default=".")
    _add_common(p)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        options = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return _dispatch(options)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ResourceLimitError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return EXIT_INCONCLUSIVE
    except JsbafError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def _dispatch(options) -> int:
    command = options.command
    if command == "validate":
        return _cmd_validate(options)
    if command == "solve":
        return _cmd_solve(options)
    if command == "translate":
        return _cmd_translate(options)
    if command == "postulates":
        return _cmd_postulates(options)
    if command == "fuzz":
        return _cmd_fuzz(options)
    raise AssertionError(command)


def _load(options, kind=None):
    return textio.parse_instance(options.path, kind=kind or getattr(options, "kind", None))


def _cmd_validate(options) -> int:
    instance = _load(options)
    if isinstance(instance, ArgumentationSystem):
        report = validate_system(
            instance,
            max_args=options.max_args,
            max_depth=options.max_depth,
            atom_bound=options.atom_bound,
        )
    else:
        report = fw.validate_jsbaf(instance)
    print(report)
    return EXIT_OK if report.ok else EXIT_USAGE


def _framework_for(options, instance):
    """(framework, conclusion lookup or None, emitted text)."""
    if isinstance(instance, ArgumentationSystem):
        translation = ar.framework_from_system(
            instance, max_args=options.max_args, max_depth=options.max_depth
        )
        if translation.truncated:
            raise ResourceLimitError("argument construction truncated", bound_name="max_args")
        return translation.framework, translation
    return instance, None


def _cmd_solve(options) -> int:
    instance = _load(options)
    framework, translation = _framework_for(options, instance)
    chunks = []
    if options.emit_jsbaf and translation is not None:
        chunks.append(textio.format_framework(framework))

    if options.semantics == "grounded":
        ground = gr.from_jsbaf(framework)
        if translation is None and any(framework.rank.values()):
            print("note: preference ranks are ignored under grounded semantics", file=sys.stderr)
        labeling = gr.grounded_labeling(ground, oracle=options.oracle, max_args=options.max_enum_args)
        labelings = [labeling]
        chunks.append(textio.format_labeling(labeling))
    else:
        enum = fw.enumerate_admissible if options.semantics == "admissible" else fw.enumerate_preferred
        labelings = enum(framework, max_args=options.max_enum_args)
        if options.oracle:
            _oracle_check(framework, labelings, options.semantics)
        chunks.append(textio.format_labelings(labelings))

    if translation is not None and options.semantics == "preferred":
        conclusion_sets = sorted(
            {
                tuple(sorted(str(translation.argument_of[a].conclusion) for a in lab.in_set))
                for lab in labelings
            }
        )
        chunks.append(
            "conclusions:\n" + "\n".join("{" + ", ".join(c) + "}" for c in conclusion_sets) + "\n"
        )

    if options.format == "json":
        digest = textio.instance_digest(open(options.path, encoding="utf-8").read())
        payload = {
            "semantics": options.semantics,
            "labelings": [textio.labeling_to_dict(lab) for lab in labelings],
        }
        sys.stdout.write(textio.wrap_json(digest, payload))
    else:
        sys.stdout.write("\n".join(chunks))
    return EXIT_OK


def _oracle_check(framework, labelings, semantics):
    enum = (
        naive.naive_enumerate_admissible
        if semantics == "admissible"
        else naive.naive_enumerate_preferred
    )
    expected = enum(framework)
    if expected != labelings:
        raise JsbafError("oracle mismatch: naive enumeration disagrees with the engine")


def _cmd_translate(options) -> int:
    instance = _load(options, kind="as")
    translation = ar.framework_from_system(
        instance, max_args=options.max_args, max_depth=options.max_depth
    )
    if translation.truncated:
        print("note: argument construction truncated", file=sys.stderr)
    text = textio.format_framework(translation.framework)
    if options.format == "json":
        digest = textio.instance_digest(open(options.path, encoding="utf-8").read())
        sys.stdout.write(textio.wrap_json(digest, textio.framework_to_dict(translation.framework)))
    else:
        sys.stdout.write(text)
        for aid in sorted(translation.argument_of):
            print(f"# {aid} concludes {translation.argument_of[aid].conclusion}")
    return EXIT_OK


def _postulate_reports_for(system, options):
    conclusions = ar.preferred_conclusions(
        system, max_args=options.max_args, max_depth=options.max_depth,
        max_enum_args=options.max_enum_args,
    )
    digest = postulates.system_digest(system)
    reports = []
    for family in conclusions:
        reports.append(postulates.check_closure(system, family))
        reports.append(postulates.check_direct_consistency(family, instance_digest=digest))
        reports.append(postulates.check_indirect_consistency(system, family))
    return reports


def _emit_reports(reports, options) -> int:
    code = EXIT_OK
    for report in reports:
        if options.format == "json":
            print(report.to_json())
        else:
            print(f"{report.postulate}: {report.verdict}" + (f" {report.witness}" if report.witness else ""))
        if report.verdict == postulates.FAIL:
            code = EXIT_FAIL
        elif report.verdict == postulates.INCONCLUSIVE and code == EXIT_OK:
            code = EXIT_INCONCLUSIVE
    return code


def _cmd_postulates(options) -> int:
    system = _load(options, kind="as")
    reports = _postulate_reports_for(system, options)
    if options.against:
        other = textio.parse_instance(options.against, kind="as")
        reports.append(
            postulates.check_non_interference(
                system,
                other,
                merge=options.merge_policy,
                cross_rules=gen.cross_closure_rules(system, other),
            )
        )
    return _emit_reports(reports, options)


def _cmd_fuzz(options) -> int:
    checks = [c.strip() for c in options.checks.split(",") if c.strip()]
    unknown = set(checks) - {"closure", "consistency", "non-interference"}
    if unknown:
        print(f"error: unknown checks {sorted(unknown)}", file=sys.stderr)
        return EXIT_USAGE
    rng = random.Random(options.seed)
    reports = []
    counts = {"pass": 0, "fail": 0, "inconclusive": 0}
    for trial in range(options.trials):
        trial_reports = _fuzz_trial(checks, rng, options)
        for report in trial_reports:
            counts[report.verdict] += 1
            if report.verdict == postulates.FAIL:
                _dump_repro(report, trial, options)
        reports.extend(trial_reports)
    if options.format == "json":
        for report in reports:
            print(report.to_json())
    print(f"trials={options.trials} pass={counts['pass']} fail={counts['fail']} "
          f"inconclusive={counts['inconclusive']}")
    if counts["fail"]:
        return EXIT_FAIL
    if counts["inconclusive"]:
        return EXIT_INCONCLUSIVE
    return EXIT_OK


def _fuzz_trial(checks, rng, options):
    reports = []
    if "closure" in checks or "consistency" in checks:
        system = gen.generate_system(gen.FuzzProfile(), rng=rng)
        try:
            families = ar.preferred_conclusions(
                system, max_args=options.max_args, max_depth=options.max_depth,
                max_enum_args=options.max_enum_args,
            )
        except (ResourceLimitError, JsbafError):
            families = None
        if families is None:
            reports.append(
                postulates.PostulateReport(
                    postulate="closure",
                    instance_digest=postulates.system_digest(system),
                    verdict=postulates.INCONCLUSIVE,
                    witness={"reason": "labeling budget exhausted"},
                )
            )
        else:
            digest = postulates.system_digest(system)
            for family in families:
                if "closure" in checks:
                    reports.append(postulates.check_closure(system, family))
                if "consistency" in checks:
                    reports.append(postulates.check_direct_consistency(family, instance_digest=digest))
                    reports.append(postulates.check_indirect_consistency(system, family))
        for report in reports:
            report.source_system = system  # for reproduction dumps
    if "non-interference" in checks:
        profile = gen.FuzzProfile(atom_count=(1, 2), defeasible_count=(1, 2),
                                  conjunction_probability=0.0)
        s1, s2 = gen.generate_disjoint_pair(profile, rng=rng)
        report = postulates.check_non_interference(
            s1, s2, merge=options.merge_policy,
            cross_rules=gen.cross_closure_rules(s1, s2),
        )
        report.source_system = (s1, s2)
        reports.append(report)
    return reports


def postulate_fails_on(system, postulate) -> bool:
    """Replay helper: does any preferred conclusion family of the system
    fail the given postulate?  Used for repro dumps and their shrinking."""
    families = ar.preferred_conclusions(system)
    digest = postulates.system_digest(system)
    for family in families:
        if postulate == "closure":
            report = postulates.check_closure(system, family)
        elif postulate == "direct_consistency":
            report = postulates.check_direct_consistency(family, instance_digest=digest)
        else:
            report = postulates.check_indirect_consistency(system, family)
        if report.verdict == postulates.FAIL:
            return True
    return False


def _dump_repro(report, trial, options):
    import os

    systems = getattr(report, "source_system", None)
    if systems is None:
        return
    if not isinstance(systems, tuple):
        systems = (systems,)
    if len(systems) == 1 and report.postulate != "non_interference":
        try:
            systems = (
                postulates.shrink_failing_system(
                    systems[0], lambda s: postulate_fails_on(s, report.postulate)
                ),
            )
        except JsbafError:
            pass
    for i, system in enumerate(systems):
        path = os.path.join(
            options.repro_dir,
            f"repro_{report.postulate}_{trial}_{i}_{report.instance_digest}.as",
        )
        with open(path, "w", encoding="utf-8") as handle:
            handle.write(textio.format_system(system))
    print(f"fail reproduced in {options.repro_dir} (trial {trial})", file=sys.stderr)


if __name__ == "__main__":
    sys.exit(main())
