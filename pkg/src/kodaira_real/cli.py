"""Command-line front end.

Subcommands: classify | table | splitting | moduli-check | selftest.
All rationals are printed as exact num/den strings; json output is canonical
(sorted keys, no whitespace) so that parse + re-emit is byte identical.

Exit codes: 0 success, 1 parse error, 2 inadmissible input, 3 golden-table
diff, 4 selftest failure.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
from fractions import Fraction

from .classify import (
    CASE_LABELS,
    InadmissibleExtensionError,
    brute_force_split,
    enumerate_cases,
    extension_of,
    reduce_extension,
    representative,
    splits,
)
from .exactalg import fmt_rat, rat
from .group import KodairaParams, collect, random_word, word_to_affine
from .moduli import (
    constraint_predicate,
    exchange_check,
    lifting_for_moduli,
    locus_samples,
    point_from_xy,
    reality_conditions,
    to_halfplanes,
)
from .realstruct import Lifting, RealStructure
from .reallocus import full_table, published_count, real_part

_INPUT_KEYS = ("case", "m", "delta1", "eps1", "delta3", "eps3", "delta4",
               "eps4", "f1", "f2", "d1", "gamma1")


class InputError(ValueError):
    pass


def parse_structure_file(path: str) -> RealStructure:
    """Flat key = value file with exact rational values."""
    values: dict[str, str] = {}
    try:
        with open(path, "r", encoding="utf-8") as handle:
            lines = handle.readlines()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    for lineno, line in enumerate(lines, start=1):
        text = line.strip()
        if not text or text.startswith("#"):
            continue
        sep = "=" if "=" in text else (":" if ":" in text else None)
        if sep is None:
            raise InputError(f"{path}:{lineno}: expected 'key = value'")
        key, _, value = text.partition(sep)
        key = key.strip()
        if key not in _INPUT_KEYS:
            raise InputError(f"{path}:{lineno}: unknown key {key!r}")
        if key in values:
            raise InputError(f"{path}:{lineno}: duplicate key {key!r}")
        values[key] = value.strip()
    missing = [k for k in _INPUT_KEYS if k not in values]
    if missing:
        raise InputError(f"{path}: missing keys {', '.join(missing)}")
    case = values["case"]
    if case not in ("A", "B"):
        raise InputError(f"{path}: case must be A or B, got {case!r}")
    try:
        m = int(values["m"])
        fields = {k: rat(values[k]) for k in _INPUT_KEYS[2:]}
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"{path}: bad rational value ({exc})") from exc
    if m < 1:
        raise InputError(f"{path}: m must be >= 1")
    try:
        params = KodairaParams(m, fields["delta1"], fields["eps1"],
                               fields["delta3"], fields["eps3"],
                               fields["delta4"], fields["eps4"])
        lifting = Lifting.make(case, f1=fields["f1"], f2=fields["f2"],
                               d1=fields["d1"], gamma1=fields["gamma1"])
    except ValueError as exc:
        raise InputError(f"{path}: {exc}") from exc
    return RealStructure(params, lifting)


def _emit(payload: dict, fmt: str, human_lines: list[str]) -> None:
    if fmt == "json":
        print(json.dumps(payload, sort_keys=True, separators=(",", ":")))
    else:
        for line in human_lines:
            print(line)


def _load_structure(args) -> RealStructure:
    if args.input:
        return parse_structure_file(args.input)
    label = args.case or "1B'"
    if label not in CASE_LABELS:
        raise InputError(f"unknown case label {label!r}")
    return representative(label, args.m)


def cmd_classify(args) -> int:
    try:
        rs = _load_structure(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"inadmissible: {exc}", file=sys.stderr)
        return 2
    try:
        ext = extension_of(rs)
        label, log = reduce_extension(ext)
        split_flag = splits(ext)
    except InadmissibleExtensionError as exc:
        print(f"inadmissible: {exc}", file=sys.stderr)
        return 2
    moves = [{"kind": mv.kind, "data": list(mv.data)} for mv in log]
    payload = {"command": "classify", "m": rs.params.m, "label": label,
               "splits": split_flag, "moves": moves}
    human = [f"case label: {label}",
             f"splits: {'yes' if split_flag else 'no'}",
             f"reduction moves: {len(moves)}"]
    human += [f"  {mv.kind} {mv.data}" for mv in log]
    _emit(payload, args.format, human)
    return 0


def cmd_splitting(args) -> int:
    try:
        rs = _load_structure(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"inadmissible: {exc}", file=sys.stderr)
        return 2
    ext = extension_of(rs)
    label, _ = reduce_extension(ext)
    flag = splits(ext)
    payload = {"command": "splitting", "m": rs.params.m, "label": label,
               "splits": flag}
    _emit(payload, args.format, [f"case label: {label}",
                                 f"splits: {'yes' if flag else 'no'}"])
    return 0


def cmd_table(args) -> int:
    rows = full_table(args.m)
    entries = []
    diffs = []
    for row in rows:
        ref = published_count(row.label, args.m)
        entry = {"label": row.label, "components": row.components,
                 "display": row.display(),
                 "topologies": list(row.topologies)}
        if args.golden:
            entry["published"] = ref
            if ref != row.components:
                diffs.append((row.label, row.components, ref))
        entries.append(entry)
    payload = {"command": "table", "m": args.m, "rows": entries}
    human = [f"real parts at m = {args.m} ({len(rows)} cases):"]
    for row in rows:
        human.append(f"  {row.label:10s} {row.display()}")
    if args.golden:
        payload["diffs"] = [{"label": lab, "computed": got, "published": ref}
                            for lab, got, ref in diffs]
        if diffs:
            human.append("differences against the published reference table:")
            for lab, got, ref in diffs:
                human.append(f"  {lab}: computed {got}, published {ref}")
        else:
            human.append("matches the published reference table")
    _emit(payload, args.format, human)
    return 3 if (args.golden and diffs) else 0


def _suite_collect(rng: random.Random) -> tuple[int, int]:
    passed = failed = 0
    from .exactalg import maps_equal
    from .group import affine_to_word, generators
    from .exactalg import affine_compose, identity_map

    for m in (1, 2, 3, 5):
        p = KodairaParams(m, Fraction(1), Fraction(0), Fraction(1, 2),
                          Fraction(1, 3), Fraction(2), Fraction(-1, 2))
        gens = generators(p)
        for _ in range(500):
            w = random_word(rng)
            direct = identity_map()
            for gen, exp in w:
                step = gens[gen - 1]
                for _ in range(abs(exp)):
                    direct = affine_compose(
                        direct, step if exp > 0 else _inverse(step))
            ok = maps_equal(word_to_affine(collect(w, m), p), direct)
            passed += ok
            failed += not ok
    return passed, failed


def _inverse(g):
    from .exactalg import affine_inverse
    return affine_inverse(g)


def _suite_splitting(rng: random.Random) -> tuple[int, int]:
    passed = failed = 0
    for m in (1, 2):
        for label, rs in enumerate_cases(m):
            ext = extension_of(rs)
            flag = splits(ext)
            witness = brute_force_split(ext, bound=4)
            ok = flag == (witness is not None)
            report = real_part(rs, check_window=False)
            ok = ok and (flag == (not report.empty))
            passed += ok
            failed += not ok
    return passed, failed


def _suite_table(rng: random.Random) -> tuple[int, int]:
    passed = failed = 0
    for m in (1, 2):
        for row in full_table(m):
            ok = row.components == published_count(row.label, m)
            passed += ok
            failed += not ok
    return passed, failed


def _suite_moduli(rng: random.Random) -> tuple[int, int]:
    passed = failed = 0
    for case, f2nz in (("A", False), ("A", True), ("B", False), ("B", True)):
        lifting = lifting_for_moduli(case, f2nz)
        ok = exchange_check(case, f2nz, 2)
        for x, y in locus_samples(case, f2nz):
            ok = ok and reality_conditions(lifting, point_from_xy(x, y))
        for _ in range(25):
            x, y = _random_xy(rng)
            point = point_from_xy(x, y)
            ok = ok and (reality_conditions(lifting, point)
                         == constraint_predicate(case, f2nz, *to_halfplanes(point)))
        passed += ok
        failed += not ok
    return passed, failed


def _random_xy(rng: random.Random):
    from .moduli import GaussRat

    sign = rng.choice((1, -1))
    def part():
        return Fraction(rng.randint(-4, 4), rng.randint(1, 4))
    def pos():
        return Fraction(rng.randint(1, 4), rng.randint(1, 4)) * sign
    return GaussRat(part(), pos()), GaussRat(part(), pos())


_SUITES = {"collect": _suite_collect, "splitting": _suite_splitting,
           "table": _suite_table, "moduli": _suite_moduli}


def cmd_selftest(args) -> int:
    seed = int(os.environ.get("KODAIRA_SEED", "0"))
    rng = random.Random(seed)
    names = [args.only] if args.only else list(_SUITES)
    if any(n not in _SUITES for n in names):
        print(f"error: unknown suite {args.only!r}", file=sys.stderr)
        return 1
    total_passed = total_failed = 0
    for name in names:
        passed, failed = _SUITES[name](rng)
        total_passed += passed
        total_failed += failed
        status = "ok" if failed == 0 else "FAILED"
        print(f"suite {name}: {passed} passed, {failed} failed [{status}]")
    print(f"selftest: {total_passed} passed, {total_failed} failed")
    return 0 if total_failed == 0 else 4


def cmd_moduli_check(args) -> int:
    all_ok = True
    lines = []
    results = []
    for case, f2nz in (("A", False), ("A", True), ("B", False), ("B", True)):
        lifting = lifting_for_moduli(case, f2nz)
        exchange_ok = exchange_check(case, f2nz, args.m)
        locus_ok = all(reality_conditions(lifting, point_from_xy(x, y))
                       for x, y in locus_samples(case, f2nz))
        all_ok = all_ok and exchange_ok and locus_ok
        tag = f"case {case}, f2 {'non-zero' if f2nz else 'zero'}"
        lines.append(f"{tag}: locus {'ok' if locus_ok else 'FAILED'}, "
                     f"exchange {'ok' if exchange_ok else 'FAILED'}")
        results.append({"case": case, "f2_nonzero": f2nz,
                        "locus": locus_ok, "exchange": exchange_ok})
    payload = {"command": "moduli-check", "m": args.m, "results": results}
    _emit(payload, args.format, lines)
    return 0 if all_ok else 4


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="kodaira-real",
        description="Exact classification of real structures on primary "
                    "Kodaira surfaces.")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, with_case=False):
        p.add_argument("--m", type=int, default=2, help="torsion coefficient")
        p.add_argument("--format", choices=("human", "json"), default="human")
        if with_case:
            p.add_argument("--input", help="parameter file (key = value lines)")
            p.add_argument("--case", help="built-in representative label")

    p = sub.add_parser("classify", help="reduce a structure to its normal form")
    common(p, with_case=True)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("splitting", help="decide splitting of the extension")
    common(p, with_case=True)
    p.set_defaults(func=cmd_splitting)

    p = sub.add_parser("table", help="compute the real-part table")
    common(p)
    p.add_argument("--golden", action="store_true",
                   help="compare against the published reference table")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("moduli-check", help="verify period-domain loci")
    common(p)
    p.set_defaults(func=cmd_moduli_check)

    p = sub.add_parser("selftest", help="run the property suites")
    common(p)
    p.add_argument("--only", help="run a single suite "
                                  f"({', '.join(_SUITES)})")
    p.set_defaults(func=cmd_selftest)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "m", 1) < 1:
        print("error: m must be >= 1", file=sys.stderr)
        return 1
    return args.func(args)


if __name__ == "__main__":
    raise SystemExit(main())
