"""Command-line front end.  Exit codes: 0 all checks pass, 1 violations, 2 input error."""
import argparse
import csv
import io
import json
import os
import sys

from .actions import (load_action, partial_to_sg, sg_to_partial, validate_partial_action,
                      validate_sg_action, lemma1_characterize)
from .crossed import check_associativity, crossed_product_report, function_algebra_context
from .cstar import build_cp_star_algebra, check_a_relations, check_projection_algebra, find_unit
from .errors import AxiomViolation, BudgetExceeded, ExelError, MalformedSpec
from .groupoid import Undefined, build_groupoid, check_groupoid_tables
from .oracle import compare_with_normal_forms, oracle_congruence_enumerate
from .report import Report, jsonable
from .representations import check_partial_rep, load_rep, regular_partial_rep, triangle_report
from .semigroupoid import enumerate_sg, multiplication_table, normalize_word

MAX_ORACLE_LEN = 8


class InputError(Exception):
    pass


def threads_from_env():
    """EXEL_SGPD_THREADS caps parallelism; every check currently runs on one thread."""
    raw = os.environ.get("EXEL_SGPD_THREADS")
    if raw is None:
        return 1
    try:
        n = int(raw)
    except ValueError:
        raise InputError(f"EXEL_SGPD_THREADS must be a positive integer, got {raw!r}") from None
    if n < 1:
        raise InputError(f"EXEL_SGPD_THREADS must be a positive integer, got {raw!r}")
    return n


def _read_json(path):
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON ({exc})") from None


def _groupoid(path):
    return build_groupoid(_read_json(path))


def _action(G, path):
    if not os.path.exists(path):
        raise InputError(f"cannot read {path}: no such file")
    return load_action(G, path)


def cmd_validate(args):
    spec = _read_json(args.groupoid)
    try:
        elements = list(spec["elements"])
        inv = dict(spec["inv"])
        comp = {(a, b): ab for a, b, ab in spec["comp"]}
    except (KeyError, TypeError, ValueError) as exc:
        raise MalformedSpec(f"bad groupoid spec: {exc}") from exc
    return check_groupoid_tables(elements, comp, inv)


def cmd_enumerate_sg(args):
    G = _groupoid(args.groupoid)
    if len(G) > args.budget:
        raise BudgetExceeded(f"|G| = {len(G)} exceeds the budget {args.budget}")
    elems = enumerate_sg(G)
    rep = Report("enumerate S(G)")
    rep.info["size"] = len(elems)
    rep.info["elements"] = [{"form": str(s), **s.to_json()} for s in elems]
    if args.oracle_maxlen is not None:
        if not 1 <= args.oracle_maxlen <= MAX_ORACLE_LEN:
            raise BudgetExceeded(f"--oracle-maxlen must be between 1 and {MAX_ORACLE_LEN}")
        res = oracle_congruence_enumerate(G, args.oracle_maxlen)
        problems = compare_with_normal_forms(res, lambda w: normalize_word(G, w))
        rep.check("oracle-class-count", len(res.classes) == len(elems), None,
                  f"{len(res.classes)} classes")
        for kind, w1, w2 in problems:
            rep.fail("oracle-agreement", [list(w1), list(w2)], kind)
        rep.check("oracle-agreement", not problems)
        rep.info["oracle"] = {"classes": len(res.classes),
                              "counts": {str(k): v for k, v in res.counts.items()}}
    return rep


def cmd_actions(args):
    G = _groupoid(args.groupoid)
    a = _action(G, args.action)
    rep = Report("actions")
    v = validate_partial_action(a)
    rep.extend(v, "partial/")
    if args.roundtrip and v.ok:
        b = partial_to_sg(a)
        w = validate_sg_action(b)
        rep.extend(w, "sg/")
        if w.ok:
            back = sg_to_partial(b)
            rep.check("roundtrip-partial", back == a)
            rep.check("roundtrip-sg", partial_to_sg(back) == b)
        lem = lemma1_characterize(G, a.alpha, a.points)
        rep.check("map-criterion-verdict", lem.verdict)
        rep.check("map-criterion-reconstruction", lem.action == a)
    return rep


def cmd_crossed(args):
    G = _groupoid(args.groupoid)
    rep = Report("crossed products")
    if args.action:
        a = _action(G, args.action)
        rep.extend(crossed_product_report(function_algebra_context(a), seed=args.seed),
                   "function-algebra/")
    if args.cstar or not args.action:
        cp = build_cp_star_algebra(G)
        rep.extend(check_projection_algebra(cp.ctx.algebra), "cstar/")
        rep.extend(cp.ctx.validate(), "cstar/")
        rep.extend(check_associativity(cp, args.trials, args.seed), "cstar/")
        rep.extend(check_a_relations(cp), "cstar/")
        unit = find_unit(cp)
        rep.info["cstar/dimension"] = cp.dimension
        rep.info["cstar/unit"] = None if unit is None else repr(unit)
    return rep


def cmd_reps(args):
    G = _groupoid(args.groupoid)
    if args.rep:
        if not os.path.exists(args.rep):
            raise InputError(f"cannot read {args.rep}: no such file")
        p = load_rep(G, args.rep)
    elif args.action:
        p = regular_partial_rep(_action(G, args.action))
    else:
        raise InputError("reps needs --rep or --action")
    rep = Report("representations")
    base = check_partial_rep(p)
    if not args.triangle or not base.ok:
        return rep.extend(base, "a/")
    try:
        rep.extend(triangle_report(p))
    except AxiomViolation as exc:
        rep.extend(exc.report, "c/")
    return rep


def cmd_export_table(args):
    G = _groupoid(args.groupoid)
    if args.what == "cpstar":
        cp = build_cp_star_algebra(G)
        labels = [cp.label(k) for k in cp.basis]
        keys = list(cp.basis)

        def cell(x, y):
            k = cp.basis_product(x, y)
            return "0" if k is None else cp.label(k)
    else:
        if len(G) > args.budget:
            raise BudgetExceeded(f"|G| = {len(G)} exceeds the budget {args.budget}")
        keys = list(enumerate_sg(G)) if args.what == "sg" else list(G)
        labels = [str(k) for k in keys]
        table = multiplication_table(keys) if args.what == "sg" else None

        def cell(x, y):
            z = table.get((x, y)) if table is not None else G.compose(x, y)
            return "" if z is None or z is Undefined else str(z)
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow([""] + labels)
    for x, lab in zip(keys, labels):
        w.writerow([lab] + [cell(x, y) for y in keys])
    return buf.getvalue()


def build_parser():
    p = argparse.ArgumentParser(prog="exel-sgpd", description=__doc__)
    p.add_argument("--seed", type=int, default=0, help="seed for sampled checks")
    p.add_argument("--output", "-o", help="write the report here instead of stdout")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("validate", help="check a groupoid spec against the axioms")
    s.add_argument("groupoid")
    s.set_defaults(func=cmd_validate)

    s = sub.add_parser("enumerate-sg", help="list S(G) in standard form")
    s.add_argument("groupoid")
    s.add_argument("--oracle-maxlen", type=int, help="also run the congruence oracle")
    s.add_argument("--budget", type=int, default=8, help="largest |G| accepted (default 8)")
    s.set_defaults(func=cmd_enumerate_sg)

    s = sub.add_parser("actions", help="validate a partial action")
    s.add_argument("groupoid")
    s.add_argument("action")
    s.add_argument("--roundtrip", action="store_true", help="go through S(G) and back")
    s.set_defaults(func=cmd_actions)

    s = sub.add_parser("crossed", help="crossed product and C_p*(G) reports")
    s.add_argument("groupoid")
    s.add_argument("action", nargs="?")
    s.add_argument("--cstar", action="store_true", help="include C_p*(G) with an action")
    s.add_argument("--trials", type=int, help="sample this many triples instead of all")
    s.set_defaults(func=cmd_crossed)

    s = sub.add_parser("reps", help="check a representation")
    s.add_argument("groupoid")
    g = s.add_mutually_exclusive_group()
    g.add_argument("--rep", help="representation spec")
    g.add_argument("--action", help="use the regular model of this partial action")
    s.add_argument("--triangle", action="store_true", help="run the three-way round trips")
    s.set_defaults(func=cmd_reps)

    s = sub.add_parser("export-table", help="multiplication table as CSV")
    s.add_argument("groupoid")
    s.add_argument("--what", choices=["groupoid", "sg", "cpstar"], default="sg")
    s.add_argument("--budget", type=int, default=8)
    s.set_defaults(func=cmd_export_table)
    return p


def _emit(text, path):
    if path:
        with open(path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        threads = threads_from_env()
        result = args.func(args)
    except (InputError, ExelError, KeyError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        sys.stderr.write(f"error: {msg}\n")
        return 2
    if isinstance(result, str):
        _emit(result, args.output)
        return 0
    out = result.to_json()
    out["command"] = args.command
    out["seed"] = args.seed
    out["threads"] = threads
    _emit(json.dumps(jsonable(out), indent=2, sort_keys=True, ensure_ascii=False) + "\n",
          args.output)
    return 0 if result.ok else 1


if __name__ == "__main__":
    sys.exit(main())
