"""Command-line front end.

Exit codes: 0 success / true / confirmed, 1 false / refuted / does not
fit, 2 usage error, 3 budget exhausted or undecided.
"""
from __future__ import annotations

import argparse
import os
import sys
import tempfile

from . import adversary as adv
from .characterization import (
    CORRECTED, PAPER, PRUNE_MODES, characterize_monotone, characterize_monotone_G,
    characterize_X_omega, size_report,
)
from .errors import BudgetExceeded, FragmentError, LtlError, NotFitting, ParseError, Unevaluable, UndeclaredAtom
from .formula import parse_formula, parse_ops, to_text
from .fragments import characterize_finite_fragment, classify_operator_set
from .gold import gold_learn, gold_teach
from .sample import read_sample
from .schema import parse_schema
from .schematic import characterize_schematic, schematic_fit
from .verification import EnumerationOrder, evaluate, fits, oracle_upward_closure, verify_unique
from .wordexpr import parse_expr
from .words import make_ap, parse_word

EXIT_OK, EXIT_FALSE, EXIT_USAGE, EXIT_UNKNOWN = 0, 1, 2, 3
DEFAULT_BUDGET = 100_000


class UsageError(Exception):
    pass


def _ap(args) -> tuple:
    if not args.ap:
        raise UsageError("--ap is required (e.g. --ap p,q,r)")
    return make_ap(n for n in args.ap.replace(",", " ").split())


def _formula(args, ap=None):
    if not args.formula:
        raise UsageError("--formula is required")
    return parse_formula(args.formula, ap)


def _ops(args) -> frozenset:
    if not args.ops:
        raise UsageError("--ops is required (e.g. --ops 'sF,&,|')")
    return parse_ops(args.ops)


def _sample(args):
    if not args.sample:
        raise UsageError("--sample is required")
    with open(args.sample, encoding="utf-8") as fh:
        return read_sample(fh.read())


def _emit(args, text: str) -> None:
    if not args.out:
        sys.stdout.write(text)
        return
    directory = os.path.dirname(os.path.abspath(args.out))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".tmp-")
    with os.fdopen(fd, "w", encoding="utf-8") as fh:
        fh.write(text)
    os.replace(tmp, args.out)


def _budget_hint(exc: Exception) -> str:
    return f"{exc}; sample sizes grow doubly exponentially with formula size, raise --budget to proceed"


# ------------------------------------------------------------- commands

def cmd_characterize(args) -> int:
    ap = _ap(args)
    phi = _formula(args, ap)
    fragment = args.fragment or "monotone"
    if fragment == "monotone":
        report = characterize_monotone(phi, ap, args.dual_variant, args.prune, budget=args.budget)
    elif fragment == "monotone-g":
        report = characterize_monotone_G(phi, ap, args.dual_variant, args.prune, budget=args.budget)
    elif fragment == "x-omega":
        report = characterize_X_omega(phi, ap, args.budget)
    elif fragment.startswith("finite:"):
        report = characterize_finite_fragment(phi, parse_ops(fragment[len("finite:"):]), ap, args.budget)
    else:
        raise UsageError(f"unknown fragment {fragment!r}")
    _emit(args, report.sample.to_text())
    if args.out:
        print(report.summary())
    return EXIT_OK


def cmd_characterize_schematic(args) -> int:
    ap = _ap(args)
    report = characterize_schematic(_formula(args, ap), ap, args.dual_variant, args.prune)
    _emit(args, report.sample.to_text())
    if args.out:
        print(report.summary())
    return EXIT_OK


def cmd_eval(args) -> int:
    ap = _ap(args)
    phi = _formula(args, ap)
    given = [x for x in (args.word, args.expr, args.schema) if x is not None]
    if len(given) != 1:
        raise UsageError("give exactly one of --word, --expr, --schema")
    if args.schema is not None:
        verdict = schematic_fit(phi, parse_schema(args.schema, ap), True, ap, args.max_len or 6)
        if verdict.status == "unknown":
            print("unknown")
            return EXIT_UNKNOWN
        print("true" if verdict.status == "fits" else f"false (counterexample {_fmt(verdict.witness)})")
        return EXIT_OK if verdict.status == "fits" else EXIT_FALSE
    payload = parse_word(args.word, ap) if args.word is not None else parse_expr(args.expr, ap)
    value = evaluate(phi, payload, ap)
    print("true" if value else "false")
    return EXIT_OK if value else EXIT_FALSE


def _fmt(w) -> str:
    from .words import format_word
    return format_word(w)


def cmd_fits(args) -> int:
    sample = _sample(args)
    phi = _formula(args, sample.ap)
    result = fits(phi, sample)
    if result:
        print("fits")
        return EXIT_OK
    print(f"does not fit: {result.failure}")
    return EXIT_FALSE


def cmd_verify_unique(args) -> int:
    sample = _sample(args)
    phi = _formula(args, sample.ap)
    verdict = verify_unique(phi, sample, _ops(args), args.max_size or 5)
    print(verdict)
    return {"confirmed": EXIT_OK, "refuted": EXIT_FALSE}.get(verdict.status, EXIT_UNKNOWN)


def cmd_classify(args) -> int:
    result = classify_operator_set(_ops(args))
    print(result)
    return EXIT_OK if result.admits else EXIT_FALSE


def cmd_adversary(args) -> int:
    if not args.family:
        raise UsageError(f"--family is required ({', '.join(adv.FAMILIES)})")
    sample = _sample(args)
    target = _formula(args, sample.ap) if args.formula else None
    result = adv.adversary(args.family, sample, target)
    print(result)
    return EXIT_OK


def cmd_teach(args) -> int:
    ap = _ap(args)
    phi = _formula(args, ap)
    order = EnumerationOrder(ap, _ops(args), args.max_size or 4)
    _emit(args, gold_teach(phi, order).to_text())
    return EXIT_OK


def cmd_learn(args) -> int:
    sample = _sample(args)
    order = EnumerationOrder(sample.ap, _ops(args), args.max_size or 4)
    print(to_text(gold_learn(sample, order)))
    return EXIT_OK


def cmd_oracle(args) -> int:
    ap = _ap(args)
    verdict = oracle_upward_closure(_formula(args, ap), args.max_len or 4, ap)
    print(verdict)
    return EXIT_OK if verdict.confirmed else EXIT_FALSE


def cmd_size_report(args) -> int:
    ap = _ap(args)
    phi = _formula(args, ap)
    report = size_report(characterize_monotone(phi, ap, args.dual_variant, args.prune, budget=args.budget), phi)
    print(report)
    return EXIT_OK if report.length_bound_ok else EXIT_FALSE


COMMANDS = {
    "characterize": cmd_characterize,
    "characterize-schematic": cmd_characterize_schematic,
    "eval": cmd_eval,
    "fits": cmd_fits,
    "verify-unique": cmd_verify_unique,
    "classify": cmd_classify,
    "adversary": cmd_adversary,
    "teach": cmd_teach,
    "learn": cmd_learn,
    "oracle": cmd_oracle,
    "size-report": cmd_size_report,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--ap", help="atomic propositions, e.g. p,q,r")
    common.add_argument("--formula", help="formula text, e.g. 'F(p & q)'")
    common.add_argument("--sample", help="sample file")
    common.add_argument("--fragment", help="monotone | monotone-g | x-omega | finite:<OPS>")
    common.add_argument("--ops", help="operator set, e.g. 'sF,&,|,true'")
    common.add_argument("--max-size", type=int, help="formula size bound")
    common.add_argument("--max-len", type=int, help="word length bound")
    common.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="work budget")
    common.add_argument("--out", help="output file (written atomically)")
    common.add_argument("--dual-variant", choices=(CORRECTED, PAPER), default=CORRECTED)
    common.add_argument("--prune", choices=PRUNE_MODES, default="prefix")
    common.add_argument("--word", help="finite word, e.g. '{p}.{}.{p,q}'")
    common.add_argument("--expr", help="word expression, e.g. '{}^w.{p}'")
    common.add_argument("--schema", help="schematic expression, e.g. '[!p]*.[p]'")
    common.add_argument("--family", choices=adv.FAMILIES)

    parser = argparse.ArgumentParser(prog="ltlteach", description="Teaching samples for LTL fragments.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        sub.add_parser(name, parents=[common])
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except (UsageError, ParseError, UndeclaredAtom, FragmentError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (BudgetExceeded, Unevaluable) as exc:
        message = _budget_hint(exc) if isinstance(exc, BudgetExceeded) else str(exc)
        print(f"error: {message}", file=sys.stderr)
        return EXIT_UNKNOWN
    except (NotFitting, LtlError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FALSE


if __name__ == "__main__":
    sys.exit(main())
