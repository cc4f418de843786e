"""Command line entry point: ``knotcube <subcommand> ...``.

Exit status: 0 when every check passes, 1 on a FAIL, 2 on bad input,
3 on an internal error.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional

from .diagram import BraidParseError, close_braid, parse_braid

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_INTERNAL = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def fmt(p) -> str:
    """Render with spaces between factors (``a^-2 q^-4``)."""
    return str(p).replace("*", " ")


def _cycle_label(Z) -> str:
    return "".join(f"e{e}" for e in sorted(Z)) or "{}"


def _diagram(args):
    return close_braid(parse_braid(args.word, args.strands))


def _emit(args, data: dict, lines: List[str]):
    if args.json:
        print(json.dumps(data, sort_keys=True, indent=2))
    else:
        print("\n".join(lines))


def _status(ok: bool) -> str:
    return "PASS" if ok else "FAIL"


# ---------------------------------------------------------------------------

def cmd_homfly(args) -> int:
    from .skein import HomflyEvaluator
    ev = HomflyEvaluator()
    D = _diagram(args)
    P = ev.homfly_prime(D) if args.prime else ev.homfly(D)
    _emit(args, {"word": str(D.word), "prime": args.prime, "value": fmt(P), "terms": P.to_json()}, [fmt(P)])
    return EXIT_OK


def cmd_labelings(args) -> int:
    from .labelings import enumerate_cycles, is_admissible, local_types, turn_stats
    D = _diagram(args)
    cycles = enumerate_cycles(D, admissible_only=not args.all)
    rows, lines = [], [f"{'CYCLE':<16}{'LOCAL':<{max(6, len(D.crossings) + 2)}}T+ T- D+ D- X+ X-  ADM"]
    for Z in cycles:
        ts = turn_stats(D, Z)
        loc = "".join(str(int(t)) for t in local_types(D, Z))
        adm = is_admissible(D, Z)
        rows.append({"cycle": sorted(Z), "local": loc, "T_plus": ts.T_plus, "T_minus": ts.T_minus,
                     "D_plus": ts.D_plus, "D_minus": ts.D_minus, "X_plus": ts.X_plus,
                     "X_minus": ts.X_minus, "admissible": adm})
        lines.append(f"{_cycle_label(Z):<16}{loc:<{max(6, len(D.crossings) + 2)}}"
                     f"{ts.T_plus:>2} {ts.T_minus:>2} {ts.D_plus:>2} {ts.D_minus:>2} "
                     f"{ts.X_plus:>2} {ts.X_minus:>2}  {'yes' if adm else 'no'}")
    lines.append(f"{len(cycles)} cycles")
    _emit(args, {"word": str(D.word), "cycles": rows}, lines)
    return EXIT_OK


def _factor_text(sign: int, T: int, q: int, a: int) -> str:
    parts = []
    if T:
        parts.append("(q - q^-1)" + (f"^{T}" if T > 1 else ""))
    if q:
        parts.append(f"q^{q}")
    if a:
        parts.append(f"a^{a}")
    body = " ".join(parts) or "1"
    return ("-" if sign < 0 else "") + body


def cmd_composition(args) -> int:
    from . import composition as comp
    from .laurent import fsum
    from .skein import HomflyEvaluator
    ev = HomflyEvaluator()
    D = _diagram(args)
    signed = not args.unsigned
    rows, lines = [], []
    if args.product == "destabilized":
        terms = comp.composition_terms(D, ev, signed)
        lines.append(f"{'CYCLE':<16}{'T':>2}  {'FACTOR':<28}{'P(D_f2)':<36}CONTRIBUTION")
        for t in terms:
            val = t.value
            ftxt = _factor_text(t.sign, t.T, t.q_exp, t.a_exp)
            rows.append({"cycle": sorted(t.labeling), "T": t.T, "factor": ftxt,
                         "right": fmt(t.right_factor), "value": fmt(val)})
            lines.append(f"{_cycle_label(t.labeling):<16}{t.T:>2}  {ftxt:<28}{fmt(t.right_factor):<36}{fmt(val)}")
        total = fsum(t.value for t in terms)
        target = comp.destabilized_target(D, ev)
    elif args.product == "jaeger":
        terms = comp.jaeger_terms(D, ev, args.rotation_sign, signed)
        lines.append(f"{'CYCLE':<16}CONTRIBUTION")
        for Z, val in terms:
            rows.append({"cycle": sorted(Z), "value": fmt(val)})
            lines.append(f"{_cycle_label(Z):<16}{fmt(val)}")
        total = fsum(v for _, v in terms)
        target = comp.jaeger_target(D, ev)
    else:
        terms = comp.alexander_terms(D, signed)
        lines.append(f"{'CYCLE':<16}CONTRIBUTION")
        for Z, val in terms:
            rows.append({"cycle": sorted(Z), "value": fmt(val)})
            lines.append(f"{_cycle_label(Z):<16}{fmt(val)}")
        total = comp.alexander_composition(D, signed)
        target = comp.alexander_target(D, ev)
    ok = total == target
    lines.append(f"TOTAL {fmt(total)}  {_status(ok)}")
    if not ok:
        lines.append(f"EXPECTED {fmt(target)}")
    _emit(args, {"word": str(D.word), "product": args.product, "rows": rows, "total": fmt(total),
                 "target": fmt(target), "pass": ok}, lines)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_euler(args) -> int:
    from .gradings import euler_alexander_check, euler_homfly_check
    from .skein import HomflyEvaluator
    ev = HomflyEvaluator()
    D = _diagram(args)
    which = []
    if args.alexander or not args.homfly:
        which.append(euler_alexander_check(D, ev, overall=args.overall, form=args.form))
    if args.homfly or not args.alexander:
        which.append(euler_homfly_check(D, ev, variant=args.variant))
    lines, data = [], {"word": str(D.word), "checks": []}
    for rep in which:
        lines.append(f"{rep.name:<10} {fmt(rep.value)}  {_status(rep.passed)}")
        if not rep.passed:
            lines.append(f"{'expected':<10} {fmt(rep.target)}")
        data["checks"].append({"name": rep.name, "value": fmt(rep.value), "target": fmt(rep.target),
                               "pass": rep.passed})
    ok = all(r.passed for r in which)
    _emit(args, data, lines)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_homology(args) -> int:
    from .complexes.homfly import middle_homfly_homology, sl_minus1_homology
    D = _diagram(args)
    if args.cutoff < 0:
        raise BraidParseError("cutoff must be non-negative")
    if args.sl_minus1:
        H = sl_minus1_homology(D, args.cutoff)
        head = "M A"
    else:
        H = middle_homfly_homology(D, args.reduce, args.cutoff)
        head = "q h v"
    dims = H.nonzero()
    lines = [f"# {head} dim (cutoff {args.cutoff})"]
    lines += [" ".join(str(x) for x in g) + f" {d}" for g, d in dims.items()]
    lines.append(f"TOTAL {H.total}")
    _emit(args, {"word": str(D.word), "grading": head.split(), "cutoff": args.cutoff,
                 "dims": [[list(g), d] for g, d in dims.items()], "total": H.total}, lines)
    return EXIT_OK


def cmd_fixtures(args) -> int:
    from .complexes.fixtures import cycle_fixtures
    results = cycle_fixtures(args.cutoff)
    lines = []
    for r in results:
        lines.append(f"{r.name:<4} {_status(r.passed)}")
        lines += [f"     {d}" for d in r.details]
    ok = all(r.passed for r in results)
    _emit(args, {"fixtures": [{"name": r.name, "pass": r.passed, "details": r.details} for r in results]},
          lines)
    return EXIT_OK if ok else EXIT_FAIL


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="knotcube", description="HOMFLY-PT labelings, composition products and cube complexes.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def word_cmd(name, help_text):
        s = sub.add_parser(name, help=help_text)
        s.add_argument("word", help='braid word, e.g. "1 1 1" or "1 -2 1 -2"')
        s.add_argument("--strands", type=int, default=None, help="strand count (default: natural)")
        s.add_argument("--json", action="store_true")
        return s

    s = word_cmd("homfly", "HOMFLY-PT polynomial of the closure")
    s.add_argument("--prime", action="store_true", help="diagram normalisation delta a^w P")
    s.set_defaults(func=cmd_homfly)

    s = word_cmd("labelings", "list the cycles (two-labelings) and their local data")
    s.add_argument("--all", action="store_true", help="include non-admissible cycles")
    s.set_defaults(func=cmd_labelings)

    s = word_cmd("composition", "labelled expansion of HOMFLY-PT and its check")
    s.add_argument("--product", choices=("destabilized", "jaeger", "alexander"), default="destabilized")
    s.add_argument("--unsigned", action="store_true", help="drop the (-1)^{T-} sign (for auditing)")
    s.add_argument("--rotation-sign", type=int, choices=(1, -1), default=1)
    s.set_defaults(func=cmd_composition)

    s = word_cmd("euler-check", "Euler characteristics of the labelled decomposition")
    s.add_argument("--alexander", action="store_true")
    s.add_argument("--homfly", action="store_true")
    s.add_argument("--overall", choices=("minus_w_plus_r", "minus_w_minus_r"), default="minus_w_plus_r")
    s.add_argument("--form", choices=("closed", "pre"), default="closed")
    s.add_argument("--variant", choices=("principled", "literal"), default="principled")
    s.set_defaults(func=cmd_euler)

    s = word_cmd("homology", "middle HOMFLY-PT homology (or sl(-1) homology) up to a q cutoff")
    s.add_argument("--cutoff", type=int, default=12)
    s.add_argument("--reduce", type=int, default=0, help="number of reducing edges")
    s.add_argument("--sl-1", dest="sl_minus1", action="store_true", help="total differential, (M, A) grading")
    s.set_defaults(func=cmd_homology)

    s = sub.add_parser("fixtures", help="per-cycle complexes of a negative crossing")
    s.add_argument("--cutoff", type=int, default=8)
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_fixtures)
    return p


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BraidParseError as exc:
        print(f"knotcube: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except Exception as exc:  # noqa: BLE001
        print(f"knotcube: internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
